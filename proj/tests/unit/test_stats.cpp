#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include <boost/math/special_functions/gamma.hpp>

#include "prudent/rng.hpp"
#include "prudent/scaling.hpp"
#include "prudent/stats.hpp"

using namespace prudent;
using namespace prudent::stats;

TEST_CASE("verdicts follow statistic and threshold") {
  CHECK(StatReport::judged("a", 0.1, Comparison::less, 0.2).verdict == Verdict::pass);
  CHECK(StatReport::judged("a", 0.2, Comparison::less, 0.2).verdict == Verdict::fail);
  CHECK(StatReport::judged("a", 0.2, Comparison::less_equal, 0.2).verdict == Verdict::pass);
  CHECK(StatReport::judged("a", kNaN, Comparison::greater, 0.0).verdict == Verdict::fail);
  const std::vector<StatReport> reports{StatReport::informational("i", 3.0),
                                        StatReport::judged("p", 1, Comparison::greater, 0)};
  CHECK(all_pass(reports));
}

TEST_CASE("report json round trip and table") {
  auto r = StatReport::judged("speed", 0.43, Comparison::greater_equal, 0.41);
  r.estimate = 0.43;
  r.sample_size = 200;
  r.seeds = {1, 2};
  r.note = "x";
  const auto back = report_from_json(to_json(r));
  CHECK(back.name == r.name);
  CHECK(back.statistic == r.statistic);
  CHECK(back.comparison == r.comparison);
  CHECK(back.verdict == r.verdict);
  CHECK(std::isnan(back.std_error));
  CHECK(back.seeds == r.seeds);
  std::ostringstream table;
  const std::vector<StatReport> one{r};
  write_table(table, one);
  CHECK(table.str().find("speed") != std::string::npos);
  CHECK(table.str().find("pass") != std::string::npos);
}

TEST_CASE("empirical cdf") {
  const EmpiricalCDF f({3.0, 1.0, 2.0, 2.0});
  CHECK(f(0.5) == 0.0);
  CHECK(f(1.0) == 0.25);
  CHECK(f(2.0) == 0.75);
  CHECK(f(9.0) == 1.0);
}

TEST_CASE("median and mean") {
  CHECK(median({3, 1, 2}) == 2);
  CHECK(median({4, 1, 2, 3}) == 2.5);
  const std::vector<double> v{1, 2, 3, 4};
  const auto e = mean_estimate(v);
  CHECK(e.mean == 2.5);
  CHECK(e.std_error == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
}

TEST_CASE("ks distance by hand") {
  const std::vector<double> s{0.1, 0.4, 0.7};
  CHECK(ks_distance(s, [](double x) { return x; }) == doctest::Approx(0.3));
  CHECK_THROWS_AS(ks_statistic(s, [](double x) { return x; }), std::invalid_argument);
}

TEST_CASE("ks null calibration and mismatch") {
  Rng rng(10);
  int passes = 0;
  const int trials = 100;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> u(10000);
    for (double& x : u) x = rng.uniform01();
    passes += ks_statistic(u, [](double x) { return std::clamp(x, 0.0, 1.0); }).pass;
  }
  CHECK(passes >= 94);
  std::vector<double> u(10000);
  for (double& x : u) x = rng.uniform01();
  CHECK_FALSE(ks_statistic(u, scaling::arcsine_cdf).pass);
}

TEST_CASE("incomplete gamma against boost") {
  for (double a : {0.5, 1.0, 2.5, 7.0, 30.0, 120.0}) {
    for (double x : {0.01, 0.5, 1.0, 3.0, 10.0, 40.0, 150.0}) {
      const double ours = regularized_gamma_q(a, x);
      const double ref = boost::math::gamma_q(a, x);
      if (ref > 1e-300) CHECK(std::abs(ours - ref) <= 1e-8 * ref);
    }
  }
  CHECK(regularized_gamma_q(2.0, 0.0) == 1.0);
  CHECK_THROWS_AS(regularized_gamma_q(0.0, 1.0), std::domain_error);
}

TEST_CASE("chi-square by hand") {
  const std::vector<double> obs{60, 40}, p{0.5, 0.5};
  const auto r = chi_square(obs, p);
  CHECK(r.statistic == doctest::Approx(4.0));
  CHECK(r.dof == 1);
  CHECK(r.p_value == doctest::Approx(std::erfc(std::sqrt(2.0))).epsilon(1e-10));
  const std::vector<double> exact{25, 50, 25}, q{0.25, 0.5, 0.25};
  CHECK(chi_square(exact, q).statistic == 0.0);
  CHECK(chi_square(exact, q).p_value == 1.0);
  const std::vector<double> sparse{1, 99}, tiny{0.01, 0.99};
  CHECK_THROWS_AS(chi_square(sparse, tiny), std::invalid_argument);
}

TEST_CASE("pooling merges sparse bins") {
  const std::vector<double> obs{50, 30, 15, 3, 1, 1}, p{0.5, 0.3, 0.15, 0.03, 0.01, 0.01};
  const auto pooled = pool_bins(obs, p);
  CHECK(pooled.observed == std::vector<double>{50, 30, 15, 5});
  CHECK(pooled.probabilities.back() == doctest::Approx(0.05));
}

TEST_CASE("chi-square null calibration") {
  Rng rng(12);
  const std::vector<double> p{0.4, 0.3, 0.2, 0.1};
  std::discrete_distribution<int> draw(p.begin(), p.end());
  int rejections = 0;
  const int trials = 1000;
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> obs(4);
    for (int i = 0; i < 500; ++i) obs[draw(rng)] += 1;
    rejections += chi_square(obs, p).p_value < 0.01;
  }
  CHECK(rejections <= 0.02 * trials);
}

TEST_CASE("homogeneity test") {
  const std::vector<double> a{100, 200, 300, 2}, b{100, 200, 300, 3};
  const auto same = chi_square_homogeneity(a, b);
  CHECK(same.bins == 4);
  CHECK(same.p_value > 0.9);
  const std::vector<double> c{200, 200, 200, 5};
  CHECK(chi_square_homogeneity(a, c).p_value < 1e-6);
  const std::vector<double> d{100, 200, 300, 2}, e{100, 200, 300, 1};
  CHECK(chi_square_homogeneity(d, e).bins == 4);  // sparse cell pooled on its own
}

TEST_CASE("log-log slope") {
  std::vector<double> t, v, c;
  for (double x = 10; x <= 1e6; x *= 3) {
    t.push_back(x);
    v.push_back(std::pow(x, 0.75));
    c.push_back(2.0);
  }
  CHECK(std::abs(loglog_slope(t, v).slope - 0.75) < 1e-12);
  CHECK(std::abs(loglog_slope(t, c).slope) < 1e-12);
  Rng rng(13);
  std::normal_distribution<double> noise(0.0, 0.05);
  std::vector<double> noisy;
  for (double x : t) noisy.push_back(std::pow(x, -4.0 / 3.0) * (1 + noise(rng)));
  CHECK(std::abs(loglog_slope(t, noisy).slope + 4.0 / 3.0) < 0.1);
  const std::vector<double> three{1, 2, 3}, bad{1, -1, 2, 3}, four{1, 2, 3, 4};
  CHECK_THROWS_AS(loglog_slope(three, three), std::invalid_argument);
  CHECK_THROWS_AS(loglog_slope(four, bad), std::invalid_argument);
}

TEST_CASE("speed estimate") {
  const std::vector<Site> straight(30, Site{10000, 0});
  const auto e = speed_estimate(straight, 10000);
  CHECK(e.mean == 1.0);
  CHECK(e.std_error == 0.0);
  CHECK_THROWS_AS(speed_estimate(straight, 100), std::invalid_argument);
  CHECK_THROWS_AS(speed_estimate(std::span(straight).first(5), 10000), std::invalid_argument);
}

TEST_CASE("deviation diagnostics") {
  const std::vector<std::int64_t> same{0, 1, 2, 1};
  const auto d = deviation_gaps(same, same);
  CHECK(d.walk_gap == 0.0);
  const std::vector<std::int64_t> longer{0, 1};
  CHECK_THROWS_AS(deviation_gaps(same, longer), std::invalid_argument);
  const auto reports = sup_deviation_diagnostics(same, same);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].estimate == 0.0);
  for (const auto& r : reports) CHECK(r.verdict == Verdict::informational);
}
