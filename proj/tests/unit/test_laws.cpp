#include <doctest.h>

#include <cmath>

#include "prudent/coupling.hpp"
#include "prudent/effective_walk.hpp"
#include "prudent/excursions.hpp"
#include "prudent/stats.hpp"
#include "prudent/walk2d.hpp"

using namespace prudent;

TEST_CASE("sampled exit times follow the exact law") {
  for (int L : {1, 2, 3, 5, 10}) {
    Rng rng(replica_seed(40, static_cast<std::uint64_t>(L)));
    const int max_m = 50;
    std::vector<double> observed(max_m + 1);
    for (int i = 0; i < 1'000'000; ++i) {
      const auto m = effective::exit_time(L, rng).exit_time;
      observed[static_cast<std::size_t>(std::min<std::int64_t>(m, max_m + 1) - 1)] += 1;
    }
    auto probs = effective::exit_time_pmf_doubles(L, max_m);
    double mass = 0;
    for (double p : probs) mass += p;
    probs.push_back(1.0 - mass);
    const auto pooled = stats::pool_bins(observed, probs);
    const auto r = stats::chi_square(pooled.observed, pooled.probabilities);
    INFO("L = " << L << ", chi2 = " << r.statistic << ", dof = " << r.dof);
    CHECK(r.p_value > 0.01);
  }
}

TEST_CASE("survival of the unbounded exit time decays like n^-1/2") {
  Rng rng(41);
  const std::int64_t cap = 10000;
  const std::vector<double> grid{100, 200, 500, 1000, 2000, 5000, 10000};
  std::vector<double> survivors(grid.size());
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto out = effective::exit_time_unbounded(rng, cap);
    const double reached = out.censored() ? static_cast<double>(cap) + 1 : static_cast<double>(out.exit_time);
    for (std::size_t g = 0; g < grid.size(); ++g) survivors[g] += reached >= grid[g];
  }
  const auto fit = stats::loglog_slope(grid, survivors);
  CHECK(fit.slope > -0.6);
  CHECK(fit.slope < -0.4);
}

TEST_CASE("overshoots are geometric with parameter one half") {
  std::vector<double> counts(12);
  std::size_t ladders = 0;
  for (std::uint64_t s = 0; ladders < 100000; ++s) {
    Rng rng(replica_seed(42, s));
    const auto ladder = effective::ladder_decompose(effective::simulate_effective_walk(100000, rng));
    for (std::size_t k = 1; k < ladder.times.size(); ++k) {
      counts[static_cast<std::size_t>(std::min<std::int64_t>(std::abs(ladder.overshoots[k]), 11))] += 1;
      ++ladders;
    }
  }
  std::vector<double> probs;
  double mass = 0;
  for (int j = 0; j < 11; ++j) {
    probs.push_back(std::pow(0.5, j + 1));
    mass += probs.back();
  }
  probs.push_back(1 - mass);
  const auto pooled = stats::pool_bins(counts, probs);
  CHECK(stats::chi_square(pooled.observed, pooled.probabilities).p_value > 0.01);
}

TEST_CASE("late truncations are rare") {
  std::size_t late = 0;
  const std::size_t seeds = 500;
  for (std::uint64_t s = 0; s < seeds; ++s) {
    const auto coupled = walk2d::couple_corner_to_prudent(256, replica_seed(43, s));
    for (std::size_t j = 2 * 64; j < coupled.size(); ++j) {
      if (coupled[j].truncated) {
        ++late;
        break;
      }
    }
  }
  CHECK(static_cast<double>(late) / seeds <= 0.05);
}

TEST_CASE("rectangle sides grow like k^(4/3)") {
  std::vector<std::vector<double>> ratios(57);
  for (std::uint64_t s = 0; s < 200; ++s) {
    walk2d::Walker w(walk2d::Variant::prudent, replica_seed(44, s));
    walk2d::ExcursionTracker tracker;
    while (tracker.records().size() < 2 * 65) {
      w.step();
      tracker.observe(w.position());
    }
    for (std::size_t k = 8; k <= 64; ++k) {
      // The width at T_k is the wall of horizontal excursion k - 1.
      const auto& horizontal = tracker.records()[2 * k - 1];
      ratios[k - 8].push_back(static_cast<double>(horizontal.wall) /
                              std::pow(static_cast<double>(k), 4.0 / 3.0));
    }
  }
  double lowest = 1e9;
  for (const auto& r : ratios) lowest = std::min(lowest, stats::median(r));
  CHECK(lowest > 0.1);
}

TEST_CASE("settled quadrant is stable between 1e5 and 1e6 steps") {
  std::size_t stable = 0;
  const std::size_t seeds = 40;
  for (std::uint64_t s = 0; s < seeds; ++s) {
    walk2d::Walker w(walk2d::Variant::prudent, replica_seed(45, s), walk2d::FirstStep::uniform);
    for (int t = 0; t < 100000; ++t) w.step();
    const int early = walk2d::quadrant_from_signs(w.growth().x, w.growth().y);
    for (int t = 100000; t < 1000000; ++t) w.step();
    stable += early == walk2d::quadrant_from_signs(w.growth().x, w.growth().y);
  }
  CHECK(static_cast<double>(stable) / seeds >= 0.95);
}
