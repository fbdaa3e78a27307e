#include "prudent/acceptance.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>

#include "prudent/coupling.hpp"
#include "prudent/effective_walk.hpp"
#include "prudent/excursions.hpp"
#include "prudent/parallel.hpp"
#include "prudent/rng.hpp"
#include "prudent/scaling.hpp"
#include "prudent/walk2d.hpp"
#include "prudent/walk3d.hpp"

namespace prudent::acceptance {

namespace {

using stats::Comparison;
using stats::StatReport;
using walk2d::ExcursionKind;
using walk2d::FirstStep;
using walk2d::Variant;

constexpr std::array<const char*, kCriterionCount> kTitles{
    "speed law",          "angle law",         "quadrant uniformity", "exit-time law of excursions",
    "overshoot law",      "hat anchoring",     "time change",         "index correctness",
    "Z-process ray",      "crossing decay",    "3D exponent",         "coupling fidelity",
    "diagnostics trend"};

StatReport judged(std::string name, double statistic, Comparison cmp, double threshold,
                  std::size_t n, std::uint64_t seed, std::string note = {}) {
  auto r = StatReport::judged(std::move(name), statistic, cmp, threshold);
  r.sample_size = n;
  r.seeds = {seed};
  r.note = std::move(note);
  return r;
}

StatReport info(std::string name, double estimate, std::size_t n, std::string note = {}) {
  auto r = StatReport::informational(std::move(name), estimate);
  r.sample_size = n;
  r.note = std::move(note);
  return r;
}

std::string fixed(double v, int digits = 4) {
  std::ostringstream out;
  out.precision(digits);
  out << v;
  return out.str();
}

/// Pearson test of integer samples against a pmf on {offset, offset+1, ...};
/// values past the table share a tail bin.
stats::ChiSquareResult chi_square_counts(std::span<const std::int64_t> samples,
                                         std::span<const double> pmf, std::int64_t offset) {
  std::vector<double> observed(pmf.size() + 1, 0.0);
  std::vector<double> probs(pmf.begin(), pmf.end());
  double tail = 1.0;
  for (double p : pmf) tail -= p;
  probs.push_back(std::max(tail, 0.0));
  for (std::int64_t v : samples) {
    const auto i = static_cast<std::size_t>(v - offset);
    observed[std::min(i, pmf.size())] += 1.0;
  }
  // Renormalise away the rounding left in the tail.
  double total = 0.0;
  for (double p : probs) total += p;
  for (double& p : probs) p /= total;
  const auto pooled = stats::pool_bins(observed, probs);
  return stats::chi_square(pooled.observed, pooled.probabilities);
}

class Suite {
 public:
  explicit Suite(const SuiteOptions& options) : opt_(options), prof_(options.profile()) {
    if (opt_.tampered_stay_probability) {
      law_ = effective::IncrementSampler::with_stay_probability(*opt_.tampered_stay_probability);
    }
  }

  std::vector<StatReport> run(int id) {
    switch (id) {
      case 1: return speed_law();
      case 2: return angle_law();
      case 3: return quadrant_uniformity();
      case 4: return exit_time_law();
      case 5: return overshoot_law();
      case 6: return hat_anchoring();
      case 7: return time_change();
      case 8: return index_correctness();
      case 9: return z_ray();
      case 10: return crossing_decay();
      case 11: return exponent_3d();
      case 12: return coupling_fidelity();
      case 13: return diagnostics_trend();
    }
    throw std::out_of_range("no criterion " + std::to_string(id));
  }

 private:
  std::uint64_t seed_of(int id) const { return mix64(opt_.seed + 0x1000u * static_cast<unsigned>(id)); }
  std::uint64_t replica(int id, std::size_t i) const { return replica_seed(seed_of(id), i); }

  // Criteria 1 and 2: prudent walks with a free first step.
  const std::vector<Site>& long_runs() {
    if (endpoints_.empty()) {
      const std::size_t count = prof_.count(2000, 200);
      horizon_ = prof_.horizon(1'000'000);
      endpoints_ = parallel_map(count, opt_.threads, [&](std::size_t i) {
        walk2d::Walker w(Variant::prudent, replica(1, i), FirstStep::uniform);
        for (std::int64_t t = 0; t < horizon_; ++t) w.step();
        return w.position();
      });
    }
    return endpoints_;
  }

  std::vector<StatReport> speed_law() {
    const auto& all = long_runs();
    const std::size_t count = prof_.count(200, 50);
    const auto est = stats::speed_estimate(std::span(all).first(count), horizon_);
    auto r = judged("|speed - 3/7|", std::abs(est.mean - scaling::kSpeed), Comparison::less,
                    prof_.tolerance(0.02), count, seed_of(1),
                    "t = " + std::to_string(horizon_));
    r.estimate = est.mean;
    r.std_error = est.std_error;
    return {r};
  }

  std::vector<StatReport> angle_law() {
    const auto& all = long_runs();
    std::vector<double> angles;
    angles.reserve(all.size());
    for (Site s : all) {
      angles.push_back(std::atan2(std::abs(static_cast<double>(s.y)),
                                  std::abs(static_cast<double>(s.x))));
    }
    const double d = stats::ks_distance(angles, [](double x) {
      if (x <= 0.0) return 0.0;
      if (x >= std::numbers::pi / 2) return 1.0;
      return scaling::angle_cdf(x);
    });
    return {judged("KS distance to (2/pi)arctan(sqrt(tan x))", d, Comparison::less,
                   prof_.tolerance(0.05), angles.size(), seed_of(1),
                   "endpoint reflected into the first quadrant")};
  }

  std::vector<StatReport> quadrant_uniformity() {
    const std::size_t count = prof_.count(4000);
    const std::int64_t t = prof_.horizon(100'000);
    const auto quadrants = parallel_map(count, opt_.threads, [&](std::size_t i) {
      walk2d::Walker w(Variant::prudent, replica(3, i), FirstStep::uniform);
      for (std::int64_t s = 0; s < t; ++s) w.step();
      const auto g = w.growth();
      return walk2d::quadrant_from_signs(g.x, g.y);
    });
    std::array<double, 4> freq{};
    for (int q : quadrants) freq[q - 1] += 1.0 / static_cast<double>(count);
    std::vector<StatReport> out;
    double worst = 0.0;
    for (int q = 0; q < 4; ++q) {
      worst = std::max(worst, std::abs(freq[q] - 0.25));
      out.push_back(info("frequency of quadrant " + std::to_string(q + 1), freq[q], count));
    }
    out.insert(out.begin(), judged("max |frequency - 1/4|", worst, Comparison::less,
                                   prof_.tolerance(0.03), count, seed_of(3),
                                   "t = " + std::to_string(t)));
    return out;
  }

  std::vector<StatReport> exit_time_law() {
    constexpr std::array<int, 3> walls{2, 3, 5};
    const std::size_t target = prof_.count(100'000);
    // samples[kind][wall index]
    std::array<std::array<std::vector<std::int64_t>, 3>, 2> samples;
    auto enough = [&] {
      for (const auto& by_kind : samples) {
        for (const auto& s : by_kind) {
          if (s.size() < target) return false;
        }
      }
      return true;
    };
    constexpr std::size_t batch = 20'000;
    std::size_t walks = 0;
    while (!enough()) {
      const auto found = parallel_map(batch, opt_.threads, [&](std::size_t i) {
        walk2d::Walker w(Variant::prudent, replica(4, walks + i), FirstStep::east);
        walk2d::ExcursionTracker tracker;
        while (w.rect().width() < 6 || w.rect().height() < 6) {
          w.step();
          tracker.observe(w.position());
        }
        return tracker.take();
      });
      walks += batch;
      for (const auto& records : found) {
        for (const auto& r : records) {
          const auto* hit = std::find(walls.begin(), walls.end(), r.wall);
          if (hit == walls.end()) continue;
          auto& bucket = samples[static_cast<int>(r.kind)][hit - walls.begin()];
          if (bucket.size() < target) bucket.push_back(r.displacement);
        }
      }
    }
    std::vector<StatReport> out;
    for (int kind = 0; kind < 2; ++kind) {
      for (std::size_t w = 0; w < walls.size(); ++w) {
        const auto pmf = effective::exit_time_pmf_doubles(walls[w], effective::kMaxExactTime);
        const auto res = chi_square_counts(samples[kind][w], pmf, 1);
        const std::string name = std::string(kind == 0 ? "X | H = " : "Y | W = ") +
                                 std::to_string(walls[w]) + " chi-square p";
        auto r = judged(name, res.p_value, Comparison::greater, prof_.level(0.01),
                        samples[kind][w].size(), seed_of(4),
                        "statistic " + fixed(res.statistic) + " on " + std::to_string(res.dof) +
                            " dof");
        out.push_back(r);
      }
    }
    out.push_back(info("walks simulated", static_cast<double>(walks), walks));
    return out;
  }

  std::vector<StatReport> overshoot_law() {
    const std::size_t target = prof_.count(100'000);
    constexpr std::size_t length = 100'000;
    std::vector<std::int64_t> sizes;
    for (std::size_t path = 0; sizes.size() < target; ++path) {
      Rng rng(replica(5, path));
      const auto walk = effective::simulate_effective_walk(length, rng, law_);
      const auto ladder = effective::ladder_decompose(walk);
      for (std::size_t k = 1; k < ladder.overshoots.size() && sizes.size() < target; ++k) {
        sizes.push_back(std::abs(ladder.overshoots[k]));
      }
    }
    std::vector<double> pmf;
    for (int j = 0; j < 60; ++j) pmf.push_back(std::ldexp(1.0, -(j + 1)));
    const auto res = chi_square_counts(sizes, pmf, 0);
    double mean = 0.0;
    for (auto s : sizes) mean += static_cast<double>(s);
    mean /= static_cast<double>(sizes.size());
    return {judged("|overshoot| ~ geometric(1/2) chi-square p", res.p_value, Comparison::greater,
                   prof_.level(0.01), sizes.size(), seed_of(5),
                   "statistic " + fixed(res.statistic) + " on " + std::to_string(res.dof) + " dof"),
            info("mean |overshoot| (geometric(1/2) gives 1)", mean, sizes.size())};
  }

  std::vector<StatReport> hat_anchoring() {
    const std::size_t paths = prof_.count(1000);
    constexpr std::size_t length = 100'000;
    const auto counts = parallel_map(paths, opt_.threads, [&](std::size_t i) {
      Rng rng(replica(6, i));
      const auto hat = effective::hat_path(effective::simulate_effective_walk(length, rng, law_));
      const auto& ladder = *hat.ladder();
      std::array<std::size_t, 2> c{0, 0};  // violations, epochs
      if (hat[0] != 0) ++c[0];
      for (std::size_t k = 1; k < ladder.times.size(); ++k) {
        const std::int64_t want = k % 2 == 1 ? -1 : 0;
        if (hat[ladder.times[k]] != want) ++c[0];
        ++c[1];
      }
      return c;
    });
    std::size_t violations = 0, epochs = 0;
    for (const auto& c : counts) {
      violations += c[0];
      epochs += c[1];
    }
    return {judged("anchoring violations", static_cast<double>(violations), Comparison::less_equal,
                   0.0, paths, seed_of(6), std::to_string(epochs) + " ladder epochs checked")};
  }

  std::vector<StatReport> time_change() {
    const std::size_t seeds = prof_.count(100);
    const auto n = static_cast<std::size_t>(prof_.horizon(1'000'000));
    const double tol = prof_.tolerance(0.01);
    const auto ratios = parallel_map(seeds, opt_.threads, [&](std::size_t i) {
      Rng rng(replica(7, i));
      const auto hat = effective::hat_path(effective::simulate_effective_walk(n, rng, law_));
      return static_cast<double>(effective::microscopic_time(hat, n)) / static_cast<double>(n);
    });
    std::size_t within = 0;
    for (double r : ratios) within += std::abs(r - 7.0 / 3.0) < tol ? 1 : 0;
    const double fraction = static_cast<double>(within) / static_cast<double>(seeds);
    const auto est = stats::mean_estimate(ratios);
    auto headline = judged("fraction of seeds with |t(n)/n - 7/3| < " + fixed(tol, 2), fraction,
                           Comparison::greater_equal, 1.0 - prof_.tolerance(0.01), seeds,
                           seed_of(7), "n = " + std::to_string(n));
    auto mean = info("mean t(n)/n", est.mean, seeds);
    mean.std_error = est.std_error;
    return {headline, mean};
  }

  std::vector<StatReport> index_correctness() {
    const std::int64_t n = prof_.horizon(100'000);
    struct Case {
      const char* name;
      Variant variant;
      FirstStep first;
    };
    const std::array<Case, 2> cases2d{Case{"2D prudent", Variant::prudent, FirstStep::uniform},
                                      Case{"2D corner", Variant::corner, FirstStep::east}};
    auto mismatches = parallel_map(3, opt_.threads, [&](std::size_t c) -> std::int64_t {
      std::int64_t bad = 0;
      if (c < 2) {
        walk2d::Walker w(cases2d[c].variant, replica(8, c), cases2d[c].first);
        LatticePath path;
        path.reserve(static_cast<std::size_t>(n));
        for (std::int64_t t = 0; t < n; ++t) {
          if (w.allowed() != walk2d::naive_allowed_directions(path, cases2d[c].variant)) ++bad;
          path.push(w.step());
        }
      } else {
        walk3d::Walker3D w(replica(8, c));
        walk3d::LatticePath3D path;
        path.reserve(static_cast<std::size_t>(n));
        for (std::int64_t t = 0; t < n; ++t) {
          if (w.allowed() != walk3d::naive_allowed_directions_3d(path.sites(), path.back())) ++bad;
          path.push(w.step());
        }
      }
      return bad;
    });
    std::vector<StatReport> out;
    std::int64_t total = 0;
    for (auto m : mismatches) total += m;
    out.push_back(judged("allowed-set mismatches", static_cast<double>(total),
                         Comparison::less_equal, 0.0, 3, seed_of(8),
                         std::to_string(n) + " steps per run"));
    const std::array<const char*, 3> names{cases2d[0].name, cases2d[1].name, "3D prudent"};
    for (std::size_t c = 0; c < 3; ++c) {
      out.push_back(info(std::string(names[c]) + " mismatches", static_cast<double>(mismatches[c]),
                         static_cast<std::size_t>(n)));
    }
    return out;
  }

  std::vector<StatReport> z_ray() {
    const std::size_t seeds = prof_.count(100);
    constexpr double dt = 1e-4;
    std::vector<double> grid;
    for (int k = 0; k <= 100; ++k) grid.push_back(k / 100.0);
    const auto worst = parallel_map(seeds, opt_.threads, [&](std::size_t i) {
      Rng rng(replica(9, i));
      const int s1 = rng.below(2) == 0 ? 1 : -1;
      const int s2 = rng.below(2) == 0 ? 1 : -1;
      const auto path = scaling::sample_brownian(dt, scaling::kSpeed * grid.back(), rng);
      const auto z = scaling::z_process(path, s1, s2, grid);
      double w = 0.0;
      for (std::size_t g = 0; g < grid.size(); ++g) {
        const double l1 = std::abs(z.points[g][0]) + std::abs(z.points[g][1]);
        w = std::max(w, std::abs(l1 - scaling::kSpeed * grid[g]));
      }
      return w;
    });
    return {judged("max | |Z_u|_1 - 3u/7 |", *std::max_element(worst.begin(), worst.end()),
                   Comparison::less_equal, dt, seeds * grid.size(), seed_of(9),
                   "quadrature step " + fixed(dt))};
  }

  std::vector<StatReport> crossing_decay() {
    constexpr std::size_t kmax = 64;
    constexpr std::int64_t step_cap = 20'000'000;
    const std::size_t replicas = prof_.count(10'000);
    // a[k] = 1 / 0 for A_k, -1 when the run was cut before excursion pair k closed.
    const auto crossings = parallel_map(replicas, opt_.threads, [&](std::size_t i) {
      walk2d::Walker w(Variant::prudent, replica(10, i), FirstStep::east);
      walk2d::ExcursionTracker tracker;
      while (tracker.records().size() < 2 * (kmax + 1) && w.time() < step_cap) {
        w.step();
        tracker.observe(w.position());
      }
      std::vector<std::int8_t> a(kmax + 1, -1);
      const auto& r = tracker.records();
      for (std::size_t k = 0; k <= kmax && 2 * k + 1 < r.size(); ++k) {
        a[k] = r[2 * k].crossed || r[2 * k + 1].crossed;
      }
      return a;
    });
    std::vector<double> p(kmax + 1, 0.0), seen(kmax + 1, 0.0);
    std::size_t censored = 0;
    for (const auto& a : crossings) {
      censored += a[kmax] < 0 ? 1 : 0;
      for (std::size_t k = 0; k <= kmax; ++k) {
        if (a[k] < 0) continue;
        p[k] += a[k];
        seen[k] += 1.0;
      }
    }
    for (std::size_t k = 0; k <= kmax; ++k) p[k] = seen[k] > 0 ? p[k] / seen[k] : stats::kNaN;

    constexpr std::array<std::array<std::size_t, 2>, 4> blocks{{{4, 7}, {8, 15}, {16, 31}, {32, 64}}};
    std::vector<double> mid, smooth;
    std::vector<StatReport> out;
    for (const auto& [lo, hi] : blocks) {
      double s = 0.0;
      for (std::size_t k = lo; k <= hi; ++k) s += p[k];
      smooth.push_back(s / static_cast<double>(hi - lo + 1));
      mid.push_back(std::sqrt(static_cast<double>(lo) * static_cast<double>(hi)));
      out.push_back(info("P(A_k), k in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                         smooth.back(), replicas));
    }
    int rises = 0;
    for (std::size_t b = 1; b < smooth.size(); ++b) rises += smooth[b] > smooth[b - 1] ? 1 : 0;
    const bool positive = std::all_of(smooth.begin(), smooth.end(), [](double v) { return v > 0; });
    const double slope = positive ? stats::loglog_slope(mid, smooth).slope : stats::kNaN;
    out.insert(out.begin(), judged("log-log slope of P(A_k)", slope, Comparison::less_equal,
                                   -1.2 / (prof_.quick ? 2.0 : 1.0), replicas, seed_of(10),
                                   "dyadic blocks over k in [4, 64]"));
    out.insert(out.begin() + 1, judged("increases between blocks", rises, Comparison::less_equal,
                                       0.0, replicas, seed_of(10)));
    out.push_back(info("runs cut at " + std::to_string(step_cap) + " steps before k = 64",
                       static_cast<double>(censored), replicas));
    return out;
  }

  std::vector<StatReport> exponent_3d() {
    const std::size_t count = prof_.count(50);
    const std::int64_t t_max = prof_.horizon(1'000'000);
    const std::int64_t t_min = t_max / 100;
    std::vector<std::int64_t> checkpoints;
    for (int j = 0; j <= 20; ++j) {
      checkpoints.push_back(static_cast<std::int64_t>(
          std::llround(static_cast<double>(t_min) * std::pow(10.0, j / 10.0))));
    }
    std::vector<std::uint64_t> seeds;
    for (std::size_t i = 0; i < count; ++i) seeds.push_back(replica(11, i));
    const auto series = walk3d::endpoint_norm_series(seeds, checkpoints, opt_.threads);
    std::vector<double> t, v;
    for (const auto& p : series) {
      t.push_back(static_cast<double>(p.t));
      v.push_back(p.mean);
    }
    const auto fit = stats::loglog_slope(t, v);
    const double centre = 0.755, half = prof_.tolerance(0.095);
    auto lo = judged("alpha >= " + fixed(centre - half, 3), fit.slope, Comparison::greater_equal,
                     centre - half, count, seed_of(11),
                     "t in [" + std::to_string(t_min) + ", " + std::to_string(t_max) + "]");
    auto hi = judged("alpha <= " + fixed(centre + half, 3), fit.slope, Comparison::less_equal,
                     centre + half, count, seed_of(11));
    auto point = info("fitted alpha (numerical value quoted: 0.75)", fit.slope, count);
    point.std_error = fit.std_error;
    return {lo, hi, point};
  }

  std::vector<StatReport> coupling_fidelity() {
    const std::size_t triples = prof_.count(100'000);
    constexpr int cap = 11;
    auto cell = [](std::int64_t a, std::int64_t b, std::int64_t c) {
      auto clip = [](std::int64_t v) { return static_cast<std::size_t>(std::min<std::int64_t>(v, cap)); };
      return (clip(a) * (cap + 1) + clip(b)) * (cap + 1) + clip(c);
    };
    const auto coupled = parallel_map(triples, opt_.threads, [&](std::size_t i) {
      const auto e = walk2d::couple_corner_to_prudent(3, replica(12, 2 * i));
      return cell(e[0].displacement, e[1].displacement, e[2].displacement);
    });
    const auto direct = parallel_map(triples, opt_.threads, [&](std::size_t i) {
      walk2d::Walker w(Variant::prudent, replica(12, 2 * i + 1), FirstStep::east);
      walk2d::ExcursionTracker tracker;
      while (tracker.records().size() < 3) {
        w.step();
        tracker.observe(w.position());
      }
      const auto& r = tracker.records();
      return cell(r[0].displacement, r[1].displacement, r[2].displacement);
    });
    const std::size_t cells = (cap + 1) * (cap + 1) * (cap + 1);
    std::vector<double> a(cells, 0.0), b(cells, 0.0);
    for (auto c : coupled) a[c] += 1.0;
    for (auto c : direct) b[c] += 1.0;
    const auto res = stats::chi_square_homogeneity(a, b);
    return {judged("(X0, Y0, X1) homogeneity chi-square p", res.p_value, Comparison::greater,
                   prof_.level(0.01), triples, seed_of(12),
                   "statistic " + fixed(res.statistic) + " on " + std::to_string(res.dof) +
                       " dof, values capped at 11")};
  }

  std::vector<StatReport> diagnostics_trend() {
    const std::size_t seeds = prof_.count(100);
    const std::array<std::int64_t, 3> horizons{prof_.horizon(10'000), prof_.horizon(100'000),
                                               prof_.horizon(1'000'000)};
    std::vector<StatReport> out;
    std::array<double, 3> walk{}, clock{};
    for (std::size_t h = 0; h < horizons.size(); ++h) {
      const auto n = static_cast<std::size_t>(horizons[h]);
      const auto gaps = parallel_map(seeds, opt_.threads, [&](std::size_t i) {
        Rng rng(replica(13, h * seeds + i));
        const auto s = effective::simulate_effective_walk(n, rng, law_);
        const auto hat = effective::hat_path(s);
        return stats::deviation_gaps(s.values(), hat.values());
      });
      std::vector<double> w, c, o;
      for (const auto& g : gaps) {
        w.push_back(g.walk_gap);
        c.push_back(g.clock_gap);
        o.push_back(g.occupation_gap);
      }
      walk[h] = stats::median(w);
      clock[h] = stats::median(c);
      const std::string at = " at n = " + std::to_string(n);
      out.push_back(info("median max|S-hatS|/sqrt(n)" + at, walk[h], seeds));
      out.push_back(info("median sup|t(m)-7m/3|/n" + at, clock[h], seeds));
      out.push_back(info("median sup|Gamma_m-Z_m|/n" + at, stats::median(o), seeds,
                         "linear-interpolation embedding"));
    }
    auto breaks = [](const std::array<double, 3>& v) {
      return static_cast<double>((v[1] >= v[0]) + (v[2] >= v[1]));
    };
    out.insert(out.begin(), judged("non-decreasing steps of median max|S-hatS|/sqrt(n)",
                                   breaks(walk), Comparison::less_equal, 0.0, seeds, seed_of(13)));
    out.insert(out.begin() + 1, judged("non-decreasing steps of median sup|t(m)-7m/3|/n",
                                       breaks(clock), Comparison::less_equal, 0.0, seeds,
                                       seed_of(13)));
    return out;
  }

  SuiteOptions opt_;
  Profile prof_;
  effective::IncrementSampler law_{};
  std::vector<Site> endpoints_;
  std::int64_t horizon_ = 0;
};

}  // namespace

std::string criterion_title(int id) {
  if (id < 1 || id > kCriterionCount) throw std::out_of_range("no criterion " + std::to_string(id));
  return kTitles[id - 1];
}

std::vector<CriterionResult> run_suite(const SuiteOptions& options) {
  std::vector<int> ids = options.only;
  if (ids.empty()) {
    for (int id = 1; id <= kCriterionCount; ++id) ids.push_back(id);
  }
  Suite suite(options);
  std::vector<CriterionResult> results;
  for (int id : ids) {
    CriterionResult r;
    r.id = id;
    r.title = criterion_title(id);
    const auto start = std::chrono::steady_clock::now();
    r.reports = suite.run(id);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (options.on_result) options.on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string summary_line(const CriterionResult& result) {
  const StatReport* head = nullptr;
  for (const auto& r : result.reports) {
    if (r.verdict == stats::Verdict::informational) continue;
    if (!head || (r.failed() && !head->failed())) head = &r;
  }
  std::ostringstream out;
  out << (result.pass() ? "PASS" : "FAIL") << " C" << result.id << ' ' << result.title;
  if (head) {
    const char* op = "<";
    switch (head->comparison) {
      case Comparison::less: op = "<"; break;
      case Comparison::less_equal: op = "<="; break;
      case Comparison::greater: op = ">"; break;
      case Comparison::greater_equal: op = ">="; break;
    }
    out << ": " << head->name << " = " << fixed(head->statistic) << ' ' << op << ' '
        << fixed(head->threshold);
  }
  out << " [" << fixed(result.seconds, 3) << " s]";
  return out.str();
}

bool suite_passes(const std::vector<CriterionResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass(); });
}

nlohmann::json to_json(const std::vector<CriterionResult>& results) {
  auto out = nlohmann::json::array();
  for (const auto& r : results) {
    auto reports = nlohmann::json::array();
    for (const auto& s : r.reports) reports.push_back(stats::to_json(s));
    out.push_back({{"id", r.id},
                   {"title", r.title},
                   {"pass", r.pass()},
                   {"seconds", r.seconds},
                   {"reports", reports}});
  }
  return out;
}

}  // namespace prudent::acceptance
