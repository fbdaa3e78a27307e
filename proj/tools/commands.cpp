#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>

#include <nlohmann/json.hpp>

#include "prudent/acceptance.hpp"
#include "prudent/effective_walk.hpp"
#include "prudent/excursions.hpp"
#include "prudent/parallel.hpp"
#include "prudent/rng.hpp"
#include "prudent/scaling.hpp"
#include "prudent/stats.hpp"
#include "prudent/walk2d.hpp"
#include "prudent/walk3d.hpp"

namespace prudent::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Writes to a file, or to stdout for "-".
class Sink {
 public:
  explicit Sink(const std::string& path) {
    if (path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw UsageError("cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return in;
}

void write_summary(const io::RunConfig& c, const nlohmann::json& summary) {
  if (c.out == "-") {
    std::cerr << summary.dump(2) << '\n';
    return;
  }
  Sink sink(c.out + ".summary.json");
  sink.stream() << summary.dump(2) << '\n';
}

Site transposed(Site s) { return {s.y, s.x}; }

struct Run2d {
  std::string line;
  Site end;
  int quadrant = 1;
  std::size_t excursions = 0;
};

Run2d simulate_2d(const io::RunConfig& c, walk2d::Variant variant, std::uint64_t seed) {
  walk2d::Walker w(variant, seed,
                   c.free_first_step ? walk2d::FirstStep::uniform : walk2d::FirstStep::east);
  walk2d::ExcursionTracker tracker;
  std::vector<Dir> steps;
  steps.reserve(static_cast<std::size_t>(c.n));
  bool flip = false;
  for (std::int64_t t = 0; t < c.n; ++t) {
    const Dir d = w.step();
    if (t == 0) flip = axis_of(d) == Axis::vertical;
    steps.push_back(d);
    tracker.observe(flip ? transposed(w.position()) : w.position());
  }
  Run2d out;
  out.line = io::to_jsonl(io::TrajectoryRecord{seed, c.variant, c.n, io::rle_encode(steps)});
  out.end = w.position();
  out.quadrant = walk2d::quadrant_from_signs(w.growth().x, w.growth().y);
  out.excursions = tracker.records().size();
  return out;
}

nlohmann::json simulate_lattice_2d(const io::RunConfig& c, std::ostream& out) {
  const auto variant = c.variant == "corner" ? walk2d::Variant::corner : walk2d::Variant::prudent;
  const auto runs = parallel_map(c.replicas, c.threads, [&](std::size_t i) {
    return simulate_2d(c, variant, replica_seed(c.seed, i));
  });
  std::array<std::size_t, 4> quadrants{};
  double speed = 0.0, excursions = 0.0;
  for (const auto& r : runs) {
    out << r.line << '\n';
    ++quadrants[r.quadrant - 1];
    speed += c.n > 0 ? static_cast<double>(std::abs(r.end.x) + std::abs(r.end.y)) / static_cast<double>(c.n) : 0.0;
    excursions += static_cast<double>(r.excursions);
  }
  const auto count = static_cast<double>(runs.size());
  return {{"mean_speed", speed / count},
          {"quadrant_counts", quadrants},
          {"mean_completed_excursions", excursions / count}};
}

nlohmann::json simulate_3d(const io::RunConfig& c, std::ostream& out) {
  if (!c.checkpoints.empty()) {
    std::vector<std::uint64_t> seeds;
    for (std::size_t i = 0; i < c.replicas; ++i) seeds.push_back(replica_seed(c.seed, i));
    const auto series = walk3d::endpoint_norm_series(seeds, c.checkpoints, c.threads);
    io::write_norm_csv(out, series);
    return {{"checkpoints", c.checkpoints.size()}, {"final_mean_norm", series.back().mean}};
  }
  struct Run {
    std::string line;
    double norm = 0.0;
    std::int64_t few = 0;
  };
  const auto runs = parallel_map(c.replicas, c.threads, [&](std::size_t i) {
    const std::uint64_t seed = replica_seed(c.seed, i);
    walk3d::Walker3D w(seed);
    std::vector<walk3d::Dir3> steps;
    steps.reserve(static_cast<std::size_t>(c.n));
    for (std::int64_t t = 0; t < c.n; ++t) steps.push_back(w.step());
    return Run{io::to_jsonl(io::TrajectoryRecord{seed, c.variant, c.n, io::rle_encode(steps)}),
               walk3d::l2_norm(w.position()), w.few_option_steps()};
  });
  double norm = 0.0;
  std::int64_t few = 0;
  for (const auto& r : runs) {
    out << r.line << '\n';
    norm += r.norm;
    few += r.few;
  }
  return {{"mean_endpoint_norm", norm / static_cast<double>(runs.size())},
          {"steps_with_fewer_than_three_options", few}};
}

nlohmann::json simulate_effective(const io::RunConfig& c, std::ostream& out) {
  struct Run {
    std::string line;
    double clock_ratio = 0.0;
    std::size_t epochs = 0;
  };
  const auto n = static_cast<std::size_t>(c.n);
  const auto runs = parallel_map(c.replicas, c.threads, [&](std::size_t i) {
    const std::uint64_t seed = replica_seed(c.seed, i);
    Rng rng(seed);
    const auto walk = effective::simulate_effective_walk(n, rng);
    const auto hat = effective::hat_path(walk);
    Run r;
    r.clock_ratio = n > 0 ? static_cast<double>(effective::microscopic_time(hat, n)) /
                                static_cast<double>(n)
                          : 0.0;
    r.epochs = hat.ladder()->completed();
    r.line = io::to_jsonl(io::EffectiveRecord{
        seed, std::vector<std::int64_t>(walk.values().begin(), walk.values().end())});
    return r;
  });
  double ratio = 0.0, epochs = 0.0;
  for (const auto& r : runs) {
    out << r.line << '\n';
    ratio += r.clock_ratio;
    epochs += static_cast<double>(r.epochs);
  }
  const auto count = static_cast<double>(runs.size());
  return {{"mean_time_change_ratio", ratio / count},
          {"expected_time_change_ratio", 7.0 / 3.0},
          {"mean_ladder_epochs", epochs / count}};
}

nlohmann::json simulate_zprocess(const io::RunConfig& c, std::ostream& out) {
  if (c.n < 1) throw UsageError("zprocess needs n >= 1 grid intervals");
  constexpr double dt = 1e-4;
  std::vector<double> grid;
  for (std::int64_t k = 0; k <= c.n; ++k) grid.push_back(static_cast<double>(k) / static_cast<double>(c.n));
  const auto runs = parallel_map(c.replicas, c.threads, [&](std::size_t i) {
    const std::uint64_t seed = replica_seed(c.seed, i);
    Rng rng(seed);
    const int s1 = rng.below(2) == 0 ? 1 : -1;
    const int s2 = rng.below(2) == 0 ? 1 : -1;
    const auto path = scaling::sample_brownian(dt, scaling::kSpeed, rng);
    const auto z = scaling::z_process(path, s1, s2, grid);
    std::vector<io::ZRow> rows;
    for (std::size_t g = 0; g < grid.size(); ++g) {
      rows.push_back({grid[g], z.points[g][0], z.points[g][1], s1, s2, seed});
    }
    return rows;
  });
  std::vector<io::ZRow> all;
  for (const auto& r : runs) all.insert(all.end(), r.begin(), r.end());
  io::write_z_csv(out, all);
  return {{"grid_points", grid.size()}, {"quadrature_step", dt}};
}

std::vector<Site> decode_sites(const io::TrajectoryRecord& r) {
  std::vector<Site> sites{Site{}};
  if (r.variant == "walk3d") {
    walk3d::Site3 s{};
    for (auto d : io::rle_decode_3d(r.steps)) {
      s = walk3d::step_from(s, d);
      sites.push_back({s.c[0], s.c[1]});
    }
  } else {
    for (Dir d : io::rle_decode_2d(r.steps)) sites.push_back(step_from(sites.back(), d));
  }
  return sites;
}

std::string svg_path_for(const io::RunConfig& c, const PlotOptions& p) {
  return (c.out == "-" ? p.input : c.out) + ".svg";
}

void write_polyline_svg(std::ostream& out, std::span<const double> x, std::span<const double> y) {
  const auto [x0, x1] = std::minmax_element(x.begin(), x.end());
  const auto [y0, y1] = std::minmax_element(y.begin(), y.end());
  const double w = std::max(*x1 - *x0, 1e-12), h = std::max(*y1 - *y0, 1e-12);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 100 100\">\n"
      << "<path d=\"M 0 100 H 100 M 0 100 V 0\" stroke=\"gray\" stroke-width=\"0.3\" fill=\"none\"/>\n"
      << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.5\" points=\"";
  for (std::size_t i = 0; i < x.size(); ++i) {
    out << (i ? " " : "") << io::format_double(100.0 * (x[i] - *x0) / w) << ','
        << io::format_double(100.0 - 100.0 * (y[i] - *y0) / h);
  }
  out << "\"/>\n</svg>\n";
}

}  // namespace

void write_trajectory_svg(std::ostream& out, std::span<const Site> sites) {
  const auto rect = walk2d::bounding_rect(sites);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << rect.x_min - 0.5 << ' '
      << -rect.y_max - 0.5 << ' ' << rect.width() << ' ' << rect.height() << "\">\n"
      << "<polyline fill=\"none\" stroke=\"black\" stroke-width=\"0.2\" points=\"";
  for (std::size_t i = 0; i < sites.size(); ++i) {
    out << (i ? " " : "") << sites[i].x << ',' << -sites[i].y;
  }
  out << "\"/>\n</svg>\n";
}

void write_cdf_svg(std::ostream& out, std::span<const double> x, std::span<const double> empirical,
                   std::span<const double> theoretical) {
  const double lo = x.empty() ? 0.0 : x.front();
  const double hi = x.empty() ? 1.0 : x.back();
  const double w = std::max(hi - lo, 1e-12);
  auto px = [&](double v) { return io::format_double(100.0 * (v - lo) / w); };
  auto py = [](double v) { return io::format_double(100.0 - 100.0 * v); };
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 100 100\">\n"
      << "<path d=\"M 0 100 H 100 M 0 100 V 0\" stroke=\"gray\" stroke-width=\"0.3\" fill=\"none\"/>\n";
  const std::array<std::pair<std::span<const double>, const char*>, 2> series{
      {{empirical, "black"}, {theoretical, "red"}}};
  for (const auto& [ys, colour] : series) {
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"0.4\" points=\"";
    double prev = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      out << (i ? " " : "") << px(x[i]) << ',' << py(prev) << ' ' << px(x[i]) << ',' << py(ys[i]);
      prev = ys[i];
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

int cmd_simulate(const io::RunConfig& c) {
  if (!io::valid_variant(c.variant)) throw UsageError("unknown variant '" + c.variant + "'");
  if (c.n < 0) throw UsageError("n must be >= 0");
  if (c.replicas < 1) throw UsageError("replicas must be >= 1");
  const auto start = Clock::now();
  Sink sink(c.out);
  auto& out = sink.stream();
  nlohmann::json summary{{"variant", c.variant}, {"n", c.n}, {"replicas", c.replicas}, {"seed", c.seed}};
  nlohmann::json extra;
  if (c.variant == "prudent2d" || c.variant == "corner") extra = simulate_lattice_2d(c, out);
  else if (c.variant == "walk3d") extra = simulate_3d(c, out);
  else if (c.variant == "effective") extra = simulate_effective(c, out);
  else extra = simulate_zprocess(c, out);
  out.flush();
  summary.update(extra);
  write_summary(c, summary);
  const double secs = seconds_since(start);
  const double steps = static_cast<double>(c.n) * static_cast<double>(c.replicas);
  std::cerr << "simulate: " << secs << " s";
  if (secs > 0 && c.variant != "zprocess") std::cerr << ", " << steps / secs << " steps/s";
  std::cerr << '\n';
  return kOk;
}

int cmd_verify(const io::RunConfig& c, double tamper_stay) {
  acceptance::SuiteOptions opt;
  opt.quick = c.quick;
  opt.seed = c.seed;
  opt.threads = c.threads;
  if (tamper_stay >= 0.0) opt.tampered_stay_probability = tamper_stay;
  opt.on_result = [](const acceptance::CriterionResult& r) {
    std::cout << acceptance::summary_line(r) << std::endl;
  };
  const auto start = Clock::now();
  const auto results = acceptance::run_suite(opt);
  if (c.out != "-") {
    Sink sink(c.out);
    sink.stream() << acceptance::to_json(results).dump(2) << '\n';
  }
  for (const auto& r : results) {
    if (!r.pass()) {
      std::vector<stats::StatReport> failed;
      for (const auto& s : r.reports) if (s.failed()) failed.push_back(s);
      std::cout << "\nC" << r.id << " failing reports:\n";
      stats::write_table(std::cout, failed);
    }
  }
  const bool pass = acceptance::suite_passes(results);
  std::cout << (pass ? "ALL PASS" : "SUITE FAILED") << '\n';
  std::cerr << "verify: " << seconds_since(start) << " s\n";
  return pass ? kOk : kTestFailure;
}

int cmd_plot(const io::RunConfig& c, const PlotOptions& p) {
  if (p.input.empty()) throw UsageError("plot needs --input");
  auto in = open_input(p.input);
  Sink sink(c.out);
  auto& out = sink.stream();
  if (p.kind == "trajectory") {
    const auto records = io::read_trajectories(in);
    if (p.index >= records.size()) {
      throw UsageError("record " + std::to_string(p.index) + " not in " + p.input);
    }
    const auto sites = decode_sites(records[p.index]);
    out << "t,x,y\n";
    for (std::size_t t = 0; t < sites.size(); ++t) out << t << ',' << sites[t].x << ',' << sites[t].y << '\n';
    if (c.svg) {
      Sink svg(svg_path_for(c, p));
      write_trajectory_svg(svg.stream(), sites);
    }
  } else if (p.kind == "angle") {
    std::vector<double> angles;
    for (const auto& r : io::read_trajectories(in)) {
      const Site end = decode_sites(r).back();
      if (end.x == 0 && end.y == 0) continue;
      angles.push_back(std::atan2(std::abs(static_cast<double>(end.y)),
                                  std::abs(static_cast<double>(end.x))));
    }
    std::sort(angles.begin(), angles.end());
    std::vector<double> emp, theo;
    out << "angle,empirical,theoretical\n";
    for (std::size_t i = 0; i < angles.size(); ++i) {
      const double a = angles[i];
      emp.push_back(static_cast<double>(i + 1) / static_cast<double>(angles.size()));
      theo.push_back(a <= 0 ? 0.0 : a >= std::numbers::pi / 2 ? 1.0 : scaling::angle_cdf(a));
      out << io::format_double(a) << ',' << io::format_double(emp.back()) << ','
          << io::format_double(theo.back()) << '\n';
    }
    if (c.svg) {
      Sink svg(svg_path_for(c, p));
      write_cdf_svg(svg.stream(), angles, emp, theo);
    }
  } else if (p.kind == "norm") {
    const auto points = io::read_norm_csv(in);
    std::vector<double> lt, lm;
    out << "t,mean,log10_t,log10_mean\n";
    for (const auto& pt : points) {
      if (pt.t <= 0 || pt.mean <= 0) continue;
      lt.push_back(std::log10(static_cast<double>(pt.t)));
      lm.push_back(std::log10(pt.mean));
      out << pt.t << ',' << io::format_double(pt.mean) << ',' << io::format_double(lt.back())
          << ',' << io::format_double(lm.back()) << '\n';
    }
    if (c.svg && !lt.empty()) {
      Sink svg(svg_path_for(c, p));
      write_polyline_svg(svg.stream(), lt, lm);
    }
  } else {
    throw UsageError("unknown plot kind '" + p.kind + "' (trajectory, angle, norm)");
  }
  return kOk;
}

namespace {

struct BenchRow {
  int dim = 2;
  std::int64_t n = 0;
  double indexed = 0.0;
  double naive = 0.0;
};

// Naive throughput at size n: steps taken from an n-step state, each one
// scanning the whole visited set.
std::int64_t naive_window(std::int64_t n) {
  return std::clamp<std::int64_t>(200'000'000 / std::max<std::int64_t>(n, 1), 20, 2000);
}

BenchRow bench_2d(std::int64_t n, std::uint64_t seed) {
  BenchRow row{2, n};
  auto start = Clock::now();
  walk2d::Walker w(walk2d::Variant::prudent, seed);
  for (std::int64_t t = 0; t < n; ++t) w.step();
  row.indexed = static_cast<double>(n) / seconds_since(start);

  auto path = walk2d::simulate(n, seed, walk2d::Variant::prudent);
  Rng rng(seed ^ 0xA5A5A5A5u);
  const std::int64_t window = naive_window(n);
  start = Clock::now();
  for (std::int64_t s = 0; s < window; ++s) {
    const auto options = walk2d::naive_allowed_directions(path, walk2d::Variant::prudent);
    const auto k = static_cast<std::uint32_t>(options.size());
    path.push(walk2d::detail::kNthDir[options.bits()][k == 1 ? 0 : rng.below(k)]);
  }
  row.naive = static_cast<double>(window) / seconds_since(start);
  return row;
}

BenchRow bench_3d(std::int64_t n, std::uint64_t seed) {
  BenchRow row{3, n};
  auto start = Clock::now();
  walk3d::Walker3D w(seed);
  for (std::int64_t t = 0; t < n; ++t) w.step();
  row.indexed = static_cast<double>(n) / seconds_since(start);

  auto path = walk3d::simulate_3d(n, seed);
  Rng rng(seed ^ 0xA5A5A5A5u);
  const std::int64_t window = naive_window(n);
  start = Clock::now();
  for (std::int64_t s = 0; s < window; ++s) {
    const auto options = walk3d::naive_allowed_directions_3d(path.sites(), path.back());
    const auto k = static_cast<std::uint32_t>(options.size());
    path.push(walk3d::detail::kNthDir3[options.bits()][k == 1 ? 0 : rng.below(k)]);
  }
  row.naive = static_cast<double>(window) / seconds_since(start);
  return row;
}

}  // namespace

int cmd_bench(const io::RunConfig& c) {
  const std::vector<std::int64_t> sizes =
      c.quick ? std::vector<std::int64_t>{1'000, 10'000, 100'000}
              : std::vector<std::int64_t>{10'000, 100'000, 1'000'000};
  std::vector<BenchRow> rows;
  for (std::int64_t n : sizes) rows.push_back(bench_2d(n, c.seed));
  for (std::int64_t n : sizes) rows.push_back(bench_3d(n, c.seed));

  Sink sink(c.out);
  auto& out = sink.stream();
  out << "dim,n,indexed_steps_per_s,naive_steps_per_s,ratio\n";
  for (const auto& r : rows) {
    out << r.dim << ',' << r.n << ',' << r.indexed << ',' << r.naive << ',' << r.indexed / r.naive
        << '\n';
  }
  bool pass = true;
  for (int dim : {2, 3}) {
    std::vector<double> t, v;
    for (const auto& r : rows) {
      if (r.dim != dim) continue;
      t.push_back(static_cast<double>(r.n));
      v.push_back(r.indexed);
    }
    // Endpoint slope over the three sizes.
    const double slope = std::log(v.back() / v.front()) / std::log(t.back() / t.front());
    std::cerr << dim << "D indexed throughput log-log slope " << slope << '\n';
  }
  const auto& top = *std::find_if(rows.rbegin(), rows.rend(), [](const BenchRow& r) { return r.dim == 2; });
  const double ratio = top.indexed / top.naive;
  if (!c.quick && ratio < 50.0) pass = false;
  std::cerr << "2D indexed/naive ratio at n = " << top.n << ": " << ratio
            << (c.quick ? " (floor 50 applies at 1e6)" : pass ? " >= 50" : " < 50") << '\n';
  return pass ? kOk : kTestFailure;
}

}  // namespace prudent::cli
