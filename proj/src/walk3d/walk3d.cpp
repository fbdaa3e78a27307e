#include "prudent/walk3d.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "prudent/parallel.hpp"

namespace prudent::walk3d {

double l2_norm(Site3 s) {
  double sum = 0.0;
  for (std::int32_t v : s.c) sum += static_cast<double>(v) * v;
  return std::sqrt(sum);
}

std::string to_string(DirSet3 set) {
  std::string out;
  for (Dir3 d : kAllDirs3) {
    if (set.contains(d)) out.push_back(dir_letter(d));
  }
  return out;
}

LatticePath3D::LatticePath3D(std::vector<Site3> sites) : sites_(std::move(sites)) {
  if (sites_.empty() || sites_.front() != Site3{}) {
    throw std::invalid_argument("3D path must start at the origin");
  }
  for (std::size_t t = 1; t < sites_.size(); ++t) {
    int moved = 0;
    for (int a = 0; a < 3; ++a) moved += std::abs(sites_[t].c[a] - sites_[t - 1].c[a]);
    if (moved != 1) throw std::invalid_argument("non-unit step at " + std::to_string(t));
  }
}

LatticePath3D LatticePath3D::from_steps(std::span<const Dir3> steps) {
  LatticePath3D path;
  path.reserve(steps.size());
  for (Dir3 d : steps) path.push(d);
  return path;
}

Dir3 LatticePath3D::step(std::size_t t) const {
  if (t == 0 || t >= sites_.size()) throw std::out_of_range("step index out of range");
  for (int a = 0; a < 3; ++a) {
    const int diff = sites_[t].c[a] - sites_[t - 1].c[a];
    if (diff != 0) return static_cast<Dir3>(2 * a + (diff > 0 ? 0 : 1));
  }
  throw std::logic_error("zero step");
}

std::vector<Dir3> LatticePath3D::directions() const {
  std::vector<Dir3> out;
  out.reserve(steps());
  for (std::size_t t = 1; t < sites_.size(); ++t) out.push_back(step(t));
  return out;
}

LineExtremaIndex3D::LineExtremaIndex3D() = default;

walk2d::Extent LineExtremaIndex3D::line(Site3 s, int axis) const {
  const auto it = lines_[axis].find(key(s, axis));
  if (it == lines_[axis].end()) throw std::out_of_range("line never visited");
  return it->second;
}

std::size_t LineExtremaIndex3D::line_count() const {
  return lines_[0].size() + lines_[1].size() + lines_[2].size();
}

DirSet3 naive_allowed_directions_3d(std::span<const Site3> visited, Site3 p) {
  std::array<bool, 6> blocked{};
  for (const Site3& v : visited) {
    const bool dx = v.c[0] == p.c[0], dy = v.c[1] == p.c[1], dz = v.c[2] == p.c[2];
    const bool line_x = dy & dz, line_y = dx & dz, line_z = dx & dy;
    blocked[0] |= line_x & (v.c[0] > p.c[0]);
    blocked[1] |= line_x & (v.c[0] < p.c[0]);
    blocked[2] |= line_y & (v.c[1] > p.c[1]);
    blocked[3] |= line_y & (v.c[1] < p.c[1]);
    blocked[4] |= line_z & (v.c[2] > p.c[2]);
    blocked[5] |= line_z & (v.c[2] < p.c[2]);
  }
  DirSet3 out;
  for (Dir3 d : kAllDirs3) {
    if (!blocked[static_cast<int>(d)]) out.insert(d);
  }
  return out;
}

Dir3 NaiveWalker3D::step() {
  const DirSet3 options = allowed();
  const int k = options.size();
  const Dir3 d = detail::kNthDir3[options.bits()][k == 1 ? 0 : rng_.below(static_cast<std::uint32_t>(k))];
  path_.push(d);
  return d;
}

LatticePath3D simulate_3d(std::int64_t n, std::uint64_t seed) {
  if (n < 0) throw std::invalid_argument("step count must be >= 0");
  Walker3D walker(seed);
  LatticePath3D path;
  path.reserve(static_cast<std::size_t>(n));
  for (std::int64_t t = 0; t < n; ++t) path.push(walker.step());
  return path;
}

std::vector<double> endpoint_norms(std::uint64_t seed, std::span<const std::int64_t> checkpoints) {
  for (std::size_t i = 0; i < checkpoints.size(); ++i) {
    if (checkpoints[i] < 1 || (i > 0 && checkpoints[i] <= checkpoints[i - 1])) {
      throw std::invalid_argument("checkpoints must be positive and increasing");
    }
  }
  Walker3D walker(seed);
  std::vector<double> norms;
  norms.reserve(checkpoints.size());
  for (std::int64_t target : checkpoints) {
    while (walker.time() < target) walker.step();
    norms.push_back(l2_norm(walker.position()));
  }
  return norms;
}

std::vector<NormPoint> endpoint_norm_series(std::span<const std::uint64_t> seeds,
                                            std::span<const std::int64_t> checkpoints,
                                            unsigned threads) {
  const auto runs = parallel_map(seeds.size(), threads,
                                 [&](std::size_t i) { return endpoint_norms(seeds[i], checkpoints); });
  std::vector<NormPoint> out;
  for (std::size_t c = 0; c < checkpoints.size(); ++c) {
    NormPoint p;
    p.t = checkpoints[c];
    p.nseeds = runs.size();
    double sum = 0.0, sum_sq = 0.0;
    for (const auto& r : runs) {
      sum += r[c];
      sum_sq += r[c] * r[c];
    }
    const double n = static_cast<double>(runs.size());
    if (n > 0) p.mean = sum / n;
    if (n > 1) {
      const double var = std::max(0.0, (sum_sq - n * p.mean * p.mean) / (n - 1));
      p.std_error = std::sqrt(var / n);
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace prudent::walk3d
