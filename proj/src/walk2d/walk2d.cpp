#include "prudent/walk2d.hpp"

#include <cstdlib>

namespace prudent::walk2d {

namespace {

bool in_corner_obstacle(Site s) { return s.x <= 0 && s.y <= 0; }

// Membership along the half-line is constant beyond |x| + |y| + 1 steps.
bool obstacle_on_half_line(Site from, Dir d) {
  const std::int64_t reach = std::abs(std::int64_t{from.x}) + std::abs(std::int64_t{from.y}) + 2;
  Site s = from;
  for (std::int64_t k = 1; k <= reach; ++k) {
    s = step_from(s, d);
    if (in_corner_obstacle(s)) return true;
  }
  return false;
}

}  // namespace

BoundingRect bounding_rect(std::span<const Site> sites) {
  if (sites.empty()) return {};
  BoundingRect r{sites[0].x, sites[0].x, sites[0].y, sites[0].y};
  for (const Site& s : sites) r.include(s);
  return r;
}

DirSet naive_allowed_directions(std::span<const Site> visited, Site position,
                                Variant variant) {
  bool east = false, west = false, north = false, south = false;
  for (const Site& v : visited) {
    const bool same_row = v.y == position.y;
    const bool same_col = v.x == position.x;
    east |= same_row & (v.x > position.x);
    west |= same_row & (v.x < position.x);
    north |= same_col & (v.y > position.y);
    south |= same_col & (v.y < position.y);
  }
  DirSet out;
  if (!east) out.insert(Dir::east);
  if (!west) out.insert(Dir::west);
  if (!north) out.insert(Dir::north);
  if (!south) out.insert(Dir::south);
  if (variant == Variant::corner) {
    for (Dir d : kAllDirs) {
      if (out.contains(d) && obstacle_on_half_line(position, d)) out.erase(d);
    }
  }
  return out;
}

Dir NaiveWalker::step() {
  Dir d;
  if (path_.steps() == 0 && first_ == FirstStep::east) {
    d = Dir::east;
  } else {
    const DirSet options = allowed();
    const auto k = static_cast<std::uint32_t>(options.size());
    d = detail::kNthDir[options.bits()][k == 1 ? 0 : rng_.below(k)];
  }
  path_.push(d);
  return d;
}

LatticePath simulate(std::int64_t n, std::uint64_t seed, Variant variant, FirstStep first) {
  if (n < 0) throw std::invalid_argument("step count must be >= 0");
  Walker walker(variant, seed, first);
  LatticePath path;
  path.reserve(static_cast<std::size_t>(n));
  for (std::int64_t t = 0; t < n; ++t) path.push(walker.step());
  return path;
}

}  // namespace prudent::walk2d
