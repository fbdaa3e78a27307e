#include "prudent/lattice.hpp"

#include <cstdlib>

namespace prudent {

std::string to_string(DirSet set) {
  std::string out = "{";
  for (Dir d : kAllDirs) {
    if (!set.contains(d)) continue;
    if (out.size() > 1) out += ',';
    out += dir_letter(d);
  }
  return out + "}";
}

LatticePath::LatticePath(std::vector<Site> sites) : sites_(std::move(sites)) {
  if (sites_.empty() || !(sites_.front() == Site{})) {
    throw std::invalid_argument("lattice path must start at the origin");
  }
  for (std::size_t t = 1; t < sites_.size(); ++t) {
    const int dist = std::abs(sites_[t].x - sites_[t - 1].x) +
                     std::abs(sites_[t].y - sites_[t - 1].y);
    if (dist != 1) {
      throw std::invalid_argument("non-unit step at index " + std::to_string(t));
    }
  }
}

LatticePath LatticePath::from_steps(std::span<const Dir> steps) {
  LatticePath path;
  path.reserve(steps.size());
  for (Dir d : steps) path.push(d);
  return path;
}

Dir LatticePath::step(std::size_t t) const {
  const Site a = sites_.at(t - 1);
  const Site b = sites_.at(t);
  if (b.x > a.x) return Dir::east;
  if (b.x < a.x) return Dir::west;
  if (b.y > a.y) return Dir::north;
  return Dir::south;
}

std::vector<Dir> LatticePath::directions() const {
  std::vector<Dir> dirs;
  dirs.reserve(steps());
  for (std::size_t t = 1; t < sites_.size(); ++t) dirs.push_back(step(t));
  return dirs;
}

}  // namespace prudent
