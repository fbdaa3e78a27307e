#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <absl/container/flat_hash_map.h>

#include "prudent/rng.hpp"
#include "prudent/walk2d.hpp"

/// Prudent walk on Z^3: a step is forbidden when a visited site lies on the
/// open half-line from the walker in that direction.
namespace prudent::walk3d {

enum class Dir3 : std::uint8_t { xp = 0, xm, yp, ym, zp, zm };

inline constexpr std::array<Dir3, 6> kAllDirs3{Dir3::xp, Dir3::xm, Dir3::yp,
                                               Dir3::ym, Dir3::zp, Dir3::zm};

constexpr int axis_of(Dir3 d) { return static_cast<int>(d) / 2; }
constexpr bool positive(Dir3 d) { return static_cast<int>(d) % 2 == 0; }

/// "XxYyZz": upper case for the positive direction.
constexpr char dir_letter(Dir3 d) {
  constexpr std::array<char, 6> letters{'X', 'x', 'Y', 'y', 'Z', 'z'};
  return letters[static_cast<int>(d)];
}

struct Site3 {
  std::array<std::int32_t, 3> c{};
  friend bool operator==(const Site3&, const Site3&) = default;
};

constexpr Site3 step_from(Site3 s, Dir3 d) {
  s.c[axis_of(d)] += positive(d) ? 1 : -1;
  return s;
}

double l2_norm(Site3 s);

class DirSet3 {
 public:
  constexpr DirSet3() = default;
  constexpr explicit DirSet3(std::uint8_t bits) : bits_(bits & 0x3F) {}
  constexpr void insert(Dir3 d) { bits_ |= bit(d); }
  constexpr bool contains(Dir3 d) const { return (bits_ & bit(d)) != 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr std::uint8_t bits() const { return bits_; }
  friend constexpr bool operator==(DirSet3, DirSet3) = default;

 private:
  static constexpr std::uint8_t bit(Dir3 d) {
    return static_cast<std::uint8_t>(1u << static_cast<int>(d));
  }
  std::uint8_t bits_ = 0;
};

std::string to_string(DirSet3 set);

class LatticePath3D {
 public:
  LatticePath3D() : sites_{Site3{}} {}
  explicit LatticePath3D(std::vector<Site3> sites);
  static LatticePath3D from_steps(std::span<const Dir3> steps);

  std::size_t steps() const { return sites_.size() - 1; }
  const Site3& operator[](std::size_t t) const { return sites_[t]; }
  const Site3& back() const { return sites_.back(); }
  std::span<const Site3> sites() const { return sites_; }
  Dir3 step(std::size_t t) const;
  std::vector<Dir3> directions() const;

  void push(Dir3 d) { sites_.push_back(step_from(sites_.back(), d)); }
  void reserve(std::size_t n) { sites_.reserve(n + 1); }

  friend bool operator==(const LatticePath3D&, const LatticePath3D&) = default;

 private:
  std::vector<Site3> sites_;
};

/// For every axis, the extent of visited coordinates along each line parallel
/// to it, keyed by the two transverse coordinates.
class LineExtremaIndex3D {
 public:
  LineExtremaIndex3D();

  /// Records `s` and returns the extents of its three lines after the update.
  std::array<walk2d::Extent, 3> visit(Site3 s) {
    std::array<walk2d::Extent, 3> out;
    for (int a = 0; a < 3; ++a) {
      const std::int32_t along = s.c[a];
      auto [it, fresh] = lines_[a].try_emplace(key(s, a), walk2d::Extent{along, along});
      if (!fresh) {
        if (along < it->second.lo) it->second.lo = along;
        if (along > it->second.hi) it->second.hi = along;
      }
      out[a] = it->second;
    }
    return out;
  }

  /// Extent of the line through `s` along `axis`; `s` must be visited.
  walk2d::Extent line(Site3 s, int axis) const;
  std::size_t line_count() const;

  static std::uint64_t key(Site3 s, int axis) {
    const int u = axis == 0 ? 1 : 0;
    const int v = axis == 2 ? 1 : 2;
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s.c[u])) << 32) |
           static_cast<std::uint32_t>(s.c[v]);
  }

 private:
  std::array<absl::flat_hash_map<std::uint64_t, walk2d::Extent>, 3> lines_;
};

inline DirSet3 allowed_from_extents(Site3 s, const std::array<walk2d::Extent, 3>& lines) {
  std::uint8_t bits = 0;
  for (int a = 0; a < 3; ++a) {
    bits |= static_cast<std::uint8_t>(lines[a].hi <= s.c[a]) << (2 * a);
    bits |= static_cast<std::uint8_t>(lines[a].lo >= s.c[a]) << (2 * a + 1);
  }
  return DirSet3(bits);
}

namespace detail {
inline constexpr auto kNthDir3 = [] {
  std::array<std::array<Dir3, 6>, 64> table{};
  for (int mask = 0; mask < 64; ++mask) {
    int i = 0;
    for (int d = 0; d < 6; ++d) {
      if (mask & (1 << d)) table[mask][i++] = static_cast<Dir3>(d);
    }
  }
  return table;
}();
}  // namespace detail

class Walker3D {
 public:
  explicit Walker3D(Rng rng) : rng_(rng), lines_(index_.visit(Site3{})) {}
  explicit Walker3D(std::uint64_t seed) : Walker3D(Rng(seed)) {}

  DirSet3 allowed() const { return allowed_from_extents(pos_, lines_); }

  Dir3 step() {
    const DirSet3 options = allowed();
    const int k = options.size();
    if (k < 3) ++few_options_;
    const Dir3 d = detail::kNthDir3[options.bits()][k == 1 ? 0 : rng_.below(static_cast<std::uint32_t>(k))];
    pos_ = step_from(pos_, d);
    ++time_;
    lines_ = index_.visit(pos_);
    return d;
  }

  Site3 position() const { return pos_; }
  std::int64_t time() const { return time_; }
  const LineExtremaIndex3D& index() const { return index_; }
  /// Steps taken from a position with fewer than three allowed directions.
  std::int64_t few_option_steps() const { return few_options_; }

 private:
  Rng rng_;
  LineExtremaIndex3D index_;
  Site3 pos_{};
  std::array<walk2d::Extent, 3> lines_;
  std::int64_t time_ = 0;
  std::int64_t few_options_ = 0;
};

DirSet3 naive_allowed_directions_3d(std::span<const Site3> visited, Site3 position);

/// Same random choices as `Walker3D`, decisions from the naive scan.
class NaiveWalker3D {
 public:
  explicit NaiveWalker3D(Rng rng) : rng_(rng) {}

  DirSet3 allowed() const { return naive_allowed_directions_3d(path_.sites(), path_.back()); }
  Dir3 step();
  const LatticePath3D& path() const { return path_; }

 private:
  Rng rng_;
  LatticePath3D path_;
};

LatticePath3D simulate_3d(std::int64_t n, std::uint64_t seed);

struct NormPoint {
  std::int64_t t = 0;
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t nseeds = 0;
};

/// Mean Euclidean endpoint norm across seeds at each checkpoint, with its
/// standard error. Checkpoints must be positive and strictly increasing.
std::vector<NormPoint> endpoint_norm_series(std::span<const std::uint64_t> seeds,
                                            std::span<const std::int64_t> checkpoints,
                                            unsigned threads = 1);

/// Endpoint norms of one run at each checkpoint.
std::vector<double> endpoint_norms(std::uint64_t seed, std::span<const std::int64_t> checkpoints);

}  // namespace prudent::walk3d
