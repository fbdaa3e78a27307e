#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "prudent/lattice.hpp"
#include "prudent/rng.hpp"

/// Kinetic prudent walk on Z^2 and the corner model.
namespace prudent::walk2d {

enum class Variant : std::uint8_t { prudent, corner };

/// How the first step is chosen. `east` is the decomposition convention;
/// `uniform` is the unconstrained walk (all four directions are allowed at
/// the origin).
enum class FirstStep : std::uint8_t { east, uniform };

struct BoundingRect {
  std::int32_t x_min = 0, x_max = 0, y_min = 0, y_max = 0;

  std::int64_t width() const { return std::int64_t{x_max} - x_min + 1; }
  std::int64_t height() const { return std::int64_t{y_max} - y_min + 1; }
  bool contains(Site s) const {
    return s.x >= x_min && s.x <= x_max && s.y >= y_min && s.y <= y_max;
  }
  bool on_boundary(Site s) const {
    return contains(s) &&
           (s.x == x_min || s.x == x_max || s.y == y_min || s.y == y_max);
  }
  bool is_corner(Site s) const {
    return (s.x == x_min || s.x == x_max) && (s.y == y_min || s.y == y_max);
  }
  void include(Site s) {
    if (s.x < x_min) x_min = s.x;
    if (s.x > x_max) x_max = s.x;
    if (s.y < y_min) y_min = s.y;
    if (s.y > y_max) y_max = s.y;
  }
};

BoundingRect bounding_rect(std::span<const Site> sites);

/// Closed interval of visited coordinates along one row or column.
struct Extent {
  std::int32_t lo = 0;
  std::int32_t hi = 0;
};

/// Array indexed by a contiguous integer key range that grows one key at a
/// time at either end.
template <class T>
class TwoSidedArray {
 public:
  explicit TwoSidedArray(T at_zero) : data_(16), base_(8) { data_[base_] = at_zero; }

  bool contains(std::int32_t key) const { return key >= lo_ && key <= hi_; }
  std::int32_t low() const { return lo_; }
  std::int32_t high() const { return hi_; }

  T& operator[](std::int32_t key) { return data_[base_ + key]; }
  const T& operator[](std::int32_t key) const { return data_[base_ + key]; }

  void push_low(T value) {
    if (base_ + lo_ == 0) grow();
    --lo_;
    data_[base_ + lo_] = value;
  }
  void push_high(T value) {
    if (base_ + hi_ + 1 == static_cast<std::ptrdiff_t>(data_.size())) grow();
    ++hi_;
    data_[base_ + hi_] = value;
  }

 private:
  void grow() {
    const std::ptrdiff_t used = hi_ - lo_ + 1;
    std::vector<T> bigger(data_.size() * 2);
    const std::ptrdiff_t new_base = (static_cast<std::ptrdiff_t>(bigger.size()) - used) / 2 - lo_;
    for (std::int32_t k = lo_; k <= hi_; ++k) bigger[new_base + k] = data_[base_ + k];
    data_ = std::move(bigger);
    base_ = new_base;
  }

  std::vector<T> data_;
  std::ptrdiff_t base_;
  std::int32_t lo_ = 0;
  std::int32_t hi_ = 0;
};

/// Per-row and per-column extrema of the visited set. A half-line from a
/// visited site along its row or column meets another visited site exactly
/// when the extremum in that direction lies strictly beyond it.
class OccupancyIndex {
 public:
  /// Index of the single visited site at the origin.
  OccupancyIndex() : rows_(Extent{}), columns_(Extent{}) {}

  /// Records a site adjacent to the visited set (rows and columns stay
  /// contiguous).
  void visit(Site s) {
    touch(rows_, s.y, s.x);
    touch(columns_, s.x, s.y);
  }

  /// True when a visited site lies on {from + k d, k > 0}. `from` must be
  /// visited.
  bool blocked(Site from, Dir d) const {
    switch (d) {
      case Dir::east: return rows_[from.y].hi > from.x;
      case Dir::west: return rows_[from.y].lo < from.x;
      case Dir::north: return columns_[from.x].hi > from.y;
      case Dir::south: return columns_[from.x].lo < from.y;
    }
    return true;
  }

  bool has_row(std::int32_t y) const { return rows_.contains(y); }
  bool has_column(std::int32_t x) const { return columns_.contains(x); }
  Extent row(std::int32_t y) const { return checked(rows_, y); }
  Extent column(std::int32_t x) const { return checked(columns_, x); }

 private:
  static void touch(TwoSidedArray<Extent>& lines, std::int32_t key, std::int32_t along) {
    if (lines.contains(key)) {
      Extent& e = lines[key];
      if (along < e.lo) e.lo = along;
      if (along > e.hi) e.hi = along;
    } else if (key == lines.high() + 1) {
      lines.push_high({along, along});
    } else if (key == lines.low() - 1) {
      lines.push_low({along, along});
    } else {
      throw std::invalid_argument("occupancy index: site not adjacent to visited lines");
    }
  }
  static Extent checked(const TwoSidedArray<Extent>& lines, std::int32_t key) {
    if (!lines.contains(key)) throw std::out_of_range("line never visited");
    return lines[key];
  }

  TwoSidedArray<Extent> rows_;
  TwoSidedArray<Extent> columns_;
};

/// Does {from + k d, k > 0} meet the quadrant {x <= 0, y <= 0}?
constexpr bool half_line_hits_corner_obstacle(Site from, Dir d) {
  switch (d) {
    case Dir::east: return from.y <= 0 && from.x <= -1;
    case Dir::west: return from.y <= 0;
    case Dir::north: return from.x <= 0 && from.y <= -1;
    case Dir::south: return from.x <= 0;
  }
  return false;
}

namespace detail {
/// kNthDir[mask][i] is the i-th direction (in enum order) present in mask.
inline constexpr auto kNthDir = [] {
  std::array<std::array<Dir, 4>, 16> table{};
  for (int mask = 0; mask < 16; ++mask) {
    int i = 0;
    for (int d = 0; d < 4; ++d) {
      if (mask & (1 << d)) table[mask][i++] = static_cast<Dir>(d);
    }
  }
  return table;
}();
}  // namespace detail

/// Growth signs of the bounding rectangle: +1 / -1 for the direction of the
/// most recent growth along each axis, 0 if that axis never grew.
struct GrowthSigns {
  int x = 0;
  int y = 0;
};

/// Mutable single-owner state of one run: position, bounding rectangle and
/// occupancy index, plus its random stream.
class Walker {
 public:
  Walker(Variant variant, Rng rng, FirstStep first = FirstStep::east)
      : variant_(variant), first_(first), rng_(rng) {}
  Walker(Variant variant, std::uint64_t seed, FirstStep first = FirstStep::east)
      : Walker(variant, Rng(seed), first) {}

  DirSet allowed() const {
    std::uint8_t bits = 0;
    for (Dir d : kAllDirs) {
      bool open = !index_.blocked(pos_, d);
      if (variant_ == Variant::corner) open = open && !half_line_hits_corner_obstacle(pos_, d);
      bits |= static_cast<std::uint8_t>(open) << static_cast<int>(d);
    }
    return DirSet(bits);
  }

  /// One step chosen uniformly among the allowed directions.
  Dir step() {
    Dir d;
    if (time_ == 0 && first_ == FirstStep::east) {
      d = Dir::east;
    } else {
      const DirSet options = allowed();
      const auto k = static_cast<std::uint32_t>(options.size());
      d = detail::kNthDir[options.bits()][k == 1 ? 0 : rng_.below(k)];
    }
    move(d);
    return d;
  }

  /// Applies a prescribed step; throws if it is not allowed.
  void apply(Dir d) {
    if (!allowed().contains(d)) {
      throw std::invalid_argument("direction not allowed at time " + std::to_string(time_));
    }
    move(d);
  }

  Site position() const { return pos_; }
  std::int64_t time() const { return time_; }
  const BoundingRect& rect() const { return rect_; }
  const OccupancyIndex& index() const { return index_; }
  Variant variant() const { return variant_; }
  GrowthSigns growth() const { return growth_; }

 private:
  void move(Dir d) {
    pos_ = step_from(pos_, d);
    ++time_;
    if (pos_.x > rect_.x_max) { rect_.x_max = pos_.x; growth_.x = 1; }
    else if (pos_.x < rect_.x_min) { rect_.x_min = pos_.x; growth_.x = -1; }
    if (pos_.y > rect_.y_max) { rect_.y_max = pos_.y; growth_.y = 1; }
    else if (pos_.y < rect_.y_min) { rect_.y_min = pos_.y; growth_.y = -1; }
    index_.visit(pos_);
  }

  Variant variant_;
  FirstStep first_;
  Rng rng_;
  Site pos_{};
  std::int64_t time_ = 0;
  BoundingRect rect_{};
  OccupancyIndex index_{};
  GrowthSigns growth_{};
};

/// Reference answer by scanning every visited site, plus a literal
/// membership scan of the obstacle along each half-line.
DirSet naive_allowed_directions(std::span<const Site> visited, Site position,
                                Variant variant);
inline DirSet naive_allowed_directions(const LatticePath& path, Variant variant) {
  return naive_allowed_directions(path.sites(), path.back(), variant);
}

/// Same random choices as `Walker`, but every decision comes from the naive
/// scan. Identical seeds give identical trajectories.
class NaiveWalker {
 public:
  NaiveWalker(Variant variant, Rng rng, FirstStep first = FirstStep::east)
      : variant_(variant), first_(first), rng_(rng) {}

  DirSet allowed() const { return naive_allowed_directions(path_, variant_); }
  Dir step();
  const LatticePath& path() const { return path_; }

 private:
  Variant variant_;
  FirstStep first_;
  Rng rng_;
  LatticePath path_;
};

LatticePath simulate(std::int64_t n, std::uint64_t seed, Variant variant,
                     FirstStep first = FirstStep::east);

}  // namespace prudent::walk2d
