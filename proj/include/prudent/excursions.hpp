#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "prudent/corner_codec.hpp"
#include "prudent/lattice.hpp"
#include "prudent/walk2d.hpp"

namespace prudent::walk2d {

enum class ExcursionKind : std::uint8_t { vertical, horizontal };

std::string_view to_string(ExcursionKind kind);

/// One excursion between growth events of the bounding rectangle.
///
/// Vertical excursion k runs over (T_k, U_k]: the width grows, the height
/// does not; `wall` is the height at T_k and `displacement` the width gained.
/// Horizontal excursion k runs over (U_k, T_{k+1}] with the roles swapped.
struct ExcursionRecord {
  std::size_t k = 0;
  ExcursionKind kind = ExcursionKind::vertical;
  std::int64_t start = 0;
  std::int64_t end = 0;
  std::int64_t displacement = 0;
  std::int64_t wall = 0;
  bool crossed = false;

  friend bool operator==(const ExcursionRecord&, const ExcursionRecord&) = default;
};

/// Endpoints of an excursion on opposite corners of its side: a vertical
/// excursion that changes row, a horizontal one that changes column.
constexpr bool crossing_between(ExcursionKind kind, Site start, Site end) {
  return kind == ExcursionKind::vertical ? start.y != end.y : start.x != end.x;
}

/// Online excursion decomposition. Feed the sites of a path in order,
/// starting with the first step, which must be horizontal.
class ExcursionTracker {
 public:
  ExcursionTracker() = default;

  void observe(Site next);

  const std::vector<ExcursionRecord>& records() const { return records_; }
  std::vector<ExcursionRecord> take() { return std::exchange(records_, {}); }
  const BoundingRect& rect() const { return rect_; }
  std::int64_t time() const { return time_; }
  /// Kind of the excursion currently in progress.
  ExcursionKind current_kind() const { return kind_; }
  /// Wall length of the excursion currently in progress.
  std::int64_t current_wall() const {
    return kind_ == ExcursionKind::vertical ? start_rect_.height() : start_rect_.width();
  }

 private:
  void close(const BoundingRect& end_rect);

  std::vector<ExcursionRecord> records_;
  BoundingRect rect_{};
  BoundingRect start_rect_{};
  Site pos_{};
  Site start_pos_{};
  std::int64_t time_ = 0;
  std::int64_t start_time_ = 0;
  std::size_t k_ = 0;
  ExcursionKind kind_ = ExcursionKind::vertical;
};

/// Completed excursions of a path whose first step is horizontal.
std::vector<ExcursionRecord> excursion_decompose(const LatticePath& path);

bool detect_crossing(const ExcursionRecord& record, const LatticePath& path);

/// Quadrant label from the growth signs of the last corner visit:
/// (+,+) -> 1, (-,+) -> 2, (-,-) -> 3, (+,-) -> 4. An axis that never grew
/// counts as +.
constexpr int quadrant_from_signs(int sx, int sy) {
  const bool east = sx >= 0;
  const bool north = sy >= 0;
  if (east) return north ? 1 : 4;
  return north ? 2 : 3;
}

int settled_quadrant(const LatticePath& path);

/// Hat values of one corner-model excursion taken in `phase`, starting from
/// the wall value of that phase. Throws codec::MalformedPath with the
/// 1-based index of the first offending step.
std::vector<std::int64_t> excursion_to_effective(std::span<const Dir> segment,
                                                 codec::Phase phase = codec::Phase::nonnegative,
                                                 Axis first_step = Axis::horizontal);

/// Hat path of a corner-model path made of complete excursions.
std::vector<std::int64_t> corner_path_to_hat(const LatticePath& path,
                                             Axis first_step = Axis::horizontal);

}  // namespace prudent::walk2d
