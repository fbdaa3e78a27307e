#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "prudent/excursions.hpp"
#include "prudent/rng.hpp"

/// Truncation coupling of corner-model excursions to prudent-walk
/// excursions. A corner excursion is kept when its reach depth stays within
/// the accumulated length of the opposite side, otherwise it is cut at the
/// first time its depth exceeds that length.
namespace prudent::walk2d {

struct CoupledExcursion {
  ExcursionKind kind = ExcursionKind::vertical;
  /// Prudent displacement (X_k or Y_k).
  std::int64_t displacement = 0;
  /// Accumulated opposite side the excursion was compared against.
  std::int64_t limit = 0;
  /// Deepest point reached before the excursion ended or was cut.
  std::int64_t reach = 0;
  bool truncated = false;
};

/// Accumulated sides: heights[k] = Y_0 + ... + Y_{k-1} (heights[0] = 0) and
/// widths[k] = X_0 + ... + X_k.
struct CouplingState {
  std::vector<std::int64_t> heights{0};
  std::vector<std::int64_t> widths;
};

class CornerToPrudentCoupler {
 public:
  ExcursionKind next_kind() const { return next_; }
  std::int64_t next_limit() const {
    return next_ == ExcursionKind::vertical ? state_.heights.back() : state_.widths.back();
  }
  const CouplingState& state() const { return state_; }

  /// Couples one corner excursion. `next_depth()` yields its successive
  /// depths below the wall; a negative depth is the exit. Depths after a
  /// cut are never requested.
  template <class DepthSource>
  CoupledExcursion push(DepthSource&& next_depth) {
    CoupledExcursion out;
    out.kind = next_;
    out.limit = next_limit();
    for (std::int64_t count = 1;; ++count) {
      const std::int64_t depth = next_depth();
      if (depth < 0) {
        out.displacement = count;
        break;
      }
      if (depth > out.reach) out.reach = depth;
      if (depth > out.limit) {
        out.displacement = count;
        out.truncated = true;
        break;
      }
    }
    record(out);
    return out;
  }

 private:
  void record(const CoupledExcursion& e);

  ExcursionKind next_ = ExcursionKind::vertical;
  CouplingState state_;
};

/// Couples complete corner excursions given as hat values: excursion j
/// alternates between 0 -> -1 (vertical) and -1 -> 0 (horizontal) and
/// includes its start value.
std::vector<CoupledExcursion> couple_corner_to_prudent(
    std::span<const std::vector<std::int64_t>> corner_excursions);

/// Samples `count` corner excursions lazily from `seed` and couples them.
std::vector<CoupledExcursion> couple_corner_to_prudent(std::size_t count,
                                                       std::uint64_t seed);

/// Splits a hat path into its complete excursions.
std::vector<std::vector<std::int64_t>> split_hat_excursions(std::span<const std::int64_t> hat);

}  // namespace prudent::walk2d
