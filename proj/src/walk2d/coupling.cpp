#include "prudent/coupling.hpp"

#include <stdexcept>
#include <string>

#include "prudent/effective_walk.hpp"

namespace prudent::walk2d {

void CornerToPrudentCoupler::record(const CoupledExcursion& e) {
  if (e.kind == ExcursionKind::vertical) {
    const std::int64_t previous = state_.widths.empty() ? 0 : state_.widths.back();
    state_.widths.push_back(previous + e.displacement);
    next_ = ExcursionKind::horizontal;
  } else {
    state_.heights.push_back(state_.heights.back() + e.displacement);
    next_ = ExcursionKind::vertical;
  }
}

std::vector<CoupledExcursion> couple_corner_to_prudent(
    std::span<const std::vector<std::int64_t>> corner_excursions) {
  CornerToPrudentCoupler coupler;
  std::vector<CoupledExcursion> out;
  out.reserve(corner_excursions.size());
  for (std::size_t j = 0; j < corner_excursions.size(); ++j) {
    const auto& values = corner_excursions[j];
    const bool vertical = coupler.next_kind() == ExcursionKind::vertical;
    const std::int64_t start = vertical ? 0 : -1;
    if (values.size() < 2 || values.front() != start) {
      throw std::invalid_argument("corner excursion " + std::to_string(j) +
                                  " must start at " + std::to_string(start));
    }
    std::size_t i = 1;
    out.push_back(coupler.push([&]() -> std::int64_t {
      if (i >= values.size()) {
        throw std::invalid_argument("corner excursion " + std::to_string(j) +
                                    " never leaves its phase");
      }
      const std::int64_t v = values[i++];
      return vertical ? v : -1 - v;
    }));
  }
  return out;
}

std::vector<CoupledExcursion> couple_corner_to_prudent(std::size_t count,
                                                       std::uint64_t seed) {
  Rng rng(seed);
  const effective::IncrementSampler law;
  CornerToPrudentCoupler coupler;
  std::vector<CoupledExcursion> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    std::int64_t depth = 0;
    out.push_back(coupler.push([&] { return depth += law(rng); }));
  }
  return out;
}

std::vector<std::vector<std::int64_t>> split_hat_excursions(std::span<const std::int64_t> hat) {
  std::vector<std::vector<std::int64_t>> out;
  if (hat.empty()) return out;
  codec::Phase phase = codec::Phase::nonnegative;
  std::vector<std::int64_t> current{hat[0]};
  for (std::size_t i = 1; i < hat.size(); ++i) {
    current.push_back(hat[i]);
    if (codec::is_exit(phase, hat[i])) {
      out.push_back(std::move(current));
      current = {hat[i]};
      phase = codec::next(phase);
    }
  }
  return out;
}

}  // namespace prudent::walk2d
