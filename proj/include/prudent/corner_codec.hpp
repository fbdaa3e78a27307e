#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "prudent/lattice.hpp"

/// Bijection between hat-process steps and corner-model lattice steps.
///
/// A hat excursion from 0 to -1 ("nonnegative phase") is a vertical lattice
/// excursion along the east wall; one from -1 to 0 ("negative phase") is a
/// horizontal excursion along the north wall. Every hat step is one outward
/// step followed by a straight run of parallel steps of length
/// |increment|. For an exit step (the one that lands on -1 or 0) the run
/// stops on the wall: its last unit is the outward step of the next phase,
/// and the overshoot beyond the wall is not represented on the lattice.
/// Hence a path made of complete excursions has t(n) - (#excursions) steps.
namespace prudent::codec {

enum class Phase : std::uint8_t { nonnegative, negative };

constexpr Phase next(Phase p) {
  return p == Phase::nonnegative ? Phase::negative : Phase::nonnegative;
}

/// Value the hat process lands on when it leaves phase `p`.
constexpr std::int64_t landing(Phase p) {
  return p == Phase::nonnegative ? -1 : 0;
}

/// Value on the wall, i.e. the last in-phase value before an exit of size 1.
constexpr std::int64_t wall(Phase p) {
  return p == Phase::nonnegative ? 0 : -1;
}

constexpr bool is_exit(Phase p, std::int64_t value) {
  return p == Phase::nonnegative ? value < 0 : value >= 0;
}

constexpr bool in_phase(Phase p, std::int64_t value) { return !is_exit(p, value); }

struct PhaseGeometry {
  Dir outward;
  Dir increase;  // lattice direction of a +1 hat move
  Dir decrease;
};

/// With a horizontal first step the nonnegative phase runs along the east
/// wall (outward east, hat increases southward) and the negative phase along
/// the north wall (outward north, hat increases eastward). A vertical first
/// step is the transpose.
constexpr PhaseGeometry geometry(Phase p, Axis first_step) {
  PhaseGeometry g = p == Phase::nonnegative
                        ? PhaseGeometry{Dir::east, Dir::south, Dir::north}
                        : PhaseGeometry{Dir::north, Dir::east, Dir::west};
  if (first_step == Axis::vertical) {
    g = {transpose(g.outward), transpose(g.increase), transpose(g.decrease)};
  }
  return g;
}

class MalformedPath : public std::runtime_error {
 public:
  MalformedPath(std::size_t step_index, const std::string& what)
      : std::runtime_error("malformed corner path at step " +
                           std::to_string(step_index) + ": " + what),
        step_index_(step_index) {}
  std::size_t step_index() const { return step_index_; }

 private:
  std::size_t step_index_;
};

/// Appends the lattice steps of the hat step `from -> to` taken in phase
/// `p` and returns the phase after the step.
Phase encode_step(Phase p, Axis first_step, std::int64_t from, std::int64_t to,
                  std::vector<Dir>& out);

/// Streaming inverse of `encode_step`.
class Decoder {
 public:
  explicit Decoder(Axis first_step, Phase start = Phase::nonnegative);

  /// Consumes lattice step number `index` (1-based, for diagnostics).
  void feed(Dir d, std::size_t index);

  /// Hat values of all steps closed so far, starting with the start value.
  const std::vector<std::int64_t>& values() const { return values_; }
  Phase phase() const { return phase_; }
  bool step_open() const { return open_; }
  std::int64_t running_value() const { return value_; }

  /// Closes the trailing hat step as an exit. The path must end on the
  /// wall of the current phase.
  std::vector<std::int64_t> finish_closed(std::size_t index) &&;

  /// Closes the trailing hat step without treating it as an exit.
  std::vector<std::int64_t> finish_open() &&;

 private:
  void open_step();

  Axis first_step_;
  Phase phase_;
  std::int64_t value_;
  bool open_ = false;
  int lock_ = -1;  // parallel direction used by the open step, -1 if none
  std::vector<std::int64_t> values_;
};

}  // namespace prudent::codec
