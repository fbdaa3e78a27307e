#include "prudent/corner_codec.hpp"

#include <cstdlib>

namespace prudent::codec {

Phase encode_step(Phase p, Axis first_step, std::int64_t from, std::int64_t to,
                  std::vector<Dir>& out) {
  const PhaseGeometry g = geometry(p, first_step);
  out.push_back(g.outward);
  std::int64_t run = std::abs(to - from);
  const bool exit = is_exit(p, to);
  if (exit) {
    if (to != landing(p)) {
      throw std::invalid_argument("hat step " + std::to_string(from) + " -> " +
                                  std::to_string(to) +
                                  " leaves its phase without landing on " +
                                  std::to_string(landing(p)));
    }
    --run;  // the final unit is the next phase's outward step
  }
  const Dir along = to > from ? g.increase : g.decrease;
  out.insert(out.end(), static_cast<std::size_t>(run), along);
  return exit ? next(p) : p;
}

Decoder::Decoder(Axis first_step, Phase start)
    : first_step_(first_step), phase_(start), value_(wall(start)) {
  values_.push_back(value_);
}

void Decoder::open_step() {
  open_ = true;
  lock_ = -1;
}

void Decoder::feed(Dir d, std::size_t index) {
  const PhaseGeometry g = geometry(phase_, first_step_);
  if (!open_) {
    if (d != g.outward) throw MalformedPath(index, "expected an outward step");
    open_step();
    return;
  }
  if (d == g.outward) {
    values_.push_back(value_);
    open_step();
    return;
  }
  if (d != g.increase && d != g.decrease) {
    throw MalformedPath(index, "step points into the occupied region");
  }
  if (lock_ >= 0 && lock_ != static_cast<int>(d)) {
    throw MalformedPath(index, "parallel run reverses direction");
  }
  const std::int64_t moved = value_ + (d == g.increase ? 1 : -1);
  if (is_exit(phase_, moved)) {
    // Crossing the wall is the next phase's outward step.
    values_.push_back(landing(phase_));
    phase_ = next(phase_);
    value_ = wall(phase_);
    open_step();
    return;
  }
  lock_ = static_cast<int>(d);
  value_ = moved;
}

std::vector<std::int64_t> Decoder::finish_closed(std::size_t index) && {
  if (!open_) return std::move(values_);
  if (value_ != wall(phase_)) {
    throw MalformedPath(index, "final excursion does not end on the wall");
  }
  values_.push_back(landing(phase_));
  phase_ = next(phase_);
  open_ = false;
  return std::move(values_);
}

std::vector<std::int64_t> Decoder::finish_open() && {
  if (open_) values_.push_back(value_);
  open_ = false;
  return std::move(values_);
}

}  // namespace prudent::codec
