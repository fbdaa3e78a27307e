#include "prudent/excursions.hpp"

#include <stdexcept>

namespace prudent::walk2d {

std::string_view to_string(ExcursionKind kind) {
  return kind == ExcursionKind::vertical ? "vertical" : "horizontal";
}

void ExcursionTracker::observe(Site next) {
  if (time_ == 0 && next.y != 0) {
    throw std::invalid_argument("excursion decomposition needs a horizontal first step");
  }
  const BoundingRect before = rect_;
  rect_.include(next);
  const bool width_grew = rect_.width() != before.width();
  const bool height_grew = rect_.height() != before.height();
  if (kind_ == ExcursionKind::vertical && height_grew) {
    close(before);
    kind_ = ExcursionKind::horizontal;
  } else if (kind_ == ExcursionKind::horizontal && width_grew) {
    close(before);
    kind_ = ExcursionKind::vertical;
    ++k_;
  }
  pos_ = next;
  ++time_;
}

// The excursion ends at the current time, one step before the growth, so
// its end state is the rectangle before that step.
void ExcursionTracker::close(const BoundingRect& end_rect) {
  ExcursionRecord r;
  r.k = k_;
  r.kind = kind_;
  r.start = start_time_;
  r.end = time_;
  if (kind_ == ExcursionKind::vertical) {
    r.wall = start_rect_.height();
    r.displacement = end_rect.width() - start_rect_.width();
  } else {
    r.wall = start_rect_.width();
    r.displacement = end_rect.height() - start_rect_.height();
  }
  r.crossed = crossing_between(kind_, start_pos_, pos_);
  records_.push_back(r);
  start_time_ = time_;
  start_pos_ = pos_;
  start_rect_ = end_rect;
}

std::vector<ExcursionRecord> excursion_decompose(const LatticePath& path) {
  ExcursionTracker tracker;
  const auto sites = path.sites();
  for (std::size_t t = 1; t < sites.size(); ++t) tracker.observe(sites[t]);
  return tracker.take();
}

bool detect_crossing(const ExcursionRecord& record, const LatticePath& path) {
  if (record.start < 0 || record.end < record.start ||
      static_cast<std::size_t>(record.end) > path.steps()) {
    throw std::out_of_range("excursion window outside the path");
  }
  return crossing_between(record.kind, path[static_cast<std::size_t>(record.start)],
                          path[static_cast<std::size_t>(record.end)]);
}

int settled_quadrant(const LatticePath& path) {
  BoundingRect rect{};
  int sx = 0, sy = 0;
  for (const Site& s : path.sites()) {
    if (s.x > rect.x_max) sx = 1;
    if (s.x < rect.x_min) sx = -1;
    if (s.y > rect.y_max) sy = 1;
    if (s.y < rect.y_min) sy = -1;
    rect.include(s);
  }
  return quadrant_from_signs(sx, sy);
}

std::vector<std::int64_t> excursion_to_effective(std::span<const Dir> segment,
                                                 codec::Phase phase, Axis first_step) {
  codec::Decoder decoder(first_step, phase);
  for (std::size_t i = 0; i < segment.size(); ++i) {
    decoder.feed(segment[i], i + 1);
    if (decoder.phase() != phase) {
      throw codec::MalformedPath(i + 1, "segment runs past the end of its excursion");
    }
  }
  return std::move(decoder).finish_closed(segment.size());
}

std::vector<std::int64_t> corner_path_to_hat(const LatticePath& path, Axis first_step) {
  codec::Decoder decoder(first_step);
  const auto steps = path.directions();
  for (std::size_t i = 0; i < steps.size(); ++i) decoder.feed(steps[i], i + 1);
  return std::move(decoder).finish_closed(steps.size());
}

}  // namespace prudent::walk2d
