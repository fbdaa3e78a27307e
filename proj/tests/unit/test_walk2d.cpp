#include <doctest.h>

#include <array>
#include <cmath>

#include "prudent/walk2d.hpp"

using namespace prudent;
using namespace prudent::walk2d;

namespace {

LatticePath path_of(std::initializer_list<Dir> steps) {
  const std::vector<Dir> v(steps);
  return LatticePath::from_steps(v);
}

}  // namespace

TEST_CASE("allowed directions by hand") {
  Walker w(Variant::prudent, 1, FirstStep::uniform);
  CHECK(w.allowed() == DirSet::all());
  CHECK(naive_allowed_directions(LatticePath{}, Variant::prudent) == DirSet::all());

  w.apply(Dir::east);
  const DirSet after_east{Dir::east, Dir::north, Dir::south};
  CHECK(w.allowed() == after_east);
  CHECK(naive_allowed_directions(path_of({Dir::east}), Variant::prudent) == after_east);

  w.apply(Dir::north);
  w.apply(Dir::west);
  const DirSet at_top_left{Dir::west, Dir::north};
  CHECK(w.allowed() == at_top_left);
  CHECK(naive_allowed_directions(path_of({Dir::east, Dir::north, Dir::west}), Variant::prudent) ==
        at_top_left);
  CHECK_THROWS_AS(w.apply(Dir::south), std::invalid_argument);
}

TEST_CASE("corner model allowed directions by hand") {
  Walker w(Variant::corner, 1);
  CHECK(w.allowed() == (DirSet{Dir::east, Dir::north}));
  w.step();
  const DirSet expected{Dir::east, Dir::north, Dir::south};
  CHECK(w.allowed() == expected);
  CHECK(naive_allowed_directions(path_of({Dir::east}), Variant::corner) == expected);
  CHECK(half_line_hits_corner_obstacle({0, 1}, Dir::south));
  CHECK_FALSE(half_line_hits_corner_obstacle({1, -5}, Dir::south));
  CHECK(half_line_hits_corner_obstacle({-3, -1}, Dir::east));
  CHECK_FALSE(half_line_hits_corner_obstacle({0, -1}, Dir::east));
}

TEST_CASE("two-sided array grows at both ends") {
  TwoSidedArray<int> a(7);
  for (int k = 1; k <= 100; ++k) a.push_high(k);
  for (int k = -1; k >= -100; --k) a.push_low(k);
  CHECK(a.low() == -100);
  CHECK(a.high() == 100);
  CHECK(a[0] == 7);
  for (int k = 1; k <= 100; ++k) {
    CHECK(a[k] == k);
    CHECK(a[-k] == -k);
  }
  CHECK_FALSE(a.contains(101));
}

TEST_CASE("occupancy index rejects gaps") {
  OccupancyIndex index;
  index.visit({1, 0});
  CHECK(index.row(0).hi == 1);
  CHECK(index.column(1).lo == 0);
  CHECK_THROWS_AS(index.visit({5, 5}), std::invalid_argument);
  CHECK_THROWS_AS(index.row(9), std::out_of_range);
}

TEST_CASE("first step frequencies") {
  std::array<int, 4> counts{};
  for (std::uint64_t s = 0; s < 100000; ++s) {
    Walker w(Variant::prudent, replica_seed(3, s), FirstStep::uniform);
    ++counts[static_cast<int>(w.step())];
  }
  for (int c : counts) CHECK(std::abs(c / 1e5 - 0.25) < 0.01);

  std::array<int, 4> second{};
  for (std::uint64_t s = 0; s < 100000; ++s) {
    Walker w(Variant::prudent, replica_seed(4, s));
    CHECK(w.step() == Dir::east);
    ++second[static_cast<int>(w.step())];
  }
  CHECK(second[static_cast<int>(Dir::west)] == 0);
  for (Dir d : {Dir::east, Dir::north, Dir::south}) {
    CHECK(std::abs(second[static_cast<int>(d)] / 1e5 - 1.0 / 3.0) < 0.01);
  }
}

TEST_CASE("simulate") {
  const auto one = simulate(1, 5, Variant::prudent);
  CHECK(one.steps() == 1);
  CHECK(one.back() == Site{1, 0});
  CHECK(simulate(500, 8, Variant::prudent) == simulate(500, 8, Variant::prudent));
  CHECK(simulate(500, 8, Variant::prudent) != simulate(500, 9, Variant::prudent));
}

TEST_CASE("indexed walker matches the naive oracle") {
  for (Variant v : {Variant::prudent, Variant::corner}) {
    const std::uint64_t seed = v == Variant::prudent ? 101 : 202;
    Walker fast(v, Rng(seed));
    NaiveWalker slow(v, Rng(seed));
    std::size_t mismatches = 0;
    for (int t = 0; t < 20000; ++t) {
      if (fast.allowed() != slow.allowed()) ++mismatches;
      if (fast.step() != slow.step()) ++mismatches;
    }
    CHECK(mismatches == 0);
    CHECK(fast.position() == slow.path().back());
  }
}

TEST_CASE("per-step invariants") {
  for (Variant v : {Variant::prudent, Variant::corner}) {
    Walker w(v, 55);
    std::size_t off_boundary = 0, too_few = 0;
    for (int t = 0; t < 200000; ++t) {
      const int options = w.allowed().size();
      if (options < (v == Variant::prudent ? 2 : 1)) ++too_few;
      w.step();
      if (!w.rect().on_boundary(w.position())) ++off_boundary;
    }
    CHECK(off_boundary == 0);
    CHECK(too_few == 0);
  }
}

TEST_CASE("replayed trajectory never takes a forbidden step") {
  const auto path = simulate(5000, 77, Variant::prudent);
  for (std::size_t t = 1; t <= path.steps(); ++t) {
    const auto allowed = naive_allowed_directions(path.sites().first(t), path[t - 1], Variant::prudent);
    REQUIRE(allowed.contains(path.step(t)));
  }
}

TEST_CASE("trajectory sites lie on the rectangle boundary trace") {
  const auto path = simulate(50000, 1, Variant::prudent);
  BoundingRect rect{};
  std::size_t on_trace = 0;
  for (const Site& s : path.sites()) {
    rect.include(s);
    on_trace += rect.on_boundary(s);
  }
  CHECK(static_cast<double>(on_trace) / static_cast<double>(path.sites().size()) >= 0.99);
  const auto final_rect = bounding_rect(path.sites());
  CHECK(final_rect.contains(path.back()));
  CHECK(final_rect.width() + final_rect.height() > 1000);
}
