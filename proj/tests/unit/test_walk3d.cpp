#include <doctest.h>

#include <cmath>

#include "prudent/walk3d.hpp"

using namespace prudent;
using namespace prudent::walk3d;

TEST_CASE("3D allowed directions by hand") {
  Walker3D w(1);
  CHECK(w.allowed().size() == 6);
  CHECK(naive_allowed_directions_3d(LatticePath3D{}.sites(), Site3{}).size() == 6);
  const auto path = LatticePath3D::from_steps(std::vector<Dir3>{Dir3::xp});
  const auto allowed = naive_allowed_directions_3d(path.sites(), path.back());
  CHECK(allowed.size() == 5);
  CHECK_FALSE(allowed.contains(Dir3::xm));
  CHECK(to_string(allowed) == "XYyZz");
}

TEST_CASE("3D index matches the naive oracle") {
  Walker3D fast(Rng(31));
  NaiveWalker3D slow(Rng(31));
  std::size_t mismatches = 0;
  for (int t = 0; t < 20000; ++t) {
    if (fast.allowed() != slow.allowed()) ++mismatches;
    if (fast.step() != slow.step()) ++mismatches;
  }
  CHECK(mismatches == 0);
  CHECK(fast.position() == slow.path().back());
}

TEST_CASE("3D determinism and path validity") {
  const auto a = simulate_3d(2000, 4);
  CHECK(a == simulate_3d(2000, 4));
  CHECK(a != simulate_3d(2000, 5));
  CHECK(LatticePath3D::from_steps(a.directions()) == a);
  CHECK_THROWS_AS(LatticePath3D({Site3{}, Site3{{1, 1, 0}}}), std::invalid_argument);
}

TEST_CASE("3D line index records lines") {
  LineExtremaIndex3D index;
  index.visit(Site3{});
  index.visit(Site3{{1, 0, 0}});
  CHECK(index.line(Site3{{5, 0, 0}}, 0).hi == 1);
  CHECK(index.line_count() == 5);
  CHECK_THROWS_AS(index.line(Site3{{0, 3, 3}}, 0), std::out_of_range);
}

TEST_CASE("endpoint norm series") {
  const std::vector<std::uint64_t> seeds{1, 2, 3};
  const std::vector<std::int64_t> one{1};
  const auto first = endpoint_norm_series(seeds, one);
  CHECK(first[0].mean == 1.0);
  CHECK(first[0].std_error == 0.0);
  CHECK(first[0].nseeds == 3);
  const std::vector<std::int64_t> bad{5, 5};
  CHECK_THROWS_AS(endpoint_norm_series(seeds, bad), std::invalid_argument);
  const std::vector<std::int64_t> grid{10, 100, 1000};
  const auto series = endpoint_norm_series(seeds, grid, 2);
  const auto serial = endpoint_norm_series(seeds, grid, 1);
  for (std::size_t i = 0; i < grid.size(); ++i) CHECK(series[i].mean == serial[i].mean);
  CHECK(series[2].mean > series[0].mean);
}

TEST_CASE("3D walks are super-diffusive") {
  std::size_t superdiffusive = 0;
  const std::vector<std::int64_t> grid{1000000};
  for (std::uint64_t s = 0; s < 20; ++s) {
    if (endpoint_norms(replica_seed(2, s), grid)[0] > 3.0 * std::sqrt(1e6)) ++superdiffusive;
  }
  CHECK(superdiffusive >= 19);
}
