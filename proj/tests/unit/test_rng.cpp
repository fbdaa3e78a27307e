#include <doctest.h>

#include <cstdlib>
#include <set>

#include "prudent/rng.hpp"

using prudent::Philox4x32;

TEST_CASE("philox known-answer vectors") {
  using Block = std::array<std::uint32_t, 4>;
  CHECK(Philox4x32::block({0, 0, 0, 0}, {0, 0}) ==
        Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8});
  CHECK(Philox4x32::block({0xffffffff, 0xffffffff, 0xffffffff, 0xffffffff},
                          {0xffffffff, 0xffffffff}) ==
        Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd});
  CHECK(Philox4x32::block({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344},
                          {0xa4093822, 0x299f31d0}) ==
        Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1});
}

TEST_CASE("equal seeds give equal streams, streams differ") {
  Philox4x32 a(42), b(42), c(42, 1), d(43);
  bool differs_stream = false, differs_seed = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a();
    CHECK(x == b());
    differs_stream |= x != c();
    differs_seed |= x != d();
  }
  CHECK(differs_stream);
  CHECK(differs_seed);
  CHECK(a.block_index() == 25);
}

TEST_CASE("split matches an explicitly constructed stream") {
  Philox4x32 parent(7);
  Philox4x32 child = parent.split(3);
  Philox4x32 direct(7, 3);
  for (int i = 0; i < 10; ++i) CHECK(child() == direct());
}

TEST_CASE("replica seeds are distinct and pure") {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(prudent::replica_seed(1, i));
  CHECK(seen.size() == 10000);
  CHECK(prudent::replica_seed(5, 9) == prudent::replica_seed(5, 9));
  CHECK(prudent::replica_seed(5, 9) != prudent::replica_seed(6, 9));
}

TEST_CASE("bounded draws are in range and roughly uniform") {
  Philox4x32 rng(11);
  std::array<int, 3> counts{};
  for (int i = 0; i < 300000; ++i) {
    const auto v = rng.below(3);
    REQUIRE(v < 3);
    ++counts[v];
  }
  for (int c : counts) CHECK(std::abs(c - 100000) < 1500);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}
