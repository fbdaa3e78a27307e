#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace prudent {

/// Unit steps of Z^2. The numeric values index bit masks (`DirSet`).
enum class Dir : std::uint8_t { east = 0, west = 1, north = 2, south = 3 };

inline constexpr std::array<Dir, 4> kAllDirs{Dir::east, Dir::west, Dir::north,
                                             Dir::south};

enum class Axis : std::uint8_t { horizontal, vertical };

struct Site {
  std::int32_t x = 0;
  std::int32_t y = 0;
  friend bool operator==(const Site&, const Site&) = default;
};

constexpr Site step_from(Site s, Dir d) {
  switch (d) {
    case Dir::east: return {s.x + 1, s.y};
    case Dir::west: return {s.x - 1, s.y};
    case Dir::north: return {s.x, s.y + 1};
    case Dir::south: return {s.x, s.y - 1};
  }
  return s;
}

constexpr Dir opposite(Dir d) {
  switch (d) {
    case Dir::east: return Dir::west;
    case Dir::west: return Dir::east;
    case Dir::north: return Dir::south;
    case Dir::south: return Dir::north;
  }
  return d;
}

constexpr Axis axis_of(Dir d) {
  return (d == Dir::east || d == Dir::west) ? Axis::horizontal : Axis::vertical;
}

/// Reflection across the diagonal x = y.
constexpr Dir transpose(Dir d) {
  switch (d) {
    case Dir::east: return Dir::north;
    case Dir::west: return Dir::south;
    case Dir::north: return Dir::east;
    case Dir::south: return Dir::west;
  }
  return d;
}

constexpr char dir_letter(Dir d) {
  constexpr std::array<char, 4> letters{'R', 'L', 'U', 'D'};
  return letters[static_cast<int>(d)];
}

/// Small bit set over the four directions.
class DirSet {
 public:
  constexpr DirSet() = default;
  constexpr explicit DirSet(std::uint8_t bits) : bits_(bits & 0xF) {}
  constexpr DirSet(std::initializer_list<Dir> dirs) {
    for (Dir d : dirs) insert(d);
  }
  static constexpr DirSet all() { return DirSet(0xF); }

  constexpr void insert(Dir d) { bits_ |= bit(d); }
  constexpr void erase(Dir d) { bits_ &= static_cast<std::uint8_t>(~bit(d)); }
  constexpr bool contains(Dir d) const { return (bits_ & bit(d)) != 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint8_t bits() const { return bits_; }

  friend constexpr bool operator==(DirSet, DirSet) = default;

 private:
  static constexpr std::uint8_t bit(Dir d) {
    return static_cast<std::uint8_t>(1u << static_cast<int>(d));
  }
  std::uint8_t bits_ = 0;
};

std::string to_string(DirSet set);

/// Time-ordered nearest-neighbour trajectory starting at the origin.
class LatticePath {
 public:
  LatticePath() : sites_{Site{}} {}

  /// Validates unit steps and the origin start.
  explicit LatticePath(std::vector<Site> sites);

  static LatticePath from_steps(std::span<const Dir> steps);

  std::size_t steps() const { return sites_.size() - 1; }
  const Site& operator[](std::size_t t) const { return sites_[t]; }
  const Site& back() const { return sites_.back(); }
  std::span<const Site> sites() const { return sites_; }

  /// Direction of step t (from site t-1 to site t), t >= 1.
  Dir step(std::size_t t) const;
  std::vector<Dir> directions() const;

  void push(Dir d) { sites_.push_back(step_from(sites_.back(), d)); }
  void reserve(std::size_t n) { sites_.reserve(n + 1); }

  friend bool operator==(const LatticePath&, const LatticePath&) = default;

 private:
  std::vector<Site> sites_;
};

}  // namespace prudent
