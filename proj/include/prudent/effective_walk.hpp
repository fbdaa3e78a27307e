#pragma once

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "prudent/lattice.hpp"
#include "prudent/rng.hpp"

/// The effective one-dimensional random walk with two-sided geometric
/// increments, its exit times, ladder epochs and the overshoot-corrected
/// hat process.
namespace prudent::effective {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// P(xi = k) = (1/3) (1/2)^|k| on the integers.
struct IncrementLaw {
  static Rational pmf(std::int64_t k);
  /// Exact mass of {|k| <= radius}; equals 1 - (2/3) 2^-radius.
  static Rational mass_within(std::int64_t radius);
  static Rational mean_abs();
  static Rational second_moment();
  static Rational variance() { return second_moment(); }
};

inline Rational increment_pmf(std::int64_t k) { return IncrementLaw::pmf(k); }

/// Draws increments by composing a zero/non-zero choice, a uniform sign and a
/// geometric magnitude on {1, 2, ...} with parameter 1/2.
class IncrementSampler {
 public:
  IncrementSampler() = default;

  /// Test hook: same magnitude law, but P(xi = 0) = p. Used to check that the
  /// acceptance suite notices a wrong law.
  static IncrementSampler with_stay_probability(double p);

  bool tampered() const { return stay_probability_.has_value(); }

  std::int64_t operator()(Rng& rng) const {
    const bool stay = stay_probability_ ? rng.uniform01() < *stay_probability_
                                        : rng.below(3) == 0;
    if (stay) return 0;
    std::uint64_t bits = rng.next_u64();
    while ((bits >> 1) == 0) bits = rng.next_u64();
    const std::int64_t magnitude = 1 + std::countr_zero(bits >> 1);
    return (bits & 1u) ? magnitude : -magnitude;
  }

 private:
  std::optional<double> stay_probability_;
};

std::int64_t sample_increment(Rng& rng);

class EffectiveWalkPath {
 public:
  EffectiveWalkPath() : values_{0} {}
  /// Throws std::invalid_argument unless values[0] == 0.
  explicit EffectiveWalkPath(std::vector<std::int64_t> values);

  std::size_t length() const { return values_.size() - 1; }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  std::span<const std::int64_t> values() const { return values_; }

  friend bool operator==(const EffectiveWalkPath&, const EffectiveWalkPath&) = default;

 private:
  std::vector<std::int64_t> values_;
};

EffectiveWalkPath simulate_effective_walk(std::size_t n, Rng& rng,
                                          const IncrementSampler& law = {});

enum class ExitSide : std::uint8_t { below, above, censored };

struct ExitOutcome {
  std::int64_t exit_time = 0;
  ExitSide side = ExitSide::below;
  std::int64_t final_value = 0;

  bool censored() const { return side == ExitSide::censored; }
};

inline constexpr std::int64_t kDefaultExitCap = 10'000'000;

/// First exit of the walk started at 0 from [0, width - 1].
ExitOutcome exit_time(std::int64_t width, Rng& rng);

/// First time the walk is strictly negative. When `cap` steps pass first the
/// outcome is censored with exit_time == cap.
ExitOutcome exit_time_unbounded(Rng& rng, std::int64_t cap = kDefaultExitCap);

/// Exit of a given path from [0, width - 1], or below 0 when `width` is
/// empty. Censored at the path length when it never exits.
ExitOutcome exit_time_of_path(const EffectiveWalkPath& path,
                              std::optional<std::int64_t> width);

// Exact law of the exit time, by transfer-matrix recursion over the
// sub-stochastic kernel restricted to [0, width - 1].
inline constexpr int kMaxExactWidth = 30;
inline constexpr int kMaxExactTime = 200;

Rational exit_time_pmf_exact(int width, int m);
/// Entry m - 1 holds P(eta_width = m), m = 1..max_m.
std::vector<Rational> exit_time_pmf_table(int width, int max_m);
std::vector<double> exit_time_pmf_doubles(int width, int max_m);

struct ExitPmfRow {
  int width = 0;
  int m = 0;
  BigInt numerator;
  BigInt denominator;
};

/// Golden-file text: one "L m prob_num prob_den" line per entry.
void write_exit_pmf_table(std::ostream& out, std::span<const int> widths, int max_m);
std::vector<ExitPmfRow> read_exit_pmf_table(std::istream& in);

/// Alternating ladder epochs: odd epochs are strict descents below the value
/// at the previous epoch, even epochs strict ascents. times[0] = 0 and
/// overshoots[0] = 0; an unfinished final epoch is not emitted.
struct LadderDecomposition {
  std::vector<std::size_t> times;
  std::vector<std::int64_t> overshoots;

  std::size_t completed() const { return times.size() - 1; }
};

LadderDecomposition ladder_decompose(const EffectiveWalkPath& path);

/// Overshoot-corrected walk, pinned to 0 at even ladder epochs and to -1 at
/// odd ones.
class HatPath {
 public:
  HatPath() : values_{0} {}
  /// Accepts any integer sequence starting at 0; no source is attached.
  explicit HatPath(std::vector<std::int64_t> values);
  HatPath(std::vector<std::int64_t> values, LadderDecomposition ladder);

  std::size_t length() const { return values_.size() - 1; }
  std::int64_t operator[](std::size_t i) const { return values_[i]; }
  std::span<const std::int64_t> values() const { return values_; }
  const std::optional<LadderDecomposition>& ladder() const { return ladder_; }

 private:
  std::vector<std::int64_t> values_;
  std::optional<LadderDecomposition> ladder_;
};

HatPath hat_path(const EffectiveWalkPath& path);

/// Prefix sums t(n) = sum_{i<=n} (1 + |hat_i - hat_{i-1}|) and the inverse
/// n(t) = min{n : t(n) >= t}.
class MicroscopicClock {
 public:
  explicit MicroscopicClock(std::span<const std::int64_t> hat);

  std::int64_t time_at(std::size_t n) const;
  std::size_t index_at(std::int64_t t) const;
  std::size_t length() const { return cumulative_.size() - 1; }
  std::int64_t horizon() const { return cumulative_.back(); }

 private:
  std::vector<std::int64_t> cumulative_;
};

std::int64_t microscopic_time(const HatPath& hat, std::size_t n);
std::size_t effective_index_of_time(const HatPath& hat, std::int64_t t);

struct CornerPathResult {
  LatticePath path;
  /// Hat index where the last complete excursion ends.
  std::size_t cut_index = 0;
  bool truncated = false;
};

/// Corner-model trajectory of the complete excursions of `hat`.
CornerPathResult hat_to_corner_path(std::span<const std::int64_t> hat,
                                    Axis first_step = Axis::horizontal);
inline CornerPathResult hat_to_corner_path(const HatPath& hat,
                                           Axis first_step = Axis::horizontal) {
  return hat_to_corner_path(hat.values(), first_step);
}

}  // namespace prudent::effective
