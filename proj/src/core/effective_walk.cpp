#include "prudent/effective_walk.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "prudent/corner_codec.hpp"

namespace prudent::effective {

namespace {

Rational half_power(std::int64_t k) {
  return Rational(BigInt(1), BigInt(1) << static_cast<unsigned>(k));
}

}  // namespace

Rational IncrementLaw::pmf(std::int64_t k) {
  return Rational(1, 3) * half_power(std::abs(k));
}

Rational IncrementLaw::mass_within(std::int64_t radius) {
  Rational total = 0;
  for (std::int64_t k = -radius; k <= radius; ++k) total += pmf(k);
  return total;
}

// Closed forms with x = 1/2: sum k x^k = x/(1-x)^2, sum k^2 x^k = x(1+x)/(1-x)^3.
Rational IncrementLaw::mean_abs() {
  const Rational x(1, 2);
  const Rational one_minus = 1 - x;
  return Rational(2, 3) * x / (one_minus * one_minus);
}

Rational IncrementLaw::second_moment() {
  const Rational x(1, 2);
  const Rational one_minus = 1 - x;
  return Rational(2, 3) * x * (1 + x) / (one_minus * one_minus * one_minus);
}

IncrementSampler IncrementSampler::with_stay_probability(double p) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument("stay probability must lie in [0, 1)");
  }
  IncrementSampler sampler;
  sampler.stay_probability_ = p;
  return sampler;
}

std::int64_t sample_increment(Rng& rng) { return IncrementSampler{}(rng); }

EffectiveWalkPath::EffectiveWalkPath(std::vector<std::int64_t> values)
    : values_(std::move(values)) {
  if (values_.empty() || values_.front() != 0) {
    throw std::invalid_argument("effective walk must start at 0");
  }
}

EffectiveWalkPath simulate_effective_walk(std::size_t n, Rng& rng,
                                          const IncrementSampler& law) {
  std::vector<std::int64_t> values(n + 1);
  for (std::size_t i = 1; i <= n; ++i) values[i] = values[i - 1] + law(rng);
  return EffectiveWalkPath(std::move(values));
}

ExitOutcome exit_time(std::int64_t width, Rng& rng) {
  if (width < 1) throw std::invalid_argument("interval width must be >= 1");
  std::int64_t s = 0;
  for (std::int64_t t = 1;; ++t) {
    s += sample_increment(rng);
    if (s < 0) return {t, ExitSide::below, s};
    if (s >= width) return {t, ExitSide::above, s};
  }
}

ExitOutcome exit_time_unbounded(Rng& rng, std::int64_t cap) {
  if (cap < 1) throw std::invalid_argument("step cap must be >= 1");
  std::int64_t s = 0;
  for (std::int64_t t = 1; t <= cap; ++t) {
    s += sample_increment(rng);
    if (s < 0) return {t, ExitSide::below, s};
  }
  return {cap, ExitSide::censored, s};
}

ExitOutcome exit_time_of_path(const EffectiveWalkPath& path,
                              std::optional<std::int64_t> width) {
  if (width && *width < 1) throw std::invalid_argument("interval width must be >= 1");
  const auto s = path.values();
  for (std::size_t t = 1; t < s.size(); ++t) {
    if (s[t] < 0) return {static_cast<std::int64_t>(t), ExitSide::below, s[t]};
    if (width && s[t] >= *width) return {static_cast<std::int64_t>(t), ExitSide::above, s[t]};
  }
  return {static_cast<std::int64_t>(path.length()), ExitSide::censored, s.back()};
}

std::vector<Rational> exit_time_pmf_table(int width, int max_m) {
  if (width < 1 || width > kMaxExactWidth) {
    throw std::out_of_range("exact exit law supports 1 <= L <= " +
                            std::to_string(kMaxExactWidth));
  }
  if (max_m < 1 || max_m > kMaxExactTime) {
    throw std::out_of_range("exact exit law supports 1 <= m <= " +
                            std::to_string(kMaxExactTime));
  }
  // Scaling the kernel (1/3)(1/2)^d by 3 * 2^(L-1) makes every entry an
  // integer 2^(L-1-d); the mass after m steps has denominator scale^m.
  const int L = width;
  const BigInt scale = BigInt(3) << (L - 1);
  std::vector<BigInt> weight(L);
  for (int d = 0; d < L; ++d) weight[d] = BigInt(1) << (L - 1 - d);
  std::vector<BigInt> row_mass(L);  // scaled mass kept inside from state i
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < L; ++j) row_mass[i] += weight[std::abs(i - j)];
  }

  std::vector<BigInt> mass(L), next(L);
  mass[0] = 1;
  BigInt denominator = 1;
  std::vector<Rational> table;
  table.reserve(max_m);
  for (int m = 1; m <= max_m; ++m) {
    denominator *= scale;
    BigInt exiting = 0;
    for (int j = 0; j < L; ++j) next[j] = 0;
    for (int i = 0; i < L; ++i) {
      if (mass[i] == 0) continue;
      exiting += mass[i] * (scale - row_mass[i]);
      for (int j = 0; j < L; ++j) next[j] += mass[i] * weight[std::abs(i - j)];
    }
    table.emplace_back(exiting, denominator);
    std::swap(mass, next);
  }
  return table;
}

Rational exit_time_pmf_exact(int width, int m) {
  return exit_time_pmf_table(width, m).back();
}

std::vector<double> exit_time_pmf_doubles(int width, int max_m) {
  const auto table = exit_time_pmf_table(width, max_m);
  std::vector<double> out;
  out.reserve(table.size());
  for (const auto& p : table) out.push_back(static_cast<double>(p));
  return out;
}

void write_exit_pmf_table(std::ostream& out, std::span<const int> widths, int max_m) {
  for (int L : widths) {
    const auto table = exit_time_pmf_table(L, max_m);
    for (int m = 1; m <= max_m; ++m) {
      const Rational& p = table[m - 1];
      out << L << ' ' << m << ' ' << boost::multiprecision::numerator(p) << ' '
          << boost::multiprecision::denominator(p) << '\n';
    }
  }
}

std::vector<ExitPmfRow> read_exit_pmf_table(std::istream& in) {
  std::vector<ExitPmfRow> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    ExitPmfRow row;
    std::string num, den, extra;
    if (!(fields >> row.width >> row.m >> num >> den) || (fields >> extra)) {
      throw std::runtime_error("exit pmf table: bad line " + std::to_string(line_no));
    }
    try {
      row.numerator = BigInt(num);
      row.denominator = BigInt(den);
    } catch (const std::exception&) {
      throw std::runtime_error("exit pmf table: bad integer on line " +
                               std::to_string(line_no));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

LadderDecomposition ladder_decompose(const EffectiveWalkPath& path) {
  LadderDecomposition out;
  out.times.push_back(0);
  out.overshoots.push_back(0);
  const auto s = path.values();
  std::int64_t reference = s[0];
  bool descending = true;  // the next epoch is odd
  for (std::size_t n = 1; n < s.size(); ++n) {
    const bool hit = descending ? s[n] < reference : s[n] > reference;
    if (!hit) continue;
    const std::int64_t jump = s[n] - reference;
    out.times.push_back(n);
    out.overshoots.push_back(descending ? -1 - jump : 1 - jump);
    reference = s[n];
    descending = !descending;
  }
  return out;
}

HatPath::HatPath(std::vector<std::int64_t> values) : values_(std::move(values)) {
  if (values_.empty() || values_.front() != 0) {
    throw std::invalid_argument("hat path must start at 0");
  }
}

HatPath::HatPath(std::vector<std::int64_t> values, LadderDecomposition ladder)
    : HatPath(std::move(values)) {
  ladder_ = std::move(ladder);
}

HatPath hat_path(const EffectiveWalkPath& path) {
  LadderDecomposition ladder = ladder_decompose(path);
  const auto s = path.values();
  std::vector<std::int64_t> hat(s.size());
  std::int64_t correction = 0;
  std::size_t next_epoch = 1;
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (next_epoch < ladder.times.size() && ladder.times[next_epoch] == n) {
      correction += ladder.overshoots[next_epoch];
      ++next_epoch;
    }
    hat[n] = s[n] + correction;
  }
  return HatPath(std::move(hat), std::move(ladder));
}

MicroscopicClock::MicroscopicClock(std::span<const std::int64_t> hat) {
  cumulative_.resize(hat.size());
  for (std::size_t i = 1; i < hat.size(); ++i) {
    cumulative_[i] = cumulative_[i - 1] + 1 + std::abs(hat[i] - hat[i - 1]);
  }
}

std::int64_t MicroscopicClock::time_at(std::size_t n) const {
  if (n >= cumulative_.size()) {
    throw std::out_of_range("index " + std::to_string(n) + " beyond hat length " +
                            std::to_string(length()));
  }
  return cumulative_[n];
}

std::size_t MicroscopicClock::index_at(std::int64_t t) const {
  if (t > horizon()) {
    throw std::out_of_range("time " + std::to_string(t) + " beyond horizon " +
                            std::to_string(horizon()));
  }
  const auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), t);
  return static_cast<std::size_t>(it - cumulative_.begin());
}

std::int64_t microscopic_time(const HatPath& hat, std::size_t n) {
  if (n > hat.length()) {
    throw std::out_of_range("index " + std::to_string(n) + " beyond hat length " +
                            std::to_string(hat.length()));
  }
  return MicroscopicClock(hat.values().first(n + 1)).time_at(n);
}

std::size_t effective_index_of_time(const HatPath& hat, std::int64_t t) {
  return MicroscopicClock(hat.values()).index_at(t);
}

CornerPathResult hat_to_corner_path(std::span<const std::int64_t> hat,
                                    Axis first_step) {
  if (hat.empty() || hat.front() != 0) {
    throw std::invalid_argument("hat path must start at 0");
  }
  // Locate the end of the last complete excursion.
  codec::Phase phase = codec::Phase::nonnegative;
  std::size_t cut = 0;
  for (std::size_t i = 1; i < hat.size(); ++i) {
    if (!codec::is_exit(phase, hat[i])) continue;
    if (hat[i] != codec::landing(phase)) {
      throw std::invalid_argument("hat value " + std::to_string(hat[i]) +
                                  " at index " + std::to_string(i) +
                                  " overshoots the ladder level");
    }
    phase = codec::next(phase);
    cut = i;
  }

  std::vector<Dir> steps;
  phase = codec::Phase::nonnegative;
  for (std::size_t i = 1; i <= cut; ++i) {
    phase = codec::encode_step(phase, first_step, hat[i - 1], hat[i], steps);
  }
  return {LatticePath::from_steps(steps), cut, cut + 1 < hat.size()};
}

}  // namespace prudent::effective
