#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "prudent/lattice.hpp"

namespace prudent::stats {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

enum class Verdict : std::uint8_t { pass, fail, informational };
enum class Comparison : std::uint8_t { less, less_equal, greater, greater_equal };

std::string to_string(Verdict v);
std::string to_string(Comparison c);

/// Pass iff `statistic <cmp> threshold`. NaN statistics fail.
bool compare(double statistic, Comparison cmp, double threshold);

struct StatReport {
  std::string name;
  double estimate = kNaN;
  double std_error = kNaN;
  double statistic = kNaN;
  double threshold = kNaN;
  Comparison comparison = Comparison::less;
  Verdict verdict = Verdict::informational;
  std::size_t sample_size = 0;
  std::vector<std::uint64_t> seeds;
  std::string note;

  /// Report whose verdict is decided by comparing statistic to threshold.
  static StatReport judged(std::string name, double statistic, Comparison cmp, double threshold);
  static StatReport informational(std::string name, double estimate);

  bool failed() const { return verdict == Verdict::fail; }
};

nlohmann::json to_json(const StatReport& r);
StatReport report_from_json(const nlohmann::json& j);
/// Fixed-width human-readable table, one row per report.
void write_table(std::ostream& out, std::span<const StatReport> reports);
/// True iff no report has a failing verdict.
bool all_pass(std::span<const StatReport> reports);

class EmpiricalCDF {
 public:
  explicit EmpiricalCDF(std::vector<double> samples);
  /// Fraction of samples <= x.
  double operator()(double x) const;
  std::span<const double> sorted() const { return sorted_; }
  std::size_t size() const { return sorted_.size(); }

 private:
  std::vector<double> sorted_;
};

struct Estimate {
  double mean = kNaN;
  double std_error = kNaN;
  std::size_t n = 0;
  double ci_low() const { return mean - 1.96 * std_error; }
  double ci_high() const { return mean + 1.96 * std_error; }
};

Estimate mean_estimate(std::span<const double> values);
double median(std::vector<double> values);

using Cdf = std::function<double(double)>;

/// sup |F_n - F| with no sample-size requirement.
double ks_distance(std::span<const double> samples, const Cdf& cdf);

struct KsResult {
  double d = 0.0;
  std::size_t n = 0;
  double critical = 0.0;
  bool pass = false;
};

inline constexpr double kKsC05 = 1.36;

/// Asymptotic KS test at the 5% level: pass iff D < 1.36 / sqrt(n).
KsResult ks_statistic(std::span<const double> samples, const Cdf& cdf);

/// Q(a, x) = Gamma(a, x) / Gamma(a), by series or continued fraction.
double regularized_gamma_q(double a, double x);
double chi_square_survival(double statistic, double dof);

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
  std::size_t bins = 0;
};

/// Merges adjacent bins left to right until each holds expected count
/// >= min_expected; a short remainder joins the last bin.
struct PooledBins {
  std::vector<double> observed;
  std::vector<double> probabilities;
};
PooledBins pool_bins(std::span<const double> observed, std::span<const double> probabilities,
                     double min_expected = 5.0);

/// Pearson goodness of fit. Probabilities must sum to 1 and every bin must
/// have expected count >= 5 (use pool_bins first).
ChiSquareResult chi_square(std::span<const double> observed, std::span<const double> probabilities);

/// Two-sample homogeneity test over matching cells. Cells whose combined
/// count is below `min_combined` are pooled into one cell.
ChiSquareResult chi_square_homogeneity(std::span<const double> a, std::span<const double> b,
                                       double min_combined = 10.0);

struct SlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double std_error = 0.0;
  std::size_t points = 0;
};

/// Least squares of log value on log t. Needs >= 4 points, all positive.
SlopeFit loglog_slope(std::span<const double> t, std::span<const double> value);

/// Mean L1 speed |x| + |y| over t, from trajectory endpoints at time t.
/// Needs t >= 10^4 and at least 30 endpoints.
Estimate speed_estimate(std::span<const Site> endpoints, std::int64_t t);

struct DeviationDiagnostics {
  double walk_gap = 0.0;        // max_k |S_k - hat_k| / sqrt(n)
  double clock_gap = 0.0;       // sup_m |t(m) - 7m/3| / n
  double occupation_gap = 0.0;  // sup_m |Gamma_m - Z_m|_inf / n
};

/// Gaps between the walk, its hat process and the diffusive embedding given
/// by the piecewise-linear interpolation of the walk. Paths must share a
/// horizon.
DeviationDiagnostics deviation_gaps(std::span<const std::int64_t> walk,
                                    std::span<const std::int64_t> hat);

std::vector<StatReport> sup_deviation_diagnostics(std::span<const std::int64_t> walk,
                                                  std::span<const std::int64_t> hat);

}  // namespace prudent::stats
