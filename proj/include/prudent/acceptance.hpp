#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "prudent/stats.hpp"

/// Acceptance suite: thirteen criteria, each producing a block of reports.
namespace prudent::acceptance {

inline constexpr int kCriterionCount = 13;

/// Sample-size and tolerance scale. The quick profile divides sample sizes
/// (and, where stated per criterion, horizons) by 10 and doubles tolerances.
struct Profile {
  bool quick = false;

  std::size_t count(std::size_t full, std::size_t floor = 1) const {
    return quick ? std::max(full / 10, floor) : full;
  }
  std::int64_t horizon(std::int64_t full) const { return quick ? full / 10 : full; }
  /// Width of an acceptance band.
  double tolerance(double full) const { return quick ? 2.0 * full : full; }
  /// Significance level for a p-value floor.
  double level(double full) const { return quick ? full / 2.0 : full; }
};

struct SuiteOptions {
  bool quick = false;
  std::uint64_t seed = 20060715;
  unsigned threads = 1;
  /// Criteria to run (1-based); empty runs all of them.
  std::vector<int> only;
  /// Test hook: replaces the increment law of the effective walk by one
  /// with this stay probability.
  std::optional<double> tampered_stay_probability;
  /// Called after each criterion completes.
  std::function<void(const struct CriterionResult&)> on_result;

  Profile profile() const { return Profile{quick}; }
};

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<stats::StatReport> reports;
  double seconds = 0.0;

  bool pass() const { return stats::all_pass(reports); }
};

std::string criterion_title(int id);

/// Runs the selected criteria in order. Criteria 1 and 2 share their runs.
std::vector<CriterionResult> run_suite(const SuiteOptions& options);

/// "PASS C7 time change: ..." with the headline statistic and threshold.
std::string summary_line(const CriterionResult& result);

bool suite_passes(const std::vector<CriterionResult>& results);

nlohmann::json to_json(const std::vector<CriterionResult>& results);

}  // namespace prudent::acceptance
