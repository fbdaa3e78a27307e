#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "prudent/io.hpp"
#include "prudent/lattice.hpp"

namespace prudent::cli {

enum ExitCode : int { kOk = 0, kTestFailure = 1, kUsageError = 2 };

/// Usage or input problems; main maps them to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int cmd_simulate(const io::RunConfig& config);

/// `tamper_stay` < 0 leaves the increment law alone.
int cmd_verify(const io::RunConfig& config, double tamper_stay);

struct PlotOptions {
  std::string input;
  /// trajectory | angle | norm
  std::string kind = "trajectory";
  /// Which record of a trajectory file to draw.
  std::size_t index = 0;
};
int cmd_plot(const io::RunConfig& config, const PlotOptions& plot);

int cmd_bench(const io::RunConfig& config);

/// Polyline through the sites, drawn with y pointing up. The viewBox is the
/// bounding rectangle padded by half a unit on each side.
void write_trajectory_svg(std::ostream& out, std::span<const Site> sites);

/// Step-function overlay of two CDFs sampled at the same abscissae.
void write_cdf_svg(std::ostream& out, std::span<const double> x, std::span<const double> empirical,
                   std::span<const double> theoretical);

}  // namespace prudent::cli
