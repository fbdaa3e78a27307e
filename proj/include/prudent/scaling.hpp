#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "prudent/rng.hpp"

/// Brownian driver, occupation times and the limit process
/// Z_u = (sigma1 theta+(W, 3u/7), sigma2 theta-(W, 3u/7)).
namespace prudent::scaling {

inline constexpr double kSpeed = 3.0 / 7.0;

struct BrownianPath {
  double dt = 0.0;
  std::vector<double> values{0.0};

  double horizon() const { return dt * static_cast<double>(values.size() - 1); }
};

/// Exact Gaussian increments on the grid k * dt, k <= ceil(horizon / dt).
BrownianPath sample_brownian(double dt, double horizon, Rng& rng);

struct OccupationPair {
  double theta_plus = 0.0;
  double theta_minus = 0.0;
};

/// Left-endpoint quadrature of 1{W >= 0} over [from, to]. Each grid interval
/// contributes its overlap with [from, to] weighted by the sign at its left
/// end; theta_minus is the complement, so the pair sums to to - from.
OccupationPair occupation_times(const BrownianPath& path, double from, double to);
inline OccupationPair occupation_times(const BrownianPath& path, double s) {
  return occupation_times(path, 0.0, s);
}

struct ZProcessSample {
  int sigma1 = 1;
  int sigma2 = 1;
  std::vector<double> u_grid;
  std::vector<std::array<double, 2>> points;
};

ZProcessSample z_process(const BrownianPath& path, int sigma1, int sigma2,
                         std::span<const double> u_grid);

/// P(angle <= x) = (2/pi) arctan(sqrt(tan x)) for 0 < x < pi/2.
double angle_cdf(double x);

/// (2/pi) arcsin(sqrt(x)) on [0, 1].
double arcsine_cdf(double x);

/// Inclusive counts of indices i <= m with hat_i >= 0 and hat_i < 0; they
/// sum to m + 1.
struct DiscreteOccupation {
  std::int64_t plus = 0;
  std::int64_t minus = 0;
};

DiscreteOccupation discrete_gamma(std::span<const std::int64_t> hat, std::size_t m);

/// Occupation of the piecewise-linear interpolation of `values` over [0, m],
/// split at zero exactly on each segment.
OccupationPair linear_occupation(std::span<const std::int64_t> values, std::size_t m);

}  // namespace prudent::scaling
