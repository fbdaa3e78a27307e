#include "prudent/scaling.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace prudent::scaling {

BrownianPath sample_brownian(double dt, double horizon, Rng& rng) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(horizon >= dt)) throw std::invalid_argument("horizon must be at least dt");
  const auto steps = static_cast<std::size_t>(std::ceil(horizon / dt - 1e-9));
  BrownianPath path;
  path.dt = dt;
  path.values.resize(steps + 1);
  std::normal_distribution<double> normal(0.0, std::sqrt(dt));
  for (std::size_t i = 1; i <= steps; ++i) path.values[i] = path.values[i - 1] + normal(rng);
  return path;
}

OccupationPair occupation_times(const BrownianPath& path, double from, double to) {
  if (!(from >= 0.0 && to >= from)) throw std::invalid_argument("need 0 <= from <= to");
  if (to > path.horizon() * (1 + 1e-12)) {
    throw std::out_of_range("occupation window ends at " + std::to_string(to) +
                            " beyond horizon " + std::to_string(path.horizon()));
  }
  const double dt = path.dt;
  double plus = 0.0;
  const auto first = static_cast<std::size_t>(std::floor(from / dt));
  for (std::size_t i = first; i + 1 < path.values.size(); ++i) {
    const double left = std::max(from, static_cast<double>(i) * dt);
    const double right = std::min(to, static_cast<double>(i + 1) * dt);
    if (right <= left) {
      if (static_cast<double>(i) * dt >= to) break;
      continue;
    }
    if (path.values[i] >= 0.0) plus += right - left;
  }
  return {plus, (to - from) - plus};
}

ZProcessSample z_process(const BrownianPath& path, int sigma1, int sigma2,
                         std::span<const double> u_grid) {
  if ((sigma1 != 1 && sigma1 != -1) || (sigma2 != 1 && sigma2 != -1)) {
    throw std::invalid_argument("signs must be +1 or -1");
  }
  ZProcessSample out;
  out.sigma1 = sigma1;
  out.sigma2 = sigma2;
  out.u_grid.assign(u_grid.begin(), u_grid.end());
  double previous = -1.0;
  for (double u : u_grid) {
    if (u < 0.0 || u > 1.0 || u < previous) {
      throw std::invalid_argument("u grid must be increasing in [0, 1]");
    }
    previous = u;
    const double s = kSpeed * u;
    if (s > path.horizon() * (1 + 1e-12)) {
      throw std::out_of_range("Brownian horizon shorter than 3u/7");
    }
    const auto theta = occupation_times(path, s);
    out.points.push_back({sigma1 * theta.theta_plus, sigma2 * theta.theta_minus});
  }
  return out;
}

double angle_cdf(double x) {
  if (!(x > 0.0 && x < std::numbers::pi / 2)) {
    throw std::domain_error("angle must lie in (0, pi/2)");
  }
  return 2.0 / std::numbers::pi * std::atan(std::sqrt(std::tan(x)));
}

double arcsine_cdf(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return 2.0 / std::numbers::pi * std::asin(std::sqrt(x));
}

DiscreteOccupation discrete_gamma(std::span<const std::int64_t> hat, std::size_t m) {
  if (m >= hat.size()) {
    throw std::out_of_range("index " + std::to_string(m) + " beyond hat length " +
                            std::to_string(hat.size() - 1));
  }
  DiscreteOccupation out;
  for (std::size_t i = 0; i <= m; ++i) {
    if (hat[i] >= 0) ++out.plus;
    else ++out.minus;
  }
  return out;
}

OccupationPair linear_occupation(std::span<const std::int64_t> values, std::size_t m) {
  if (m >= values.size()) throw std::out_of_range("index beyond path length");
  double plus = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const auto a = static_cast<double>(values[i]);
    const auto b = static_cast<double>(values[i + 1]);
    if (a >= 0 && b >= 0) plus += 1.0;
    else if (a >= 0) plus += a / (a - b);
    else if (b >= 0) plus += b / (b - a);
  }
  return {plus, static_cast<double>(m) - plus};
}

}  // namespace prudent::scaling
