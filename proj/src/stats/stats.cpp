#include "prudent/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace prudent::stats {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::informational: return "info";
  }
  return "?";
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::less: return "<";
    case Comparison::less_equal: return "<=";
    case Comparison::greater: return ">";
    case Comparison::greater_equal: return ">=";
  }
  return "?";
}

bool compare(double statistic, Comparison cmp, double threshold) {
  if (std::isnan(statistic) || std::isnan(threshold)) return false;
  switch (cmp) {
    case Comparison::less: return statistic < threshold;
    case Comparison::less_equal: return statistic <= threshold;
    case Comparison::greater: return statistic > threshold;
    case Comparison::greater_equal: return statistic >= threshold;
  }
  return false;
}

StatReport StatReport::judged(std::string name, double statistic, Comparison cmp,
                              double threshold) {
  StatReport r;
  r.name = std::move(name);
  r.statistic = statistic;
  r.comparison = cmp;
  r.threshold = threshold;
  r.verdict = compare(statistic, cmp, threshold) ? Verdict::pass : Verdict::fail;
  return r;
}

StatReport StatReport::informational(std::string name, double estimate) {
  StatReport r;
  r.name = std::move(name);
  r.estimate = estimate;
  r.verdict = Verdict::informational;
  return r;
}

namespace {

nlohmann::json number_or_null(double v) {
  return std::isnan(v) ? nlohmann::json(nullptr) : nlohmann::json(v);
}

double number_from(const nlohmann::json& j) {
  return j.is_null() ? kNaN : j.get<double>();
}

Comparison comparison_from(const std::string& s) {
  for (Comparison c : {Comparison::less, Comparison::less_equal, Comparison::greater,
                       Comparison::greater_equal}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown comparison '" + s + "'");
}

Verdict verdict_from(const std::string& s) {
  for (Verdict v : {Verdict::pass, Verdict::fail, Verdict::informational}) {
    if (to_string(v) == s) return v;
  }
  throw std::invalid_argument("unknown verdict '" + s + "'");
}

std::string format_number(double v) {
  if (std::isnan(v)) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

nlohmann::json to_json(const StatReport& r) {
  return {{"name", r.name},
          {"estimate", number_or_null(r.estimate)},
          {"std_error", number_or_null(r.std_error)},
          {"statistic", number_or_null(r.statistic)},
          {"threshold", number_or_null(r.threshold)},
          {"comparison", to_string(r.comparison)},
          {"verdict", to_string(r.verdict)},
          {"sample_size", r.sample_size},
          {"seeds", r.seeds},
          {"note", r.note}};
}

StatReport report_from_json(const nlohmann::json& j) {
  StatReport r;
  r.name = j.at("name").get<std::string>();
  r.estimate = number_from(j.at("estimate"));
  r.std_error = number_from(j.at("std_error"));
  r.statistic = number_from(j.at("statistic"));
  r.threshold = number_from(j.at("threshold"));
  r.comparison = comparison_from(j.at("comparison").get<std::string>());
  r.verdict = verdict_from(j.at("verdict").get<std::string>());
  r.sample_size = j.at("sample_size").get<std::size_t>();
  r.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  r.note = j.at("note").get<std::string>();
  return r;
}

void write_table(std::ostream& out, std::span<const StatReport> reports) {
  out << std::left << std::setw(44) << "name" << std::setw(7) << "verdict" << std::setw(14)
      << "estimate" << std::setw(14) << "statistic" << std::setw(4) << "" << std::setw(12)
      << "threshold" << "n" << '\n';
  for (const auto& r : reports) {
    out << std::left << std::setw(44) << r.name << std::setw(7) << to_string(r.verdict)
        << std::setw(14) << format_number(r.estimate) << std::setw(14)
        << format_number(r.statistic) << std::setw(4)
        << (std::isnan(r.threshold) ? "" : to_string(r.comparison)) << std::setw(12)
        << format_number(r.threshold) << r.sample_size << '\n';
  }
}

bool all_pass(std::span<const StatReport> reports) {
  return std::none_of(reports.begin(), reports.end(), [](const StatReport& r) { return r.failed(); });
}

EmpiricalCDF::EmpiricalCDF(std::vector<double> samples) : sorted_(std::move(samples)) {
  std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalCDF::operator()(double x) const {
  if (sorted_.empty()) return 0.0;
  const auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
  return static_cast<double>(it - sorted_.begin()) / static_cast<double>(sorted_.size());
}

Estimate mean_estimate(std::span<const double> values) {
  Estimate e;
  e.n = values.size();
  if (values.empty()) return e;
  const double n = static_cast<double>(values.size());
  e.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - e.mean) * (v - e.mean);
    e.std_error = std::sqrt(ss / (n - 1) / n);
  }
  return e;
}

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty sample");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

double ks_distance(std::span<const double> samples, const Cdf& cdf) {
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

KsResult ks_statistic(std::span<const double> samples, const Cdf& cdf) {
  if (samples.size() < 50) throw std::invalid_argument("KS test needs at least 50 samples");
  KsResult r;
  r.n = samples.size();
  r.d = ks_distance(samples, cdf);
  r.critical = kKsC05 / std::sqrt(static_cast<double>(r.n));
  r.pass = r.d < r.critical;
  return r;
}

double regularized_gamma_q(double a, double x) {
  if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_q needs a > 0 and x >= 0");
  if (x == 0.0) return 1.0;
  const double log_prefactor = -x + a * std::log(x) - std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, term = 1.0 / a, sum = term;
    for (int n = 0; n < 10000; ++n) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return std::max(0.0, 1.0 - sum * std::exp(log_prefactor));
  }
  // Modified Lentz evaluation of the continued fraction for Q.
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 10000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return std::exp(log_prefactor) * h;
}

double chi_square_survival(double statistic, double dof) {
  if (dof <= 0) throw std::domain_error("degrees of freedom must be positive");
  if (statistic <= 0) return 1.0;
  return regularized_gamma_q(dof / 2.0, statistic / 2.0);
}

PooledBins pool_bins(std::span<const double> observed, std::span<const double> probabilities,
                     double min_expected) {
  if (observed.size() != probabilities.size()) throw std::invalid_argument("bin count mismatch");
  const double n = std::accumulate(observed.begin(), observed.end(), 0.0);
  PooledBins out;
  double obs = 0.0, prob = 0.0;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    obs += observed[i];
    prob += probabilities[i];
    if (prob * n >= min_expected) {
      out.observed.push_back(obs);
      out.probabilities.push_back(prob);
      obs = prob = 0.0;
    }
  }
  if (prob > 0.0 || obs > 0.0) {
    if (out.observed.empty()) {
      out.observed.push_back(obs);
      out.probabilities.push_back(prob);
    } else {
      out.observed.back() += obs;
      out.probabilities.back() += prob;
    }
  }
  return out;
}

ChiSquareResult chi_square(std::span<const double> observed, std::span<const double> probabilities) {
  if (observed.size() != probabilities.size()) throw std::invalid_argument("bin count mismatch");
  if (observed.size() < 2) throw std::invalid_argument("chi-square needs at least two bins");
  const double total_p = std::accumulate(probabilities.begin(), probabilities.end(), 0.0);
  if (std::abs(total_p - 1.0) > 1e-9) throw std::invalid_argument("probabilities must sum to 1");
  const double n = std::accumulate(observed.begin(), observed.end(), 0.0);
  ChiSquareResult r;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    const double expected = n * probabilities[i];
    if (expected < 5.0) {
      throw std::invalid_argument("bin " + std::to_string(i) + " has expected count " +
                                  std::to_string(expected) + " < 5; pool bins first");
    }
    r.statistic += (observed[i] - expected) * (observed[i] - expected) / expected;
  }
  r.bins = observed.size();
  r.dof = static_cast<int>(observed.size()) - 1;
  r.p_value = chi_square_survival(r.statistic, r.dof);
  return r;
}

ChiSquareResult chi_square_homogeneity(std::span<const double> a, std::span<const double> b,
                                       double min_combined) {
  if (a.size() != b.size()) throw std::invalid_argument("cell count mismatch");
  std::vector<double> ca, cb;
  double pooled_a = 0.0, pooled_b = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] + b[i] >= min_combined) {
      ca.push_back(a[i]);
      cb.push_back(b[i]);
    } else {
      pooled_a += a[i];
      pooled_b += b[i];
    }
  }
  if (pooled_a + pooled_b > 0.0) {
    ca.push_back(pooled_a);
    cb.push_back(pooled_b);
  }
  if (ca.size() < 2) throw std::invalid_argument("homogeneity test needs two populated cells");
  const double na = std::accumulate(ca.begin(), ca.end(), 0.0);
  const double nb = std::accumulate(cb.begin(), cb.end(), 0.0);
  const double n = na + nb;
  ChiSquareResult r;
  for (std::size_t i = 0; i < ca.size(); ++i) {
    const double cell = ca[i] + cb[i];
    const double ea = na * cell / n, eb = nb * cell / n;
    r.statistic += (ca[i] - ea) * (ca[i] - ea) / ea + (cb[i] - eb) * (cb[i] - eb) / eb;
  }
  r.bins = ca.size();
  r.dof = static_cast<int>(ca.size()) - 1;
  r.p_value = chi_square_survival(r.statistic, r.dof);
  return r;
}

SlopeFit loglog_slope(std::span<const double> t, std::span<const double> value) {
  if (t.size() != value.size()) throw std::invalid_argument("column length mismatch");
  if (t.size() < 4) throw std::invalid_argument("log-log fit needs at least 4 points");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0) || !(value[i] > 0.0)) {
      throw std::invalid_argument("log-log fit needs positive values (row " + std::to_string(i) + ")");
    }
    x.push_back(std::log(t[i]));
    y.push_back(std::log(value[i]));
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("log-log fit needs distinct t values");
  SlopeFit fit;
  fit.points = x.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    rss += r * r;
  }
  fit.std_error = std::sqrt(rss / (n - 2.0) / sxx);
  return fit;
}

Estimate speed_estimate(std::span<const Site> endpoints, std::int64_t t) {
  if (t < 10000) throw std::invalid_argument("speed estimate needs t >= 10^4");
  if (endpoints.size() < 30) throw std::invalid_argument("speed estimate needs >= 30 trajectories");
  std::vector<double> speeds;
  speeds.reserve(endpoints.size());
  for (const Site& s : endpoints) {
    speeds.push_back((std::abs(static_cast<double>(s.x)) + std::abs(static_cast<double>(s.y))) /
                     static_cast<double>(t));
  }
  return mean_estimate(speeds);
}

DeviationDiagnostics deviation_gaps(std::span<const std::int64_t> walk,
                                    std::span<const std::int64_t> hat) {
  if (walk.size() != hat.size() || walk.empty()) {
    throw std::invalid_argument("walk and hat paths must share a nonempty horizon");
  }
  const std::size_t n = walk.size() - 1;
  const double scale = n > 0 ? static_cast<double>(n) : 1.0;
  DeviationDiagnostics d;
  std::int64_t walk_gap = 0;
  double clock = 0.0, clock_gap = 0.0;
  double gamma_plus = hat[0] >= 0 ? 1.0 : 0.0;
  double gamma_minus = 1.0 - gamma_plus;
  double z_plus = 0.0;
  double occupation_gap = std::max(gamma_plus, gamma_minus);
  for (std::size_t m = 0; m <= n; ++m) {
    walk_gap = std::max(walk_gap, std::abs(walk[m] - hat[m]));
    if (m == 0) continue;
    clock += 1.0 + static_cast<double>(std::abs(hat[m] - hat[m - 1]));
    clock_gap = std::max(clock_gap, std::abs(clock - 7.0 / 3.0 * static_cast<double>(m)));
    (hat[m] >= 0 ? gamma_plus : gamma_minus) += 1.0;
    const auto a = static_cast<double>(walk[m - 1]);
    const auto b = static_cast<double>(walk[m]);
    if (a >= 0 && b >= 0) z_plus += 1.0;
    else if (a >= 0) z_plus += a / (a - b);
    else if (b >= 0) z_plus += b / (b - a);
    const double z_minus = static_cast<double>(m) - z_plus;
    occupation_gap = std::max({occupation_gap, std::abs(gamma_plus - z_plus),
                               std::abs(gamma_minus - z_minus)});
  }
  d.walk_gap = static_cast<double>(walk_gap) / std::sqrt(scale);
  d.clock_gap = clock_gap / scale;
  d.occupation_gap = occupation_gap / scale;
  return d;
}

std::vector<StatReport> sup_deviation_diagnostics(std::span<const std::int64_t> walk,
                                                  std::span<const std::int64_t> hat) {
  const auto d = deviation_gaps(walk, hat);
  const std::size_t n = walk.size() - 1;
  std::vector<StatReport> out{
      StatReport::informational("max|S-hatS|/sqrt(n)", d.walk_gap),
      StatReport::informational("sup|t(m)-7m/3|/n", d.clock_gap),
      StatReport::informational("sup|Gamma_m-Z_m|/n", d.occupation_gap)};
  for (auto& r : out) r.sample_size = n;
  return out;
}

}  // namespace prudent::stats
