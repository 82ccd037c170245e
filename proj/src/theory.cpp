#include "gspk/theory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gspk {

SpiExpectationBounds spi_expected_bounds(int n, double c0, int d) {
  (void)n;  // base depends on n only through c0 = n*p1
  if (!(c0 > 2))
    throw std::domain_error("spi_expected_bounds: requires c0 > 2");
  if (d < 1) throw std::invalid_argument("spi_expected_bounds: d must be >= 1");
  SpiExpectationBounds b;
  b.d = d;
  b.base = std::pow(c0, d) - std::pow(c0, d - 1);
  const double cm1 = c0 - 1;
  b.lower = b.base * (1.0 - 1.0 / (cm1 * cm1));
  b.upper = b.base * (1.0 + c0 / (cm1 * cm1));
  return b;
}

double theorem1_factor(double c0) {
  if (c0 < 2 + std::sqrt(3.0))
    throw std::domain_error("theorem1_factor: requires c0 >= 2 + sqrt(3)");
  return 2.0 / (c0 - 1.0);
}

int ScaledHistogram::argmax() const {
  int best = 0;
  for (int x = 1; x < static_cast<int>(values.size()); ++x)
    if (values[x] > values[best]) best = x;
  return best;
}

double binomial_pmf(std::int64_t trials, double p, std::int64_t x) {
  if (x < 0 || x > trials) return 0.0;
  if (!(p > 0 && p < 1))
    throw std::invalid_argument("binomial_pmf: p must be in (0,1)");
  const double n = static_cast<double>(trials);
  const double k = static_cast<double>(x);
  const double log_pmf = std::lgamma(n + 1) - std::lgamma(k + 1) -
                         std::lgamma(n - k + 1) + k * std::log(p) +
                         (n - k) * std::log1p(-p);
  return std::exp(log_pmf);
}

BinomialLaw one_cluster_d2_law(int n, double p1) {
  if (!(n * p1 >= 1))
    throw std::invalid_argument("one_cluster_d2_law: requires n*p1 >= 1");
  BinomialLaw law;
  law.trials = std::llround(n * p1);
  law.success = p1;
  const double c0 = n * p1;
  law.scale = c0 * c0 - c0;  // first-order E[#nodes at distance 2]
  return law;
}

ScaledHistogram one_cluster_d2_prediction(int n, double p1) {
  const BinomialLaw law = one_cluster_d2_law(n, p1);
  ScaledHistogram h;
  h.scale = law.scale;
  h.values.resize(law.trials + 1);
  for (std::int64_t x = 0; x <= law.trials; ++x)
    h.values[x] = law.scale * binomial_pmf(law.trials, law.success, x);
  return h;
}

MixtureModel two_cluster_mixture(int n, double p2, double q2) {
  if (!(q2 > 0 && q2 <= p2 && p2 < 1))
    throw std::invalid_argument("two_cluster_mixture: need 0 < q2 <= p2 < 1");
  const double half = n / 2.0;
  MixtureModel m;
  m.mean_plus = half * (p2 * p2 + q2 * q2);
  m.mean_minus = static_cast<double>(n) * p2 * q2;
  m.var_plus = half * p2 * p2 * (1 - p2) + half * q2 * q2 * (1 - q2);
  m.var_minus = half * p2 * q2 * (1 - q2) + half * q2 * p2 * (1 - p2);
  // Expected component sizes via the exponential union form of the walk
  // sums; negative differences clamp to 0.
  const double s_plus = half * (p2 * p2 + q2 * q2);
  const double s_minus = static_cast<double>(n) * p2 * q2;
  m.expected_v2_plus = half * std::max(0.0, -std::expm1(-s_plus) - p2);
  m.expected_v2_minus = half * std::max(0.0, -std::expm1(-s_minus) - q2);
  const double total = m.expected_v2_plus + m.expected_v2_minus;
  if (total > 0) {
    m.weight_plus = m.expected_v2_plus / total;
    m.weight_minus = m.expected_v2_minus / total;
  } else {
    m.weight_plus = m.weight_minus = 0.5;
  }
  return m;
}

double normal_bucket(double mean, double var, double x) {
  const double sd = std::sqrt(var);
  const auto cdf = [&](double t) {
    return 0.5 * std::erfc(-(t - mean) / (sd * std::sqrt(2.0)));
  };
  return cdf(x + 0.5) - cdf(x - 0.5);
}

ScaledHistogram two_cluster_d2_prediction(int n, double p2, double q2,
                                          int x_max) {
  if (x_max < 0)
    throw std::invalid_argument("two_cluster_d2_prediction: x_max < 0");
  const MixtureModel m = two_cluster_mixture(n, p2, q2);
  const double total = m.expected_v2_plus + m.expected_v2_minus;
  ScaledHistogram h;
  h.scale = total;
  h.values.resize(x_max + 1);
  for (int x = 0; x <= x_max; ++x)
    h.values[x] = total * (m.weight_plus * normal_bucket(m.mean_plus, m.var_plus, x) +
                           m.weight_minus * normal_bucket(m.mean_minus, m.var_minus, x));
  return h;
}

ScaledHistogram one_cluster_d2_normal_approx(int n, double p1, int x_max) {
  if (!(p1 > 0 && p1 < 1))
    throw std::invalid_argument("one_cluster_d2_normal_approx: p1 in (0,1)");
  if (x_max < 0)
    throw std::invalid_argument("one_cluster_d2_normal_approx: x_max < 0");
  const double np1 = n * p1;
  const double mean = np1 * p1;
  const double var = np1 * p1 * (1 - p1);
  const double scale =
      static_cast<double>(n) * std::max(0.0, -std::expm1(-mean) - p1);
  ScaledHistogram h;
  h.scale = scale;
  h.values.resize(x_max + 1);
  for (int x = 0; x <= x_max; ++x)
    h.values[x] = scale * normal_bucket(mean, var, x);
  return h;
}

PeakSeparation peak_separation(int n, double p1, double alpha0) {
  if (!(alpha0 >= 0 && alpha0 < 1))
    throw std::invalid_argument("peak_separation: alpha0 must be in [0,1)");
  PeakSeparation s;
  s.absolute = 2.0 * n * alpha0 * alpha0 * p1 * p1;
  s.relative = 2.0 * alpha0 * alpha0;
  return s;
}

InclusionExclusionEstimate inclusion_exclusion_estimate(
    std::span<const double> probs) {
  double sum = 0, eps = 0;
  for (double p : probs) {
    if (!(p >= 0 && p <= 1))
      throw std::invalid_argument("inclusion_exclusion: probability outside [0,1]");
    sum += p;
    eps = std::max(eps, p);
  }
  InclusionExclusionEstimate e;
  e.approx = -std::expm1(-sum);
  const std::size_t l = probs.size();
  if (l == 0) return e;  // empty union: approx 0, exact 0, no error
  // q_bound = sum_{k=0}^{l+1} (l*eps)^k / k!  -  (1+eps)^l
  const double le = static_cast<double>(l) * eps;
  double series = 1.0, term = 1.0;
  for (std::size_t k = 1; k <= l + 1; ++k) {
    term *= le / static_cast<double>(k);
    series += term;
  }
  e.q_bound = series - std::pow(1.0 + eps, static_cast<double>(l));
  return e;
}

}  // namespace gspk
