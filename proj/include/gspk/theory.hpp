#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace gspk {

/// First-order estimate of the expected number of nodes at distance d
/// from a fixed source in G(n, c0/n), with the relative error band used
/// by the expectation-comparison theorem:
///   base  = n^d p1^d - n^(d-1) p1^(d-1)  (= c0^d - c0^(d-1))
///   lower = base * (1 - 1/(c0-1)^2)
///   upper = base * (1 + c0/(c0-1)^2)
/// The estimate is asymptotic: it tracks the true expectation only while
/// c0^d << n (d well below log n / log c0). Callers comparing against
/// simulation outside that regime should expect the walk-count estimate
/// to overshoot the node count.
struct SpiExpectationBounds {
  int d = 0;
  double base = 0;
  double lower = 0;
  double upper = 0;
};

/// Requires c0 > 2 (the band is degenerate at c0 <= 2) and d >= 1.
SpiExpectationBounds spi_expected_bounds(int n, double c0, int d);

/// Half-width 2/(c0-1) of the relative band within which the one-cluster
/// and two-cluster expectations agree; valid for c0 >= 2 + sqrt(3).
double theorem1_factor(double c0);

/// Scaled histogram over integer path counts x = 0, 1, 2, ...
struct ScaledHistogram {
  std::vector<double> values;  // index = x
  double scale = 0;            // sum of values (expected node count)

  int argmax() const;
};

/// Predicted distribution of the number of nodes at distance 2 from a
/// fixed source with x shortest paths, one-cluster model: the binomial
/// law Bin(round(n*p1), p1) scaled by the expected distance-2 node count.
struct BinomialLaw {
  std::int64_t trials = 0;
  double success = 0;
  double scale = 0;
};

BinomialLaw one_cluster_d2_law(int n, double p1);
ScaledHistogram one_cluster_d2_prediction(int n, double p1);

/// Two-component normal mixture predicting the two-cluster distance-2
/// path-count distribution. Component variances are the exact binomial
/// variances of the underlying edge-count sums; component weights are the
/// expected sizes of the same-block and cross-block distance-2 node sets,
/// estimated with the exponential (union-probability) form of the walk
/// sums: E|V2+-| = (n/2) * max(0, (1 - exp(-S2)) - F1).
struct MixtureModel {
  double mean_plus = 0;
  double mean_minus = 0;
  double var_plus = 0;
  double var_minus = 0;
  double weight_plus = 0;
  double weight_minus = 0;
  double expected_v2_plus = 0;
  double expected_v2_minus = 0;
};

/// Requires 0 < q2 <= p2 < 1 (equality collapses the mixture to one peak).
MixtureModel two_cluster_mixture(int n, double p2, double q2);

/// Histogram over x in [0, x_max]: each component integrated over
/// [x-0.5, x+0.5], weighted, and scaled by E|V2+| + E|V2-|.
ScaledHistogram two_cluster_d2_prediction(int n, double p2, double q2,
                                          int x_max);

/// One-cluster counterpart built with the same machinery (exponential
/// scale, normal bucket integration); the two-cluster prediction collapses
/// to exactly this curve at p2 = q2 = p1.
ScaledHistogram one_cluster_d2_normal_approx(int n, double p1, int x_max);

/// Predicted gap between the mixture peaks.
struct PeakSeparation {
  double absolute = 0;  // 2 n alpha0^2 p1^2
  double relative = 0;  // 2 alpha0^2 (lower bound on gap / lower peak)
};

PeakSeparation peak_separation(int n, double p1, double alpha0);

/// First-order exponential estimate of the union probability of
/// independent events, with a symmetric error envelope:
///   approx  = 1 - exp(-sum p_i)
///   q_bound = sum_{k=0}^{l+1} (l*eps)^k / k!  -  (1+eps)^l,  eps = max p_i.
/// The exact union probability lies in [approx - q_bound, approx + q_bound].
struct InclusionExclusionEstimate {
  double approx = 0;
  double q_bound = 0;
};

InclusionExclusionEstimate inclusion_exclusion_estimate(
    std::span<const double> probs);

/// Binomial pmf evaluated in log space (safe for large trial counts).
double binomial_pmf(std::int64_t trials, double p, std::int64_t x);

/// Integral of N(mean, var) over [x-0.5, x+0.5].
double normal_bucket(double mean, double var, double x);

}  // namespace gspk
