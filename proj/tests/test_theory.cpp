#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "gspk/experiment.hpp"
#include "gspk/random.hpp"
#include "gspk/theory.hpp"

using namespace gspk;

TEST_CASE("spi_expected_bounds at n=1000, c0=40") {
  const SpiExpectationBounds b = spi_expected_bounds(1000, 40.0, 2);
  CHECK(b.base == doctest::Approx(1560.0));
  CHECK(b.lower == doctest::Approx(1560.0 * (1.0 - 1.0 / (39.0 * 39.0))));
  CHECK(b.upper == doctest::Approx(1560.0 * (1.0 + 40.0 / (39.0 * 39.0))));
  CHECK(b.lower == doctest::Approx(1558.97).epsilon(1e-4));
  CHECK(b.upper == doctest::Approx(1601.0).epsilon(1e-3));
  CHECK(b.lower <= b.base);
  CHECK(b.base <= b.upper);
}

TEST_CASE("spi_expected_bounds base at d=1 is c0 - 1") {
  for (double c0 : {3.0, 10.0, 40.0})
    CHECK(spi_expected_bounds(500, c0, 1).base == doctest::Approx(c0 - 1));
  CHECK_THROWS_AS(spi_expected_bounds(100, 2.0, 2), std::domain_error);
  CHECK_THROWS_AS(spi_expected_bounds(100, 1.5, 2), std::domain_error);
}

TEST_CASE("theorem1_factor values and validity threshold") {
  CHECK(theorem1_factor(40.0) == doctest::Approx(2.0 / 39.0));
  CHECK(theorem1_factor(2.0 + std::sqrt(3.0)) ==
        doctest::Approx(2.0 / (1.0 + std::sqrt(3.0))));
  CHECK(theorem1_factor(2.0 + std::sqrt(3.0)) == doctest::Approx(0.7321).epsilon(1e-4));
  CHECK_THROWS_AS(theorem1_factor(3.0), std::domain_error);
}

TEST_CASE("one-cluster d=2 prediction at the fig-1 cell parameters") {
  const ScaledHistogram h = one_cluster_d2_prediction(600, 0.06667);
  const int mode = h.argmax();
  CHECK((mode == 2 || mode == 3));  // n*p1^2 = 2.667
  const double sum = std::accumulate(h.values.begin(), h.values.end(), 0.0);
  CHECK(sum == doctest::Approx(h.scale).epsilon(1e-9));

  const BinomialLaw law = one_cluster_d2_law(600, 0.06667);
  CHECK(law.trials == 40);
  CHECK(std::abs(law.trials * law.success - 600 * 0.06667 * 0.06667) <= 1.0);
}

TEST_CASE("binomial law mode sits within 1 of N*p") {
  for (int n : {200, 400, 1000}) {
    for (double c0 : {20.0, 40.0}) {
      const double p1 = c0 / n;
      const ScaledHistogram h = one_cluster_d2_prediction(n, p1);
      CHECK(std::abs(h.argmax() - n * p1 * p1) <= 1.0);
    }
  }
}

TEST_CASE("one-cluster prediction at n*p1 = 1 has all mass at x = 0") {
  const ScaledHistogram h = one_cluster_d2_prediction(100000, 1e-5);
  CHECK(h.scale == doctest::Approx(0.0));  // no distance-2 pairs scored
  for (double v : h.values) CHECK(v == doctest::Approx(0.0));
  CHECK(binomial_pmf(1, 1e-5, 0) == doctest::Approx(1.0).epsilon(1e-4));
  CHECK_THROWS_AS(one_cluster_d2_prediction(100, 0.001), std::invalid_argument);
}

TEST_CASE("binomial pmf normalizes and stays finite at 200 trials") {
  double sum = 0;
  for (int x = 0; x <= 200; ++x) sum += binomial_pmf(200, 0.2, x);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(binomial_pmf(200, 0.2, 100) > 0);
  CHECK(std::isfinite(binomial_pmf(200, 0.2, 100)));
}

TEST_CASE("two-cluster mixture at the fig-3 parameters") {
  const MixtureModel m = two_cluster_mixture(400, 0.18, 0.0204);
  CHECK(m.mean_plus == doctest::Approx(6.563232).epsilon(1e-9));
  CHECK(m.mean_minus == doctest::Approx(1.4688).epsilon(1e-9));
  CHECK(m.weight_plus + m.weight_minus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.weight_plus >= 0.0);
  CHECK(m.weight_minus >= 0.0);
  CHECK(m.mean_plus > m.mean_minus);
  CHECK(m.var_plus > 0);
  CHECK(m.var_minus > 0);

  // Peak gap is the exact algebraic identity (n/2)(p2-q2)^2.
  const double gap = m.mean_plus - m.mean_minus;
  CHECK(gap == doctest::Approx(200.0 * (0.18 - 0.0204) * (0.18 - 0.0204))
                   .epsilon(1e-12));
}

TEST_CASE("mixture collapses to one peak when p2 == q2") {
  const MixtureModel m = two_cluster_mixture(400, 0.1, 0.1);
  CHECK(m.mean_plus == doctest::Approx(m.mean_minus).epsilon(1e-12));
  CHECK_THROWS_AS(two_cluster_mixture(400, 0.1, 0.2), std::invalid_argument);
}

TEST_CASE("collapsed two-cluster prediction equals the one-cluster normal") {
  const ScaledHistogram collapsed = two_cluster_d2_prediction(400, 0.1, 0.1, 30);
  const ScaledHistogram reference = one_cluster_d2_normal_approx(400, 0.1, 30);
  REQUIRE(collapsed.values.size() == reference.values.size());
  CHECK(collapsed.scale == doctest::Approx(reference.scale).epsilon(1e-12));
  for (std::size_t x = 0; x < collapsed.values.size(); ++x)
    CHECK(collapsed.values[x] ==
          doctest::Approx(reference.values[x]).epsilon(1e-10));
}

TEST_CASE("fig-3 mixture histogram is bimodal over x in [0,20]") {
  const ScaledHistogram h = two_cluster_d2_prediction(400, 0.18, 0.0204, 20);
  const std::vector<int> peaks = local_maxima(h.values, 0, 20);
  REQUIRE(peaks.size() == 2);
  CHECK(std::abs(peaks[0] - 1.4688) <= 2.0);
  CHECK(std::abs(peaks[1] - 6.563232) <= 2.0);
}

TEST_CASE("peak separation formulas") {
  const PeakSeparation s = peak_separation(400, 0.15, 0.2);
  CHECK(s.absolute == doctest::Approx(0.72).epsilon(1e-12));
  CHECK(s.relative == doctest::Approx(2.0 * 0.04).epsilon(1e-12));
  CHECK(peak_separation(400, 0.15, 0.0).absolute == doctest::Approx(0.0));
}

TEST_CASE("peak separation is consistent with the exact mixture gap") {
  for (int n : {100, 200, 400, 1000}) {
    for (double alpha0 : {0.2, 0.3, 0.5}) {
      const double p1 = 40.0 / n;
      const double p2 = (1 + alpha0) * p1;
      if (!(p2 < 1)) continue;
      const double q2 = derive_q2(n, p1, p2);
      const double exact_gap = (n / 2.0) * (p2 - q2) * (p2 - q2);
      const double predicted = peak_separation(n, p1, alpha0).absolute;
      CHECK(std::abs(exact_gap - predicted) / predicted <= 2.0 / n + 1e-12);
    }
  }
}

TEST_CASE("inclusion-exclusion estimate on the worked example") {
  const std::vector<double> probs{0.1, 0.1, 0.1};
  const InclusionExclusionEstimate e = inclusion_exclusion_estimate(probs);
  CHECK(e.approx == doctest::Approx(1.0 - std::exp(-0.3)).epsilon(1e-12));
  CHECK(e.approx == doctest::Approx(0.25918).epsilon(1e-4));
  const double exact = 1.0 - 0.9 * 0.9 * 0.9;  // 0.271
  CHECK(std::abs(exact - e.approx) == doctest::Approx(0.01182).epsilon(1e-3));
  CHECK(e.q_bound == doctest::Approx(0.0188375).epsilon(1e-6));
  CHECK(std::abs(exact - e.approx) <= e.q_bound);
}

TEST_CASE("inclusion-exclusion edge cases") {
  CHECK(inclusion_exclusion_estimate({}).approx == 0.0);
  CHECK(inclusion_exclusion_estimate({}).q_bound == 0.0);
  for (double p : {0.01, 0.1, 0.3}) {
    const std::vector<double> single{p};
    const InclusionExclusionEstimate e = inclusion_exclusion_estimate(single);
    CHECK(std::abs(p - e.approx) <= e.q_bound);
  }
  const std::vector<double> bad{1.5};
  CHECK_THROWS_AS(inclusion_exclusion_estimate(bad), std::invalid_argument);
}

TEST_CASE("union-probability envelope holds on fuzzed event lists") {
  SplitMix64 rng(606);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t l = 1 + rng.next_below(20);
    std::vector<double> probs(l);
    double miss = 1.0;
    for (auto& p : probs) {
      p = rng.next_double() * 0.3;
      miss *= 1.0 - p;
    }
    const double exact = 1.0 - miss;
    const InclusionExclusionEstimate e = inclusion_exclusion_estimate(probs);
    CHECK(e.q_bound >= 0.0);
    CHECK(std::abs(exact - e.approx) <= e.q_bound);
  }
}

TEST_CASE("normal bucket integrals sum to (almost) one") {
  double sum = 0;
  for (int x = -30; x <= 60; ++x) sum += normal_bucket(10.0, 9.0, x);
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}
