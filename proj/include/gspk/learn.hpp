#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "gspk/kernels.hpp"

namespace gspk {

/// Primal linear SVM trained by Pegasos-style stochastic subgradient
/// descent. No bias term: the feature vectors this project feeds in are
/// normalized and nonnegative, and a bias adds nothing at these sizes.
struct LinearModel {
  std::vector<double> weights;
  double lambda = 0;
  std::int64_t iterations = 0;

  double decision(const SparseSample& x) const;
  /// sign(<w,x>) with the fixed tie-break sign(0) -> +1.
  int predict(const SparseSample& x) const;
};

/// One uniformly sampled example per step, learning rate 1/(lambda*t),
/// hinge subgradient, optional projection onto the 1/sqrt(lambda) ball.
/// Deterministic given seed (one RNG draw per step, in step order).
/// Throws std::invalid_argument unless both labels are present, every
/// sample dimension is < dimension and iterations/lambda are positive.
LinearModel pegasos_train(std::size_t dimension,
                          std::span<const SparseSample> samples,
                          std::span<const int> labels, double lambda,
                          std::int64_t iterations, std::uint64_t seed,
                          bool project = true);

/// Stratified fold assignment: per-class fold sizes differ by at most 1,
/// and so do overall fold sizes.
struct FoldPlan {
  int k = 0;
  std::vector<int> assignments;  // per-sample fold id in [0,k)

  static FoldPlan stratified(std::span<const int> labels, int k,
                             std::uint64_t seed);
};

struct TrainSettings {
  double lambda = 1e-4;
  std::int64_t iterations = 0;  // 0 -> 100 * training-set size
  bool project = true;
};

struct EvalReport {
  double accuracy = 0;
  std::vector<double> per_fold;
  std::vector<int> fold_test_sizes;
  FoldPlan plan;
  TrainSettings settings;

  std::string to_json() const;
};

/// k-fold cross validation: trains on k-1 folds, tests on the held-out
/// fold, every sample tested exactly once. Per-fold training seeds are
/// derived from `seed`, so the report is deterministic and independent
/// of fold scheduling. Throws if any training split is single-class.
EvalReport kfold_eval(std::span<const SparseSample> samples,
                      std::span<const int> labels, std::size_t dimension,
                      int k, const TrainSettings& settings,
                      std::uint64_t seed);

/// Model persistence:
/// {"lambda":…, "iterations":…, "feature_index":…, "weights":[…]}.
std::string model_to_json(const LinearModel& model, const FeatureIndex& index);
std::pair<LinearModel, FeatureIndex> model_from_json(const std::string& text);

}  // namespace gspk
