#include "gspk/learn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <json.hpp>

#include "gspk/random.hpp"

namespace gspk {

double LinearModel::decision(const SparseSample& x) const {
  double v = 0;
  for (const auto& [dim, value] : x) v += weights[dim] * value;
  return v;
}

int LinearModel::predict(const SparseSample& x) const {
  return decision(x) >= 0 ? +1 : -1;
}

LinearModel pegasos_train(std::size_t dimension,
                          std::span<const SparseSample> samples,
                          std::span<const int> labels, double lambda,
                          std::int64_t iterations, std::uint64_t seed,
                          bool project) {
  if (samples.empty() || samples.size() != labels.size())
    throw std::invalid_argument("pegasos: samples/labels size mismatch");
  if (!(lambda > 0)) throw std::invalid_argument("pegasos: lambda must be positive");
  if (iterations < 1) throw std::invalid_argument("pegasos: iterations must be positive");
  bool pos = false, neg = false;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == +1) pos = true;
    else if (labels[i] == -1) neg = true;
    else throw std::invalid_argument("pegasos: labels must be +1 or -1");
    for (const auto& [dim, value] : samples[i])
      if (dim < 0 || static_cast<std::size_t>(dim) >= dimension)
        throw std::invalid_argument("pegasos: sample dimension out of range");
  }
  if (!pos || !neg)
    throw std::invalid_argument("pegasos: both classes must be present");

  LinearModel model;
  model.lambda = lambda;
  model.iterations = iterations;
  model.weights.assign(dimension, 0.0);
  auto& w = model.weights;

  SplitMix64 rng(seed);
  const double radius = 1.0 / std::sqrt(lambda);
  for (std::int64_t t = 1; t <= iterations; ++t) {
    const std::size_t i = rng.next_below(samples.size());
    const double eta = 1.0 / (lambda * static_cast<double>(t));
    const double margin = labels[i] * model.decision(samples[i]);
    const double keep = 1.0 - eta * lambda;  // = 1 - 1/t
    for (double& wj : w) wj *= keep;
    if (margin < 1.0) {
      const double step = eta * labels[i];
      for (const auto& [dim, value] : samples[i]) w[dim] += step * value;
    }
    if (project) {
      double sq = 0;
      for (double wj : w) sq += wj * wj;
      const double norm = std::sqrt(sq);
      if (norm > radius)
        for (double& wj : w) wj *= radius / norm;
    }
  }
  return model;
}

FoldPlan FoldPlan::stratified(std::span<const int> labels, int k,
                              std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("folds: k must be >= 2");
  if (labels.size() < static_cast<std::size_t>(k))
    throw std::invalid_argument("folds: fewer samples than folds");

  std::vector<std::size_t> pos_idx, neg_idx;
  for (std::size_t i = 0; i < labels.size(); ++i)
    (labels[i] == +1 ? pos_idx : neg_idx).push_back(i);

  SplitMix64 rng(seed);
  auto shuffle = [&](std::vector<std::size_t>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[rng.next_below(i)]);
  };
  shuffle(pos_idx);
  shuffle(neg_idx);

  FoldPlan plan;
  plan.k = k;
  plan.assignments.assign(labels.size(), 0);
  // Deal one class after the other at a rolling fold cursor: contiguous
  // round-robin keeps both the per-class and the overall fold sizes
  // within 1 of each other.
  int cursor = 0;
  for (const auto* cls : {&pos_idx, &neg_idx})
    for (std::size_t i : *cls) {
      plan.assignments[i] = cursor;
      cursor = (cursor + 1) % k;
    }
  return plan;
}

EvalReport kfold_eval(std::span<const SparseSample> samples,
                      std::span<const int> labels, std::size_t dimension,
                      int k, const TrainSettings& settings,
                      std::uint64_t seed) {
  const FoldPlan plan = FoldPlan::stratified(labels, k, seed);
  EvalReport report;
  report.plan = plan;
  report.settings = settings;
  report.per_fold.assign(k, 0.0);
  report.fold_test_sizes.assign(k, 0);

  std::size_t total_correct = 0;
  for (int fold = 0; fold < k; ++fold) {
    std::vector<SparseSample> train_x;
    std::vector<int> train_y;
    std::vector<std::size_t> test_idx;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      if (plan.assignments[i] == fold) {
        test_idx.push_back(i);
      } else {
        train_x.push_back(samples[i]);
        train_y.push_back(labels[i]);
      }
    }
    const std::int64_t iterations =
        settings.iterations > 0 ? settings.iterations
                                : 100 * static_cast<std::int64_t>(train_x.size());
    const LinearModel model =
        pegasos_train(dimension, train_x, train_y, settings.lambda, iterations,
                      derive_seed(seed, 0x666f6c64ULL, fold), settings.project);
    std::size_t correct = 0;
    for (std::size_t i : test_idx)
      if (model.predict(samples[i]) == labels[i]) ++correct;
    report.per_fold[fold] =
        test_idx.empty() ? 0.0
                         : static_cast<double>(correct) / test_idx.size();
    report.fold_test_sizes[fold] = static_cast<int>(test_idx.size());
    total_correct += correct;
  }
  report.accuracy = static_cast<double>(total_correct) / samples.size();
  return report;
}

std::string EvalReport::to_json() const {
  nlohmann::ordered_json j;
  j["accuracy"] = accuracy;
  j["per_fold"] = per_fold;
  j["fold_test_sizes"] = fold_test_sizes;
  j["folds"] = plan.k;
  j["lambda"] = settings.lambda;
  j["iterations"] = settings.iterations;
  return j.dump();
}

std::string model_to_json(const LinearModel& model, const FeatureIndex& index) {
  nlohmann::ordered_json j;
  j["lambda"] = model.lambda;
  j["iterations"] = model.iterations;
  j["feature_index"] = nlohmann::ordered_json::parse(index.to_json());
  j["weights"] = model.weights;
  return j.dump();
}

std::pair<LinearModel, FeatureIndex> model_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  LinearModel model;
  model.lambda = j.at("lambda").get<double>();
  model.iterations = j.at("iterations").get<std::int64_t>();
  model.weights = j.at("weights").get<std::vector<double>>();
  FeatureIndex index = FeatureIndex::from_json(j.at("feature_index").dump());
  if (model.weights.size() != index.size())
    throw std::runtime_error("model: weight/index size mismatch");
  return {std::move(model), std::move(index)};
}

}  // namespace gspk
