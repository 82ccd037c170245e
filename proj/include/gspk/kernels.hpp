#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gspk/sp_features.hpp"

namespace gspk {

/// SPI kernel: inner product of the distance histograms.
double k_spi(const SpiVector& a, const SpiVector& b);

/// GSPI kernel: inner product of the (distance, path-count-bin)
/// histograms. Throws std::invalid_argument on mismatched bin widths.
double k_gspi(const GspiVector& a, const GspiVector& b);

/// A feature coordinate shared by both kernels: SPI keys use bin == 0 as
/// a sentinel (no path-count component), GSPI keys carry bin >= 1.
struct FeatureKey {
  int distance = 0;
  std::uint64_t bin = 0;
  friend auto operator<=>(const FeatureKey&, const FeatureKey&) = default;
};

/// Sparse sample over a FeatureIndex: (dimension, value) pairs with
/// strictly ascending dimensions.
using SparseSample = std::vector<std::pair<int, double>>;

/// Dataset-scoped map from feature keys to dense dimension ids. Keys are
/// sorted before ids are assigned, so the index does not depend on
/// dataset order. Keys absent from the index are dropped when building
/// samples (they would receive zero weight in any aligned model).
class FeatureIndex {
 public:
  static FeatureIndex for_spi(std::span<const SpiVector> dataset);
  static FeatureIndex for_gspi(std::span<const GspiVector> dataset);

  std::size_t size() const { return keys_.size(); }
  const std::vector<FeatureKey>& keys() const { return keys_; }
  int dim_of(const FeatureKey& key) const;  // -1 if unknown

  SparseSample to_sample(const std::map<int, double>& normalized_spi) const;
  SparseSample to_sample(
      const std::map<std::pair<int, std::uint64_t>, double>& normalized_gspi) const;

  /// JSON array [[distance, bin], ...] in dimension order.
  std::string to_json() const;
  static FeatureIndex from_json(const std::string& text);

 private:
  std::vector<FeatureKey> keys_;  // sorted; position == dimension id
};

/// Symmetric matrix of pairwise kernel values.
struct GramMatrix {
  std::vector<std::vector<double>> values;
  bool normalized = false;

  std::size_t size() const { return values.size(); }
};

/// Gram matrix over a homogeneous dataset; with normalize set, vectors
/// are scaled to unit Euclidean norm first (so entries lie in [0,1]).
GramMatrix gram(std::span<const SpiVector> vectors, bool normalize);
GramMatrix gram(std::span<const GspiVector> vectors, bool normalize);

/// CSV dump: header "i,j,value", upper triangle plus diagonal,
/// 12 significant digits.
void write_gram_csv(const GramMatrix& m, std::ostream& os);

}  // namespace gspk
