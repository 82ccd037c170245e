#include "gspk/kernels.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace gspk {

namespace {

// Sorted-map merge; counts fit doubles exactly at the sizes we handle.
template <typename Map>
double sparse_dot(const Map& a, const Map& b) {
  double sum = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) {
      ++ia;
    } else if (ib->first < ia->first) {
      ++ib;
    } else {
      sum += static_cast<double>(ia->second) * static_cast<double>(ib->second);
      ++ia;
      ++ib;
    }
  }
  return sum;
}

}  // namespace

double k_spi(const SpiVector& a, const SpiVector& b) {
  return sparse_dot(a.counts, b.counts);
}

double k_gspi(const GspiVector& a, const GspiVector& b) {
  if (a.bin_width != b.bin_width)
    throw std::invalid_argument("k_gspi: mismatched binning schemes");
  return sparse_dot(a.counts, b.counts);
}

FeatureIndex FeatureIndex::for_spi(std::span<const SpiVector> dataset) {
  std::set<FeatureKey> keys;
  for (const auto& v : dataset)
    for (const auto& [d, c] : v.counts) keys.insert({d, 0});
  FeatureIndex idx;
  idx.keys_.assign(keys.begin(), keys.end());
  return idx;
}

FeatureIndex FeatureIndex::for_gspi(std::span<const GspiVector> dataset) {
  std::set<FeatureKey> keys;
  for (std::size_t i = 0; i < dataset.size(); ++i) {
    if (dataset[i].bin_width != dataset.front().bin_width)
      throw std::invalid_argument("feature index: mismatched binning schemes");
    for (const auto& [key, c] : dataset[i].counts)
      keys.insert({key.first, key.second});
  }
  FeatureIndex idx;
  idx.keys_.assign(keys.begin(), keys.end());
  return idx;
}

int FeatureIndex::dim_of(const FeatureKey& key) const {
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), key);
  if (it == keys_.end() || *it != key) return -1;
  return static_cast<int>(it - keys_.begin());
}

SparseSample FeatureIndex::to_sample(
    const std::map<int, double>& normalized_spi) const {
  SparseSample s;
  s.reserve(normalized_spi.size());
  for (const auto& [d, value] : normalized_spi) {
    const int dim = dim_of({d, 0});
    if (dim >= 0) s.emplace_back(dim, value);
  }
  return s;
}

SparseSample FeatureIndex::to_sample(
    const std::map<std::pair<int, std::uint64_t>, double>& normalized_gspi) const {
  SparseSample s;
  s.reserve(normalized_gspi.size());
  for (const auto& [key, value] : normalized_gspi) {
    const int dim = dim_of({key.first, key.second});
    if (dim >= 0) s.emplace_back(dim, value);
  }
  return s;
}

std::string FeatureIndex::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& key : keys_) j.push_back({key.distance, key.bin});
  return j.dump();
}

FeatureIndex FeatureIndex::from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  FeatureIndex idx;
  for (const auto& entry : j)
    idx.keys_.push_back({entry.at(0).get<int>(), entry.at(1).get<std::uint64_t>()});
  if (!std::is_sorted(idx.keys_.begin(), idx.keys_.end()))
    throw std::runtime_error("feature index: keys not sorted");
  return idx;
}

namespace {

template <typename Vector, typename NormMap>
GramMatrix gram_impl(std::span<const Vector> vectors, bool normalize_first,
                     double (*kernel)(const Vector&, const Vector&),
                     NormMap (*normalizer)(const Vector&)) {
  const std::size_t n = vectors.size();
  GramMatrix m;
  m.normalized = normalize_first;
  m.values.assign(n, std::vector<double>(n, 0.0));
  if (normalize_first) {
    std::vector<NormMap> unit(n);
    for (std::size_t i = 0; i < n; ++i) unit[i] = normalizer(vectors[i]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        double v = 0;
        auto ia = unit[i].begin();
        auto ib = unit[j].begin();
        while (ia != unit[i].end() && ib != unit[j].end()) {
          if (ia->first < ib->first) ++ia;
          else if (ib->first < ia->first) ++ib;
          else { v += ia->second * ib->second; ++ia; ++ib; }
        }
        m.values[i][j] = m.values[j][i] = v;
      }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        m.values[i][j] = m.values[j][i] = kernel(vectors[i], vectors[j]);
  }
  return m;
}

}  // namespace

GramMatrix gram(std::span<const SpiVector> vectors, bool normalize_first) {
  return gram_impl<SpiVector, std::map<int, double>>(
      vectors, normalize_first, &k_spi,
      static_cast<std::map<int, double> (*)(const SpiVector&)>(&normalize));
}

GramMatrix gram(std::span<const GspiVector> vectors, bool normalize_first) {
  for (const auto& v : vectors)
    if (v.bin_width != vectors.front().bin_width)
      throw std::invalid_argument("gram: mismatched binning schemes");
  return gram_impl<GspiVector, std::map<std::pair<int, std::uint64_t>, double>>(
      vectors, normalize_first, &k_gspi,
      static_cast<std::map<std::pair<int, std::uint64_t>, double> (*)(
          const GspiVector&)>(&normalize));
}

void write_gram_csv(const GramMatrix& m, std::ostream& os) {
  os << "i,j,value\n";
  char buf[64];
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i; j < m.size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.12g", m.values[i][j]);
      os << i << ',' << j << ',' << buf << '\n';
    }
}

}  // namespace gspk
