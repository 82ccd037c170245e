#include "gspk/sp_features.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace gspk {

namespace {

constexpr std::uint64_t kSigmaMax = std::numeric_limits<std::uint64_t>::max();

// Reusable BFS workspace so whole-graph extraction does not reallocate
// per source.
struct BfsScratch {
  std::vector<int> dist;
  std::vector<std::uint64_t> sigma;
  std::vector<int> queue;

  void run(const Graph& g, int source, bool& overflow, int& overflow_node) {
    const int n = g.node_count;
    dist.assign(n, kUnreachable);
    sigma.assign(n, 0);
    queue.clear();
    queue.reserve(n);
    dist[source] = 0;
    sigma[source] = 1;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      const int du = dist[u];
      const std::uint64_t su = sigma[u];
      for (int v : g.adjacency[u]) {
        if (dist[v] == kUnreachable) {
          dist[v] = du + 1;
          queue.push_back(v);
        }
        if (dist[v] == du + 1) {
          // Saturating add: fail loudly downstream instead of wrapping.
          if (sigma[v] > kSigmaMax - su) {
            sigma[v] = kSigmaMax;
            if (!overflow) overflow_node = v;
            overflow = true;
          } else {
            sigma[v] += su;
          }
        }
      }
    }
  }
};

void check_source(const Graph& g, int source) {
  if (source < 0 || source >= g.node_count)
    throw std::invalid_argument("sssp_count: source out of range");
}

}  // namespace

SsspResult sssp_count(const Graph& g, int source) {
  check_source(g, source);
  SsspResult r;
  BfsScratch scratch;
  scratch.run(g, source, r.overflow, r.overflow_node);
  r.dist = std::move(scratch.dist);
  r.sigma = std::move(scratch.sigma);
  return r;
}

SpiVector spi_vector(const Graph& g) {
  SpiVector out;
  BfsScratch scratch;
  bool overflow = false;
  int overflow_node = -1;
  for (int s = 0; s < g.node_count; ++s) {
    scratch.run(g, s, overflow, overflow_node);
    for (int v = 0; v < g.node_count; ++v)
      if (scratch.dist[v] > 0) ++out.counts[scratch.dist[v]];
  }
  // Every unordered pair was seen from both ends.
  for (auto& [d, c] : out.counts) c /= 2;
  return out;
}

GspiVector gspi_vector(const Graph& g, BinningScheme binning) {
  if (binning.width == 0)
    throw std::invalid_argument("gspi_vector: bin width must be positive");
  GspiVector out;
  out.bin_width = binning.width;
  BfsScratch scratch;
  for (int s = 0; s < g.node_count; ++s) {
    bool overflow = false;
    int overflow_node = -1;
    scratch.run(g, s, overflow, overflow_node);
    if (overflow)
      throw std::overflow_error(
          "gspi_vector: shortest-path count overflow for pair (" +
          std::to_string(s) + ", " + std::to_string(overflow_node) + ")");
    for (int v = 0; v < g.node_count; ++v)
      if (scratch.dist[v] > 0)
        ++out.counts[{scratch.dist[v], binning.bin(scratch.sigma[v])}];
  }
  for (auto& [key, c] : out.counts) c /= 2;
  return out;
}

SpiVector marginalize(const GspiVector& v) {
  SpiVector out;
  for (const auto& [key, c] : v.counts) out.counts[key.first] += c;
  return out;
}

SourceProfile source_profile(const Graph& g, int source, int d_focus,
                             BinningScheme binning) {
  check_source(g, source);
  if (d_focus < 1)
    throw std::invalid_argument("source_profile: d_focus must be >= 1");
  SourceProfile p;
  p.d_focus = d_focus;
  BfsScratch scratch;
  bool overflow = false;
  int overflow_node = -1;
  scratch.run(g, source, overflow, overflow_node);
  for (int v = 0; v < g.node_count; ++v) {
    if (scratch.dist[v] <= 0) continue;
    p.spi[scratch.dist[v]] += 1.0;
    if (scratch.dist[v] == d_focus) p.gspi_d[binning.bin(scratch.sigma[v])] += 1.0;
  }
  return p;
}

SourceProfile average_profiles(std::span<const Graph> dataset, int d_focus,
                               BinningScheme binning) {
  if (dataset.empty())
    throw std::invalid_argument("average_profiles: empty dataset");
  SourceProfile acc;
  acc.d_focus = d_focus;
  std::size_t sources = 0;
  for (const Graph& g : dataset) {
    for (int s = 0; s < g.node_count; ++s) {
      const SourceProfile p = source_profile(g, s, d_focus, binning);
      for (const auto& [d, c] : p.spi) acc.spi[d] += c;
      for (const auto& [b, c] : p.gspi_d) acc.gspi_d[b] += c;
      ++sources;
    }
  }
  for (auto& [d, c] : acc.spi) c /= static_cast<double>(sources);
  for (auto& [b, c] : acc.gspi_d) c /= static_cast<double>(sources);
  return acc;
}

namespace {

template <typename Map>
Map normalized_copy(const Map& counts) {
  double sq = 0;
  for (const auto& [key, c] : counts) sq += static_cast<double>(c) * static_cast<double>(c);
  if (sq == 0) throw std::domain_error("normalize: all-zero feature vector");
  const double inv = 1.0 / std::sqrt(sq);
  Map out;
  for (const auto& [key, c] : counts)
    if (c != 0) out.emplace(key, static_cast<double>(c) * inv);
  return out;
}

}  // namespace

std::map<int, double> normalize(const SpiVector& v) {
  std::map<int, double> raw;
  for (const auto& [d, c] : v.counts) raw.emplace(d, static_cast<double>(c));
  return normalized_copy(raw);
}

std::map<std::pair<int, std::uint64_t>, double> normalize(const GspiVector& v) {
  std::map<std::pair<int, std::uint64_t>, double> raw;
  for (const auto& [key, c] : v.counts) raw.emplace(key, static_cast<double>(c));
  return normalized_copy(raw);
}

std::string feature_json(const SpiVector& v) {
  nlohmann::ordered_json j;
  j["type"] = "spi";
  j["binning"] = 1;
  auto& entries = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [d, c] : v.counts) entries.push_back({d, c});
  return j.dump();
}

std::string feature_json(const GspiVector& v) {
  nlohmann::ordered_json j;
  j["type"] = "gspi";
  j["binning"] = v.bin_width;
  auto& entries = j["entries"] = nlohmann::ordered_json::array();
  for (const auto& [key, c] : v.counts)
    entries.push_back({key.first, key.second, c});
  return j.dump();
}

}  // namespace gspk
