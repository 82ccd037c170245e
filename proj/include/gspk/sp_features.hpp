#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "gspk/graph.hpp"

namespace gspk {

inline constexpr int kUnreachable = -1;

/// Single-source BFS result: exact unweighted distances plus the number
/// of distinct shortest paths to every node. Counts are held in 64-bit
/// saturating counters; `overflow` is set (and `overflow_node` names the
/// first offending target) if any count exceeds the counter width.
struct SsspResult {
  std::vector<int> dist;                  // kUnreachable in other components
  std::vector<std::uint64_t> sigma;       // shortest-path counts
  bool overflow = false;
  int overflow_node = -1;
};

SsspResult sssp_count(const Graph& g, int source);

/// Fixed-width grouping of raw path counts: bin(x) = ceil(x / width).
/// width == 1 means no binning.
struct BinningScheme {
  std::uint64_t width = 1;
  std::uint64_t bin(std::uint64_t x) const { return (x + width - 1) / width; }
};

/// Whole-graph histogram: distance d -> number of unordered node pairs at
/// shortest distance d. Disconnected pairs contribute nothing.
struct SpiVector {
  std::map<int, std::int64_t> counts;
};

/// Whole-graph histogram keyed by (distance, binned path count).
/// Folding over the second key reproduces the SpiVector exactly.
struct GspiVector {
  std::uint64_t bin_width = 1;
  std::map<std::pair<int, std::uint64_t>, std::int64_t> counts;
};

SpiVector spi_vector(const Graph& g);

/// Throws std::overflow_error naming the offending pair if any
/// shortest-path count saturates the 64-bit counter.
GspiVector gspi_vector(const Graph& g, BinningScheme binning = {});

/// Folds the path-count key away: marginalize(gspi_vector(g, B)) equals
/// spi_vector(g) for every graph and every bin width.
SpiVector marginalize(const GspiVector& v);

/// Per-source view used for the figure pipelines: distance histogram for
/// one fixed source, plus the path-count histogram at one focus distance.
/// Values are real so the same type carries single-source counts and
/// dataset averages.
struct SourceProfile {
  int d_focus = 0;
  std::map<int, double> spi;                   // d -> node count
  std::map<std::uint64_t, double> gspi_d;      // bin(x) -> node count at d_focus
};

SourceProfile source_profile(const Graph& g, int source, int d_focus,
                             BinningScheme binning = {});

/// Arithmetic mean of source_profile over every (graph, source) pair.
SourceProfile average_profiles(std::span<const Graph> dataset, int d_focus,
                               BinningScheme binning = {});

/// Euclidean normalization; throws std::domain_error on an all-zero vector.
std::map<int, double> normalize(const SpiVector& v);
std::map<std::pair<int, std::uint64_t>, double> normalize(const GspiVector& v);

/// JSON dump, byte-stable: {"type":…,"binning":…,"entries":[[d,c],…]} with
/// entries in ascending key order. One line, no trailing newline.
std::string feature_json(const SpiVector& v);
std::string feature_json(const GspiVector& v);

}  // namespace gspk
