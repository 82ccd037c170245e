#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

namespace gspk {

/// Undirected simple unweighted graph with 0-indexed nodes and sorted
/// adjacency lists. Two-cluster graphs record their planted partition by
/// convention: nodes [0, n/2) form the first block, [n/2, n) the second.
struct Graph {
  int node_count = 0;
  std::vector<std::vector<int>> adjacency;
  bool has_partition = false;

  int edge_count() const;
  bool has_edge(int u, int v) const;

  /// Throws std::invalid_argument if any structural invariant is broken
  /// (self loop, duplicate edge, asymmetric adjacency, id out of range).
  void validate() const;
};

enum class GraphLabel : int { kOneCluster = +1, kTwoCluster = -1 };

/// Numeric class label used in edge-list files and seed derivation:
/// 1 for one-cluster graphs, 2 for two-cluster graphs.
int cluster_count(GraphLabel label);

/// Edge densities for one experiment cell. p1 drives the one-cluster
/// model, (p2, q2) the two-cluster model, with q2 balanced so both models
/// have the same expected edge count.
struct ModelParams {
  double p1 = 0;
  double p2 = 0;
  double q2 = 0;
  double alpha0 = 0;
  double c0 = 0;

  /// p1 = c0/n, p2 = p2_factor * p1, q2 balanced. Throws if the derived
  /// q2 is not a valid probability or the inputs are out of range.
  static ModelParams balanced(int n, double c0, double p2_factor);
};

/// Cross-block density that keeps the expected edge count of the planted
/// partition model equal to the one-cluster model's:
///   q2 = 2*p1 - p2 - 2*(p1 - p2)/n.
/// Requires n >= 2 and 0 < p1 <= p2 < 1; throws std::domain_error when
/// the result is not in (0,1).
double derive_q2(int n, double p1, double p2);

/// G(n, p1): every unordered pair gets an edge independently with
/// probability p1. Deterministic given seed; no partition recorded.
Graph erdos_renyi(int n, double p1, std::uint64_t seed);

/// G(n/2, n/2, p2, q2): intra-block pairs wired with probability p2,
/// cross-block pairs with q2. n must be even; requires 0 < q2 <= p2 < 1.
Graph planted_partition(int n, double p2, double q2, std::uint64_t seed);

/// Edge-list file format, byte-stable:
///   line 1: "n m label"   (label = 1 or 2 clusters)
///   then m lines "u v" with u < v, ascending lexicographic order.
void write_edge_list(const Graph& g, GraphLabel label, std::ostream& os);
std::pair<Graph, GraphLabel> read_edge_list(std::istream& is);

}  // namespace gspk
