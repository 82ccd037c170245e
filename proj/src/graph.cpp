#include "gspk/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "gspk/random.hpp"

namespace gspk {

int Graph::edge_count() const {
  std::size_t deg_sum = 0;
  for (const auto& nbrs : adjacency) deg_sum += nbrs.size();
  return static_cast<int>(deg_sum / 2);
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adjacency[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

void Graph::validate() const {
  if (node_count < 0 || adjacency.size() != static_cast<std::size_t>(node_count))
    throw std::invalid_argument("graph: adjacency size does not match node count");
  for (int u = 0; u < node_count; ++u) {
    const auto& nbrs = adjacency[u];
    if (!std::is_sorted(nbrs.begin(), nbrs.end()))
      throw std::invalid_argument("graph: adjacency list not sorted");
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("graph: duplicate edge");
    for (int v : nbrs) {
      if (v < 0 || v >= node_count)
        throw std::invalid_argument("graph: neighbor id out of range");
      if (v == u) throw std::invalid_argument("graph: self loop");
      if (!has_edge(v, u))
        throw std::invalid_argument("graph: asymmetric adjacency");
    }
  }
}

int cluster_count(GraphLabel label) {
  return label == GraphLabel::kOneCluster ? 1 : 2;
}

double derive_q2(int n, double p1, double p2) {
  if (n < 2) throw std::invalid_argument("derive_q2: n must be >= 2");
  if (!(p1 > 0 && p1 <= p2 && p2 < 1))
    throw std::invalid_argument("derive_q2: need 0 < p1 <= p2 < 1");
  const double q2 = 2 * p1 - p2 - 2 * (p1 - p2) / n;
  if (!(q2 > 0 && q2 < 1))
    throw std::domain_error("derive_q2: parameters give q2 outside (0,1)");
  return q2;
}

ModelParams ModelParams::balanced(int n, double c0, double p2_factor) {
  if (n < 2) throw std::invalid_argument("model params: n must be >= 2");
  if (!(c0 > 0)) throw std::invalid_argument("model params: c0 must be positive");
  if (!(p2_factor >= 1)) throw std::invalid_argument("model params: p2 factor must be >= 1");
  ModelParams mp;
  mp.c0 = c0;
  mp.p1 = c0 / n;
  mp.alpha0 = p2_factor - 1;
  mp.p2 = p2_factor * mp.p1;
  if (!(mp.p1 > 0 && mp.p2 < 1))
    throw std::invalid_argument("model params: densities outside (0,1)");
  mp.q2 = derive_q2(n, mp.p1, mp.p2);
  return mp;
}

namespace {

Graph sample_pairwise(int n, std::uint64_t seed, bool partitioned,
                      double p_intra, double p_cross) {
  Graph g;
  g.node_count = n;
  g.adjacency.resize(n);
  g.has_partition = partitioned;
  const int half = n / 2;
  SplitMix64 rng(seed);
  // One uniform draw per unordered pair, in fixed (u,v) order, so the
  // edge set is a pure function of the seed.
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool same_block = !partitioned || (u < half) == (v < half);
      const double p = same_block ? p_intra : p_cross;
      if (rng.next_double() < p) {
        g.adjacency[u].push_back(v);
        g.adjacency[v].push_back(u);
      }
    }
  }
  return g;
}

}  // namespace

Graph erdos_renyi(int n, double p1, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("erdos_renyi: n must be >= 2");
  if (!(p1 > 0 && p1 < 1))
    throw std::invalid_argument("erdos_renyi: p1 must be in (0,1)");
  return sample_pairwise(n, seed, false, p1, p1);
}

Graph planted_partition(int n, double p2, double q2, std::uint64_t seed) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("planted_partition: n must be even and >= 2");
  if (!(q2 > 0 && q2 <= p2 && p2 < 1))
    throw std::invalid_argument("planted_partition: need 0 < q2 <= p2 < 1");
  return sample_pairwise(n, seed, true, p2, q2);
}

void write_edge_list(const Graph& g, GraphLabel label, std::ostream& os) {
  os << g.node_count << ' ' << g.edge_count() << ' ' << cluster_count(label)
     << '\n';
  for (int u = 0; u < g.node_count; ++u)
    for (int v : g.adjacency[u])
      if (u < v) os << u << ' ' << v << '\n';
}

std::pair<Graph, GraphLabel> read_edge_list(std::istream& is) {
  int n = 0, m = 0, label = 0;
  if (!(is >> n >> m >> label) || n < 0 || m < 0 || (label != 1 && label != 2))
    throw std::runtime_error("edge list: bad header");
  Graph g;
  g.node_count = n;
  g.adjacency.resize(n);
  g.has_partition = (label == 2);
  for (int i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(is >> u >> v)) throw std::runtime_error("edge list: truncated file");
    if (u < 0 || v < 0 || u >= n || v >= n || u >= v)
      throw std::runtime_error("edge list: bad edge " + std::to_string(u) +
                               " " + std::to_string(v));
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  g.validate();
  return {std::move(g), label == 1 ? GraphLabel::kOneCluster
                                   : GraphLabel::kTwoCluster};
}

}  // namespace gspk
