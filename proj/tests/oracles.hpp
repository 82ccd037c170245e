// Test-only oracles: independent reference computations the fast
// implementations are checked against. Everything here is deliberately
// naive (exhaustive enumeration, O(n^3) eigensolves) and must stay free
// of the code paths under test.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "gspk/graph.hpp"
#include "gspk/random.hpp"

namespace oracle {

// --- exhaustive shortest-path enumeration ------------------------------

// Number of simple paths from s to t with exactly `length` edges.
inline std::uint64_t count_paths_of_length(const gspk::Graph& g, int s, int t,
                                           int length) {
  std::vector<char> visited(g.node_count, 0);
  std::uint64_t count = 0;
  std::function<void(int, int)> dfs = [&](int u, int remaining) {
    if (remaining == 0) {
      if (u == t) ++count;
      return;
    }
    visited[u] = 1;
    for (int v : g.adjacency[u])
      if (!visited[v]) dfs(v, remaining - 1);
    visited[u] = 0;
  };
  dfs(s, length);
  return count;
}

struct PairPaths {
  int dist = -1;            // -1 when unreachable
  std::uint64_t count = 0;  // simple paths of minimal length
};

// Iterative deepening: the first length with any path is the distance.
inline PairPaths brute_shortest(const gspk::Graph& g, int s, int t) {
  if (s == t) return {0, 1};
  for (int length = 1; length < g.node_count; ++length) {
    const std::uint64_t c = count_paths_of_length(g, s, t, length);
    if (c > 0) return {length, c};
  }
  return {};
}

// --- kernel indicator double sums --------------------------------------

// Multiset of (distance, shortest-path count) over unordered node pairs,
// from the exhaustive oracle above; unreachable pairs are dropped.
inline std::vector<std::pair<int, std::uint64_t>> pair_multiset(
    const gspk::Graph& g) {
  std::vector<std::pair<int, std::uint64_t>> out;
  for (int u = 0; u < g.node_count; ++u)
    for (int v = u + 1; v < g.node_count; ++v) {
      const PairPaths p = brute_shortest(g, u, v);
      if (p.dist > 0) out.emplace_back(p.dist, p.count);
    }
  return out;
}

// Indicator double sum over the distance multisets.
inline double k_spi_double_sum(const gspk::Graph& a, const gspk::Graph& b) {
  const auto ma = pair_multiset(a);
  const auto mb = pair_multiset(b);
  double sum = 0;
  for (const auto& [d1, x1] : ma)
    for (const auto& [d2, x2] : mb)
      if (d1 == d2) sum += 1;
  return sum;
}

// Indicator sum over pairs of node pairs, requiring equal distance and
// equal (binned) path count.
inline double k_gspi_double_sum(const gspk::Graph& a, const gspk::Graph& b,
                                std::uint64_t bin_width) {
  const auto bin = [bin_width](std::uint64_t x) {
    return (x + bin_width - 1) / bin_width;
  };
  const auto ma = pair_multiset(a);
  const auto mb = pair_multiset(b);
  double sum = 0;
  for (const auto& [d1, x1] : ma)
    for (const auto& [d2, x2] : mb)
      if (d1 == d2 && bin(x1) == bin(x2)) sum += 1;
  return sum;
}

// --- small symmetric eigensolver (cyclic Jacobi) ------------------------

inline std::vector<double> symmetric_eigenvalues(
    std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 200; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-24) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double tau = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t =
            (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1 + tau * tau));
        const double c = 1 / std::sqrt(1 + t * t);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

// --- misc statistics -----------------------------------------------------

// Upper 0.99 quantile of chi-squared with df degrees of freedom
// (Wilson-Hilferty approximation; plenty for a 0.01-level gate).
inline double chi2_critical_99(int df) {
  const double z = 2.3263478740408408;  // Phi^-1(0.99)
  const double k = static_cast<double>(df);
  const double term = 1.0 - 2.0 / (9.0 * k) + z * std::sqrt(2.0 / (9.0 * k));
  return k * term * term * term;
}

// --- tiny graph builders -------------------------------------------------

inline gspk::Graph from_edges(int n,
                              const std::vector<std::pair<int, int>>& edges) {
  gspk::Graph g;
  g.node_count = n;
  g.adjacency.resize(n);
  for (const auto& [u, v] : edges) {
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (auto& nbrs : g.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

inline gspk::Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return from_edges(n, e);
}

inline gspk::Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return from_edges(n, e);
}

inline gspk::Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return from_edges(n, e);
}

// Star with the center at node 0.
inline gspk::Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return from_edges(leaves + 1, e);
}

inline gspk::Graph relabel(const gspk::Graph& g, const std::vector<int>& perm) {
  gspk::Graph out;
  out.node_count = g.node_count;
  out.adjacency.resize(g.node_count);
  for (int u = 0; u < g.node_count; ++u)
    for (int v : g.adjacency[u])
      if (u < v) {
        out.adjacency[perm[u]].push_back(perm[v]);
        out.adjacency[perm[v]].push_back(perm[u]);
      }
  for (auto& nbrs : out.adjacency) std::sort(nbrs.begin(), nbrs.end());
  return out;
}

inline std::vector<int> random_permutation(int n, std::uint64_t seed) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  gspk::SplitMix64 rng(seed);
  for (int i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[rng.next_below(i)]);
  return perm;
}

}  // namespace oracle
