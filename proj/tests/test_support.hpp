#pragma once

// Graph families and independent oracles shared by the test binaries. The
// oracles here deliberately avoid the library's own traversal and search code.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "bandrec/graph.hpp"
#include "bandrec/instance_gen.hpp"

namespace bandrec::testing {

inline Graph edgeless(int n) { return Graph(n, std::span<const Edge>{}); }

inline Graph path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, e);
}

inline Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph(n, e);
}

inline Graph complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

/// K_{n,n}: sides {0..n-1} and {n..2n-1}.
inline Graph complete_bipartite(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) e.emplace_back(u, n + v);
  return Graph(2 * n, e);
}

/// L_{n,n}: clique on {0..n-1}, path n, n+1, ..., 2n-1 hanging off node n-1.
inline Graph lollipop(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  e.emplace_back(n - 1, n);
  for (int i = n; i + 1 < 2 * n; ++i) e.emplace_back(i, i + 1);
  return Graph(2 * n, e);
}

inline Graph star(int leaves) {
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Graph(leaves + 1, e);
}

/// Graph on n nodes whose edges are the set bits of `mask` over the pairs
/// (u, v), u < v, in lexicographic order.
inline Graph from_mask(int n, std::uint32_t mask) {
  std::vector<Edge> e;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1U) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.bernoulli(p)) e.emplace_back(u, v);
  return Graph(n, e);
}

/// All-pairs hop distances by Floyd-Warshall; unreachable = INT_MAX / 4.
inline std::vector<std::vector<int>> distances(const Graph& g) {
  const int n = g.node_count();
  const int inf = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
  for (int w = 0; w < n; ++w)
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) d[u][v] = std::min(d[u][v], d[u][w] + d[w][v]);
  return d;
}

struct OracleBounds {
  int alpha = 0;
  int gamma = 0;
};

/// alpha/gamma straight from the definition over the distance matrix.
inline OracleBounds bounds_by_definition(const Graph& g) {
  const int n = g.node_count();
  const auto d = distances(g);
  const int inf = std::numeric_limits<int>::max() / 4;
  OracleBounds b{0, inf};
  for (int v = 0; v < n; ++v) {
    int ecc = 0;
    for (int w = 0; w < n; ++w)
      if (d[v][w] < inf) ecc = std::max(ecc, d[v][w]);
    int half = 0, full = 0;
    for (int k = 1; k <= ecc; ++k) {
      int count = 0;
      for (int w = 0; w < n; ++w)
        if (d[v][w] >= 1 && d[v][w] <= k) ++count;
      half = std::max(half, (count + 2 * k - 1) / (2 * k));
      full = std::max(full, (count + k - 1) / k);
    }
    b.alpha = std::max(b.alpha, half);
    b.gamma = std::min(b.gamma, full);
  }
  return b;
}

/// Does some right partial layout R, disjoint from `left`, avoid every edge
/// {left[i], R[j]} with i <= j? Exhaustive over ordered selections.
inline bool feasible_right_exists(const Graph& g, int k, const std::vector<Node>& left) {
  const int n = g.node_count();
  const int r = n - k - 1;
  std::vector<Node> rest;
  for (Node v = 0; v < n; ++v)
    if (std::find(left.begin(), left.end(), v) == left.end()) rest.push_back(v);
  std::vector<Node> pick;
  std::vector<bool> used(rest.size(), false);
  auto dfs = [&](auto&& self) -> bool {
    const int j = static_cast<int>(pick.size());
    if (j == r) return true;
    for (std::size_t c = 0; c < rest.size(); ++c) {
      if (used[c]) continue;
      bool ok = true;
      for (int i = 0; i <= j; ++i)
        if (g.adjacent(left[i], rest[c])) ok = false;
      if (!ok) continue;
      used[c] = true;
      pick.push_back(rest[c]);
      if (self(self)) return true;
      pick.pop_back();
      used[c] = false;
    }
    return false;
  };
  return dfs(dfs);
}

}  // namespace bandrec::testing
