#include "bandrec/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace bandrec {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) {
    throw InvalidInput("graph must have at least one node, got n=" + std::to_string(n));
  }
  words_ = (static_cast<std::size_t>(n) + 63) / 64;
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  edges_.reserve(edges.size());

  std::vector<int> degree(n, 0);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw InvalidInput("edge {" + std::to_string(u) + "," + std::to_string(v) +
                         "} has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (u == v) {
      throw InvalidInput("self-loop at node " + std::to_string(u));
    }
    if (adjacent(u, v)) {
      throw InvalidInput("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
        std::uint64_t{1} << (v % 64);
    rows_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u) / 64] |=
        std::uint64_t{1} << (u % 64);
    ++degree[u];
    ++degree[v];
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());

  offsets_.assign(n + 1, 0);
  std::partial_sum(degree.begin(), degree.end(), offsets_.begin() + 1);
  adj_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (auto [u, v] : edges_) {
    adj_[fill[u]++] = v;
  }
  for (auto [u, v] : edges_) {
    adj_[fill[v]++] = u;
  }
  for (Node v = 0; v < n; ++v) {
    std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
  }
}

Layout Layout::from_order(std::vector<Node> order) {
  const int n = static_cast<int>(order.size());
  std::vector<int> position(n, -1);
  for (int p = 0; p < n; ++p) {
    const Node v = order[p];
    if (v < 0 || v >= n || position[v] != -1) {
      throw InvalidInput("layout is not a bijection onto 0.." + std::to_string(n - 1));
    }
    position[v] = p;
  }
  return Layout(std::move(position), std::move(order));
}

Layout Layout::from_positions(std::vector<int> positions) {
  const int n = static_cast<int>(positions.size());
  std::vector<Node> order(n, -1);
  for (Node v = 0; v < n; ++v) {
    const int p = positions[v];
    if (p < 0 || p >= n || order[p] != -1) {
      throw InvalidInput("layout is not a bijection onto 0.." + std::to_string(n - 1));
    }
    order[p] = v;
  }
  return Layout(std::move(positions), std::move(order));
}

Layout Layout::identity(int n) {
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Layout(order, order);
}

Layout Layout::reversed() const {
  std::vector<Node> order(order_.rbegin(), order_.rend());
  return from_order(std::move(order));
}

int layout_bandwidth(const Graph& g, const Layout& layout) {
  if (layout.size() != g.node_count()) {
    throw InvalidInput("layout has " + std::to_string(layout.size()) + " positions but graph has " +
                       std::to_string(g.node_count()) + " nodes");
  }
  int width = 0;
  for (auto [u, v] : g.edges()) {
    width = std::max(width, std::abs(layout.position_of(u) - layout.position_of(v)));
  }
  return width;
}

ComponentDecomposition connected_components(const Graph& g) {
  const int n = g.node_count();
  ComponentDecomposition result;
  result.component_of.assign(n, -1);
  std::vector<Node> stack;
  for (Node root = 0; root < n; ++root) {
    if (result.component_of[root] != -1) continue;
    const int id = static_cast<int>(result.components.size());
    auto& members = result.components.emplace_back();
    result.component_of[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const Node v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (Node w : g.neighbors(v)) {
        if (result.component_of[w] == -1) {
          result.component_of[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
  }
  return result;
}

std::vector<int> bfs_layers(const Graph& g, Node source) {
  if (source < 0 || source >= g.node_count()) {
    throw InvalidInput("source node " + std::to_string(source) + " out of range");
  }
  std::vector<int> dist(g.node_count(), -1);
  std::vector<Node> queue;
  queue.reserve(g.node_count());
  queue.push_back(source);
  dist[source] = 0;

  std::vector<int> cumulative;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Node v = queue[head];
    for (Node w : g.neighbors(v)) {
      if (dist[w] != -1) continue;
      dist[w] = dist[v] + 1;
      if (static_cast<std::size_t>(dist[w]) > cumulative.size()) {
        cumulative.push_back(cumulative.empty() ? 0 : cumulative.back());
      }
      ++cumulative.back();
      queue.push_back(w);
    }
  }
  return cumulative;
}

Graph induced_subgraph(const Graph& g, std::span<const Node> nodes) {
  std::vector<int> local(g.node_count(), -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    local[nodes[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (local[u] != -1 && local[v] != -1) {
      edges.emplace_back(local[u], local[v]);
    }
  }
  return Graph(static_cast<int>(nodes.size()), edges);
}

Graph relabel(const Graph& g, const Layout& layout) {
  if (layout.size() != g.node_count()) {
    throw InvalidInput("relabelling layout size does not match node count");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (auto [u, v] : g.edges()) {
    edges.emplace_back(layout.position_of(u), layout.position_of(v));
  }
  return Graph(g.node_count(), edges);
}

}  // namespace bandrec
