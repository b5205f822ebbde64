#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace bandrec {

using Node = int;
using Edge = std::pair<Node, Node>;

/// Raised for malformed arguments: bad layouts, out-of-range nodes, invalid
/// generator parameters and similar caller errors.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Undirected simple graph on the dense node set {0, ..., n-1}.
 *
 * Adjacency is kept twice: as a row-major bit matrix for O(1) edge queries
 * and as sorted neighbour lists for traversal. Immutable after construction.
 */
class Graph {
 public:
  /// Throws InvalidInput on n < 1, self-loops, duplicate edges or
  /// out-of-range endpoints.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int node_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  bool adjacent(Node u, Node v) const {
    const auto bit = static_cast<std::size_t>(v);
    return (rows_[static_cast<std::size_t>(u) * words_ + bit / 64] >> (bit % 64)) & 1U;
  }

  std::span<const Node> neighbors(Node v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  int degree(Node v) const { return offsets_[v + 1] - offsets_[v]; }

  /// Edges as (u, v) with u < v, in ascending lexicographic order.
  std::span<const Edge> edges() const { return edges_; }

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::size_t words_;
  std::vector<std::uint64_t> rows_;
  std::vector<int> offsets_;
  std::vector<Node> adj_;
  std::vector<Edge> edges_;
};

/// Bijection between nodes and positions {0, ..., n-1}.
class Layout {
 public:
  /// `order[p]` is the node placed at position p. Throws InvalidInput if
  /// `order` is not a permutation of {0, ..., order.size()-1}.
  static Layout from_order(std::vector<Node> order);
  /// `positions[v]` is the position of node v.
  static Layout from_positions(std::vector<int> positions);
  static Layout identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  int position_of(Node v) const { return position_[v]; }
  Node node_at(int position) const { return order_[position]; }
  std::span<const Node> order() const { return order_; }
  std::span<const int> positions() const { return position_; }

  /// π'(v) = n-1-π(v).
  Layout reversed() const;

  bool operator==(const Layout&) const = default;

 private:
  Layout(std::vector<int> position, std::vector<Node> order)
      : position_(std::move(position)), order_(std::move(order)) {}

  std::vector<int> position_;
  std::vector<Node> order_;
};

/// Max |π(u) - π(v)| over all edges; 0 for an edgeless graph.
/// Throws InvalidInput if the layout size differs from the node count.
int layout_bandwidth(const Graph& g, const Layout& layout);

struct ComponentDecomposition {
  /// Each component's nodes in ascending order; components ordered by their
  /// smallest node.
  std::vector<std::vector<Node>> components;
  std::vector<int> component_of;
};

ComponentDecomposition connected_components(const Graph& g);

/// Entry k-1 is the number of nodes at distance 1..k from `source`, for
/// k = 1 .. eccentricity(source). Empty for an isolated source.
std::vector<int> bfs_layers(const Graph& g, Node source);

/// Subgraph induced by `nodes` (ascending), relabelled so nodes[i] -> i.
Graph induced_subgraph(const Graph& g, std::span<const Node> nodes);

/// Graph whose node layout.position_of(v) carries the edges of node v.
Graph relabel(const Graph& g, const Layout& layout);

}  // namespace bandrec
