#include "bandrec/recognition.hpp"

#include <algorithm>
#include <string>

#include "bandrec/bounds.hpp"

namespace bandrec {
namespace {

Layout assemble(std::span<const Node> left, std::span<const Node> right, int n, int k) {
  std::vector<Node> order(n, -1);
  std::vector<bool> placed(n, false);
  auto place = [&](int position, Node v) {
    if (placed[v]) {
      throw std::logic_error("node " + std::to_string(v) + " assigned to two positions");
    }
    placed[v] = true;
    order[position] = v;
  };
  for (std::size_t i = 0; i < left.size(); ++i) {
    place(static_cast<int>(i), left[i]);
  }
  for (std::size_t j = 0; j < right.size(); ++j) {
    place(k + 1 + static_cast<int>(j), right[j]);
  }
  int position = partial_length(n, k);
  for (Node v = 0; v < n; ++v) {
    if (!placed[v]) order[position++] = v;
  }
  return Layout::from_order(std::move(order));
}

std::string regime_message(int n, int k) {
  return "k=" + std::to_string(k) + " is below floor((n-1)/2)=" + std::to_string((n - 1) / 2) +
         " for a component of " + std::to_string(n) + " nodes";
}

}  // namespace

std::string_view to_string(NegativeReason reason) {
  switch (reason) {
    case NegativeReason::bounds_cutoff:
      return "bounds_cutoff";
    case NegativeReason::search_exhausted:
      return "search_exhausted";
    case NegativeReason::out_of_regime:
      return "out_of_regime";
  }
  return "unknown";
}

int BlockedIndex::count_blocked_within(int j) const {
  auto it = std::upper_bound(sorted_nodes.begin(), sorted_nodes.end(), j,
                             [this](int bound, Node v) { return bound < blocked_of[v]; });
  return static_cast<int>(it - sorted_nodes.begin());
}

void build_blocked_index(const Graph& g, std::span<const Node> left,
                         std::span<const Node> unplaced, BlockedIndex& out) {
  const int n = g.node_count();
  const int r = static_cast<int>(left.size());
  out.sentinel = n;
  out.blocked_of.assign(n, -1);
  out.sorted_nodes.assign(unplaced.begin(), unplaced.end());
  for (Node v : unplaced) {
    int first = n;
    for (int i = 0; i < r; ++i) {
      if (g.adjacent(left[i], v)) {
        first = i;
        break;
      }
    }
    out.blocked_of[v] = first;
  }
  std::stable_sort(out.sorted_nodes.begin(), out.sorted_nodes.end(),
                   [&out](Node a, Node b) { return out.blocked_of[a] < out.blocked_of[b]; });
}

BlockedIndex build_blocked_index(const Graph& g, const LeftPartialLayout& left) {
  if (left.node_count() != g.node_count()) {
    throw InvalidInput("left partial layout was built for a different node count");
  }
  BlockedIndex index;
  const auto rest = left.unplaced();
  build_blocked_index(g, left.assignment(), rest, index);
  return index;
}

bool check_hall_and_build_right(const BlockedIndex& index, int n, int k, std::span<Node> right) {
  const int r = partial_length(n, k);
  for (int j = 0; j < r; ++j) {
    if (index.available_after(j) < r - j) {
      return false;
    }
    right[j] = index.sorted_nodes[2 * k - n + j + 2];
  }
  return true;
}

std::optional<std::vector<Node>> check_hall_and_build_right(const BlockedIndex& index, int n, int k) {
  std::vector<Node> right(std::max(partial_length(n, k), 0));
  if (!check_hall_and_build_right(index, n, k, right)) {
    return std::nullopt;
  }
  return right;
}

Layout assemble_certificate(const LeftPartialLayout& left, std::span<const Node> right,
                            const Graph& g, int k) {
  const int n = g.node_count();
  if (left.node_count() != n || static_cast<int>(right.size()) != partial_length(n, k)) {
    throw InvalidInput("partial layouts do not match the graph and k");
  }
  for (Node v : right) {
    if (v < 0 || v >= n) throw InvalidInput("right partial layout node out of range");
  }
  return assemble(left.assignment(), right, n, k);
}

std::optional<Layout> search_left_layouts(const Graph& g, int k) {
  const int n = g.node_count();
  LeftLayoutEnumerator left(n, k);
  BlockedIndex index;
  index.blocked_of.reserve(n);
  index.sorted_nodes.reserve(k + 1);
  std::vector<Node> right(partial_length(n, k));
  do {
    build_blocked_index(g, left.assignment(), left.unplaced(), index);
    if (check_hall_and_build_right(index, n, k, right)) {
      return assemble(left.assignment(), right, n, k);
    }
  } while (left.next());
  return std::nullopt;
}

RecognitionResult recognize(const Graph& g, int k) {
  const int n = g.node_count();
  if (k < 0) {
    throw InvalidInput("bandwidth threshold k must be non-negative, got " + std::to_string(k));
  }
  if (k >= n - 1) {
    return RecognitionResult::accepted(Layout::identity(n));
  }
  if (k < compute_bounds(g).combined) {
    return RecognitionResult::rejected(NegativeReason::bounds_cutoff);
  }

  const ComponentDecomposition parts = connected_components(g);
  for (const auto& members : parts.components) {
    const int size = static_cast<int>(members.size());
    if (k < size - 1 && k < (size - 1) / 2) {
      throw OutOfRegime(regime_message(size, k));
    }
  }

  if (parts.components.size() == 1) {
    auto layout = search_left_layouts(g, k);
    if (!layout) return RecognitionResult::rejected(NegativeReason::search_exhausted);
    return RecognitionResult::accepted(std::move(*layout));
  }

  std::vector<Node> order;
  order.reserve(n);
  for (const auto& members : parts.components) {
    const int size = static_cast<int>(members.size());
    if (k >= size - 1) {
      order.insert(order.end(), members.begin(), members.end());
      continue;
    }
    const Graph sub = induced_subgraph(g, members);
    if (k < compute_bounds(sub).combined) {
      return RecognitionResult::rejected(NegativeReason::bounds_cutoff);
    }
    auto local = search_left_layouts(sub, k);
    if (!local) return RecognitionResult::rejected(NegativeReason::search_exhausted);
    for (Node v : local->order()) {
      order.push_back(members[v]);
    }
  }
  return RecognitionResult::accepted(Layout::from_order(std::move(order)));
}

}  // namespace bandrec
