#pragma once

#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "bandrec/graph.hpp"
#include "bandrec/partial_layout.hpp"

namespace bandrec {

enum class NegativeReason { bounds_cutoff, search_exhausted, out_of_regime };

std::string_view to_string(NegativeReason reason);

/// k is below floor((n_C - 1) / 2) for some component of size n_C, where
/// left and right partial layouts would overlap.
class OutOfRegime : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct RecognitionResult {
  bool verdict = false;
  std::optional<Layout> certificate;  // present iff verdict
  std::optional<NegativeReason> negative_reason;

  static RecognitionResult accepted(Layout certificate) {
    return {true, std::move(certificate), std::nullopt};
  }
  static RecognitionResult rejected(NegativeReason reason) {
    return {false, std::nullopt, reason};
  }
};

/**
 * For a fixed left partial layout L, blocked_of[v] is the smallest left
 * index i with {L(i), v} an edge, or `sentinel` (= n) when v is adjacent to
 * no left node. v belongs to A_j exactly when blocked_of[v] > j.
 *
 * sorted_nodes holds the k+1 unplaced nodes ordered by blocked_of, ties by
 * ascending node id. Entries of blocked_of for placed nodes are -1.
 */
struct BlockedIndex {
  std::vector<int> blocked_of;
  std::vector<Node> sorted_nodes;
  int sentinel = 0;

  /// #{v unplaced : blocked_of[v] <= j}, by binary search over sorted_nodes.
  int count_blocked_within(int j) const;
  /// |A_j|.
  int available_after(int j) const {
    return static_cast<int>(sorted_nodes.size()) - count_blocked_within(j);
  }
};

BlockedIndex build_blocked_index(const Graph& g, const LeftPartialLayout& left);

/// Overwrites `out`, reusing its storage. `unplaced` must be ascending.
void build_blocked_index(const Graph& g, std::span<const Node> left,
                         std::span<const Node> unplaced, BlockedIndex& out);

/// Checks |A_j| >= n-k-j-1 for j = 0 .. n-k-2, stopping at the first
/// violation. On success fills right[j] = sorted_nodes[2k-n+j+2], the node
/// for position k+j+1, and returns true.
bool check_hall_and_build_right(const BlockedIndex& index, int n, int k, std::span<Node> right);

std::optional<std::vector<Node>> check_hall_and_build_right(const BlockedIndex& index, int n, int k);

/// Left nodes at positions 0..n-k-2, right[j] at position k+j+1, remaining
/// nodes at positions n-k-1..k in ascending id order. Throws std::logic_error
/// if left and right overlap.
Layout assemble_certificate(const LeftPartialLayout& left, std::span<const Node> right,
                            const Graph& g, int k);

/// Runs the left-partial-layout search on the whole of `g` with no bounds or
/// component handling. Requires floor((n-1)/2) <= k <= n-2.
std::optional<Layout> search_left_layouts(const Graph& g, int k);

/**
 * Decides whether the bandwidth of `g` is at most k.
 *
 * k >= n-1 is accepted with the identity layout. Otherwise the alpha/gamma
 * lower bounds may reject early (bounds_cutoff); each connected component is
 * then searched on its own and the per-component certificates are
 * concatenated in order of smallest node id. Throws InvalidInput for k < 0
 * and OutOfRegime when a component that needs searching is too large for k.
 */
RecognitionResult recognize(const Graph& g, int k);

}  // namespace bandrec
