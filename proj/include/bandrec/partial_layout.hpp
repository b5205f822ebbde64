#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bandrec/graph.hpp"

namespace bandrec {

/// Number of positions on each side fixed by a partial layout: n - k - 1.
constexpr int partial_length(int n, int k) { return n - k - 1; }

/// True when left and right partial layouts for (n, k) are nonempty and
/// disjoint: floor((n-1)/2) <= k <= n-2.
constexpr bool in_partial_regime(int n, int k) { return k >= (n - 1) / 2 && k <= n - 2; }

/**
 * Lexicographic stream of the r-permutations of {0, ..., n-1}.
 *
 * The full permutation is kept in one array: the first r entries are the
 * current r-permutation, the remaining n-r entries are the unused elements in
 * ascending order. Advancing costs O(n) and needs no further storage.
 */
class PartialPermutations {
 public:
  PartialPermutations(int n, int r);

  std::span<const int> prefix() const { return {state_.data(), static_cast<std::size_t>(r_)}; }
  /// Elements not in prefix(), ascending.
  std::span<const int> rest() const {
    return {state_.data() + r_, state_.size() - static_cast<std::size_t>(r_)};
  }
  /// Moves to the next r-permutation; false once the stream is exhausted.
  bool next();

 private:
  int r_;
  std::vector<int> state_;
};

/// n! / (n-r)!, saturating at UINT64_MAX.
std::uint64_t partial_permutation_count(int n, int r);

/// Injective map {0, ..., n-k-2} -> V(G): the nodes occupying the first
/// n-k-1 positions of a layout.
class LeftPartialLayout {
 public:
  /// Throws InvalidInput unless (n, k) is in the partial regime and
  /// `assignment` holds n-k-1 distinct nodes from {0, ..., n-1}.
  LeftPartialLayout(int n, int k, std::vector<Node> assignment);

  int node_count() const { return static_cast<int>(member_.size()); }
  int bandwidth() const { return k_; }
  std::span<const Node> assignment() const { return assignment_; }
  Node operator[](int i) const { return assignment_[i]; }
  bool contains(Node v) const { return member_[v]; }
  /// V(G) minus the image, ascending.
  std::vector<Node> unplaced() const;

  bool operator==(const LeftPartialLayout&) const = default;

 private:
  int k_;
  std::vector<Node> assignment_;
  std::vector<bool> member_;
};

/// Deterministic stream of every left partial layout for (n, k), in
/// lexicographic order of the assignment arrays. Yields n!/(k+1)! layouts.
class LeftLayoutEnumerator {
 public:
  /// Throws InvalidInput unless floor((n-1)/2) <= k <= n-2.
  LeftLayoutEnumerator(int n, int k);

  std::span<const Node> assignment() const { return perms_.prefix(); }
  /// The k+1 nodes outside the current assignment, ascending.
  std::span<const Node> unplaced() const { return perms_.rest(); }
  LeftPartialLayout current() const;
  bool next() { return perms_.next(); }

 private:
  int n_;
  int k_;
  PartialPermutations perms_;
};

}  // namespace bandrec
