#include "bandrec/baselines.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

namespace bandrec {

RecognitionResult naive_recognition(const Graph& g, int k) {
  const int n = g.node_count();
  if (k < 0) {
    throw InvalidInput("bandwidth threshold k must be non-negative, got " + std::to_string(k));
  }
  if (k >= n - 1) {
    return RecognitionResult::accepted(Layout::identity(n));
  }
  if (k < (n - 1) / 2) {
    throw OutOfRegime("k=" + std::to_string(k) + " is below floor((n-1)/2) for n=" +
                      std::to_string(n));
  }

  const int r = partial_length(n, k);
  std::vector<Node> right(r);
  LeftLayoutEnumerator left(n, k);
  do {
    const auto assignment = left.assignment();
    const auto rest = left.unplaced();
    PartialPermutations picks(k + 1, r);
    do {
      const auto idx = picks.prefix();
      bool feasible = true;
      for (int i = 0; i < r && feasible; ++i) {
        for (int j = i; j < r; ++j) {
          if (g.adjacent(assignment[i], rest[idx[j]])) {
            feasible = false;
            break;
          }
        }
      }
      if (feasible) {
        for (int j = 0; j < r; ++j) right[j] = rest[idx[j]];
        return RecognitionResult::accepted(assemble_certificate(left.current(), right, g, k));
      }
    } while (picks.next());
  } while (left.next());
  return RecognitionResult::rejected(NegativeReason::search_exhausted);
}

int exact_bandwidth_bruteforce(const Graph& g) {
  const int n = g.node_count();
  if (n > kBruteForceMaxNodes) {
    throw OracleGuard("exhaustive bandwidth refused for n=" + std::to_string(n) + " > " +
                      std::to_string(kBruteForceMaxNodes));
  }
  if (g.edge_count() == 0) return 0;

  const auto edges = g.edges();
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> position(n);
  int best = n - 1;
  do {
    // A layout and its reversal have equal width; visit one of each pair.
    if (order.front() > order.back()) continue;
    for (int p = 0; p < n; ++p) position[order[p]] = p;
    int width = 0;
    for (auto [u, v] : edges) {
      width = std::max(width, std::abs(position[u] - position[v]));
      if (width >= best) break;
    }
    best = std::min(best, width);
    if (best == 1) break;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

}  // namespace bandrec
