#pragma once

#include "bandrec/graph.hpp"

namespace bandrec {

/// Neighbourhood-growth lower bounds on the bandwidth of a graph.
struct BandwidthBounds {
  int alpha = 0;
  int gamma = 0;
  int combined = 0;  // max(alpha, gamma)
};

/// max over v, max over 1 <= k <= ecc(v) of ceil(|N_k(v)| / 2k).
///
/// N_k(v) counts nodes at distance 1..k (v itself excluded); eccentricity is
/// taken within v's component. Isolated nodes contribute 0. One BFS per node:
/// O(mn) time, O(n) working memory.
int alpha_bound(const Graph& g);

/// min over v of (max over 1 <= k <= ecc(v) of ceil(|N_k(v)| / k)).
/// An isolated node contributes 0, so any isolated node forces gamma = 0.
int gamma_bound(const Graph& g);

/// Both bounds from a single pass of n BFS traversals.
BandwidthBounds compute_bounds(const Graph& g);

}  // namespace bandrec
