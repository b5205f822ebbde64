#include "bandrec/bounds.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace bandrec {
namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct NodeRatios {
  int half = 0;  // max_k ceil(|N_k| / 2k)
  int full = 0;  // max_k ceil(|N_k| / k)
};

// BFS from `source` level by level; `dist` and `queue` are caller-owned
// scratch of size n so repeated calls allocate nothing.
NodeRatios ratios_from(const Graph& g, Node source, std::vector<int>& dist,
                       std::vector<Node>& queue) {
  NodeRatios r;
  std::size_t head = 0;
  std::size_t tail = 0;
  queue[tail++] = source;
  dist[source] = 0;

  int reached = 0;
  int level = 0;
  while (head < tail) {
    // Drain one full level so `reached` is |N_level| when the level closes.
    const std::size_t level_end = tail;
    for (; head < level_end; ++head) {
      const Node v = queue[head];
      for (Node w : g.neighbors(v)) {
        if (dist[w] != -1) continue;
        dist[w] = level + 1;
        queue[tail++] = w;
      }
    }
    if (tail == level_end) break;
    ++level;
    reached += static_cast<int>(tail - level_end);
    r.half = std::max(r.half, ceil_div(reached, 2 * level));
    r.full = std::max(r.full, ceil_div(reached, level));
  }

  for (std::size_t i = 0; i < tail; ++i) {
    dist[queue[i]] = -1;
  }
  return r;
}

}  // namespace

BandwidthBounds compute_bounds(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> dist(n, -1);
  std::vector<Node> queue(n);

  BandwidthBounds b;
  b.gamma = std::numeric_limits<int>::max();
  for (Node v = 0; v < n; ++v) {
    const NodeRatios r = ratios_from(g, v, dist, queue);
    b.alpha = std::max(b.alpha, r.half);
    b.gamma = std::min(b.gamma, r.full);
  }
  b.combined = std::max(b.alpha, b.gamma);
  return b;
}

int alpha_bound(const Graph& g) { return compute_bounds(g).alpha; }

int gamma_bound(const Graph& g) { return compute_bounds(g).gamma; }

}  // namespace bandrec
