#include "bandrec/instance_gen.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "bandrec/bounds.hpp"
#include "bandrec/recognition.hpp"

namespace bandrec {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw InvalidInput("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo);
  if (span == std::numeric_limits<std::uint64_t>::max()) {
    return lo + static_cast<std::int64_t>(next_u64());
  }
  const std::uint64_t range = span + 1;
  // Largest multiple of range that fits; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % range);
}

double Rng::unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, int n, int k, int kind, int index) {
  std::uint64_t s = mix64(base);
  for (int tag : {n, k, kind, index}) {
    s = mix64(s ^ static_cast<std::uint64_t>(static_cast<std::uint32_t>(tag)));
  }
  return s;
}

void validate(const GenParams& params) {
  if (params.n < 1) throw InvalidInput("n must be at least 1");
  if (params.psi < 0 || params.psi > params.n - 1) {
    throw InvalidInput("psi must lie in 0..n-1, got " + std::to_string(params.psi));
  }
  if (!(params.p > 0.0 && params.p <= 1.0)) {
    throw InvalidInput("p must lie in (0, 1], got " + std::to_string(params.p));
  }
}

Graph random_banded_matrix(int n, int psi, double p, Rng& rng) {
  validate({n, psi, p, 0});
  std::vector<Edge> edges;
  std::vector<bool> realized(psi + 1, false);
  for (Node u = 0; u < n; ++u) {
    for (Node v = u + 1; v <= std::min(n - 1, u + psi); ++v) {
      if (rng.bernoulli(p)) {
        edges.emplace_back(u, v);
        realized[v - u] = true;
      }
    }
  }
  for (int d = 1; d <= psi; ++d) {
    if (realized[d]) continue;
    const auto u = static_cast<Node>(rng.uniform_int(0, n - 1 - d));
    edges.emplace_back(u, u + d);
  }
  return Graph(n, edges);
}

Graph random_banded_matrix(const GenParams& params) {
  Rng rng(params.seed);
  return random_banded_matrix(params.n, params.psi, params.p, rng);
}

std::string_view to_string(CaseKind kind) {
  return kind == CaseKind::affirmative ? "affirmative" : "negative";
}

namespace {

Layout random_layout(int n, Rng& rng) {
  std::vector<Node> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    std::swap(order[i], order[rng.uniform_int(0, i)]);
  }
  return Layout::from_order(std::move(order));
}

}  // namespace

GeneratedCase generate_affirmative_case(int n, int k, std::uint64_t seed) {
  if (k < 2 || k > n - 2 || k < (n - 1) / 2) {
    throw InvalidInput("affirmative cases need 2 <= k <= n-2 and k >= floor((n-1)/2); got n=" +
                       std::to_string(n) + " k=" + std::to_string(k));
  }
  Rng rng(seed);
  CaseMetadata meta{CaseKind::affirmative, n, k, 0, 0.0, seed, 0};
  meta.psi = static_cast<int>(rng.uniform_int(std::max(0, k - 2), k));
  meta.p = rng.uniform_real(0.3, 0.6);
  const Graph banded = random_banded_matrix(n, meta.psi, meta.p, rng);

  for (meta.attempts = 1; meta.attempts <= kScrambleBudget; ++meta.attempts) {
    const Layout scramble = random_layout(n, rng);
    if (layout_bandwidth(banded, scramble) > k) {
      return {relabel(banded, scramble), meta};
    }
  }
  throw GenerationFailure("no scramble wider than k=" + std::to_string(k) + " within " +
                          std::to_string(kScrambleBudget) + " random layouts");
}

GeneratedCase generate_negative_case(int n, int k, std::uint64_t seed) {
  if (k > n - 4 || k < (n - 1) / 2) {
    throw InvalidInput("negative cases need floor((n-1)/2) <= k <= n-4; got n=" +
                       std::to_string(n) + " k=" + std::to_string(k));
  }
  Rng rng(seed);
  CaseMetadata meta{CaseKind::negative, n, k, 0, 0.0, seed, 0};
  for (meta.attempts = 1; meta.attempts <= kNegativeDrawBudget; ++meta.attempts) {
    meta.psi = static_cast<int>(rng.uniform_int(k + 1, k + 3));
    meta.p = rng.uniform_real(0.85, 0.95);
    Graph g = random_banded_matrix(n, meta.psi, meta.p, rng);
    if (compute_bounds(g).combined > k) continue;
    const RecognitionResult result = recognize(g, k);
    if (!result.verdict && result.negative_reason == NegativeReason::search_exhausted) {
      return {std::move(g), meta};
    }
  }
  throw GenerationFailure("no bounds-evasive negative instance within " +
                          std::to_string(kNegativeDrawBudget) + " draws");
}

}  // namespace bandrec
