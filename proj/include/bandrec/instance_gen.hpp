#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string_view>

#include "bandrec/graph.hpp"

namespace bandrec {

/**
 * Seedable generator with a platform-independent output stream.
 *
 * Wraps std::mt19937_64 (whose raw sequence is fixed by the standard) and
 * derives bounded integers and reals itself, since the std distributions
 * differ between standard library implementations.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform integer in [lo, hi], by rejection sampling.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
  /// Uniform double in [0, 1) from the top 53 bits.
  double unit();
  /// Uniform double in [lo, hi].
  double uniform_real(double lo, double hi) { return lo + (hi - lo) * unit(); }
  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finaliser.
std::uint64_t mix64(std::uint64_t x);

/// Seed for instance `index` of the stream tagged (n, k, kind): the base
/// seed is folded with each tag through mix64 in that order.
std::uint64_t derive_seed(std::uint64_t base, int n, int k, int kind, int index);

struct GenParams {
  int n = 1;
  int psi = 0;
  double p = 1.0;
  std::uint64_t seed = 0;
};

/// Throws InvalidInput unless n >= 1, 0 <= psi <= n-1 and 0 < p <= 1.
void validate(const GenParams& params);

/**
 * Each pair {u, v} with |u - v| <= psi becomes an edge with probability p;
 * afterwards every distance d in 1..psi with no edge gets one edge {u, u+d}
 * with u uniform. The identity layout then has bandwidth exactly psi.
 */
Graph random_banded_matrix(const GenParams& params);
Graph random_banded_matrix(int n, int psi, double p, Rng& rng);

/// Retries never succeeded within the budget; reseed and try again.
class GenerationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CaseKind { affirmative = 0, negative = 1 };

std::string_view to_string(CaseKind kind);

struct CaseMetadata {
  CaseKind kind = CaseKind::affirmative;
  int n = 0;
  int k = 0;
  int psi = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  int attempts = 0;  // banded draws (negative) or scrambles (affirmative) used
};

struct GeneratedCase {
  Graph graph;
  CaseMetadata meta;
};

inline constexpr int kScrambleBudget = 1000;
inline constexpr int kNegativeDrawBudget = 1000;

/**
 * Instance with bandwidth <= k whose identity layout is wider than k.
 * psi is uniform in {max(0, k-2), ..., k}, p uniform in [0.3, 0.6]; the drawn
 * graph is relabelled by random layouts until the identity width exceeds k.
 * Requires 2 <= k <= n-2 and k >= floor((n-1)/2).
 */
GeneratedCase generate_affirmative_case(int n, int k, std::uint64_t seed);

/**
 * Instance with bandwidth > k that survives the alpha/gamma cutoff.
 * Redraws psi in {k+1, k+2, k+3} and p in [0.85, 0.95] until both bounds are
 * <= k and the recognizer exhausts its search. Requires
 * floor((n-1)/2) <= k <= n-4.
 */
GeneratedCase generate_negative_case(int n, int k, std::uint64_t seed);

}  // namespace bandrec
