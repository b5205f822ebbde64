#pragma once

#include <stdexcept>

#include "bandrec/graph.hpp"
#include "bandrec/recognition.hpp"

namespace bandrec {

/// Largest graph the exhaustive oracle accepts.
inline constexpr int kBruteForceMaxNodes = 9;

class OracleGuard : public std::length_error {
 public:
  using std::length_error::length_error;
};

/**
 * Reference recognizer: for every left partial layout, tries every
 * compatible right partial layout and tests the pair directly: no edge may
 * join left index i and right index j for any i <= j. No bounds, no
 * component split. O(n^{2(n-k)}); intended for n <= 10.
 *
 * k >= n-1 is accepted with the identity layout. Throws InvalidInput for
 * k < 0 and OutOfRegime for k < floor((n-1)/2).
 */
RecognitionResult naive_recognition(const Graph& g, int k);

/// Exact bandwidth by exhaustive search over layouts. Throws OracleGuard for
/// n > kBruteForceMaxNodes.
int exact_bandwidth_bruteforce(const Graph& g);

}  // namespace bandrec
