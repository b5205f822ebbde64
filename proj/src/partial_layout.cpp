#include "bandrec/partial_layout.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

namespace bandrec {
namespace {

int checked_partial_length(int n, int k) {
  if (!in_partial_regime(n, k)) {
    throw InvalidInput("k=" + std::to_string(k) + " outside the partial-layout range for n=" +
                       std::to_string(n));
  }
  return partial_length(n, k);
}

}  // namespace

PartialPermutations::PartialPermutations(int n, int r) : r_(r), state_(n) {
  if (n < 0 || r < 0 || r > n) {
    throw InvalidInput("invalid partial permutation shape n=" + std::to_string(n) +
                       " r=" + std::to_string(r));
  }
  std::iota(state_.begin(), state_.end(), 0);
}

bool PartialPermutations::next() {
  // Reversing the unused tail makes it the lexicographically largest
  // completion of the prefix, so next_permutation advances the prefix itself.
  std::reverse(state_.begin() + r_, state_.end());
  return std::next_permutation(state_.begin(), state_.end());
}

std::uint64_t partial_permutation_count(int n, int r) {
  std::uint64_t count = 1;
  for (int i = n - r + 1; i <= n; ++i) {
    const auto f = static_cast<std::uint64_t>(i);
    if (count > std::numeric_limits<std::uint64_t>::max() / f) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    count *= f;
  }
  return count;
}

LeftPartialLayout::LeftPartialLayout(int n, int k, std::vector<Node> assignment)
    : k_(k), assignment_(std::move(assignment)), member_(std::max(n, 0), false) {
  if (static_cast<int>(assignment_.size()) != checked_partial_length(n, k)) {
    throw InvalidInput("left partial layout must assign exactly n-k-1=" +
                       std::to_string(partial_length(n, k)) + " positions");
  }
  for (Node v : assignment_) {
    if (v < 0 || v >= n || member_[v]) {
      throw InvalidInput("left partial layout is not injective into 0.." + std::to_string(n - 1));
    }
    member_[v] = true;
  }
}

std::vector<Node> LeftPartialLayout::unplaced() const {
  std::vector<Node> rest;
  rest.reserve(member_.size() - assignment_.size());
  for (Node v = 0; v < node_count(); ++v) {
    if (!member_[v]) rest.push_back(v);
  }
  return rest;
}

LeftLayoutEnumerator::LeftLayoutEnumerator(int n, int k)
    : n_(n), k_(k), perms_(n, checked_partial_length(n, k)) {}

LeftPartialLayout LeftLayoutEnumerator::current() const {
  auto a = assignment();
  return LeftPartialLayout(n_, k_, std::vector<Node>(a.begin(), a.end()));
}

}  // namespace bandrec
