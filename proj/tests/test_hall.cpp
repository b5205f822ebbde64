#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "bandrec/baselines.hpp"
#include "bandrec/recognition.hpp"
#include "test_support.hpp"

using namespace bandrec;
using namespace bandrec::testing;

namespace {

std::vector<std::vector<Node>> collect(int n, int k) {
  std::vector<std::vector<Node>> all;
  LeftLayoutEnumerator e(n, k);
  do {
    all.emplace_back(e.assignment().begin(), e.assignment().end());
  } while (e.next());
  return all;
}

void check_sound(const Graph& g, int k, const RecognitionResult& r) {
  if (!r.verdict) return;
  REQUIRE(r.certificate.has_value());
  REQUIRE(layout_bandwidth(g, *r.certificate) <= k);
}

}  // namespace

TEST_CASE("left layout enumeration examples") {
  CHECK(collect(5, 3) == std::vector<std::vector<Node>>{{0}, {1}, {2}, {3}, {4}});
  CHECK(collect(5, 2).size() == 20);
  CHECK(collect(12, 10).size() == 12);
  CHECK(partial_permutation_count(5, 2) == 20);
  CHECK_THROWS_AS(LeftLayoutEnumerator(5, 1), InvalidInput);
  CHECK_THROWS_AS(LeftLayoutEnumerator(5, 4), InvalidInput);
}

TEST_CASE("enumeration is lexicographic, exhaustive and duplicate-free") {
  for (int n = 2; n <= 8; ++n) {
    for (int k = (n - 1) / 2; k <= n - 2; ++k) {
      const auto all = collect(n, k);
      CHECK(all.size() == partial_permutation_count(n, n - k - 1));
      CHECK(std::is_sorted(all.begin(), all.end()));
      CHECK(std::set<std::vector<Node>>(all.begin(), all.end()).size() == all.size());
    }
  }
}

TEST_CASE("enumerator exposes the unplaced nodes in ascending order") {
  LeftLayoutEnumerator e(7, 4);
  do {
    const auto left = e.assignment();
    const auto rest = e.unplaced();
    CHECK(rest.size() == 5);
    CHECK(std::is_sorted(rest.begin(), rest.end()));
    for (Node v : rest) CHECK(std::find(left.begin(), left.end(), v) == left.end());
  } while (e.next());
}

TEST_CASE("left partial layout validation") {
  CHECK_THROWS_AS(LeftPartialLayout(5, 2, {0}), InvalidInput);
  CHECK_THROWS_AS(LeftPartialLayout(5, 2, {0, 0}), InvalidInput);
  CHECK_THROWS_AS(LeftPartialLayout(5, 2, {0, 5}), InvalidInput);
  CHECK_THROWS_AS(LeftPartialLayout(5, 1, {0, 1, 2}), InvalidInput);
  const LeftPartialLayout l(5, 2, {3, 1});
  CHECK(l.contains(3));
  CHECK_FALSE(l.contains(0));
  CHECK(l.unplaced() == std::vector<Node>{0, 2, 4});
}

TEST_CASE("blocked index examples") {
  SUBCASE("edgeless") {
    const auto idx = build_blocked_index(edgeless(6), LeftPartialLayout(6, 3, {4, 1}));
    CHECK(idx.sentinel == 6);
    for (Node v : {0, 2, 3, 5}) CHECK(idx.blocked_of[v] == 6);
    CHECK(idx.sorted_nodes == std::vector<Node>{0, 2, 3, 5});
  }
  SUBCASE("complete graph") {
    const auto idx = build_blocked_index(complete(5), LeftPartialLayout(5, 3, {2}));
    for (Node v : {0, 1, 3, 4}) CHECK(idx.blocked_of[v] == 0);
  }
  SUBCASE("star") {
    const auto idx = build_blocked_index(star(4), LeftPartialLayout(5, 2, {0, 1}));
    for (Node v : {2, 3, 4}) CHECK(idx.blocked_of[v] == 0);
  }
  SUBCASE("cycle C5 with left [0,2]") {
    const auto idx = build_blocked_index(cycle(5), LeftPartialLayout(5, 2, {0, 2}));
    CHECK(idx.blocked_of[1] == 0);
    CHECK(idx.blocked_of[4] == 0);
    CHECK(idx.blocked_of[3] == 1);
    CHECK(idx.sorted_nodes == std::vector<Node>{1, 4, 3});
    CHECK(idx.available_after(0) == 1);
  }
}

TEST_CASE("hall check examples") {
  SUBCASE("edgeless n=6 k=3 takes the last two sorted nodes") {
    const auto idx = build_blocked_index(edgeless(6), LeftPartialLayout(6, 3, {0, 1}));
    CHECK(idx.available_after(0) == 4);
    CHECK(idx.available_after(1) == 4);
    const auto right = check_hall_and_build_right(idx, 6, 3);
    REQUIRE(right.has_value());
    CHECK(*right == std::vector<Node>{4, 5});
  }
  SUBCASE("K4 k=2 is blocked at j=0") {
    const auto idx = build_blocked_index(complete(4), LeftPartialLayout(4, 2, {0}));
    CHECK(idx.available_after(0) == 0);
    CHECK_FALSE(check_hall_and_build_right(idx, 4, 2).has_value());
  }
  SUBCASE("C5 k=2") {
    const Graph c5 = cycle(5);
    CHECK_FALSE(check_hall_and_build_right(build_blocked_index(c5, LeftPartialLayout(5, 2, {0, 2})), 5, 2));
    const auto idx = build_blocked_index(c5, LeftPartialLayout(5, 2, {1, 4}));
    CHECK(idx.blocked_of[0] == 0);
    CHECK(idx.blocked_of[2] == 0);
    CHECK(idx.blocked_of[3] == 1);
    CHECK_FALSE(check_hall_and_build_right(idx, 5, 2));
    // Exhaustive right-layout search marks exactly these ten lefts feasible.
    const std::set<std::vector<Node>> feasible{{0, 1}, {0, 4}, {1, 0}, {1, 2}, {2, 1},
                                               {2, 3}, {3, 2}, {3, 4}, {4, 0}, {4, 3}};
    for (const auto& left : collect(5, 2)) {
      const auto i = build_blocked_index(c5, LeftPartialLayout(5, 2, left));
      CHECK(check_hall_and_build_right(i, 5, 2).has_value() == feasible.contains(left));
    }
  }
}

TEST_CASE("hall check agrees with exhaustive right-layout search") {
  Rng rng(4242);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(3, 10));
    const int k = static_cast<int>(rng.uniform_int((n - 1) / 2, n - 2));
    const Graph g = random_graph(n, rng.uniform_real(0.1, 0.8), rng);
    std::vector<Node> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
    const std::vector<Node> left(perm.begin(), perm.begin() + (n - k - 1));

    const auto idx = build_blocked_index(g, LeftPartialLayout(n, k, left));
    const auto right = check_hall_and_build_right(idx, n, k);
    REQUIRE(right.has_value() == feasible_right_exists(g, k, left));

    // Count law, membership law and nestedness.
    int previous = k + 2;
    for (int j = 0; j < n - k - 1; ++j) {
      int linear = 0;
      for (Node v : idx.sorted_nodes) linear += idx.blocked_of[v] <= j;
      CHECK(idx.count_blocked_within(j) == linear);
      const int available = idx.available_after(j);
      CHECK(available <= previous);
      previous = available;
      for (Node v : idx.sorted_nodes) {
        bool in_a = true;
        for (int i = 0; i <= j; ++i) in_a = in_a && !g.adjacent(left[i], v);
        CHECK((idx.blocked_of[v] > j) == in_a);
      }
    }
    if (right) {
      const Layout cert = assemble_certificate(LeftPartialLayout(n, k, left), *right, g, k);
      CHECK(layout_bandwidth(g, cert) <= k);
    }
  }
}

TEST_CASE("assemble_certificate") {
  const Graph g6 = edgeless(6);
  const std::vector<Node> right{4, 5};
  const Layout l = assemble_certificate(LeftPartialLayout(6, 3, {0, 1}), right, g6, 3);
  CHECK(l == Layout::identity(6));

  const std::vector<Node> right5{0, 2};
  const Layout m = assemble_certificate(LeftPartialLayout(5, 2, {4, 1}), right5, edgeless(5), 2);
  CHECK(m.node_at(0) == 4);
  CHECK(m.node_at(1) == 1);
  CHECK(m.node_at(2) == 3);
  CHECK(m.node_at(3) == 0);
  CHECK(m.node_at(4) == 2);

  const std::vector<Node> clash{1, 2};
  CHECK_THROWS_AS(assemble_certificate(LeftPartialLayout(5, 2, {4, 1}), clash, edgeless(5), 2),
                  std::logic_error);
}

TEST_CASE("recognize examples") {
  const auto k4 = recognize(complete(4), 2);
  CHECK_FALSE(k4.verdict);
  CHECK(k4.negative_reason == NegativeReason::bounds_cutoff);

  const auto empty = recognize(edgeless(6), 3);
  REQUIRE(empty.verdict);
  CHECK(*empty.certificate == Layout::identity(6));

  const auto c5 = recognize(cycle(5), 2);
  REQUIRE(c5.verdict);
  CHECK(layout_bandwidth(cycle(5), *c5.certificate) <= 2);
  // First feasible left in lexicographic order is [0,1]; blocked order 4,2,3.
  CHECK(*c5.certificate == Layout::from_order({0, 1, 4, 2, 3}));

  const auto trivial = recognize(complete(5), 4);
  REQUIRE(trivial.verdict);
  CHECK(*trivial.certificate == Layout::identity(5));
  CHECK(recognize(complete(5), 9).verdict);

  CHECK_THROWS_AS(recognize(path(3), -1), InvalidInput);
}

TEST_CASE("recognize rejects out-of-regime components") {
  // P_9 has bandwidth 1 and bounds <= 1, so k=1 reaches the regime check.
  CHECK_THROWS_AS(recognize(path(9), 1), OutOfRegime);
  // Components of size 3 and 4 with k=1: floor(3/2)=1 so the regime holds.
  const Graph split(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}});
  const auto r = recognize(split, 1);
  REQUIRE(r.verdict);
  CHECK(layout_bandwidth(split, *r.certificate) <= 1);
}

TEST_CASE("recognize concatenates component certificates by smallest node") {
  // Two interleaved cycles C5 on even/odd-ish labels plus an isolated node.
  const Graph g(11, {{0, 2}, {2, 4}, {4, 6}, {6, 8}, {8, 0}, {1, 3}, {3, 5}, {5, 7}, {7, 9}, {9, 1}});
  const auto r = recognize(g, 2);
  REQUIRE(r.verdict);
  CHECK(layout_bandwidth(g, *r.certificate) <= 2);
  const auto order = r.certificate->order();
  for (int p = 0; p < 5; ++p) CHECK(order[p] % 2 == 0);
  for (int p = 5; p < 10; ++p) CHECK(order[p] % 2 == 1);
  CHECK(order[10] == 10);

  const Graph hard(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}, {6, 7}});
  CHECK_FALSE(recognize(hard, 2).verdict);
}

TEST_CASE("recognize is deterministic") {
  Rng rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(4, 11));
    const int k = static_cast<int>(rng.uniform_int((n - 1) / 2, n - 2));
    const Graph g = random_graph(n, 0.4, rng);
    const auto a = recognize(g, k);
    const auto b = recognize(g, k);
    CHECK(a.verdict == b.verdict);
    CHECK(a.certificate == b.certificate);
    CHECK(a.negative_reason == b.negative_reason);
    check_sound(g, k, a);
  }
}

TEST_CASE("recognize agrees with the exhaustive oracle on small graphs") {
  for (int n = 1; n <= 5; ++n) {
    const std::uint32_t pairs = static_cast<std::uint32_t>(n * (n - 1) / 2);
    for (std::uint32_t mask = 0; mask < (1U << pairs); ++mask) {
      const Graph g = from_mask(n, mask);
      const int beta = exact_bandwidth_bruteforce(g);
      for (int k = (n - 1) / 2; k <= n - 1; ++k) {
        const auto r = recognize(g, k);
        REQUIRE(r.verdict == (beta <= k));
        check_sound(g, k, r);
      }
    }
  }
}
