#include "doctest.h"

#include <random>

#include "mposet/error.hpp"
#include "mposet/poset.hpp"

using namespace mposet;

namespace {

// Random poset: a random DAG on 0..n-1 (edges only go upward in index),
// closed transitively.
FinitePoset random_poset(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution coin(density);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return FinitePoset::from_covers(n, edges);
}

}  // namespace

TEST_CASE("construction validates the order axioms") {
  CHECK_NOTHROW(FinitePoset::from_matrix({{true, true}, {false, true}}));
  CHECK_THROWS_AS(FinitePoset::from_matrix({{false, true}, {false, true}}), Error);
  CHECK_THROWS_AS(FinitePoset::from_matrix({{true, true}, {true, true}}), Error);
  CHECK_THROWS_AS(FinitePoset::from_matrix({{true, true, false}, {false, true, true},
                                            {false, false, true}}),
                  Error);
  CHECK_THROWS_AS(FinitePoset::from_covers(2, {{0, 1}, {1, 0}}), Error);
  CHECK(FinitePoset::from_matrix({}).size() == 0);
}

TEST_CASE("hasse edges") {
  CHECK(hasse_edges(FinitePoset::chain(3)).size() == 2);
  CHECK(hasse_edges(FinitePoset::antichain(2)).empty());
  CHECK(hasse_edges(FinitePoset::boolean_b2()).size() == 4);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto p = random_poset(rng, 1 + trial % 12, 0.3);
    CHECK(FinitePoset::from_covers(p.size(), hasse_edges(p)) == p);
  }
}

TEST_CASE("find_B2") {
  CHECK_FALSE(find_B2(FinitePoset::chain(4)));
  CHECK_FALSE(find_B2(FinitePoset::antichain(4)));
  const auto w = find_B2(FinitePoset::boolean_b2());
  REQUIRE(w);
  CHECK(w->kind == PatternKind::B2);
  CHECK(w->elements == std::array<std::size_t, 4>{3, 1, 2, 0});

  // A B2 whose middles are separated by an extra comparable element still
  // counts: only the induced relations matter.
  const auto p = FinitePoset::from_covers(5, {{0, 1}, {1, 2}, {0, 3}, {2, 4}, {3, 4}});
  CHECK(find_B2(p));
}

TEST_CASE("contains_poset_pattern") {
  const auto b2 = FinitePoset::boolean_b2();
  CHECK(contains_poset_pattern(FinitePoset::antichain(1), FinitePoset::chain(1)));
  CHECK_FALSE(contains_poset_pattern(FinitePoset::from_matrix({}), FinitePoset::chain(1)));
  CHECK_FALSE(contains_poset_pattern(FinitePoset::chain(4), b2));
  CHECK(contains_poset_pattern(b2, b2));
  CHECK(contains_poset_pattern(b2, FinitePoset::antichain(2)));
  CHECK_THROWS_AS(contains_poset_pattern(b2, FinitePoset::chain(6)), Error);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poset(rng, 4 + trial % 8, 0.35);
    REQUIRE(find_B2(p).has_value() == contains_poset_pattern(p, b2));
  }
}

TEST_CASE("disjoint union of chains") {
  CHECK(is_disjoint_union_of_chains(FinitePoset::from_matrix({})));
  CHECK(is_disjoint_union_of_chains(FinitePoset::chain(5)));
  CHECK(is_disjoint_union_of_chains(FinitePoset::antichain(3)));
  CHECK(is_disjoint_union_of_chains(FinitePoset::from_covers(3, {{0, 1}})));
  CHECK_FALSE(is_disjoint_union_of_chains(FinitePoset::boolean_b2()));
  // V shape: one bottom, two incomparable tops.
  CHECK_FALSE(is_disjoint_union_of_chains(FinitePoset::from_covers(3, {{0, 1}, {0, 2}})));

  // Equivalent characterisation: no w comparable to exactly one of a
  // comparable pair.
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const auto p = random_poset(rng, 1 + trial % 9, 0.2);
    bool forbidden = false;
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (!p.less(a, b)) continue;
        for (std::size_t c = 0; c < p.size(); ++c) {
          if (p.comparable(a, c) != p.comparable(b, c)) forbidden = true;
        }
      }
    }
    REQUIRE(is_disjoint_union_of_chains(p) == !forbidden);
  }
}
