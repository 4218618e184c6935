#include "doctest.h"

#include "mposet/patterns.hpp"

using namespace mposet;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }

FinitePoset induced(const MPoset& m, const std::array<std::size_t, 4>& e) {
  return FinitePoset::from_predicate(
      4, [&](std::size_t a, std::size_t b) { return m.order().leq(e[a], e[b]); });
}

}  // namespace

TEST_CASE("B2 in M_3412") {
  const auto m = build_M(P("3412"));
  const auto w = find_B2(m.order());
  REQUIRE(w);
  const auto labels = witness_labels(m, *w);
  CHECK(labels[0] == Label{1, 2});
  CHECK(labels[3] == Label{2, 1});
  CHECK(((labels[1] == Label{1, 1} && labels[2] == Label{2, 2}) ||
         (labels[1] == Label{2, 2} && labels[2] == Label{1, 1})));
  CHECK(hasse_edges(m.order()).size() == 4);
  CHECK_FALSE(is_disjoint_union_of_chains(m.order()));
  CHECK(is_disjoint_union_of_chains(build_M(P("321")).order()));
}

TEST_CASE("parallelogram detection") {
  CHECK_FALSE(find_parallelogram(build_M(Permutation::identity(4))));
  CHECK_FALSE(find_c4_parallelogram(build_M(Permutation::identity(4))));
  CHECK_FALSE(find_c4_parallelogram(build_M(P("321"))));

  const auto m = build_M(P("3412"));
  const auto w = find_parallelogram(m);
  REQUIRE(w);
  CHECK(w->kind == PatternKind::Parallelogram);
  // (m_{i,a}, m_{i,b}, m_{j,c}, m_{j,d}) with (i,a,b) = (1,2,1), (j,d,c) = (2,2,1)
  const auto labels = witness_labels(m, *w);
  CHECK(labels == std::array<Label, 4>{Label{1, 2}, Label{1, 1}, Label{2, 1}, Label{2, 2}});
  CHECK_FALSE(find_c4_parallelogram(m));

  for (const auto& w4 : all_permutations(4)) {
    if (w4 == P("3412") || w4 == P("3421")) {
      CHECK(find_parallelogram(build_M(w4)));
    } else {
      CHECK_FALSE(find_parallelogram(build_M(w4)));
    }
  }
}

TEST_CASE("C4-parallelogram witness is a 4-chain") {
  std::size_t found = 0;
  for (const auto& w : all_permutations(6)) {
    const auto m = build_M(w);
    const auto c4 = find_c4_parallelogram(m);
    if (!c4) continue;
    ++found;
    const auto& e = c4->elements;
    REQUIRE(m.order().less(e[1], e[0]));
    REQUIRE(m.order().less(e[3], e[1]));
    REQUIRE(m.order().less(e[2], e[3]));
    REQUIRE(find_parallelogram(m));
  }
  CHECK(found > 0);
}

TEST_CASE("witness invariants over S_6") {
  const auto b2 = FinitePoset::boolean_b2();
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto m = build_M(w);
      const auto found = find_B2(m.order());
      REQUIRE(found.has_value() == contains_poset_pattern(m.order(), b2));
      if (found) REQUIRE(contains_poset_pattern(induced(m, found->elements), b2));

      const auto par = find_parallelogram(m);
      if (par) {
        const auto l = witness_labels(m, *par);
        // labels are (i,a), (i,b), (j,c), (j,d)
        REQUIRE(l[0].i == l[1].i);
        REQUIRE(l[2].i == l[3].i);
        REQUIRE(l[0].i < l[2].i);
        REQUIRE(l[1].x < l[0].x);
        REQUIRE(l[2].x < l[3].x);
        REQUIRE(l[0].x + l[2].x == l[1].x + l[3].x);
        REQUIRE(contains_poset_pattern(induced(m, par->elements), b2));
      }
      REQUIRE(par.has_value() == found.has_value());
    }
  }
}

TEST_CASE("hasse edges reproduce the order of every M_w, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto m = build_M(w);
      REQUIRE(FinitePoset::from_covers(m.size(), hasse_edges(m.order())) == m.order());
    }
  }
}
