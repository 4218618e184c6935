#include "doctest.h"

#include <algorithm>

#include "mposet/error.hpp"
#include "mposet/weak_order.hpp"
#include "oracles.hpp"

using namespace mposet;

namespace {

Permutation P(const char* text) { return parse_permutation(text); }
LehmerCode C(std::initializer_list<int> xs) { return {xs}; }

std::vector<LehmerCode> m_vectors(const MPoset& m) {
  std::vector<LehmerCode> out;
  for (const auto& e : m.elements()) out.push_back({e.vec});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("lambda interval") {
  CHECK(lambda_interval(Permutation::identity(4)) ==
        std::vector<Permutation>{Permutation::identity(4)});
  const auto all3 = lambda_interval(P("321"));
  CHECK(all3 == std::vector<Permutation>(all_permutations(3).begin(), all_permutations(3).end()));

  const auto l3412 = lambda_interval(P("3412"));
  std::vector<std::vector<int>> words;
  for (const auto& s : l3412) words.push_back(oracle::word(s));
  CHECK(words == oracle::lambda_filter({3, 4, 1, 2}));
  CHECK(std::binary_search(l3412.begin(), l3412.end(), P("3412")));
}

TEST_CASE("closure agrees with the filter oracle for n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      std::vector<std::vector<int>> words;
      for (const auto& s : lambda_interval(w)) words.push_back(oracle::word(s));
      REQUIRE(words == oracle::lambda_filter(oracle::word(w)));
    }
  }
}

TEST_CASE("interval is monotone under inversion inclusion") {
  const int n = 5;
  std::vector<Permutation> all(all_permutations(n).begin(), all_permutations(n).end());
  for (const auto& w : all) {
    const auto lw = lambda_interval(w);
    for (const auto& u : lambda_interval(w)) {
      const auto lu = lambda_interval(u);
      REQUIRE(std::includes(lw.begin(), lw.end(), lu.begin(), lu.end()));
    }
  }
}

TEST_CASE("join and meet") {
  CHECK(join(C({0, 1, 0}), C({1, 0, 0})) == C({1, 1, 0}));
  CHECK(meet(C({2, 1, 0}), C({1, 1, 0})) == C({1, 1, 0}));
  CHECK(join(C({2, 1, 0}), C({0, 0, 0})) == C({2, 1, 0}));
  CHECK_THROWS_AS(join(C({1}), C({1, 0})), Error);
  CHECK_THROWS_AS(meet(C({1}), C({1, 0})), Error);
}

TEST_CASE("code lattice") {
  const auto trivial = code_lattice(Permutation::identity(3));
  CHECK(trivial.codes() == std::vector<LehmerCode>{C({0, 0, 0})});
  CHECK(is_distributive(trivial));
  CHECK(lattice_join_irreducibles(trivial).empty());

  const auto l321 = code_lattice(P("321"));
  CHECK(l321.codes() == std::vector<LehmerCode>{C({0, 0, 0}), C({0, 1, 0}), C({1, 0, 0}),
                                                C({1, 1, 0}), C({2, 0, 0}), C({2, 1, 0})});
  CHECK(is_distributive(l321));
  CHECK(lattice_join_irreducibles(l321) ==
        std::vector<LehmerCode>{C({0, 1, 0}), C({1, 0, 0}), C({2, 0, 0})});

  const auto l3412 = code_lattice(P("3412"));
  CHECK(lattice_join_irreducibles(l3412) ==
        std::vector<LehmerCode>{C({0, 1, 0, 0}), C({0, 2, 0, 0}), C({1, 1, 0, 0}),
                                C({2, 2, 0, 0})});
}

TEST_CASE("non-lattices are rejected") {
  // {0, (1,0), (0,1)} misses the join (1,1).
  const CodeLattice v(2, {C({0, 0}), C({1, 0}), C({0, 1})});
  CHECK_FALSE(is_join_meet_closed(v));
  CHECK_FALSE(is_distributive(v));
  // Same check through the unpacked path (entries above 7).
  const CodeLattice wide(2, {C({0, 0}), C({9, 0}), C({0, 9})});
  CHECK_FALSE(is_join_meet_closed(wide));
  const CodeLattice square(2, {C({0, 0}), C({9, 0}), C({0, 9}), C({9, 9})});
  CHECK(is_distributive(square));
}

TEST_CASE("ideal lattice") {
  CHECK(ideal_lattice(FinitePoset::from_matrix({})).ideals.size() == 1);
  CHECK(ideal_lattice(FinitePoset::antichain(2)).ideals.size() == 4);
  CHECK(ideal_lattice(FinitePoset::chain(5)).ideals.size() == 6);
  CHECK(ideal_lattice(build_M(P("321")).order()).ideals.size() == 6);
  CHECK_THROWS_AS(ideal_lattice(FinitePoset::antichain(12), 1000), Error);
  try {
    ideal_lattice(FinitePoset::antichain(12), 1000);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
    CHECK(std::string(e.what()).find("1000") != std::string::npos);
  }

  // Every enumerated set is down-closed and they are pairwise distinct.
  const auto m = build_M(P("45312"));
  const auto ideals = ideal_lattice(m.order()).ideals;
  for (const auto& ideal : ideals) {
    for (auto e = ideal.find_first(); e != FinitePoset::Row::npos; e = ideal.find_next(e)) {
      REQUIRE(m.order().down_set(e).is_subset_of(ideal));
    }
  }
  auto sorted = ideals;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
}

TEST_CASE("lattice claims hold for every w with n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto lattice = code_lattice(w);
      const auto m = build_M(w);
      REQUIRE(lattice.size() == lambda_interval(w).size());
      REQUIRE(lattice.contains(LehmerCode{std::vector<int>(n, 0)}));
      REQUIRE(lattice.contains(lehmer_code(w)));
      REQUIRE(is_join_meet_closed(lattice));
      REQUIRE(is_distributive(lattice));
      REQUIRE(lattice_join_irreducibles(lattice) == m_vectors(m));
      REQUIRE(birkhoff_isomorphic(m, lattice));
    }
  }
}

TEST_CASE("code lattices are distributive for n = 6") {
  for (const auto& w : all_permutations(6)) {
    REQUIRE(is_distributive(code_lattice(w)));
  }
}

TEST_CASE("birkhoff map detects a wrong lattice") {
  const auto m = build_M(P("321"));
  CHECK_FALSE(birkhoff_isomorphic(m, code_lattice(P("312"))));
  CHECK(birkhoff_isomorphic(build_M(Permutation::identity(3)),
                            code_lattice(Permutation::identity(3))));
}
