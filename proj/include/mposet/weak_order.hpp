#pragma once

// The weak-order interval [e, w] = {s : Inv(s) ⊆ Inv(w)}, its Lehmer-code
// lattice under the product order on N^n, and the order-ideal lattice J(P)
// of a finite poset.

#include <cstddef>
#include <optional>
#include <vector>

#include "mposet/join_irr.hpp"
#include "mposet/perm.hpp"
#include "mposet/poset.hpp"

namespace mposet {

/// All s with Inv(s) ⊆ Inv(w), sorted lexicographically. Built by closure
/// from the identity, swapping adjacent values v, v+1 whenever that adds
/// one inversion already present in Inv(w).
std::vector<Permutation> lambda_interval(const Permutation& w);

LehmerCode join(const LehmerCode& a, const LehmerCode& b);
LehmerCode meet(const LehmerCode& a, const LehmerCode& b);

class CodeLattice {
 public:
  CodeLattice(std::size_t n, std::vector<LehmerCode> codes);

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return codes_.size(); }
  /// Sorted lexicographically.
  const std::vector<LehmerCode>& codes() const noexcept { return codes_; }
  bool contains(const LehmerCode& c) const;
  std::optional<std::size_t> index_of(const LehmerCode& c) const;

  /// Product order on the stored codes, indexed like codes().
  FinitePoset order() const;

 private:
  std::size_t n_;
  std::vector<LehmerCode> codes_;
};

CodeLattice code_lattice(const Permutation& w);

/// Componentwise max and min of any two codes land back in the lattice.
bool is_join_meet_closed(const CodeLattice& lattice);
/// Closed under join and meet, and a∧(b∨c) = (a∧b)∨(a∧c) for every triple.
bool is_distributive(const CodeLattice& lattice);

/// Elements covering exactly one element, sorted.
std::vector<LehmerCode> lattice_join_irreducibles(const CodeLattice& lattice);

struct IdealLattice {
  /// Down-closed subsets, each a bitset over the poset's elements.
  std::vector<FinitePoset::Row> ideals;
};

inline constexpr std::size_t kDefaultIdealCap = 1'000'000;

/// Throws ResourceLimit once more than `cap` ideals are found.
IdealLattice ideal_lattice(const FinitePoset& p, std::size_t cap = kDefaultIdealCap);

/// Checks that I -> componentwise max of the vectors in I (empty -> zero) is
/// an order isomorphism J(M_w) -> c([e, w]).
bool birkhoff_isomorphic(const MPoset& m, const CodeLattice& lattice,
                         std::size_t cap = kDefaultIdealCap);

}  // namespace mposet
