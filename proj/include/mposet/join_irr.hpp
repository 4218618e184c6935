#pragma once

// The join-irreducible poset M_w of the Lehmer-code lattice of [e, w].
//
// Element m_{i,x}(w), for a position i with c_i(w) > 0 and a level
// 1 <= x <= c_i(w), is the vector in N^n with
//   coordinate j < i            -> 0
//   coordinate i                -> x
//   coordinate j > i, w(i)>w(j) -> 0
//   coordinate j > i, otherwise -> max(0, x - c_between(w, i, j))
// M_w is the set of all such vectors under the product order, and
// C_i(w) = {m_{i,1} < ... < m_{i,c_i}} is the chain at position i.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mposet/perm.hpp"
#include "mposet/poset.hpp"

namespace mposet {

/// (i, x): position i and level x of m_{i,x}.
struct Label {
  int i;
  int x;
  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

struct MElement {
  Label label;
  std::vector<int> vec;

  friend bool operator==(const MElement&, const MElement&) = default;
};

MElement m_vector(const Permutation& w, int i, int x);

/// Componentwise u <= v.
bool leq_product(std::span<const int> u, std::span<const int> v);
inline bool leq_product(const MElement& u, const MElement& v) {
  return leq_product(u.vec, v.vec);
}

/// Decides m_{b} < m_{a} (strict) from the permutation alone, without
/// building either vector: incomparable when (a.i, b.i) is an inversion,
/// otherwise b.x <= a.x - c_between(w, a.i, b.i).
bool leq_closed_form(const Permutation& w, Label a, Label b);

/// m_{i,1}, ..., m_{i,c_i(w)}. Throws InvalidArgument when c_i(w) = 0.
std::vector<MElement> chain(const Permutation& w, int i);

class MPoset {
 public:
  const Permutation& omega() const noexcept { return omega_; }
  /// Sorted by label (i, x).
  const std::vector<MElement>& elements() const noexcept { return elements_; }
  const FinitePoset& order() const noexcept { return order_; }
  const LehmerCode& code() const noexcept { return code_; }
  std::size_t size() const noexcept { return elements_.size(); }

  std::optional<std::size_t> index_of(Label label) const;
  /// Index of m_{i,x}; the label must be valid.
  std::size_t at(int i, int x) const { return chain_start_[i - 1] + (x - 1); }
  /// c_i(w) for 1-based i.
  int chain_length(int i) const { return code_[i - 1]; }

 private:
  friend MPoset build_M(const Permutation& w);
  MPoset(Permutation omega, LehmerCode code, std::vector<MElement> elements,
         FinitePoset order);

  Permutation omega_;
  LehmerCode code_;
  std::vector<MElement> elements_;
  FinitePoset order_;
  std::vector<std::size_t> chain_start_;
};

MPoset build_M(const Permutation& w);

}  // namespace mposet
