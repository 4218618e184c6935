#pragma once

// Finite posets stored as dense relation matrices, plus the generic order
// pattern detectors (B2 search, induced-subposet search, chain unions).

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace mposet {

class FinitePoset {
 public:
  using Row = boost::dynamic_bitset<>;

  FinitePoset() = default;

  /// `leq[a][b]` means a <= b. Throws InvalidInput unless the relation is
  /// reflexive, antisymmetric and transitive.
  static FinitePoset from_matrix(const std::vector<std::vector<bool>>& leq);
  /// Builds the relation from a predicate; validated like from_matrix.
  static FinitePoset from_predicate(std::size_t size,
                                    const std::function<bool(std::size_t, std::size_t)>& leq);
  /// Reflexive-transitive closure of the given cover pairs (lower, upper).
  static FinitePoset from_covers(std::size_t size,
                                 const std::vector<std::pair<std::size_t, std::size_t>>& covers);

  static FinitePoset chain(std::size_t length);
  static FinitePoset antichain(std::size_t size);
  /// Boolean lattice of rank 2: 0 bottom, 1 and 2 incomparable, 3 top.
  static FinitePoset boolean_b2();

  std::size_t size() const noexcept { return up_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && up_[a].test(b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  /// Elements b with a <= b.
  const Row& up_set(std::size_t a) const { return up_[a]; }
  /// Elements b with b <= a.
  const Row& down_set(std::size_t a) const { return down_[a]; }

  friend bool operator==(const FinitePoset&, const FinitePoset&) = default;

 private:
  explicit FinitePoset(std::vector<Row> up);
  void validate() const;

  std::vector<Row> up_;
  std::vector<Row> down_;
};

enum class PatternKind { B2, Parallelogram, C4Parallelogram };

const char* to_string(PatternKind kind);

/// Element indices of a detected pattern. For B2 the order is
/// (top, middle, middle, bottom); for the labelled patterns it is
/// (m_{i,a}, m_{i,b}, m_{j,c}, m_{j,d}).
struct PatternWitness {
  PatternKind kind;
  std::array<std::size_t, 4> elements;
};

/// Cover pairs (lower, upper), sorted.
std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FinitePoset& p);

/// First B2 found scanning (bottom, top) pairs in index order, then the two
/// middles in index order; nullopt when `p` is B2-free.
std::optional<PatternWitness> find_B2(const FinitePoset& p);

/// Every connected component of the comparability graph is a chain.
bool is_disjoint_union_of_chains(const FinitePoset& p);

inline constexpr std::size_t kMaxPosetPatternSize = 5;

/// Some induced subposet of `host` is isomorphic to `pattern`.
/// Throws ResourceLimit when |pattern| > kMaxPosetPatternSize.
bool contains_poset_pattern(const FinitePoset& host, const FinitePoset& pattern);

}  // namespace mposet
