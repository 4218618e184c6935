#pragma once

// Permutations in one-line notation, inversion statistics, Lehmer codes and
// classical pattern containment.
//
// Positions and values are 1-based on every public entry point.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mposet {

class PermutationRange;

class Permutation {
 public:
  /// Validates that `word` is a bijection on {1..n}, n >= 1.
  static Permutation from_word(std::vector<int> word);
  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return word_.size(); }
  /// Value at 1-based position `pos`.
  int operator()(std::size_t pos) const { return word_[pos - 1]; }
  std::span<const int> word() const noexcept { return word_; }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  friend class PermutationRange;
  explicit Permutation(std::vector<int> word) : word_(std::move(word)) {}
  std::vector<int> word_;
};

/// Contiguous digits when n <= 9 ("35142"), comma-separated otherwise.
/// Comma-separated input is accepted for any n.
Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& w);

/// The unique permutation order-isomorphic to `seq`.
Permutation standardize(std::span<const int> seq);

struct Inversion {
  int i;
  int j;
  friend bool operator==(const Inversion&, const Inversion&) = default;
  friend auto operator<=>(const Inversion&, const Inversion&) = default;
};

/// Sorted list of position pairs (i, j), i < j, with w(i) > w(j).
using InversionSet = std::vector<Inversion>;

InversionSet inversion_set(const Permutation& w);
bool is_inversion(const Permutation& w, int i, int j);

struct LehmerCode {
  std::vector<int> entries;

  std::size_t size() const noexcept { return entries.size(); }
  int operator[](std::size_t k) const { return entries[k]; }
  friend bool operator==(const LehmerCode&, const LehmerCode&) = default;
  friend auto operator<=>(const LehmerCode&, const LehmerCode&) = default;
};

LehmerCode lehmer_code(const Permutation& w);
/// Requires 0 <= c_k <= n - k for every 1-based k.
Permutation decode_lehmer(const LehmerCode& c);
std::string format_code(const LehmerCode& c);

/// Number of k with i < k < j and w(i) > w(k). Requires 1 <= i < j <= n.
int c_between(const Permutation& w, int i, int j);

/// 1-based positions of the lexicographically smallest occurrence of `p`
/// in `w`, or nullopt when `w` avoids `p`.
std::optional<std::vector<int>> find_pattern(const Permutation& w,
                                             const Permutation& p);
inline bool contains_pattern(const Permutation& w, const Permutation& p) {
  return find_pattern(w, p).has_value();
}

using PatternSet = std::vector<Permutation>;

bool avoids_all(const Permutation& w, const PatternSet& ps);
/// Parses "3412,3421" or a single pattern into a PatternSet.
PatternSet parse_pattern_set(std::string_view text);

std::uint64_t factorial(int n);

/// Lexicographic walk over S_n, optionally restricted to the rank range
/// [first, last). Holds one word at a time.
class PermutationRange {
 public:
  explicit PermutationRange(int n);
  PermutationRange(int n, std::uint64_t first, std::uint64_t last);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Permutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const Permutation*;
    using reference = const Permutation&;

    iterator() = default;
    const Permutation& operator*() const { return *current_; }
    const Permutation* operator->() const { return &*current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(const iterator& o) const { return remaining_ == o.remaining_; }

   private:
    friend class PermutationRange;
    std::optional<Permutation> current_;
    std::uint64_t remaining_ = 0;
  };

  iterator begin() const;
  iterator end() const { return {}; }
  std::uint64_t count() const noexcept { return last_ - first_; }

 private:
  int n_;
  std::uint64_t first_;
  std::uint64_t last_;
};

/// All of S_n in lexicographic order. Requires n >= 1.
inline PermutationRange all_permutations(int n) { return PermutationRange(n); }

/// The permutation at lexicographic rank `rank` in S_n.
Permutation permutation_at_rank(int n, std::uint64_t rank);

}  // namespace mposet
