#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the Permutation value type.

#include <algorithm>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "mposet/perm.hpp"

namespace oracle {

inline std::vector<int> standardize(const std::vector<int>& seq) {
  std::vector<int> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> out;
  for (int v : seq) {
    out.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), v) -
                                   sorted.begin()) + 1);
  }
  return out;
}

// Enumerates every k-subset of positions via bitmasks.
inline bool contains(const std::vector<int>& w, const std::vector<int>& p) {
  const std::size_t n = w.size();
  const std::size_t k = p.size();
  if (k > n) return false;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    std::vector<int> sub;
    for (std::size_t q = 0; q < n; ++q) {
      if (mask & (1u << q)) sub.push_back(w[q]);
    }
    if (standardize(sub) == p) return true;
  }
  return false;
}

inline std::vector<int> word(const mposet::Permutation& w) {
  return {w.word().begin(), w.word().end()};
}

inline std::set<std::pair<int, int>> inversions(const std::vector<int>& w) {
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) out.emplace(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
    }
  }
  return out;
}

// Filters all of S_n by inversion-set inclusion; sorted lexicographically.
inline std::vector<std::vector<int>> lambda_filter(const std::vector<int>& w) {
  const auto target = inversions(w);
  std::vector<int> s(w.size());
  for (std::size_t k = 0; k < s.size(); ++k) s[k] = static_cast<int>(k) + 1;
  std::vector<std::vector<int>> out;
  do {
    const auto inv = inversions(s);
    if (std::includes(target.begin(), target.end(), inv.begin(), inv.end())) out.push_back(s);
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

inline bool leq(const std::vector<int>& u, const std::vector<int>& v) {
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] > v[k]) return false;
  }
  return true;
}

}  // namespace oracle
