#include "mposet/weak_order.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include "mposet/error.hpp"

namespace mposet {

namespace {

// Codes with n <= 16 and every entry <= 7 pack into 4-bit lanes of a
// uint64_t; lane-wise max/min then cost a few word operations.
constexpr std::uint64_t kLaneHigh = 0x8888'8888'8888'8888ULL;

bool packable(const CodeLattice& lattice) {
  if (lattice.n() > 16) return false;
  for (const auto& c : lattice.codes()) {
    for (int e : c.entries) {
      if (e > 7) return false;
    }
  }
  return true;
}

std::uint64_t pack(const LehmerCode& c) {
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < c.size(); ++k) key |= static_cast<std::uint64_t>(c[k]) << (4 * k);
  return key;
}

// All-ones lanes where a >= b.
std::uint64_t ge_mask(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t high = ((a | kLaneHigh) - b) & kLaneHigh;
  return (high >> 3) * 0xF;
}

std::uint64_t packed_join(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t m = ge_mask(a, b);
  return (a & m) | (b & ~m);
}

std::uint64_t packed_meet(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t m = ge_mask(a, b);
  return (b & m) | (a & ~m);
}

void require_same_length(const LehmerCode& a, const LehmerCode& b) {
  if (a.size() != b.size()) {
    fail(ErrorKind::InvalidArgument, "code length mismatch: " + std::to_string(a.size()) +
                                         " vs " + std::to_string(b.size()));
  }
}

}  // namespace

std::vector<Permutation> lambda_interval(const Permutation& w) {
  const int n = static_cast<int>(w.size());
  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> frontier;
  std::vector<int> start(w.size());
  for (int k = 0; k < n; ++k) start[k] = k + 1;
  seen.insert(start);
  frontier.push_back(std::move(start));

  std::vector<int> pos(n + 1);
  while (!frontier.empty()) {
    std::vector<int> sigma = std::move(frontier.front());
    frontier.pop_front();
    for (int k = 0; k < n; ++k) pos[sigma[k]] = k + 1;
    for (int v = 1; v < n; ++v) {
      const int p = pos[v];
      const int q = pos[v + 1];
      if (p < q && w(p) > w(q)) {
        std::vector<int> next = sigma;
        std::swap(next[p - 1], next[q - 1]);
        if (seen.insert(next).second) frontier.push_back(std::move(next));
      }
    }
  }

  std::vector<Permutation> out;
  out.reserve(seen.size());
  for (const auto& word : seen) out.push_back(Permutation::from_word(word));
  return out;
}

LehmerCode join(const LehmerCode& a, const LehmerCode& b) {
  require_same_length(a, b);
  LehmerCode out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out.entries[k] = std::max(a[k], b[k]);
  return out;
}

LehmerCode meet(const LehmerCode& a, const LehmerCode& b) {
  require_same_length(a, b);
  LehmerCode out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out.entries[k] = std::min(a[k], b[k]);
  return out;
}

CodeLattice::CodeLattice(std::size_t n, std::vector<LehmerCode> codes)
    : n_(n), codes_(std::move(codes)) {
  for (const auto& c : codes_) {
    if (c.size() != n_) fail(ErrorKind::InvalidArgument, "code length differs from lattice rank");
  }
  std::sort(codes_.begin(), codes_.end());
  codes_.erase(std::unique(codes_.begin(), codes_.end()), codes_.end());
}

bool CodeLattice::contains(const LehmerCode& c) const {
  return std::binary_search(codes_.begin(), codes_.end(), c);
}

std::optional<std::size_t> CodeLattice::index_of(const LehmerCode& c) const {
  auto it = std::lower_bound(codes_.begin(), codes_.end(), c);
  if (it == codes_.end() || *it != c) return std::nullopt;
  return static_cast<std::size_t>(it - codes_.begin());
}

FinitePoset CodeLattice::order() const {
  return FinitePoset::from_predicate(size(), [&](std::size_t a, std::size_t b) {
    return leq_product(codes_[a].entries, codes_[b].entries);
  });
}

CodeLattice code_lattice(const Permutation& w) {
  std::vector<LehmerCode> codes;
  for (const auto& sigma : lambda_interval(w)) codes.push_back(lehmer_code(sigma));
  return CodeLattice(w.size(), std::move(codes));
}

bool is_join_meet_closed(const CodeLattice& lattice) {
  const auto& codes = lattice.codes();
  if (packable(lattice)) {
    std::unordered_set<std::uint64_t> keys;
    for (const auto& c : codes) keys.insert(pack(c));
    for (auto a : keys) {
      for (auto b : keys) {
        if (!keys.contains(packed_join(a, b)) || !keys.contains(packed_meet(a, b))) return false;
      }
    }
    return true;
  }
  for (const auto& a : codes) {
    for (const auto& b : codes) {
      if (!lattice.contains(join(a, b)) || !lattice.contains(meet(a, b))) return false;
    }
  }
  return true;
}

bool is_distributive(const CodeLattice& lattice) {
  if (!is_join_meet_closed(lattice)) return false;
  const auto& codes = lattice.codes();
  if (packable(lattice)) {
    std::vector<std::uint64_t> keys;
    for (const auto& c : codes) keys.push_back(pack(c));
    for (auto a : keys) {
      for (auto b : keys) {
        const auto ab = packed_meet(a, b);
        for (auto c : keys) {
          if (packed_meet(a, packed_join(b, c)) != packed_join(ab, packed_meet(a, c))) return false;
        }
      }
    }
    return true;
  }
  for (const auto& a : codes) {
    for (const auto& b : codes) {
      for (const auto& c : codes) {
        if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return false;
      }
    }
  }
  return true;
}

std::vector<LehmerCode> lattice_join_irreducibles(const CodeLattice& lattice) {
  std::vector<int> lower_covers(lattice.size(), 0);
  for (auto [lo, hi] : hasse_edges(lattice.order())) ++lower_covers[hi];
  std::vector<LehmerCode> out;
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    if (lower_covers[k] == 1) out.push_back(lattice.codes()[k]);
  }
  return out;
}

IdealLattice ideal_lattice(const FinitePoset& p, std::size_t cap) {
  const std::size_t n = p.size();
  // Strictly smaller elements have strictly smaller down-sets, so sorting by
  // down-set size yields a linear extension.
  std::vector<std::size_t> order(n);
  for (std::size_t k = 0; k < n; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return p.down_set(a).count() < p.down_set(b).count();
  });

  IdealLattice out;
  FinitePoset::Row current(n);
  auto visit = [&](auto&& self, std::size_t step) -> void {
    if (step == n) {
      if (out.ideals.size() >= cap) {
        fail(ErrorKind::ResourceLimit,
             "ideal count exceeds the cap of " + std::to_string(cap));
      }
      out.ideals.push_back(current);
      return;
    }
    const std::size_t e = order[step];
    self(self, step + 1);
    FinitePoset::Row below = p.down_set(e);
    below.reset(e);
    if (below.is_subset_of(current)) {
      current.set(e);
      self(self, step + 1);
      current.reset(e);
    }
  };
  visit(visit, 0);
  return out;
}

bool birkhoff_isomorphic(const MPoset& m, const CodeLattice& lattice, std::size_t cap) {
  const auto ideals = ideal_lattice(m.order(), cap).ideals;
  if (ideals.size() != lattice.size()) return false;

  const std::size_t n = m.omega().size();
  std::vector<std::size_t> image;
  image.reserve(ideals.size());
  std::vector<bool> hit(lattice.size(), false);
  for (const auto& ideal : ideals) {
    LehmerCode top{std::vector<int>(n, 0)};
    for (auto e = ideal.find_first(); e != FinitePoset::Row::npos; e = ideal.find_next(e)) {
      for (std::size_t k = 0; k < n; ++k) {
        top.entries[k] = std::max(top.entries[k], m.elements()[e].vec[k]);
      }
    }
    const auto idx = lattice.index_of(top);
    if (!idx || hit[*idx]) return false;
    hit[*idx] = true;
    image.push_back(*idx);
  }

  const auto& codes = lattice.codes();
  for (std::size_t a = 0; a < ideals.size(); ++a) {
    for (std::size_t b = 0; b < ideals.size(); ++b) {
      const bool included = ideals[a].is_subset_of(ideals[b]);
      if (included != leq_product(codes[image[a]].entries, codes[image[b]].entries)) return false;
    }
  }
  return true;
}

}  // namespace mposet
