#include "mposet/poset.hpp"

#include <string>

#include "mposet/error.hpp"

namespace mposet {

FinitePoset::FinitePoset(std::vector<Row> up) : up_(std::move(up)) {
  const std::size_t n = up_.size();
  down_.assign(n, Row(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b = up_[a].find_first(); b != Row::npos; b = up_[a].find_next(b)) {
      down_[b].set(a);
    }
  }
}

void FinitePoset::validate() const {
  const std::size_t n = size();
  for (std::size_t a = 0; a < n; ++a) {
    if (!up_[a].test(a)) {
      fail(ErrorKind::InvalidInput, "relation not reflexive at element " + std::to_string(a));
    }
    for (auto b = up_[a].find_first(); b != Row::npos; b = up_[a].find_next(b)) {
      if (b != a && up_[b].test(a)) {
        fail(ErrorKind::InvalidInput, "relation not antisymmetric on elements " +
                                          std::to_string(a) + ", " + std::to_string(b));
      }
      if (!up_[b].is_subset_of(up_[a])) {
        fail(ErrorKind::InvalidInput,
             "relation not transitive through element " + std::to_string(b));
      }
    }
  }
}

FinitePoset FinitePoset::from_matrix(const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = leq.size();
  std::vector<Row> up(n, Row(n));
  for (std::size_t a = 0; a < n; ++a) {
    if (leq[a].size() != n) fail(ErrorKind::InvalidInput, "relation matrix is not square");
    for (std::size_t b = 0; b < n; ++b) {
      if (leq[a][b]) up[a].set(b);
    }
  }
  FinitePoset p(std::move(up));
  p.validate();
  return p;
}

FinitePoset FinitePoset::from_predicate(
    std::size_t size, const std::function<bool(std::size_t, std::size_t)>& leq) {
  std::vector<Row> up(size, Row(size));
  for (std::size_t a = 0; a < size; ++a) {
    for (std::size_t b = 0; b < size; ++b) {
      if (leq(a, b)) up[a].set(b);
    }
  }
  FinitePoset p(std::move(up));
  p.validate();
  return p;
}

FinitePoset FinitePoset::from_covers(
    std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  std::vector<Row> up(size, Row(size));
  for (std::size_t a = 0; a < size; ++a) up[a].set(a);
  for (auto [lo, hi] : covers) {
    if (lo >= size || hi >= size) fail(ErrorKind::InvalidInput, "cover index out of range");
    up[lo].set(hi);
  }
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t a = 0; a < size; ++a) {
      if (up[a].test(k)) up[a] |= up[k];
    }
  }
  FinitePoset p(std::move(up));
  p.validate();
  return p;
}

FinitePoset FinitePoset::chain(std::size_t length) {
  return from_predicate(length, [](std::size_t a, std::size_t b) { return a <= b; });
}

FinitePoset FinitePoset::antichain(std::size_t size) {
  return from_predicate(size, [](std::size_t a, std::size_t b) { return a == b; });
}

FinitePoset FinitePoset::boolean_b2() {
  return from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

const char* to_string(PatternKind kind) {
  switch (kind) {
    case PatternKind::B2: return "B2";
    case PatternKind::Parallelogram: return "PARALLELOGRAM";
    case PatternKind::C4Parallelogram: return "C4_PARALLELOGRAM";
  }
  return "?";
}

std::vector<std::pair<std::size_t, std::size_t>> hasse_edges(const FinitePoset& p) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t a = 0; a < p.size(); ++a) {
    const auto& up = p.up_set(a);
    for (auto b = up.find_first(); b != FinitePoset::Row::npos; b = up.find_next(b)) {
      if (b == a) continue;
      // only a and b themselves lie in [a, b]
      if ((up & p.down_set(b)).count() == 2) edges.emplace_back(a, b);
    }
  }
  return edges;
}

std::optional<PatternWitness> find_B2(const FinitePoset& p) {
  using Row = FinitePoset::Row;
  for (std::size_t s = 0; s < p.size(); ++s) {
    const auto& above = p.up_set(s);
    for (auto t = above.find_first(); t != Row::npos; t = above.find_next(t)) {
      if (t == s) continue;
      Row middle = above & p.down_set(t);
      middle.reset(s);
      middle.reset(t);
      if (middle.count() < 2) continue;
      for (auto u = middle.find_first(); u != Row::npos; u = middle.find_next(u)) {
        for (auto v = middle.find_next(u); v != Row::npos; v = middle.find_next(v)) {
          if (!p.comparable(u, v)) return PatternWitness{PatternKind::B2, {t, u, v, s}};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_disjoint_union_of_chains(const FinitePoset& p) {
  const std::size_t n = p.size();
  std::vector<bool> visited(n, false);
  for (std::size_t root = 0; root < n; ++root) {
    if (visited[root]) continue;
    std::vector<std::size_t> component{root};
    visited[root] = true;
    for (std::size_t k = 0; k < component.size(); ++k) {
      const std::size_t a = component[k];
      for (std::size_t b = 0; b < n; ++b) {
        if (!visited[b] && p.comparable(a, b)) {
          visited[b] = true;
          component.push_back(b);
        }
      }
    }
    for (std::size_t x = 0; x < component.size(); ++x) {
      for (std::size_t y = x + 1; y < component.size(); ++y) {
        if (!p.comparable(component[x], component[y])) return false;
      }
    }
  }
  return true;
}

bool contains_poset_pattern(const FinitePoset& host, const FinitePoset& pattern) {
  const std::size_t k = pattern.size();
  if (k > kMaxPosetPatternSize) {
    fail(ErrorKind::ResourceLimit, "poset pattern of size " + std::to_string(k) +
                                       " exceeds the cap of " +
                                       std::to_string(kMaxPosetPatternSize));
  }
  if (k > host.size()) return false;
  std::vector<std::size_t> image(k);
  std::vector<bool> used(host.size(), false);
  auto assign = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == k) return true;
    for (std::size_t h = 0; h < host.size(); ++h) {
      if (used[h]) continue;
      bool ok = true;
      for (std::size_t t = 0; t < depth && ok; ++t) {
        ok = host.leq(image[t], h) == pattern.leq(t, depth) &&
             host.leq(h, image[t]) == pattern.leq(depth, t);
      }
      if (!ok) continue;
      used[h] = true;
      image[depth] = h;
      if (self(self, depth + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return assign(assign, 0);
}

}  // namespace mposet
