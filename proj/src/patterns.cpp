#include "mposet/patterns.hpp"

namespace mposet {

namespace {

std::optional<PatternWitness> find_labelled(const MPoset& m, PatternKind kind) {
  const auto& order = m.order();
  const int n = static_cast<int>(m.omega().size());
  for (int i = 1; i <= n; ++i) {
    const int ci = m.chain_length(i);
    if (ci < 2) continue;
    for (int j = i + 1; j <= n; ++j) {
      const int cj = m.chain_length(j);
      if (cj < 2) continue;
      for (int a = 2; a <= ci; ++a) {
        for (int d = 2; d <= cj; ++d) {
          const auto ia = m.at(i, a);
          const auto jd = m.at(j, d);
          if (!order.less(jd, ia)) continue;
          for (int b = 1; b < a; ++b) {
            const int c = b + d - a;
            if (c < 1) continue;
            const auto ib = m.at(i, b);
            const auto jc = m.at(j, c);
            if (!order.less(jc, ib)) continue;
            const bool hit = kind == PatternKind::Parallelogram ? !order.comparable(ib, jd)
                                                                : order.less(jd, ib);
            if (hit) return PatternWitness{kind, {ia, ib, jc, jd}};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PatternWitness> find_parallelogram(const MPoset& m) {
  return find_labelled(m, PatternKind::Parallelogram);
}

std::optional<PatternWitness> find_c4_parallelogram(const MPoset& m) {
  return find_labelled(m, PatternKind::C4Parallelogram);
}

std::array<Label, 4> witness_labels(const MPoset& m, const PatternWitness& w) {
  std::array<Label, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) out[k] = m.elements()[w.elements[k]].label;
  return out;
}

}  // namespace mposet
