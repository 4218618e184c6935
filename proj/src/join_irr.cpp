#include "mposet/join_irr.hpp"

#include <algorithm>
#include <string>

#include "mposet/error.hpp"

namespace mposet {

namespace {

void check_label(const Permutation& w, const LehmerCode& code, Label l) {
  const int n = static_cast<int>(w.size());
  if (l.i < 1 || l.i > n || code[l.i - 1] == 0 || l.x < 1 || l.x > code[l.i - 1]) {
    fail(ErrorKind::InvalidArgument, "no element m[" + std::to_string(l.i) + "," +
                                         std::to_string(l.x) + "] for omega " +
                                         format_permutation(w));
  }
}

MElement make_element(const Permutation& w, int i, int x) {
  const int n = static_cast<int>(w.size());
  MElement m{{i, x}, std::vector<int>(n, 0)};
  m.vec[i - 1] = x;
  int below = 0;  // running c_between(w, i, j)
  for (int j = i + 1; j <= n; ++j) {
    if (w(i) > w(j)) {
      ++below;
      continue;
    }
    m.vec[j - 1] = std::max(0, x - below);
  }
  return m;
}

}  // namespace

MElement m_vector(const Permutation& w, int i, int x) {
  check_label(w, lehmer_code(w), {i, x});
  return make_element(w, i, x);
}

bool leq_product(std::span<const int> u, std::span<const int> v) {
  if (u.size() != v.size()) fail(ErrorKind::InvalidArgument, "vector length mismatch");
  for (std::size_t k = 0; k < u.size(); ++k) {
    if (u[k] > v[k]) return false;
  }
  return true;
}

bool leq_closed_form(const Permutation& w, Label a, Label b) {
  const LehmerCode code = lehmer_code(w);
  check_label(w, code, a);
  check_label(w, code, b);
  if (a.i == b.i) return b.x < a.x;
  // m_{b} has a positive entry at b.i, where m_{a} is zero when b.i < a.i.
  if (b.i < a.i) return false;
  if (is_inversion(w, a.i, b.i)) return false;
  return b.x <= a.x - c_between(w, a.i, b.i);
}

std::vector<MElement> chain(const Permutation& w, int i) {
  const int n = static_cast<int>(w.size());
  if (i < 1 || i > n) fail(ErrorKind::InvalidArgument, "position out of range");
  const int length = lehmer_code(w)[i - 1];
  if (length == 0) {
    fail(ErrorKind::InvalidArgument, "empty chain: c_" + std::to_string(i) + " is 0");
  }
  std::vector<MElement> out;
  for (int x = 1; x <= length; ++x) out.push_back(make_element(w, i, x));
  return out;
}

MPoset::MPoset(Permutation omega, LehmerCode code, std::vector<MElement> elements,
               FinitePoset order)
    : omega_(std::move(omega)),
      code_(std::move(code)),
      elements_(std::move(elements)),
      order_(std::move(order)) {
  std::size_t start = 0;
  for (std::size_t i = 0; i < code_.size(); ++i) {
    chain_start_.push_back(start);
    start += static_cast<std::size_t>(code_[i]);
  }
}

std::optional<std::size_t> MPoset::index_of(Label label) const {
  const int n = static_cast<int>(code_.size());
  if (label.i < 1 || label.i > n || label.x < 1 || label.x > code_[label.i - 1]) {
    return std::nullopt;
  }
  return at(label.i, label.x);
}

MPoset build_M(const Permutation& w) {
  LehmerCode code = lehmer_code(w);
  std::vector<MElement> elements;
  for (int i = 1; i <= static_cast<int>(w.size()); ++i) {
    for (int x = 1; x <= code[i - 1]; ++x) elements.push_back(make_element(w, i, x));
  }
  FinitePoset order = FinitePoset::from_predicate(
      elements.size(),
      [&](std::size_t a, std::size_t b) { return leq_product(elements[a], elements[b]); });
  return MPoset(w, std::move(code), std::move(elements), std::move(order));
}

}  // namespace mposet
