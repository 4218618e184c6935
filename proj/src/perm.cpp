#include "mposet/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "mposet/error.hpp"

namespace mposet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_value(std::string_view token, std::string_view text) {
  token = trim(token);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    fail(ErrorKind::InvalidInput, "invalid token '" + std::string(token) +
                                      "' in permutation '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

Permutation Permutation::from_word(std::vector<int> word) {
  const auto n = static_cast<int>(word.size());
  if (n == 0) fail(ErrorKind::InvalidInput, "permutation must have at least one entry");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word) {
    if (v < 1 || v > n) {
      fail(ErrorKind::InvalidInput, "value " + std::to_string(v) + " out of range 1.." +
                                        std::to_string(n));
    }
    if (seen[v]) fail(ErrorKind::InvalidInput, "value " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
  return Permutation(std::move(word));
}

Permutation Permutation::identity(std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "identity of size 0");
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 1);
  return Permutation(std::move(word));
}

Permutation parse_permutation(std::string_view text) {
  const std::string_view body = trim(text);
  std::vector<int> word;
  if (body.find(',') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      const auto token = body.substr(start, comma == std::string_view::npos ? body.npos
                                                                            : comma - start);
      word.push_back(parse_value(token, text));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
  } else {
    for (char ch : body) {
      if (ch < '0' || ch > '9') {
        fail(ErrorKind::InvalidInput, "invalid token '" + std::string(1, ch) +
                                          "' in permutation '" + std::string(text) + "'");
      }
      word.push_back(ch - '0');
    }
  }
  return Permutation::from_word(std::move(word));
}

std::string format_permutation(const Permutation& w) {
  std::string out;
  const bool digits = w.size() <= 9;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!digits && k > 0) out += ',';
    out += std::to_string(w.word()[k]);
  }
  return out;
}

Permutation standardize(std::span<const int> seq) {
  if (seq.empty()) fail(ErrorKind::InvalidInput, "cannot standardize an empty sequence");
  std::vector<int> order(seq.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  std::vector<int> word(seq.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    if (rank > 0 && seq[order[rank]] == seq[order[rank - 1]]) {
      fail(ErrorKind::InvalidInput, "duplicate entry " + std::to_string(seq[order[rank]]));
    }
    word[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation::from_word(std::move(word));
}

InversionSet inversion_set(const Permutation& w) {
  InversionSet out;
  const int n = static_cast<int>(w.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) > w(j)) out.push_back({i, j});
    }
  }
  return out;
}

bool is_inversion(const Permutation& w, int i, int j) {
  return i < j && w(i) > w(j);
}

LehmerCode lehmer_code(const Permutation& w) {
  const int n = static_cast<int>(w.size());
  LehmerCode c{std::vector<int>(n, 0)};
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (w(i) > w(j)) ++c.entries[i - 1];
    }
  }
  return c;
}

Permutation decode_lehmer(const LehmerCode& c) {
  const int n = static_cast<int>(c.size());
  if (n == 0) fail(ErrorKind::InvalidInput, "empty Lehmer code");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> word;
  word.reserve(n);
  for (int k = 1; k <= n; ++k) {
    const int entry = c[k - 1];
    if (entry < 0 || entry > n - k) {
      fail(ErrorKind::InvalidInput, "invalid code: entry " + std::to_string(k) + " is " +
                                        std::to_string(entry) + ", must lie in 0.." +
                                        std::to_string(n - k));
    }
    word.push_back(pool[entry]);
    pool.erase(pool.begin() + entry);
  }
  return Permutation::from_word(std::move(word));
}

std::string format_code(const LehmerCode& c) {
  std::ostringstream os;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k > 0) os << ' ';
    os << c[k];
  }
  return os.str();
}

int c_between(const Permutation& w, int i, int j) {
  const int n = static_cast<int>(w.size());
  if (i < 1 || j > n || i >= j) {
    fail(ErrorKind::InvalidArgument, "c_between needs 1 <= i < j <= n, got i=" +
                                         std::to_string(i) + " j=" + std::to_string(j));
  }
  int count = 0;
  for (int k = i + 1; k < j; ++k) {
    if (w(i) > w(k)) ++count;
  }
  return count;
}

std::optional<std::vector<int>> find_pattern(const Permutation& w, const Permutation& p) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(p.size());
  if (k > n) return std::nullopt;

  std::vector<int> chosen(k, 0);  // 0-based positions
  // Depth-first search in lexicographic order of position tuples: the first
  // complete tuple found is the smallest witness.
  auto extend = [&](auto&& self, int depth, int start) -> bool {
    if (depth == k) return true;
    for (int q = start; q <= n - (k - depth); ++q) {
      const int v = w.word()[q];
      bool consistent = true;
      for (int t = 0; t < depth && consistent; ++t) {
        consistent = (w.word()[chosen[t]] < v) == (p.word()[t] < p.word()[depth]);
      }
      if (!consistent) continue;
      chosen[depth] = q;
      if (self(self, depth + 1, q + 1)) return true;
    }
    return false;
  };
  if (!extend(extend, 0, 0)) return std::nullopt;
  for (int& pos : chosen) ++pos;
  return chosen;
}

bool avoids_all(const Permutation& w, const PatternSet& ps) {
  return std::none_of(ps.begin(), ps.end(),
                      [&](const Permutation& p) { return contains_pattern(w, p); });
}

PatternSet parse_pattern_set(std::string_view text) {
  PatternSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto token = trim(text.substr(start, comma == std::string_view::npos ? text.npos
                                                                               : comma - start));
    out.push_back(parse_permutation(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) fail(ErrorKind::InvalidArgument, "factorial out of range: " + std::to_string(n));
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

Permutation permutation_at_rank(int n, std::uint64_t rank) {
  if (rank >= factorial(n)) fail(ErrorKind::InvalidArgument, "rank out of range");
  LehmerCode digits{std::vector<int>(n, 0)};
  for (int k = n; k >= 1; --k) {
    const auto base = static_cast<std::uint64_t>(n - k + 1);
    digits.entries[k - 1] = static_cast<int>(rank % base);
    rank /= base;
  }
  return decode_lehmer(digits);
}

PermutationRange::PermutationRange(int n) : PermutationRange(n, 0, 0) {
  last_ = factorial(n);
}

PermutationRange::PermutationRange(int n, std::uint64_t first, std::uint64_t last)
    : n_(n), first_(first), last_(last) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "S_n needs n >= 1");
  if (n > 20) fail(ErrorKind::InvalidArgument, "S_n sweep supports n <= 20");
  if (last_ != 0 && (first_ > last_ || last_ > factorial(n))) {
    fail(ErrorKind::InvalidArgument, "rank range out of bounds");
  }
}

PermutationRange::iterator PermutationRange::begin() const {
  iterator it;
  if (count() == 0) return it;
  it.current_ = permutation_at_rank(n_, first_);
  it.remaining_ = count();
  return it;
}

PermutationRange::iterator& PermutationRange::iterator::operator++() {
  if (--remaining_ == 0) {
    current_.reset();
  } else {
    std::next_permutation(current_->word_.begin(), current_->word_.end());
  }
  return *this;
}

}  // namespace mposet
