#include "mposet/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <exception>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "mposet/error.hpp"
#include "mposet/join_irr.hpp"
#include "mposet/patterns.hpp"
#include "mposet/poset.hpp"
#include "mposet/weak_order.hpp"

namespace mposet {

namespace {

struct ClaimInfo {
  Claim claim;
  std::string_view id;
  int cap;
  std::string_view description;
};

constexpr std::array<ClaimInfo, 12> kClaims{{
    {Claim::B2FreeIffAvoidance, "MAIN_THEOREM", 8,
     "M_w is B2-free iff w avoids both 3412 and 3421"},
    {Claim::CodeLatticeDistributive, "THEOREM_2_1", 5,
     "Lehmer codes of [e,w] form a distributive lattice under the product order"},
    {Claim::JoinIrreduciblesMatch, "THEOREM_2_3", 5,
     "join-irreducibles of the code lattice are exactly the vectors of M_w"},
    {Claim::IdealIsomorphism, "BIRKHOFF", 5,
     "ideal -> componentwise max is an order isomorphism J(M_w) -> c([e,w])"},
    {Claim::ClosedFormComparability, "LEMMA_2_4", 7,
     "closed-form comparability agrees with the product order on every label pair"},
    {Claim::Avoid231ChainUnion, "COROLLARY_2_5", 7,
     "231-avoiding w gives M_w as a disjoint union of chains"},
    {Claim::ComparabilityShift, "LEMMA_3_4", 7,
     "m[i,a] > m[j,b] implies m[i,a-1] > m[j,b-1] and m[i,a+1] > m[j,b+1] when defined"},
    {Claim::DescentInclusion, "LEMMA_3_5", 7,
     "m[i,p] > m[j,q] implies {k>j : w(i)>w(k)} is contained in {l>j : w(j)>w(l)}"},
    {Claim::ChainLengthBound, "LEMMA_3_6", 7, "m[i,p] > m[j,q] implies c_j >= c_i + q - p"},
    {Claim::C4ImpliesParallelogram, "LEMMA_3_7", 7,
     "a C4-parallelogram in M_w implies a parallelogram"},
    {Claim::B2IffParallelogram, "LEMMA_3_8", 7,
     "M_w has a B2 iff it has a parallelogram, and parallelograms induce B2"},
    {Claim::ParallelogramIffPattern, "LEMMA_3_9", 7,
     "M_w has a parallelogram iff w contains 3412 or 3421 (each direction checked)"},
}};

const ClaimInfo& info(Claim claim) {
  return *std::find_if(kClaims.begin(), kClaims.end(),
                       [&](const ClaimInfo& c) { return c.claim == claim; });
}

const PatternSet& b2_patterns() {
  static const PatternSet ps{parse_permutation("3412"), parse_permutation("3421")};
  return ps;
}

const Permutation& pattern_231() {
  static const Permutation p = parse_permutation("231");
  return p;
}

std::string label_text(Label l) {
  return "m[" + std::to_string(l.i) + "," + std::to_string(l.x) + "]";
}

std::string labels_text(const std::array<Label, 4>& labels) {
  std::string out = "{";
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k > 0) out += ' ';
    out += label_text(labels[k]);
  }
  return out + "}";
}

std::string codes_text(const std::vector<LehmerCode>& codes) {
  std::string out = "{";
  for (std::size_t k = 0; k < codes.size(); ++k) {
    if (k > 0) out += ' ';
    out += "(" + format_code(codes[k]) + ")";
  }
  return out + "}";
}

// Accumulates one shard's findings.
class Sink {
 public:
  explicit Sink(std::size_t max_witnesses) : max_witnesses_(max_witnesses) {}

  void count(std::uint64_t k = 1) { subchecks_ += k; }

  void fail(const Permutation& w, std::string detail) {
    ++failures_;
    if (witnesses_.size() < max_witnesses_) witnesses_.push_back({w, std::move(detail)});
  }

  std::uint64_t subchecks_ = 0;
  std::uint64_t failures_ = 0;
  std::vector<Counterexample> witnesses_;

 private:
  std::size_t max_witnesses_;
};

// Sweeps S_n split across `workers` contiguous rank ranges and returns the
// per-shard results in rank order.
template <typename Shard, typename Work>
std::vector<Shard> run_sharded(int n, unsigned workers, const Shard& prototype, Work work) {
  const std::uint64_t total = factorial(n);
  const std::uint64_t shards = std::clamp<std::uint64_t>(workers, 1, total);
  std::vector<Shard> results(shards, prototype);
  std::vector<std::exception_ptr> errors(shards);
  {
    std::vector<std::jthread> pool;
    for (std::uint64_t s = 0; s < shards; ++s) {
      const std::uint64_t first = total * s / shards;
      const std::uint64_t last = total * (s + 1) / shards;
      pool.emplace_back([&, s, first, last] {
        try {
          for (const auto& w : PermutationRange(n, first, last)) work(w, results[s]);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

void check_b2_iff_avoidance(const Permutation& w, Sink& sink) {
  const MPoset m = build_M(w);
  const auto b2 = find_B2(m.order());
  const bool avoids = avoids_all(w, b2_patterns());
  sink.count();
  if (b2.has_value() != avoids) return;
  std::string detail = "b2_free=" + std::string(b2 ? "false" : "true") +
                       " avoids_3412_3421=" + (avoids ? "true" : "false");
  if (b2) detail += " b2=" + labels_text(witness_labels(m, *b2));
  sink.fail(w, detail);
}

void check_distributive(const Permutation& w, Sink& sink) {
  const CodeLattice lattice = code_lattice(w);
  sink.count(lattice.size());
  const LehmerCode zero{std::vector<int>(w.size(), 0)};
  if (!lattice.contains(zero) || !lattice.contains(lehmer_code(w))) {
    sink.fail(w, "lattice misses the code of e or of w");
  } else if (!is_join_meet_closed(lattice)) {
    sink.fail(w, "codes not closed under componentwise max/min");
  } else if (!is_distributive(lattice)) {
    sink.fail(w, "distributive law fails");
  }
}

void check_join_irreducibles(const Permutation& w, Sink& sink) {
  const auto from_lattice = lattice_join_irreducibles(code_lattice(w));
  const MPoset m = build_M(w);
  std::vector<LehmerCode> from_formula;
  for (const auto& e : m.elements()) from_formula.push_back({e.vec});
  std::sort(from_formula.begin(), from_formula.end());
  sink.count(from_lattice.size());
  if (from_lattice != from_formula) {
    sink.fail(w, "lattice " + codes_text(from_lattice) + " vs formula " + codes_text(from_formula));
  }
}

void check_birkhoff(const Permutation& w, Sink& sink) {
  const MPoset m = build_M(w);
  const CodeLattice lattice = code_lattice(w);
  sink.count(lattice.size());
  if (!birkhoff_isomorphic(m, lattice)) {
    sink.fail(w, "ideal map is not an order isomorphism onto " + std::to_string(lattice.size()) +
                     " codes");
  }
}

void check_closed_form(const Permutation& w, Sink& sink) {
  const MPoset m = build_M(w);
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = 0; b < m.size(); ++b) {
      const Label la = m.elements()[a].label;
      const Label lb = m.elements()[b].label;
      sink.count();
      if (leq_closed_form(w, la, lb) != m.order().less(b, a)) {
        sink.fail(w, "closed form and product order disagree on " + label_text(lb) + " < " +
                         label_text(la));
      }
    }
  }
}

void check_231_chain_union(const Permutation& w, Sink& sink) {
  if (contains_pattern(w, pattern_231())) return;
  sink.count();
  if (!is_disjoint_union_of_chains(build_M(w).order())) {
    sink.fail(w, "231-avoiding but M_w is not a disjoint union of chains");
  }
}

// Calls visit(i, p, j, q) for every i < j with m_{i,p} > m_{j,q}.
template <typename Visit>
void for_each_cross_comparability(const MPoset& m, Visit visit) {
  const int n = static_cast<int>(m.omega().size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int p = 1; p <= m.chain_length(i); ++p) {
        for (int q = 1; q <= m.chain_length(j); ++q) {
          if (m.order().less(m.at(j, q), m.at(i, p))) visit(i, p, j, q);
        }
      }
    }
  }
}

void check_comparability_shift(const Permutation& w, Sink& sink) {
  const MPoset m = build_M(w);
  const auto& order = m.order();
  for_each_cross_comparability(m, [&](int i, int a, int j, int b) {
    if (a >= 2 && b >= 2) {
      sink.count();
      if (!order.less(m.at(j, b - 1), m.at(i, a - 1))) {
        sink.fail(w, label_text({i, a}) + " > " + label_text({j, b}) + " but not " +
                         label_text({i, a - 1}) + " > " + label_text({j, b - 1}));
      }
    }
    if (a < m.chain_length(i) && b < m.chain_length(j)) {
      sink.count();
      if (!order.less(m.at(j, b + 1), m.at(i, a + 1))) {
        sink.fail(w, label_text({i, a}) + " > " + label_text({j, b}) + " but not " +
                         label_text({i, a + 1}) + " > " + label_text({j, b + 1}));
      }
    }
  });
}

void check_descent_inclusion(const Permutation& w, Sink& sink) {
  const MPoset m = build_M(w);
  const int n = static_cast<int>(w.size());
  for_each_cross_comparability(m, [&](int i, int p, int j, int q) {
    sink.count();
    for (int k = j + 1; k <= n; ++k) {
      if (w(i) > w(k) && !(w(j) > w(k))) {
        sink.fail(w, label_text({i, p}) + " > " + label_text({j, q}) + " but position " +
                         std::to_string(k) + " is below w(i) and not below w(j)");
        return;
      }
    }
  });
}

void check_chain_length_bound(const Permutation& w, Sink& sink) {
  const MPoset m = build_M(w);
  for (const auto& hi : m.elements()) {
    for (const auto& lo : m.elements()) {
      const auto a = m.at(hi.label.i, hi.label.x);
      const auto b = m.at(lo.label.i, lo.label.x);
      if (!m.order().less(b, a)) continue;
      sink.count();
      const int ci = m.chain_length(hi.label.i);
      const int cj = m.chain_length(lo.label.i);
      if (cj < ci + lo.label.x - hi.label.x) {
        sink.fail(w, label_text(hi.label) + " > " + label_text(lo.label) + " but c_j=" +
                         std::to_string(cj) + " < c_i + q - p = " +
                         std::to_string(ci + lo.label.x - hi.label.x));
      }
    }
  }
}

void check_c4_implies_parallelogram(const Permutation& w, Sink& sink) {
  const MPoset m = build_M(w);
  const auto c4 = find_c4_parallelogram(m);
  if (!c4) return;
  sink.count();
  if (!find_parallelogram(m)) {
    sink.fail(w, "C4-parallelogram " + labels_text(witness_labels(m, *c4)) +
                     " but no parallelogram");
  }
}

void check_b2_iff_parallelogram(const Permutation& w, Sink& sink) {
  const MPoset m = build_M(w);
  const auto b2 = find_B2(m.order());
  const auto par = find_parallelogram(m);
  sink.count();
  if (b2.has_value() != par.has_value()) {
    sink.fail(w, b2 ? "B2 " + labels_text(witness_labels(m, *b2)) + " but no parallelogram"
                    : "parallelogram " + labels_text(witness_labels(m, *par)) + " but no B2");
    return;
  }
  if (par) {
    const auto& e = par->elements;
    const FinitePoset induced = FinitePoset::from_predicate(
        4, [&](std::size_t a, std::size_t b) { return m.order().leq(e[a], e[b]); });
    if (!contains_poset_pattern(induced, FinitePoset::boolean_b2())) {
      sink.fail(w, "parallelogram " + labels_text(witness_labels(m, *par)) +
                       " does not induce B2");
    }
  }
}

void check_parallelogram_iff_pattern(const Permutation& w, Sink& sink) {
  const MPoset m = build_M(w);
  const auto par = find_parallelogram(m);
  const bool has_pattern = !avoids_all(w, b2_patterns());
  sink.count();
  if (par && !has_pattern) {
    sink.fail(w, "parallelogram " + labels_text(witness_labels(m, *par)) +
                     " but w avoids 3412 and 3421");
  } else if (!par && has_pattern) {
    sink.fail(w, "w contains 3412 or 3421 but M_w has no parallelogram");
  }
}

using Check = void (*)(const Permutation&, Sink&);

Check check_for(Claim claim) {
  switch (claim) {
    case Claim::B2FreeIffAvoidance: return check_b2_iff_avoidance;
    case Claim::CodeLatticeDistributive: return check_distributive;
    case Claim::JoinIrreduciblesMatch: return check_join_irreducibles;
    case Claim::IdealIsomorphism: return check_birkhoff;
    case Claim::ClosedFormComparability: return check_closed_form;
    case Claim::Avoid231ChainUnion: return check_231_chain_union;
    case Claim::ComparabilityShift: return check_comparability_shift;
    case Claim::DescentInclusion: return check_descent_inclusion;
    case Claim::ChainLengthBound: return check_chain_length_bound;
    case Claim::C4ImpliesParallelogram: return check_c4_implies_parallelogram;
    case Claim::B2IffParallelogram: return check_b2_iff_parallelogram;
    case Claim::ParallelogramIffPattern: return check_parallelogram_iff_pattern;
  }
  return nullptr;
}

void check_size(int n, int cap, bool override_cap, std::string_view what) {
  if (n < 1) fail(ErrorKind::InvalidArgument, "n must be at least 1");
  if (n > 20) fail(ErrorKind::InvalidArgument, "n must be at most 20");
  if (n > cap && !override_cap) {
    fail(ErrorKind::ResourceLimit, std::string(what) + ": n=" + std::to_string(n) +
                                       " exceeds the cap of " + std::to_string(cap) +
                                       "; pass --override-cap to run anyway");
  }
}

}  // namespace

std::span<const Claim> all_claims() {
  static const auto claims = [] {
    std::array<Claim, kClaims.size()> out{};
    for (std::size_t k = 0; k < kClaims.size(); ++k) out[k] = kClaims[k].claim;
    return out;
  }();
  return claims;
}

std::string_view to_string(Claim claim) { return info(claim).id; }

std::optional<Claim> claim_from_string(std::string_view id) {
  for (const auto& c : kClaims) {
    if (c.id == id) return c.claim;
  }
  return std::nullopt;
}

std::string_view describe(Claim claim) { return info(claim).description; }

int default_cap(Claim claim) { return info(claim).cap; }

VerificationReport verify_claim(Claim claim, const VerifyOptions& options) {
  check_size(options.n, default_cap(claim), options.override_cap, to_string(claim));
  const auto start = std::chrono::steady_clock::now();
  const Check check = check_for(claim);
  const auto shards = run_sharded(options.n, options.workers, Sink(options.max_witnesses),
                                  [&](const Permutation& w, Sink& sink) { check(w, sink); });

  VerificationReport report;
  report.claim = std::string(to_string(claim));
  report.n = options.n;
  report.checked = factorial(options.n);
  for (const auto& shard : shards) {
    report.subchecks += shard.subchecks_;
    report.counterexample_count += shard.failures_;
    for (const auto& ce : shard.witnesses_) {
      if (report.counterexamples.size() < options.max_witnesses) report.counterexamples.push_back(ce);
    }
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerificationReport verify_claim(std::string_view claim_id, const VerifyOptions& options) {
  const auto claim = claim_from_string(claim_id);
  if (!claim) fail(ErrorKind::InvalidArgument, "unknown claim '" + std::string(claim_id) + "'");
  return verify_claim(*claim, options);
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << report.claim << " n=" << report.n << " checked=" << report.checked
     << " subchecks=" << report.subchecks << " counterexamples=" << report.counterexample_count
     << ' ' << (report.passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& ce : report.counterexamples) {
    os << "  " << format_permutation(ce.omega) << ": " << ce.detail << '\n';
  }
  return os.str();
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["claim"] = report.claim;
  j["n"] = report.n;
  j["checked"] = report.checked;
  j["subchecks"] = report.subchecks;
  j["passed"] = report.passed();
  j["counterexample_count"] = report.counterexample_count;
  j["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& ce : report.counterexamples) {
    j["counterexamples"].push_back(
        {{"omega", std::vector<int>(ce.omega.word().begin(), ce.omega.word().end())},
         {"detail", ce.detail}});
  }
  j["elapsed_seconds"] = report.elapsed_seconds;
  return j.dump(2) + "\n";
}

CountRow count_avoiders(int n, const PatternSet& ps, unsigned workers, bool override_cap) {
  check_size(n, kCountAvoidersCap, override_cap, "count_avoiders");
  if (ps.empty()) fail(ErrorKind::InvalidArgument, "pattern set is empty");
  const auto shards = run_sharded(n, workers, std::uint64_t{0},
                                  [&](const Permutation& w, std::uint64_t& count) {
                                    if (avoids_all(w, ps)) ++count;
                                  });
  std::string predicate = "avoid:";
  for (std::size_t k = 0; k < ps.size(); ++k) {
    if (k > 0) predicate += ',';
    predicate += format_permutation(ps[k]);
  }
  std::uint64_t total = 0;
  for (auto c : shards) total += c;
  return {n, predicate, total};
}

CountRow count_b2_free(int n, unsigned workers, bool override_cap) {
  check_size(n, kCountB2FreeCap, override_cap, "count_b2_free");
  const auto shards = run_sharded(n, workers, std::uint64_t{0},
                                  [&](const Permutation& w, std::uint64_t& count) {
                                    if (!find_B2(build_M(w).order())) ++count;
                                  });
  std::uint64_t total = 0;
  for (auto c : shards) total += c;
  return {n, "b2_free", total};
}

std::uint64_t catalan(int n) {
  if (n < 0 || n > 30) fail(ErrorKind::InvalidArgument, "catalan index out of range");
  // C_{k+1} = C_k * 2(2k+1) / (k+2), exact at every step
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

}  // namespace mposet
