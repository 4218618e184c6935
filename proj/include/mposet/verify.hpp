#pragma once

// Exhaustive sweeps over S_n that evaluate each structural claim about M_w
// as an executable predicate, plus pattern-class counters.
//
// A sweep splits the lexicographic rank range [0, n!) into contiguous
// shards, one per worker; partial reports are merged in rank order so the
// result does not depend on the worker count.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mposet/perm.hpp"

namespace mposet {

enum class Claim {
  B2FreeIffAvoidance,       // MAIN_THEOREM: M_w B2-free <=> w avoids 3412 and 3421
  CodeLatticeDistributive,  // THEOREM_2_1: c([e,w]) is a distributive lattice
  JoinIrreduciblesMatch,    // THEOREM_2_3: cover-count join-irreducibles are M_w
  IdealIsomorphism,         // BIRKHOFF: J(M_w) -> c([e,w]) via componentwise max
  ClosedFormComparability,  // LEMMA_2_4: closed form agrees with product order
  Avoid231ChainUnion,       // COROLLARY_2_5: 231-avoiding => disjoint chains
  ComparabilityShift,       // LEMMA_3_4: m_{i,a} > m_{j,b} shifts to a-1,b-1 / a+1,b+1
  DescentInclusion,         // LEMMA_3_5: right inversions of i within those of j
  ChainLengthBound,         // LEMMA_3_6: c_j >= c_i + q - p
  C4ImpliesParallelogram,   // LEMMA_3_7
  B2IffParallelogram,       // LEMMA_3_8
  ParallelogramIffPattern,  // LEMMA_3_9: parallelogram <=> 3412 or 3421
};

/// Every claim in declaration order.
std::span<const Claim> all_claims();
std::string_view to_string(Claim claim);
std::optional<Claim> claim_from_string(std::string_view id);
std::string_view describe(Claim claim);
/// Largest n accepted without an override.
int default_cap(Claim claim);

struct VerifyOptions {
  int n = 1;
  unsigned workers = 1;
  std::size_t max_witnesses = 100;
  bool override_cap = false;
};

struct Counterexample {
  Permutation omega;
  std::string detail;
};

struct VerificationReport {
  std::string claim;
  int n = 0;
  /// Permutations swept (always n!).
  std::uint64_t checked = 0;
  /// Finer-grained cases evaluated (label pairs, patterns found, ...).
  std::uint64_t subchecks = 0;
  std::uint64_t counterexample_count = 0;
  /// At most max_witnesses entries, in lexicographic order of omega.
  std::vector<Counterexample> counterexamples;
  double elapsed_seconds = 0.0;

  bool passed() const noexcept { return counterexample_count == 0; }
};

/// Throws ResourceLimit when n exceeds the claim's cap without override, and
/// InvalidArgument when n < 1.
VerificationReport verify_claim(Claim claim, const VerifyOptions& options);
VerificationReport verify_claim(std::string_view claim_id, const VerifyOptions& options);
inline VerificationReport verify_main_theorem(const VerifyOptions& options) {
  return verify_claim(Claim::B2FreeIffAvoidance, options);
}

std::string report_to_text(const VerificationReport& report);
/// Fields mirror VerificationReport plus "passed".
std::string report_to_json(const VerificationReport& report);

inline constexpr int kCountAvoidersCap = 11;
inline constexpr int kCountB2FreeCap = 8;

struct CountRow {
  int n;
  std::string predicate;
  std::uint64_t count;
};

/// |{w in S_n : w avoids every pattern in ps}|.
CountRow count_avoiders(int n, const PatternSet& ps, unsigned workers = 1,
                        bool override_cap = false);
/// |{w in S_n : M_w is B2-free}|, using only the poset detector.
CountRow count_b2_free(int n, unsigned workers = 1, bool override_cap = false);

std::uint64_t catalan(int n);

}  // namespace mposet
