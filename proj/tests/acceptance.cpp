// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "mposet/join_irr.hpp"
#include "mposet/perm.hpp"
#include "mposet/verify.hpp"

using namespace mposet;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

VerifyOptions options(int n, unsigned workers = 4) {
  VerifyOptions o;
  o.n = n;
  o.workers = workers;
  return o;
}

std::string run_command(const std::string& command) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return out;
  std::array<char, 4096> buffer{};
  std::size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) out.append(buffer.data(), got);
  pclose(pipe);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Outcome main_theorem_sweep() {
  const auto start = std::chrono::steady_clock::now();
  std::uint64_t counterexamples = 0;
  std::uint64_t checked_at_8 = 0;
  for (int k = 1; k <= 8; ++k) {
    const auto r = verify_main_theorem(options(k));
    counterexamples += r.counterexample_count;
    if (k == 8) checked_at_8 = r.checked;
  }
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "k=1..8, " << counterexamples << " counterexamples, " << checked_at_8
     << " checked at k=8, " << elapsed << "s (limit 120s)";
  return {counterexamples == 0 && checked_at_8 == 40320 && elapsed < 120.0, os.str()};
}

Outcome comparability_oracle() {
  const auto start = std::chrono::steady_clock::now();
  const auto r = verify_claim(Claim::ClosedFormComparability, options(6));
  const double elapsed = seconds_since(start);
  std::ostringstream os;
  os << r.checked << " permutations, " << r.subchecks << " label pairs, "
     << r.counterexample_count << " disagreements, " << elapsed << "s (limit 10s)";
  return {r.passed() && r.checked == 720 && elapsed < 10.0, os.str()};
}

Outcome lattice_suite() {
  bool pass = true;
  std::ostringstream os;
  for (Claim c : {Claim::CodeLatticeDistributive, Claim::JoinIrreduciblesMatch,
                  Claim::IdealIsomorphism}) {
    const auto r = verify_claim(c, options(5));
    pass = pass && r.passed() && r.checked == 120;
    os << to_string(c) << ": " << r.counterexample_count << "/" << r.checked << " failures; ";
  }
  return {pass, os.str()};
}

Outcome lemma_chain() {
  bool pass = true;
  std::ostringstream os;
  for (Claim c : {Claim::ComparabilityShift, Claim::DescentInclusion, Claim::ChainLengthBound,
                  Claim::C4ImpliesParallelogram, Claim::B2IffParallelogram,
                  Claim::ParallelogramIffPattern}) {
    const auto r = verify_claim(c, options(6));
    pass = pass && r.passed() && r.checked == 720;
    os << to_string(c) << "=" << r.counterexample_count << " ";
  }
  return {pass, os.str() + "counterexamples over 720 permutations each"};
}

Outcome chain_union_and_catalan() {
  bool pass = true;
  std::ostringstream os;
  for (int n = 1; n <= 7; ++n) pass = pass && verify_claim(Claim::Avoid231ChainUnion, options(n)).passed();
  const std::uint64_t expected[] = {1, 2, 5, 14, 42, 132, 429};
  os << "chain unions " << (pass ? "ok" : "FAILED") << "; 231-avoiders:";
  for (int n = 1; n <= 7; ++n) {
    const auto row = count_avoiders(n, {parse_permutation("231")}, 4);
    os << ' ' << row.count;
    pass = pass && row.count == expected[n - 1];
  }
  return {pass, os.str() + " (expected 1 2 5 14 42 132 429)"};
}

Outcome count_cross_check() {
  bool pass = true;
  std::ostringstream os;
  const PatternSet b2 = parse_pattern_set("3412,3421");
  for (int n = 1; n <= 7; ++n) {
    const auto free_count = count_b2_free(n, 4).count;
    const auto avoid_count = count_avoiders(n, b2, 4).count;
    pass = pass && free_count == avoid_count;
    os << n << ":" << free_count << "/" << avoid_count << ' ';
  }
  return {pass, os.str() + "(b2_free/avoiders)"};
}

Outcome structural_invariants() {
  std::uint64_t bad = 0;
  std::uint64_t total = 0;
  for (const auto& w : all_permutations(7)) {
    ++total;
    if (build_M(w).size() != inversion_set(w).size()) ++bad;
    if (decode_lehmer(lehmer_code(w)) != w) ++bad;
  }
  return {bad == 0 && total == 5040,
          std::to_string(bad) + " violations over " + std::to_string(total) + " permutations"};
}

Outcome golden_exports() {
  const std::string cli = MPOSET_CLI_PATH;
  const std::string fixtures = MPOSET_FIXTURE_DIR;
  const bool json_ok = run_command("'" + cli + "' mposet 3412 --format json") ==
                       read_file(fixtures + "/mposet_3412.json");
  const bool dot_ok = run_command("'" + cli + "' mposet 321 --format dot") ==
                      read_file(fixtures + "/mposet_321.dot");
  return {json_ok && dot_ok, std::string("3412 json ") + (json_ok ? "matches" : "DIFFERS") +
                                 ", 321 dot " + (dot_ok ? "matches" : "DIFFERS")};
}

}  // namespace

int main() {
  const std::array<std::pair<const char*, std::function<Outcome()>>, 8> criteria{{
      {"AC1 main theorem sweep", main_theorem_sweep},
      {"AC2 comparability oracle equivalence", comparability_oracle},
      {"AC3 lattice suite", lattice_suite},
      {"AC4 lemma chain", lemma_chain},
      {"AC5 231-avoiders: chain unions and Catalan counts", chain_union_and_catalan},
      {"AC6 count cross-check", count_cross_check},
      {"AC7 structural invariants", structural_invariants},
      {"AC8 golden exports", golden_exports},
  }};
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome outcome{false, ""};
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    failures += !outcome.pass;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << ": " << outcome.detail
              << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
