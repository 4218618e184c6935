// mposet: command-line front end over the libmposet C API.
//
// Exit status: 0 success, 1 claim failure or disagreement, 2 usage or input
// error, 3 resource cap exceeded, 4 internal error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mposet/mposet.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;
constexpr int kExitInternal = 4;

struct PermDeleter {
  void operator()(mpo_perm* p) const { mpo_perm_free(p); }
};
struct MPosetDeleter {
  void operator()(mpo_mposet* m) const { mpo_mposet_free(m); }
};
struct ReportDeleter {
  void operator()(mpo_report* r) const { mpo_report_free(r); }
};
struct StringDeleter {
  void operator()(char* s) const { mpo_string_free(s); }
};

using PermPtr = std::unique_ptr<mpo_perm, PermDeleter>;
using MPosetPtr = std::unique_ptr<mpo_mposet, MPosetDeleter>;
using ReportPtr = std::unique_ptr<mpo_report, ReportDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

// Thrown by the helpers below once a diagnostic has been printed.
struct ExitRequest {
  int code;
};

int exit_code_for(mpo_status status) {
  switch (status) {
    case MPO_OK: return kExitPass;
    case MPO_ERR_INVALID_INPUT:
    case MPO_ERR_INVALID_ARGUMENT: return kExitUsage;
    case MPO_ERR_RESOURCE_LIMIT: return kExitCap;
    default: return kExitInternal;
  }
}

void check(mpo_status status) {
  if (status == MPO_OK) return;
  std::cerr << "mposet: " << mpo_status_name(status) << ": " << mpo_last_error() << '\n';
  throw ExitRequest{exit_code_for(status)};
}

PermPtr parse(const std::string& text) {
  mpo_perm* p = nullptr;
  check(mpo_perm_parse(text.c_str(), &p));
  return PermPtr(p);
}

MPosetPtr build(const mpo_perm* w) {
  mpo_mposet* m = nullptr;
  check(mpo_mposet_build(w, &m));
  return MPosetPtr(m);
}

std::string take(char* s) {
  StringPtr owned(s);
  return owned ? std::string(owned.get()) : std::string();
}

template <typename Fn>
std::string fetch(Fn fn) {
  char* out = nullptr;
  check(fn(&out));
  return take(out);
}

mpo_format format_from(const std::string& name) {
  if (name == "json") return MPO_FORMAT_JSON;
  if (name == "dot") return MPO_FORMAT_DOT;
  return MPO_FORMAT_TEXT;
}

bool all_length_three(const std::string& patterns) {
  std::size_t start = 0;
  while (true) {
    const auto comma = patterns.find(',', start);
    const auto token = patterns.substr(start, comma == std::string::npos ? std::string::npos
                                                                         : comma - start);
    if (token.size() != 3) return false;
    if (comma == std::string::npos) return true;
    start = comma + 1;
  }
}

int run_count(int n_max, const std::optional<std::string>& avoid, bool b2_free,
              unsigned workers, bool override_cap) {
  if (!avoid && !b2_free) {
    std::cerr << "mposet count: pass --avoid PATTERNS and/or --b2-free\n";
    return kExitUsage;
  }
  const bool catalan_column = avoid && !b2_free && all_length_three(*avoid);
  // Rows are held back so a cap error leaves no partial table.
  std::ostringstream out;
  if (avoid && b2_free) {
    out << "n,avoiders,b2_free,match\n";
  } else if (catalan_column) {
    out << "n,count,catalan,match\n";
  } else {
    out << "n,count\n";
  }
  bool all_match = true;
  for (int n = 1; n <= n_max; ++n) {
    std::uint64_t avoiders = 0;
    std::uint64_t b2 = 0;
    if (avoid) check(mpo_count_avoiders(n, avoid->c_str(), workers, override_cap, &avoiders));
    if (b2_free) check(mpo_count_b2_free(n, workers, override_cap, &b2));
    if (avoid && b2_free) {
      const bool match = avoiders == b2;
      all_match = all_match && match;
      out << n << ',' << avoiders << ',' << b2 << ',' << (match ? "true" : "false") << '\n';
    } else if (catalan_column) {
      std::uint64_t expected = 0;
      check(mpo_catalan(n, &expected));
      const bool match = avoiders == expected;
      all_match = all_match && match;
      out << n << ',' << avoiders << ',' << expected << ',' << (match ? "true" : "false")
                << '\n';
    } else {
      out << n << ',' << (avoid ? avoiders : b2) << '\n';
    }
  }
  std::cout << out.str();
  return all_match ? kExitPass : kExitFailure;
}

int run_check(const std::string& text) {
  const auto w = parse(text);
  const auto m = build(w.get());
  int b2_free = 0;
  int avoids = 0;
  check(mpo_mposet_b2_free(m.get(), &b2_free));
  check(mpo_avoids_patterns(w.get(), "3412,3421", &avoids));
  const bool agree = (b2_free != 0) == (avoids != 0);
  std::cout << "b2_free=" << (b2_free ? "true" : "false")
            << " avoids_3412_3421=" << (avoids ? "true" : "false")
            << " agree=" << (agree ? "true" : "false") << '\n';
  return agree ? kExitPass : kExitFailure;
}

int run_verify(const std::string& claim, int n, unsigned workers, std::uint32_t max_witnesses,
               bool override_cap, const std::string& format) {
  mpo_verify_options options;
  mpo_verify_options_init(&options);
  options.n = n;
  options.workers = workers;
  options.max_witnesses = max_witnesses;
  options.override_cap = override_cap;
  mpo_report* raw = nullptr;
  check(mpo_verify(claim.c_str(), &options, &raw));
  const ReportPtr report(raw);
  std::cout << fetch([&](char** out) {
    return mpo_report_format(report.get(), format_from(format), out);
  });
  return mpo_report_passed(report.get()) ? kExitPass : kExitFailure;
}

void list_claims() {
  for (std::size_t k = 0; k < mpo_claim_count(); ++k) {
    std::cout << mpo_claim_id(k) << " (cap " << mpo_claim_default_cap(k)
              << "): " << mpo_claim_description(k) << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Join-irreducible posets of weak-order intervals and their B2 patterns"};
  app.require_subcommand(1);

  std::string perm_text;
  std::string format = "json";
  int n = 1;
  unsigned workers = 1;
  std::uint32_t max_witnesses = 100;
  bool override_cap = false;
  std::string claim;
  bool list = false;
  std::optional<std::string> avoid;
  bool b2_free = false;

  auto* code_cmd = app.add_subcommand("code", "print the Lehmer code");
  code_cmd->add_option("permutation", perm_text, "one-line notation")->required();

  auto* inv_cmd = app.add_subcommand("inv", "print the inversion set");
  inv_cmd->add_option("permutation", perm_text, "one-line notation")->required();

  auto* mposet_cmd = app.add_subcommand("mposet", "export M_w as JSON or DOT");
  mposet_cmd->add_option("permutation", perm_text, "one-line notation")->required();
  mposet_cmd->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();

  std::string lambda_format = "text";
  auto* lambda_cmd = app.add_subcommand("lambda", "list the interval [e, w]");
  lambda_cmd->add_option("permutation", perm_text, "one-line notation")->required();
  lambda_cmd->add_option("--format", lambda_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  auto* check_cmd = app.add_subcommand("check", "compare B2-freeness with 3412/3421 avoidance");
  check_cmd->add_option("permutation", perm_text, "one-line notation")->required();

  std::string verify_format = "text";
  auto* verify_cmd = app.add_subcommand("verify", "exhaustively verify a claim over S_n");
  verify_cmd->add_option("claim", claim, "claim id, e.g. MAIN_THEOREM");
  verify_cmd->add_flag("--list", list, "list claim ids and exit");
  verify_cmd->add_option("--n", n, "permutation size")->check(CLI::Range(1, 20));
  verify_cmd->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 1024u));
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  verify_cmd->add_option("--max-witnesses", max_witnesses, "counterexamples kept")
      ->capture_default_str();
  verify_cmd->add_flag("--override-cap", override_cap, "allow n above the claim's cap");

  int n_max = 1;
  auto* count_cmd = app.add_subcommand("count", "count avoiders or B2-free M_w, CSV output");
  count_cmd->add_option("--n", n_max, "largest n")->check(CLI::Range(1, 20))->required();
  count_cmd->add_option("--avoid", avoid, "comma-separated patterns, e.g. 3412,3421");
  count_cmd->add_flag("--b2-free", b2_free, "count permutations whose M_w is B2-free");
  count_cmd->add_option("--workers", workers, "worker threads")->check(CLI::Range(1u, 1024u));
  count_cmd->add_flag("--override-cap", override_cap, "allow n above the cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (code_cmd->parsed()) {
      const auto w = parse(perm_text);
      std::cout << fetch([&](char** out) { return mpo_lehmer_format(w.get(), out); }) << '\n';
    } else if (inv_cmd->parsed()) {
      const auto w = parse(perm_text);
      std::cout << fetch([&](char** out) { return mpo_inversions_format(w.get(), out); }) << '\n';
    } else if (mposet_cmd->parsed()) {
      const auto w = parse(perm_text);
      const auto m = build(w.get());
      std::cout << fetch([&](char** out) {
        return mpo_mposet_export(m.get(), format_from(format), out);
      });
    } else if (lambda_cmd->parsed()) {
      const auto w = parse(perm_text);
      std::cout << fetch([&](char** out) {
        return mpo_lambda_format(w.get(), format_from(lambda_format), out);
      });
    } else if (check_cmd->parsed()) {
      return run_check(perm_text);
    } else if (verify_cmd->parsed()) {
      if (list) {
        list_claims();
        return kExitPass;
      }
      if (claim.empty()) {
        std::cerr << "mposet verify: a claim id is required (see --list)\n";
        return kExitUsage;
      }
      return run_verify(claim, n, workers, max_witnesses, override_cap, verify_format);
    } else if (count_cmd->parsed()) {
      return run_count(n_max, avoid, b2_free, workers, override_cap);
    }
  } catch (const ExitRequest& e) {
    return e.code;
  }
  return kExitPass;
}
