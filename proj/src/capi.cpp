#include "mposet/mposet.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "json.hpp"

#include "mposet/error.hpp"
#include "mposet/export.hpp"
#include "mposet/join_irr.hpp"
#include "mposet/perm.hpp"
#include "mposet/poset.hpp"
#include "mposet/verify.hpp"
#include "mposet/weak_order.hpp"

struct mpo_perm {
  mposet::Permutation value;
};

struct mpo_mposet {
  mposet::MPoset value;
};

struct mpo_report {
  mposet::VerificationReport value;
};

namespace {

thread_local std::string last_error;

mpo_status set_error(mpo_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename Fn>
mpo_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const mposet::Error& e) {
    switch (e.kind()) {
      case mposet::ErrorKind::InvalidInput: return set_error(MPO_ERR_INVALID_INPUT, e.what());
      case mposet::ErrorKind::InvalidArgument: return set_error(MPO_ERR_INVALID_ARGUMENT, e.what());
      case mposet::ErrorKind::ResourceLimit: return set_error(MPO_ERR_RESOURCE_LIMIT, e.what());
    }
    return set_error(MPO_ERR_INTERNAL, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(MPO_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(MPO_ERR_INTERNAL, e.what());
  }
}

mpo_status null_error(const char* what) {
  return set_error(MPO_ERR_NULL_POINTER, std::string("null pointer: ") + what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Range>
mpo_status copy_out(const Range& values, int32_t* out, size_t capacity) {
  if (!out) return null_error("out");
  if (capacity < values.size()) {
    return set_error(MPO_ERR_BUFFER_TOO_SMALL, "buffer holds " + std::to_string(capacity) +
                                                   " entries, need " +
                                                   std::to_string(values.size()));
  }
  size_t k = 0;
  for (auto v : values) out[k++] = static_cast<int32_t>(v);
  return MPO_OK;
}

}  // namespace

extern "C" {

const char* mpo_version(void) { return "1.0.0"; }

const char* mpo_last_error(void) { return last_error.c_str(); }

const char* mpo_status_name(mpo_status status) {
  switch (status) {
    case MPO_OK: return "ok";
    case MPO_ERR_INVALID_INPUT: return "invalid input";
    case MPO_ERR_INVALID_ARGUMENT: return "invalid argument";
    case MPO_ERR_RESOURCE_LIMIT: return "resource limit";
    case MPO_ERR_NULL_POINTER: return "null pointer";
    case MPO_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case MPO_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void mpo_string_free(char* s) { std::free(s); }

mpo_status mpo_perm_parse(const char* text, mpo_perm** out) {
  if (!text) return null_error("text");
  if (!out) return null_error("out");
  return guarded([&] {
    *out = new mpo_perm{mposet::parse_permutation(text)};
    return MPO_OK;
  });
}

mpo_status mpo_perm_from_word(const int32_t* word, size_t n, mpo_perm** out) {
  if (!word && n > 0) return null_error("word");
  if (!out) return null_error("out");
  return guarded([&] {
    *out = new mpo_perm{mposet::Permutation::from_word(std::vector<int>(word, word + n))};
    return MPO_OK;
  });
}

mpo_status mpo_decode_lehmer(const int32_t* code, size_t n, mpo_perm** out) {
  if (!code && n > 0) return null_error("code");
  if (!out) return null_error("out");
  return guarded([&] {
    *out = new mpo_perm{mposet::decode_lehmer({std::vector<int>(code, code + n)})};
    return MPO_OK;
  });
}

void mpo_perm_free(mpo_perm* p) { delete p; }

size_t mpo_perm_size(const mpo_perm* p) { return p ? p->value.size() : 0; }

mpo_status mpo_perm_word(const mpo_perm* p, int32_t* out, size_t capacity) {
  if (!p) return null_error("p");
  return copy_out(p->value.word(), out, capacity);
}

mpo_status mpo_perm_format(const mpo_perm* p, char** out) {
  if (!p) return null_error("p");
  if (!out) return null_error("out");
  return guarded([&] {
    *out = dup_string(mposet::format_permutation(p->value));
    return MPO_OK;
  });
}

mpo_status mpo_lehmer_code(const mpo_perm* p, int32_t* out, size_t capacity) {
  if (!p) return null_error("p");
  return copy_out(mposet::lehmer_code(p->value).entries, out, capacity);
}

mpo_status mpo_lehmer_format(const mpo_perm* p, char** out) {
  if (!p) return null_error("p");
  if (!out) return null_error("out");
  return guarded([&] {
    *out = dup_string(mposet::format_code(mposet::lehmer_code(p->value)));
    return MPO_OK;
  });
}

mpo_status mpo_inversion_count(const mpo_perm* p, size_t* out) {
  if (!p) return null_error("p");
  if (!out) return null_error("out");
  *out = mposet::inversion_set(p->value).size();
  return MPO_OK;
}

mpo_status mpo_inversions_format(const mpo_perm* p, char** out) {
  if (!p) return null_error("p");
  if (!out) return null_error("out");
  return guarded([&] {
    std::string text;
    for (const auto& inv : mposet::inversion_set(p->value)) {
      if (!text.empty()) text += ' ';
      text += "(" + std::to_string(inv.i) + "," + std::to_string(inv.j) + ")";
    }
    *out = dup_string(text);
    return MPO_OK;
  });
}

mpo_status mpo_contains_pattern(const mpo_perm* w, const mpo_perm* pattern, int* found,
                                int32_t* positions) {
  if (!w) return null_error("w");
  if (!pattern) return null_error("pattern");
  if (!found) return null_error("found");
  return guarded([&] {
    const auto hit = mposet::find_pattern(w->value, pattern->value);
    *found = hit.has_value();
    if (hit && positions) {
      for (size_t k = 0; k < hit->size(); ++k) positions[k] = (*hit)[k];
    }
    return MPO_OK;
  });
}

mpo_status mpo_avoids_patterns(const mpo_perm* w, const char* patterns, int* avoids) {
  if (!w) return null_error("w");
  if (!patterns) return null_error("patterns");
  if (!avoids) return null_error("avoids");
  return guarded([&] {
    *avoids = mposet::avoids_all(w->value, mposet::parse_pattern_set(patterns));
    return MPO_OK;
  });
}

mpo_status mpo_lambda_format(const mpo_perm* w, mpo_format format, char** out) {
  if (!w) return null_error("w");
  if (!out) return null_error("out");
  return guarded([&] {
    const auto interval = mposet::lambda_interval(w->value);
    std::string text;
    if (format == MPO_FORMAT_TEXT) {
      for (const auto& s : interval) text += mposet::format_permutation(s) + "\n";
    } else if (format == MPO_FORMAT_JSON) {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& s : interval) {
        j.push_back({{"word", std::vector<int>(s.word().begin(), s.word().end())},
                     {"code", mposet::lehmer_code(s).entries}});
      }
      text = j.dump(2) + "\n";
    } else {
      return set_error(MPO_ERR_INVALID_ARGUMENT, "lambda supports text and json output");
    }
    *out = dup_string(text);
    return MPO_OK;
  });
}

mpo_status mpo_mposet_build(const mpo_perm* w, mpo_mposet** out) {
  if (!w) return null_error("w");
  if (!out) return null_error("out");
  return guarded([&] {
    *out = new mpo_mposet{mposet::build_M(w->value)};
    return MPO_OK;
  });
}

void mpo_mposet_free(mpo_mposet* m) { delete m; }

size_t mpo_mposet_size(const mpo_mposet* m) { return m ? m->value.size() : 0; }

mpo_status mpo_mposet_element(const mpo_mposet* m, size_t index, int32_t* i, int32_t* x,
                              int32_t* vec, size_t capacity) {
  if (!m) return null_error("m");
  if (index >= m->value.size()) {
    return set_error(MPO_ERR_INVALID_ARGUMENT, "element index " + std::to_string(index) +
                                                   " out of range");
  }
  const auto& e = m->value.elements()[index];
  if (i) *i = e.label.i;
  if (x) *x = e.label.x;
  return vec ? copy_out(e.vec, vec, capacity) : MPO_OK;
}

mpo_status mpo_mposet_less(const mpo_mposet* m, size_t a, size_t b, int* out) {
  if (!m) return null_error("m");
  if (!out) return null_error("out");
  if (a >= m->value.size() || b >= m->value.size()) {
    return set_error(MPO_ERR_INVALID_ARGUMENT, "element index out of range");
  }
  *out = m->value.order().less(a, b);
  return MPO_OK;
}

mpo_status mpo_mposet_b2_free(const mpo_mposet* m, int* out) {
  if (!m) return null_error("m");
  if (!out) return null_error("out");
  return guarded([&] {
    *out = !mposet::find_B2(m->value.order()).has_value();
    return MPO_OK;
  });
}

mpo_status mpo_mposet_export(const mpo_mposet* m, mpo_format format, char** out) {
  if (!m) return null_error("m");
  if (!out) return null_error("out");
  return guarded([&] {
    switch (format) {
      case MPO_FORMAT_JSON: *out = dup_string(mposet::to_json(mposet::make_export(m->value))); break;
      case MPO_FORMAT_DOT: *out = dup_string(mposet::to_dot(m->value)); break;
      default: return set_error(MPO_ERR_INVALID_ARGUMENT, "mposet export supports json and dot");
    }
    return MPO_OK;
  });
}

void mpo_verify_options_init(mpo_verify_options* options) {
  if (!options) return;
  const mposet::VerifyOptions defaults;
  options->n = defaults.n;
  options->workers = defaults.workers;
  options->max_witnesses = static_cast<uint32_t>(defaults.max_witnesses);
  options->override_cap = 0;
}

size_t mpo_claim_count(void) { return mposet::all_claims().size(); }

const char* mpo_claim_id(size_t index) {
  if (index >= mposet::all_claims().size()) return nullptr;
  return mposet::to_string(mposet::all_claims()[index]).data();
}

const char* mpo_claim_description(size_t index) {
  if (index >= mposet::all_claims().size()) return nullptr;
  return mposet::describe(mposet::all_claims()[index]).data();
}

int32_t mpo_claim_default_cap(size_t index) {
  if (index >= mposet::all_claims().size()) return -1;
  return mposet::default_cap(mposet::all_claims()[index]);
}

mpo_status mpo_verify(const char* claim_id, const mpo_verify_options* options,
                      mpo_report** out) {
  if (!claim_id) return null_error("claim_id");
  if (!options) return null_error("options");
  if (!out) return null_error("out");
  return guarded([&] {
    mposet::VerifyOptions opts;
    opts.n = options->n;
    opts.workers = options->workers;
    opts.max_witnesses = options->max_witnesses;
    opts.override_cap = options->override_cap != 0;
    *out = new mpo_report{mposet::verify_claim(std::string_view(claim_id), opts)};
    return MPO_OK;
  });
}

void mpo_report_free(mpo_report* r) { delete r; }

int mpo_report_passed(const mpo_report* r) { return r && r->value.passed(); }

uint64_t mpo_report_checked(const mpo_report* r) { return r ? r->value.checked : 0; }

uint64_t mpo_report_counterexample_count(const mpo_report* r) {
  return r ? r->value.counterexample_count : 0;
}

mpo_status mpo_report_format(const mpo_report* r, mpo_format format, char** out) {
  if (!r) return null_error("r");
  if (!out) return null_error("out");
  return guarded([&] {
    switch (format) {
      case MPO_FORMAT_TEXT: *out = dup_string(mposet::report_to_text(r->value)); break;
      case MPO_FORMAT_JSON: *out = dup_string(mposet::report_to_json(r->value)); break;
      default: return set_error(MPO_ERR_INVALID_ARGUMENT, "reports support text and json");
    }
    return MPO_OK;
  });
}

mpo_status mpo_count_avoiders(int32_t n, const char* patterns, uint32_t workers,
                              int override_cap, uint64_t* out) {
  if (!patterns) return null_error("patterns");
  if (!out) return null_error("out");
  return guarded([&] {
    *out = mposet::count_avoiders(n, mposet::parse_pattern_set(patterns), workers,
                                  override_cap != 0)
               .count;
    return MPO_OK;
  });
}

mpo_status mpo_count_b2_free(int32_t n, uint32_t workers, int override_cap, uint64_t* out) {
  if (!out) return null_error("out");
  return guarded([&] {
    *out = mposet::count_b2_free(n, workers, override_cap != 0).count;
    return MPO_OK;
  });
}

mpo_status mpo_catalan(int32_t n, uint64_t* out) {
  if (!out) return null_error("out");
  return guarded([&] {
    *out = mposet::catalan(n);
    return MPO_OK;
  });
}

}  // extern "C"
