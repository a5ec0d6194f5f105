// Copyright 2026 The sgap Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sgap/sgap.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "sgap/json.hpp"

#ifndef SGAP_VERSION
#define SGAP_VERSION "0.0.0"
#endif

struct sgap_gapset {
  sgap::GapSet g;
};

struct sgap_cover {
  sgap::LabeledGraph G;
};

namespace {

struct LastError {
  sgap_status status = SGAP_OK;
  std::string kind;
  std::string message;
  std::string hint;
};

thread_local LastError last_error;

sgap_status status_of(sgap::ErrorKind k) {
  switch (k) {
    case sgap::ErrorKind::Parse: return SGAP_ERR_PARSE;
    case sgap::ErrorKind::Domain: return SGAP_ERR_DOMAIN;
    case sgap::ErrorKind::Horizon: return SGAP_ERR_HORIZON;
    case sgap::ErrorKind::Undecidable: return SGAP_ERR_UNDECIDABLE;
    case sgap::ErrorKind::ExcludedPoint: return SGAP_ERR_EXCLUDED_POINT;
    case sgap::ErrorKind::Overflow: return SGAP_ERR_OVERFLOW;
    case sgap::ErrorKind::NoConvergence: return SGAP_ERR_NO_CONVERGENCE;
  }
  return SGAP_ERR_INTERNAL;
}

sgap_status fail(sgap_status s, std::string kind, std::string message, std::string hint = {}) {
  last_error = {s, std::move(kind), std::move(message), std::move(hint)};
  return s;
}

sgap_status invalid(const char* what) {
  return fail(SGAP_ERR_INVALID_ARGUMENT, "InvalidArgument", std::string(what) + " is null");
}

// Runs f, turning every exception into a status plus last_error.
template <typename F>
sgap_status guarded(F&& f) {
  try {
    f();
    return SGAP_OK;
  } catch (const sgap::Error& e) {
    return fail(status_of(e.kind()), std::string(sgap::error_kind_name(e.kind())), e.what(),
                e.hint());
  } catch (const nlohmann::json::exception& e) {
    return fail(SGAP_ERR_PARSE, "ParseError", e.what());
  } catch (const std::bad_alloc&) {
    return fail(SGAP_ERR_INTERNAL, "Internal", "out of memory");
  } catch (const std::exception& e) {
    return fail(SGAP_ERR_INTERNAL, "Internal", e.what());
  }
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

}  // namespace

extern "C" {

const char* sgap_version(void) { return SGAP_VERSION; }

const char* sgap_status_name(sgap_status status) {
  switch (status) {
    case SGAP_OK: return "OK";
    case SGAP_ERR_PARSE: return "ParseError";
    case SGAP_ERR_DOMAIN: return "DomainError";
    case SGAP_ERR_HORIZON: return "HorizonExceeded";
    case SGAP_ERR_UNDECIDABLE: return "Undecidable";
    case SGAP_ERR_EXCLUDED_POINT: return "ExcludedPoint";
    case SGAP_ERR_OVERFLOW: return "Overflow";
    case SGAP_ERR_NO_CONVERGENCE: return "NoConvergence";
    case SGAP_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case SGAP_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* sgap_last_error_message(void) { return last_error.message.c_str(); }

sgap_status sgap_last_error_json(char** out) {
  if (!out) return SGAP_ERR_INVALID_ARGUMENT;
  sgap::Json j{{"error", last_error.kind.empty() ? "OK" : last_error.kind},
               {"message", last_error.message}};
  if (!last_error.hint.empty()) j["hint"] = last_error.hint;
  *out = dup(j.dump());
  return SGAP_OK;
}

void sgap_string_free(char* s) { std::free(s); }

sgap_status sgap_gapset_parse(const char* spec, sgap_gapset** out) {
  if (!spec) return invalid("spec");
  if (!out) return invalid("out");
  return guarded([&] { *out = new sgap_gapset{sgap::parse_gapset(spec)}; });
}

void sgap_gapset_free(sgap_gapset* g) { delete g; }

sgap_status sgap_gapset_to_string(const sgap_gapset* g, char** out) {
  if (!g || !out) return invalid(!g ? "gapset" : "out");
  return guarded([&] { *out = dup(g->g.to_string()); });
}

sgap_status sgap_gapset_contains(const sgap_gapset* g, int64_t n, int* out) {
  if (!g || !out) return invalid(!g ? "gapset" : "out");
  return guarded([&] { *out = g->g.contains(n) ? 1 : 0; });
}

sgap_status sgap_mixing_gcd(const sgap_gapset* g, int64_t* out) {
  if (!g || !out) return invalid(!g ? "gapset" : "out");
  return guarded([&] { *out = sgap::mixing_gcd(g->g); });
}

sgap_status sgap_classify_json(const sgap_gapset* g, char** out) {
  if (!g || !out) return invalid(!g ? "gapset" : "out");
  return guarded([&] { *out = dup(sgap::to_json(sgap::classify(g->g)).dump()); });
}

sgap_status sgap_conjugate_json(const sgap_gapset* a, const sgap_gapset* b, char** out) {
  if (!a || !b || !out) return invalid(!out ? "out" : "gapset");
  return guarded([&] { *out = dup(sgap::to_json(sgap::are_conjugate(a->g, b->g)).dump()); });
}

sgap_status sgap_is_admissible(const sgap_gapset* g, const char* word, int* out) {
  if (!g || !word || !out) return invalid(!g ? "gapset" : !word ? "word" : "out");
  return guarded([&] { *out = sgap::is_admissible(word, g->g) ? 1 : 0; });
}

sgap_status sgap_count_blocks(const sgap_gapset* g, unsigned n, uint64_t* out) {
  if (!g || !out) return invalid(!g ? "gapset" : "out");
  return guarded([&] { *out = sgap::count_blocks(g->g, n); });
}

sgap_status sgap_words_json(const sgap_gapset* g, unsigned count, char** out) {
  if (!g || !out) return invalid(!g ? "gapset" : "out");
  return guarded([&] {
    if (count == 0) throw sgap::Error(sgap::ErrorKind::Domain, "words: count must be >= 1");
    sgap::Json j = sgap::Json::array();
    for (unsigned n = 1; n <= count; ++n) j.push_back(sgap::count_blocks(g->g, n));
    *out = dup(j.dump());
  });
}

sgap_status sgap_periodic_points(const sgap_gapset* g, unsigned n, uint64_t* out) {
  if (!g || !out) return invalid(!g ? "gapset" : "out");
  return guarded([&] { *out = sgap::periodic_points_bruteforce(g->g, n); });
}

sgap_status sgap_zeta_json(const sgap_gapset* g, unsigned order, char** out) {
  if (!g || !out) return invalid(!g ? "gapset" : "out");
  return guarded([&] { *out = dup(sgap::to_json(sgap::zeta_series(g->g, order)).dump()); });
}

sgap_status sgap_verify_conjugacy_code(int64_t n, unsigned L, int* passed) {
  if (!passed) return invalid("passed");
  return guarded([&] {
    const sgap::ConjugacyReport r = sgap::verify_conjugacy_code(n, L);
    *passed = r.passed ? 1 : 0;
  });
}

sgap_status sgap_entropy(const sgap_gapset* g, double tol, double* lambda, double* h) {
  if (!g) return invalid("gapset");
  return guarded([&] {
    const sgap::EntropyValue e = sgap::entropy(g->g, tol);
    if (lambda) *lambda = e.lambda;
    if (h) *h = e.h;
  });
}

sgap_status sgap_entropy_bounds(const sgap_gapset* g, size_t k, double tol, double* lo,
                                double* hi) {
  if (!g) return invalid("gapset");
  return guarded([&] {
    const sgap::EntropyInterval e = sgap::entropy_bounds(g->g, k, tol);
    if (lo) *lo = e.lo;
    if (hi) *hi = e.hi;
  });
}

sgap_status sgap_entropy_truncations(const sgap_gapset* g, const size_t* ks, size_t count,
                                     double tol, double* out) {
  if (!g || (count && (!ks || !out))) return invalid(!g ? "gapset" : "ks/out");
  return guarded([&] {
    const std::vector<double> v =
        sgap::entropy_truncations(g->g, std::vector<std::size_t>(ks, ks + count), tol);
    std::copy(v.begin(), v.end(), out);
  });
}

sgap_status sgap_entropy_json(const sgap_gapset* g, double tol, char** out) {
  if (!g || !out) return invalid(!g ? "gapset" : "out");
  return guarded([&] { *out = dup(sgap::to_json(sgap::entropy(g->g, tol)).dump()); });
}

sgap_status sgap_entropy_bounds_json(const sgap_gapset* g, size_t k, double tol, char** out) {
  if (!g || !out) return invalid(!g ? "gapset" : "out");
  return guarded([&] { *out = dup(sgap::to_json(sgap::entropy_bounds(g->g, k, tol)).dump()); });
}

sgap_status sgap_cover_build(const sgap_gapset* g, sgap_cover** out) {
  if (!g || !out) return invalid(!g ? "gapset" : "out");
  return guarded([&] { *out = new sgap_cover{sgap::fischer_cover(g->g)}; });
}

void sgap_cover_free(sgap_cover* c) { delete c; }

sgap_status sgap_cover_state_count(const sgap_cover* c, size_t* out) {
  if (!c || !out) return invalid(!c ? "cover" : "out");
  *out = c->G.state_count;
  return SGAP_OK;
}

sgap_status sgap_cover_period(const sgap_cover* c, int64_t* out) {
  if (!c || !out) return invalid(!c ? "cover" : "out");
  return guarded([&] { *out = sgap::period_and_classes(c->G).period; });
}

sgap_status sgap_cover_spectral_radius(const sgap_cover* c, double* out) {
  if (!c || !out) return invalid(!c ? "cover" : "out");
  return guarded([&] { *out = sgap::spectral_radius(c->G); });
}

sgap_status sgap_cover_left_closing_delay(const sgap_cover* c, int64_t max_delay, int64_t* out) {
  if (!c || !out) return invalid(!c ? "cover" : "out");
  return guarded([&] {
    const int64_t cap = max_delay < 0 ? sgap::default_delay_cap(c->G) : max_delay;
    *out = sgap::left_closing_delay(c->G, cap).value_or(-1);
  });
}

sgap_status sgap_cover_dot(const sgap_cover* c, char** out) {
  if (!c || !out) return invalid(!c ? "cover" : "out");
  return guarded([&] { *out = dup(sgap::to_dot(c->G)); });
}

sgap_status sgap_cover_json(const sgap_cover* c, char** out) {
  if (!c || !out) return invalid(!c ? "cover" : "out");
  return guarded([&] { *out = dup(sgap::to_json(c->G).dump()); });
}

namespace {

sgap::GapSet set_of_real(const char* real) {
  auto parsed = sgap::parse_real(real);
  if (auto cf = std::get_if<sgap::CFNumber>(&parsed)) return sgap::gapset_of_real(*cf);
  return sgap::gapset_of_real(std::get<sgap::ExactReal>(parsed));
}

}  // namespace

sgap_status sgap_real_to_set(const char* real, sgap_gapset** out) {
  if (!real || !out) return invalid(!real ? "real" : "out");
  return guarded([&] { *out = new sgap_gapset{set_of_real(real)}; });
}

sgap_status sgap_real_to_set_json(const char* real, char** out) {
  if (!real || !out) return invalid(!real ? "real" : "out");
  return guarded([&] { *out = dup(sgap::real_to_set_json(set_of_real(real), real).dump()); });
}

sgap_status sgap_real_from_set_json(const sgap_gapset* g, char** out) {
  if (!g || !out) return invalid(!g ? "gapset" : "out");
  return guarded([&] { *out = dup(sgap::real_from_set_json(g->g).dump()); });
}

sgap_status sgap_survey_json(uint64_t samples, unsigned horizon, uint64_t seed, char** out) {
  if (!out) return invalid("out");
  return guarded([&] { *out = dup(sgap::to_json(sgap::survey(samples, horizon, seed)).dump()); });
}

sgap_status sgap_corpus_run_json(const char* manifest, int* all_passed, char** report) {
  if (!manifest || !all_passed || !report) return invalid("argument");
  return guarded([&] {
    const sgap::CorpusReport r = sgap::corpus_run(sgap::Json::parse(manifest));
    *all_passed = r.ok ? 1 : 0;
    *report = dup(r.report.dump());
  });
}

}  // extern "C"
