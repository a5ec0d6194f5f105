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

// sgap: command-line front end over the C API.
//
// Exit codes: 0 success, 1 library error (a JSON {"error": ...} object is
// printed on stdout), 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgap/sgap.h"

#ifndef SGAP_DEFAULT_CORPUS
#define SGAP_DEFAULT_CORPUS "data/corpus.json"
#endif

namespace {

constexpr const char* kGrammar =
    "Gap-set grammar (used everywhere): `finite:s0,s1,...` | `delta:d0[,d1,...];m1[,m2,...]` | "
    "`cofinite:exclude=a,b,...` | "
    "`family:{squares|primes|powers2},horizon=N[,bounded=yes:M|no]`";

constexpr const char* kRealGrammar =
    "Reals: rat:P/Q | quad:a,b,c,d for (a + b*sqrt(d))/c | dec:X[,prec=P] | "
    "cf:[a0;a1,a2,(m1,m2)]";

// Thrown after a failing C call; the error JSON has already been captured.
struct Failed {
  std::string json;
};

void check(sgap_status s) {
  if (s == SGAP_OK) return;
  char* err = nullptr;
  sgap_last_error_json(&err);
  Failed f{err ? err : "{\"error\":\"Internal\"}"};
  sgap_string_free(err);
  throw f;
}

struct GapsetDeleter {
  void operator()(sgap_gapset* g) const { sgap_gapset_free(g); }
};
struct CoverDeleter {
  void operator()(sgap_cover* c) const { sgap_cover_free(c); }
};
using GapsetPtr = std::unique_ptr<sgap_gapset, GapsetDeleter>;
using CoverPtr = std::unique_ptr<sgap_cover, CoverDeleter>;

GapsetPtr parse(const std::string& spec) {
  sgap_gapset* g = nullptr;
  check(sgap_gapset_parse(spec.c_str(), &g));
  return GapsetPtr(g);
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  sgap_string_free(s);
  return out;
}

template <typename F>
std::string json_call(F&& f) {
  char* out = nullptr;
  check(f(&out));
  return take(out);
}

void print_classification_text(const std::string& json) {
  const auto j = nlohmann::ordered_json::parse(json);
  for (const auto& [key, value] : j.items()) {
    if (key == "witnesses") continue;
    std::cout << key << std::string(20 - key.size(), ' ') << value.get<std::string>();
    if (j["witnesses"].contains(key)) std::cout << "  (" << j["witnesses"][key].get<std::string>() << ")";
    std::cout << '\n';
  }
}

void print_survey_text(const std::string& json) {
  const auto j = nlohmann::ordered_json::parse(json);
  for (const auto& [key, value] : j.items()) std::cout << key << ": " << value.dump() << '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Failed{nlohmann::json{{"error", "ParseError"},
                                {"message", "cannot read manifest '" + path + "'"}}
                     .dump()};
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sgap: S-gap shifts, their covers, entropy, zeta functions and real-line map", "sgap"};
  app.set_version_flag("--version", std::string("sgap ") + sgap_version());
  app.footer(std::string(kGrammar) + "\n" + kRealGrammar);
  app.require_subcommand(1);

  std::string set_spec, a_spec, b_spec, to_set, from_set, dot_file, manifest = SGAP_DEFAULT_CORPUS;
  bool json = false;
  double tol = 1e-12;
  std::optional<std::size_t> bounds;
  unsigned order = 10, count = 10, horizon = 64;
  uint64_t samples = 10000, seed = 1;

  auto* classify = app.add_subcommand("classify", "Three-valued dynamical classification");
  classify->add_option("--set", set_spec, "Gap set")->required();
  classify->add_flag("--json", json, "JSON output");

  auto* entropy = app.add_subcommand("entropy", "Entropy from the gap equation");
  entropy->add_option("--set", set_spec, "Gap set")->required();
  entropy->add_option("--tol", tol, "Root tolerance")->check(CLI::PositiveNumber);
  entropy->add_option("--bounds", bounds, "Certified interval from a k-element prefix");

  auto* graph = app.add_subcommand("graph", "Fischer cover");
  graph->add_option("--set", set_spec, "Gap set")->required();
  auto* dot_opt = graph->add_option("--dot", dot_file, "Write DOT to this file ('-' for stdout)");
  graph->add_flag("--json", json, "JSON output")->excludes(dot_opt);

  auto* zeta = app.add_subcommand("zeta", "Zeta function and periodic point counts");
  zeta->add_option("--set", set_spec, "Gap set")->required();
  zeta->add_option("--order", order, "Number of terms")->check(CLI::Range(1u, 62u));

  auto* words = app.add_subcommand("words", "Block counts |B_n| for n = 1..N");
  words->add_option("--set", set_spec, "Gap set")->required();
  words->add_option("--count", count, "N")->check(CLI::Range(1u, 30u));

  auto* conjugate = app.add_subcommand("conjugate", "Conjugacy of two gap shifts");
  conjugate->add_option("--a", a_spec, "First gap set")->required();
  conjugate->add_option("--b", b_spec, "Second gap set")->required();

  auto* real = app.add_subcommand("real", "Real-line parametrization");
  auto* to_opt = real->add_option("--to-set", to_set, "Real number to gap set");
  auto* from_opt = real->add_option("--from-set", from_set, "Gap set to real number");
  to_opt->excludes(from_opt);
  real->require_option(1);

  auto* survey = app.add_subcommand("survey", "Mixing frequency over random rationals");
  survey->add_option("--samples", samples, "Sample count")->check(CLI::PositiveNumber);
  survey->add_option("--horizon", horizon, "CF depth")->check(CLI::PositiveNumber);
  survey->add_option("--seed", seed, "RNG seed");
  survey->add_flag("--json", json, "JSON output");

  auto* corpus = app.add_subcommand("corpus", "Run a classification manifest");
  corpus->add_option("manifest", manifest, "Manifest path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) {
      auto g = parse(set_spec);
      std::string out = json_call([&](char** o) { return sgap_classify_json(g.get(), o); });
      if (json) {
        std::cout << out << '\n';
      } else {
        print_classification_text(out);
      }
    } else if (entropy->parsed()) {
      auto g = parse(set_spec);
      std::cout << json_call([&](char** o) {
        return bounds ? sgap_entropy_bounds_json(g.get(), *bounds, tol, o)
                      : sgap_entropy_json(g.get(), tol, o);
      }) << '\n';
    } else if (graph->parsed()) {
      auto g = parse(set_spec);
      sgap_cover* raw = nullptr;
      check(sgap_cover_build(g.get(), &raw));
      CoverPtr cover(raw);
      if (json) {
        std::cout << json_call([&](char** o) { return sgap_cover_json(cover.get(), o); }) << '\n';
      } else {
        std::string dot = json_call([&](char** o) { return sgap_cover_dot(cover.get(), o); });
        if (dot_file.empty() || dot_file == "-") {
          std::cout << dot;
        } else {
          std::ofstream f(dot_file);
          f << dot;
          if (!f) {
            std::cerr << "sgap: cannot write " << dot_file << '\n';
            return 2;
          }
        }
      }
    } else if (zeta->parsed()) {
      auto g = parse(set_spec);
      std::cout << json_call([&](char** o) { return sgap_zeta_json(g.get(), order, o); }) << '\n';
    } else if (words->parsed()) {
      auto g = parse(set_spec);
      std::cout << json_call([&](char** o) { return sgap_words_json(g.get(), count, o); }) << '\n';
    } else if (conjugate->parsed()) {
      auto a = parse(a_spec);
      auto b = parse(b_spec);
      std::cout << json_call([&](char** o) { return sgap_conjugate_json(a.get(), b.get(), o); })
                << '\n';
    } else if (real->parsed()) {
      if (!to_set.empty()) {
        std::cout << json_call([&](char** o) { return sgap_real_to_set_json(to_set.c_str(), o); })
                  << '\n';
      } else {
        auto g = parse(from_set);
        std::cout << json_call([&](char** o) { return sgap_real_from_set_json(g.get(), o); })
                  << '\n';
      }
    } else if (survey->parsed()) {
      std::string out =
          json_call([&](char** o) { return sgap_survey_json(samples, horizon, seed, o); });
      if (json) {
        std::cout << out << '\n';
      } else {
        print_survey_text(out);
      }
    } else if (corpus->parsed()) {
      const std::string text = read_file(manifest);
      int ok = 0;
      std::cout << json_call([&](char** o) { return sgap_corpus_run_json(text.c_str(), &ok, o); })
                << '\n';
      return ok ? 0 : 1;
    }
  } catch (const Failed& f) {
    std::cout << f.json << '\n';
    return 1;
  }
  return 0;
}
