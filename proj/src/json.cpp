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

#include "sgap/json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace sgap {

namespace {

constexpr std::pair<const char*, Verdict Classification::*> kFields[] = {
    {"sft", &Classification::sft},
    {"sofic", &Classification::sofic},
    {"aft", &Classification::aft},
    {"proper_pft", &Classification::proper_pft},
    {"mixing", &Classification::mixing},
    {"totally_transitive", &Classification::totally_transitive},
    {"almost_specified", &Classification::almost_specified},
    {"synchronized", &Classification::synchronized},
};

Json value_json(const ExactReal& x) {
  Json j;
  j["exact"] = to_string(x);
  j["decimal"] = round15(to_double(x));
  return j;
}

}  // namespace

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

Json to_json(const Classification& c) {
  Json j;
  for (const auto& [name, field] : kFields) j[name] = std::string(verdict_name(c.*field));
  Json w = Json::object();
  for (const auto& [name, _] : kFields) {
    if (auto it = c.witnesses.find(name); it != c.witnesses.end() && !it->second.empty()) {
      w[name] = it->second;
    }
  }
  j["witnesses"] = std::move(w);
  return j;
}

Json to_json(const EntropyValue& e) {
  return Json{{"lambda", round15(e.lambda)}, {"h", round15(e.h)}};
}

Json to_json(const EntropyInterval& e) {
  return Json{{"lo", round15(e.lo)}, {"hi", round15(e.hi)}};
}

Json to_json(const ZetaData& z) {
  Json j;
  j["p"] = z.p;
  j["q"] = z.q;
  j["closed_form"] = z.closed_form ? z.closed_form->to_string() : std::string("none");
  return j;
}

Json to_json(const LabeledGraph& G) {
  Json j;
  j["states"] = G.state_count;
  j["u0"] = G.u0;
  try {
    j["period"] = period_and_classes(G).period;
  } catch (const Error&) {
    j["period"] = nullptr;
  }
  j["folds"] = G.folds;
  j["right_resolving"] = is_right_resolving(G);
  Json res = Json::array();
  for (const GapSet& r : G.residuals) res.push_back(r.to_string());
  j["residuals"] = std::move(res);
  Json edges = Json::array();
  for (const Edge& e : G.edges) {
    edges.push_back(Json{{"from", "R" + std::to_string(e.from)},
                         {"label", std::to_string(e.label)},
                         {"to", "R" + std::to_string(e.to)}});
  }
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const ConjugacyVerdict& v) {
  Json j{{"conjugate", v.conjugate}, {"case", v.kind}};
  if (v.kind == "exceptional-pair") j["n"] = v.n;
  j["certificate"] = v.certificate;
  return j;
}

Json to_json(const ConjugacyReport& r) {
  Json j{{"passed", r.passed}};
  if (!r.passed) {
    j["failure"] = r.failure;
    j["counterexample"] = r.counterexample;
  }
  return j;
}

Json to_json(const SurveyStats& s) {
  return Json{{"samples", s.samples},
              {"excluded", s.excluded},
              {"mixing", s.mixing},
              {"non_mixing", s.non_mixing},
              {"undecided", s.undecided},
              {"sft", s.sft},
              {"mixing_frequency", round15(s.mixing_frequency())},
              {"horizon", s.horizon},
              {"seed", s.seed},
              {"denominator", s.denominator},
              {"range", s.range}};
}

Json to_json(const Error& e) {
  Json j{{"error", std::string(error_kind_name(e.kind()))}, {"message", e.what()}};
  if (!e.hint().empty()) j["hint"] = e.hint();
  return j;
}

Json real_to_set_json(const GapSet& g, const std::string& input) {
  Json j;
  j["input"] = input;
  j["set"] = g.to_string();
  j["cf"] = real_of_gapset(g).cf.to_string();
  j["classification"] = to_json(classify(g));
  return j;
}

Json real_from_set_json(const GapSet& g) {
  const RealImage img = real_of_gapset(g);
  Json j;
  j["set"] = g.to_string();
  j["cf"] = img.cf.to_string();
  j["value"] = img.value ? value_json(*img.value) : Json(nullptr);
  return j;
}

CorpusReport corpus_run(const Json& manifest, unsigned zeta_order) {
  if (!manifest.is_object() || !manifest.contains("items") || !manifest["items"].is_array()) {
    throw Error(ErrorKind::Parse, "manifest must be an object with an \"items\" array");
  }
  CorpusReport out;
  Json items = Json::array();
  std::size_t passed = 0;
  for (const Json& item : manifest["items"]) {
    if (!item.is_object() || !item.contains("set") || !item["set"].is_string()) {
      throw Error(ErrorKind::Parse, "manifest item needs a \"set\" string");
    }
    const std::string spec = item["set"].get<std::string>();
    Json r{{"set", spec}};
    bool ok = true;
    try {
      const GapSet g = parse_gapset(spec);
      const Classification c = classify(g);
      Json diff = Json::array();
      if (item.contains("expect")) {
        const Json& expect = item["expect"];
        if (!expect.is_object()) throw Error(ErrorKind::Parse, "\"expect\" must be an object");
        for (const auto& [field, want] : expect.items()) {
          const auto* slot = std::find_if(std::begin(kFields), std::end(kFields),
                                          [&](const auto& f) { return field == f.first; });
          if (slot == std::end(kFields)) {
            throw Error(ErrorKind::Parse, "unknown classification field '" + field + "'");
          }
          const std::string got(verdict_name(c.*(slot->second)));
          if (!want.is_string() || want.get<std::string>() != got) {
            diff.push_back(Json{{"field", field}, {"expected", want}, {"actual", got}});
          }
        }
      }
      r["classification"] = diff.empty() ? "pass" : "fail";
      if (!diff.empty()) {
        r["diff"] = std::move(diff);
        ok = false;
      }
      if (!g.is_sampled()) {
        const double lg = entropy(g).lambda;
        const double ls = spectral_radius(fischer_cover(g));
        const bool e_ok = std::abs(lg - ls) < 1e-6;
        r["entropy"] = Json{{"lambda_gap", round15(lg)}, {"lambda_spectral", round15(ls)},
                            {"pass", e_ok}};
        const std::vector<Int> closed = periodic_points_from_zeta(zeta_closed_form(g), zeta_order);
        Json bad = Json::array();
        for (unsigned n = 1; n <= zeta_order; ++n) {
          const auto brute = static_cast<Int>(periodic_points_bruteforce(g, n));
          if (closed[n - 1] != brute) {
            bad.push_back(Json{{"n", n}, {"closed_form", closed[n - 1]}, {"enumerated", brute}});
          }
        }
        const bool z_ok = bad.empty();
        r["zeta"] = Json{{"order", zeta_order}, {"pass", z_ok}};
        if (!z_ok) r["zeta"]["mismatches"] = std::move(bad);
        ok = ok && e_ok && z_ok;
      }
    } catch (const Error& e) {
      r["error"] = to_json(e);
      ok = false;
    }
    r["pass"] = ok;
    passed += ok ? 1 : 0;
    items.push_back(std::move(r));
  }
  out.ok = passed == items.size();
  out.report = Json{{"total", items.size()},
                    {"passed", passed},
                    {"failed", items.size() - passed},
                    {"items", std::move(items)}};
  return out;
}

}  // namespace sgap
