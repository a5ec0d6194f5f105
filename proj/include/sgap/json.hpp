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

#ifndef SGAP_JSON_HPP_
#define SGAP_JSON_HPP_

#include <string>

#include <json.hpp>

#include "sgap/cfrac.hpp"
#include "sgap/cover.hpp"
#include "sgap/entropy.hpp"
#include "sgap/gapset.hpp"
#include "sgap/language.hpp"

namespace sgap {

using Json = nlohmann::ordered_json;

// Rounds to 15 significant digits so reruns print identical bytes.
double round15(double x);

Json to_json(const Classification& c);
Json to_json(const EntropyValue& e);
Json to_json(const EntropyInterval& e);
Json to_json(const ZetaData& z);
Json to_json(const LabeledGraph& G);
Json to_json(const ConjugacyVerdict& v);
Json to_json(const ConjugacyReport& r);
Json to_json(const SurveyStats& s);
Json to_json(const Error& e);

Json real_to_set_json(const GapSet& g, const std::string& input);
Json real_from_set_json(const GapSet& g);

// Manifest: {"items": [{"set": spec, "expect": {field: "true"|"false"|"unknown"}}]}.
// Every item is classified, and fully represented items also get the
// gap-equation vs spectral-radius and zeta vs enumeration cross-checks.
struct CorpusReport {
  Json report;
  bool ok = true;
};

CorpusReport corpus_run(const Json& manifest, unsigned zeta_order = 12);

}  // namespace sgap

#endif  // SGAP_JSON_HPP_
