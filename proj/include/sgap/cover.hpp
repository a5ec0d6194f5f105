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

#ifndef SGAP_COVER_HPP_
#define SGAP_COVER_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgap/gapset.hpp"

namespace sgap {

// R_a = {s - a : s in S, s >= a}, the follower-set surrogate of 1 0^a.
struct ResidualSet {
  std::optional<GapSet> set;  // empty optional: R_a is empty

  bool is_empty() const { return !set.has_value(); }
  bool operator==(const ResidualSet&) const = default;
};

ResidualSet residual(const GapSet& g, Int a);

struct Edge {
  std::size_t from = 0;
  int label = 0;
  std::size_t to = 0;
  bool operator==(const Edge&) const = default;
};

struct LabeledGraph {
  std::size_t state_count = 0;
  std::vector<Edge> edges;
  // R_i for state i when built by fischer_cover; empty for hand-built graphs.
  std::vector<GapSet> residuals;
  // The last 0-edge folds back to state u0 (infinite S). 0 and folds = false
  // for finite S, where the 0-spine simply ends.
  std::size_t u0 = 0;
  bool folds = false;
  // k and s_{k-1} of the canonical difference sequence (finite S: |S|, max S).
  std::size_t pre_count = 0;
  Int last_pre_element = 0;

  std::vector<std::vector<Int>> adjacency() const;
  std::optional<std::size_t> successor(std::size_t state, int label) const;
};

// States R_0, R_1, ... up to the first repeat (infinite S) or the first empty
// residual (finite S); 0-edges R_a -> R_{a+1}, 1-edges R_a -> R_0 iff 0 in R_a.
// Throws Undecidable for sampled input.
LabeledGraph fischer_cover(const GapSet& g);

bool is_right_resolving(const LabeledGraph& G);

// max{u0, s_{k-1} + 1}: the delay any AFT cover achieves.
Int delay_bound(const LabeledGraph& G);
// u0 + s_{k-1} + 2, the search cap.
Int default_delay_cap(const LabeledGraph& G);

// Smallest D <= max_delay such that two equally labelled paths of length D+1
// ending at the same state share their last edge; nullopt if none.
std::optional<Int> left_closing_delay(const LabeledGraph& G, Int max_delay);

struct PeriodClasses {
  Int period = 0;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
};

// Throws Domain when G is not strongly connected.
PeriodClasses period_and_classes(const LabeledGraph& G);

struct PftCertificate {
  Int period = 0;
  // Rotated so that every 1-labelled edge starts in classes[period - 1].
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::string> offenders;  // "1^(0)", ..., "1^(p-2)"
  bool proper = false;
};

// Requires a sofic, non-SFT, AFT, non-mixing S; throws Domain naming the
// failed hypothesis otherwise.
PftCertificate pft_certificate(const GapSet& g);

// Perron value of the adjacency matrix by power iteration (on A^p for period
// p). Throws NoConvergence after 100000 iterations.
double spectral_radius(const LabeledGraph& G, double tol = 1e-13);

// Labels of length-L paths equal the admissible words of length L.
bool graph_language_check(const LabeledGraph& G, const GapSet& g, unsigned L);

// Labels of all length-L paths starting at `state`, as a 2^L membership mask.
std::vector<char> path_labels(const LabeledGraph& G, std::size_t state, unsigned L);

std::string to_dot(const LabeledGraph& G);

}  // namespace sgap

#endif  // SGAP_COVER_HPP_
