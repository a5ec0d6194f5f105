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

#ifndef SGAP_LANGUAGE_HPP_
#define SGAP_LANGUAGE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgap/gapset.hpp"
#include "sgap/polynomial.hpp"

namespace sgap {

// Words are strings over {'0','1'}.

// w = 0^a 1 0^{g_1} 1 ... 1 0^b is admissible iff every internal gap g_i is in
// S and a, b (or |w| when w has no 1) are each at most max S when S is finite.
bool is_admissible(std::string_view w, const GapSet& g);

// u^infinity lies in X(S): all cyclic gaps in S; the all-zero word only when S
// is infinite.
bool is_periodic_point(std::string_view u, const GapSet& g);

// |B_n(X(S))| by pruned enumeration. n <= 30.
uint64_t count_blocks(const GapSet& g, unsigned n);

// (1/n) log |B_n|. Bounded below by the entropy and decreasing to it.
double block_entropy_estimate(const GapSet& g, unsigned n);
// log(|B_n| / |B_m|) / (n - m) with m = n / 2; the prefactor of |B_n| cancels.
double growth_rate_estimate(const GapSet& g, unsigned n);

// Number of points fixed by the n-th power of the shift, by enumerating the
// length-n words whose periodization is admissible. n <= 24.
uint64_t periodic_points_bruteforce(const GapSet& g, unsigned n);

int mobius(Int n);
// q_n = sum_{d | n} mu(n/d) p_d. p[0] is p_1.
std::vector<Int> mobius_inversion(const std::vector<Int>& p);

struct ZetaData {
  unsigned order = 0;
  std::vector<Int> p;  // p[0] = p_1
  std::vector<Int> q;  // q[0] = q_1
  std::optional<RationalFunction> closed_form;  // absent for sampled input
};

// 1/(1 - f) for finite S, 1/((1 - t)(1 - f)) for infinite S, where
// f = sum_{s in S} t^{s+1}; the periodic tail is summed geometrically and the
// result reduced. Throws for sampled sets.
RationalFunction zeta_closed_form(const GapSet& g);

// p_1..p_order from the logarithmic derivative of a zeta function.
std::vector<Int> periodic_points_from_zeta(const RationalFunction& zeta, unsigned order);

// Closed form for finite and eventually periodic S (order <= 62); brute force
// for sampled S (order <= 24).
ZetaData zeta_series(const GapSet& g, unsigned order);

std::vector<Int> least_period_counts(const ZetaData& z);

// y_i = table(x_{i-memory} ... x_{i+anticipation}).
struct SlidingBlockCode {
  unsigned memory = 0;
  unsigned anticipation = 0;
  // Indexed by the window read as a binary number, first symbol most
  // significant.
  std::vector<uint8_t> table;
  std::optional<GapSet> source;
  std::optional<GapSet> target;

  unsigned window() const { return memory + anticipation + 1; }
  uint8_t operator()(std::string_view window) const;
};

// Phi(w) = 1 iff w = 0^n, memory 0, anticipation n - 1; maps X({0,n}) onto
// X({n,n+1,...}).
SlidingBlockCode make_conjugacy_code(Int n);

SlidingBlockCode identity_code();

// Image of the periodic point u^infinity, as its length-|u| period word.
// Throws Domain if the code has a source shift and u^infinity is not in it.
std::string apply_code(const SlidingBlockCode& code, std::string_view u);

// Image of a finite word: length |w| - memory - anticipation.
std::string apply_code_to_word(const SlidingBlockCode& code, std::string_view w);

struct ConjugacyReport {
  bool passed = false;
  std::string failure;         // empty when passed
  std::string counterexample;  // a source word or period word
};

// (a) every admissible source word of length L maps into the target language;
// (b) on period-m points, m <= L, the code is injective into the target and
// both sides have the same count.
ConjugacyReport verify_conjugacy(const SlidingBlockCode& code, const GapSet& source,
                                 const GapSet& target, unsigned L);

// verify_conjugacy for make_conjugacy_code(n) between {0,n} and {n,n+1,...}.
ConjugacyReport verify_conjugacy_code(Int n, unsigned L);

}  // namespace sgap

#endif  // SGAP_LANGUAGE_HPP_
