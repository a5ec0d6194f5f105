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

#ifndef SGAP_GAPSET_HPP_
#define SGAP_GAPSET_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sgap/error.hpp"

namespace sgap {

using Int = int64_t;

// S = {s_0 < s_1 < ... < s_n}, listed explicitly.
struct FiniteGaps {
  std::vector<Int> elements;
  bool operator==(const FiniteGaps&) const = default;
};

// S described by its difference sequence d_0, d_1, ... where d_0 = s_0 and
// d_n = s_n - s_{n-1}. `pre` holds d_0..d_{k-1} (k >= 1) and `period` the
// repeating block m_1..m_l.
struct PeriodicGaps {
  std::vector<Int> pre;
  std::vector<Int> period;
  bool operator==(const PeriodicGaps&) const = default;
};

enum class Bound { Yes, No, Unknown };

struct TailMeta {
  Bound delta_bounded = Bound::Unknown;
  Int bound = 0;      // M when delta_bounded == Yes
  Int horizon = 0;    // membership is known for every n <= horizon
  std::string family; // generator name, empty for ad-hoc prefixes
  bool operator==(const TailMeta&) const = default;
};

// An infinite S known only up to `tail.horizon`.
struct SampledGaps {
  std::vector<Int> prefix;
  TailMeta tail;
  bool operator==(const SampledGaps&) const = default;
};

// Primitive period, minimal pre-period. Idempotent. Throws on invalid input.
PeriodicGaps canonical_form(PeriodicGaps g);

// First n elements of the set a (possibly non-canonical) difference sequence
// denotes.
std::vector<Int> expand_elements(const PeriodicGaps& g, std::size_t n);

// Immutable gap set. Every factory validates and canonicalizes, so two GapSets
// compare equal iff they denote the same S.
class GapSet {
 public:
  using Repr = std::variant<FiniteGaps, PeriodicGaps, SampledGaps>;

  static GapSet finite(std::vector<Int> elements);
  static GapSet periodic(std::vector<Int> pre, std::vector<Int> period);
  static GapSet cofinite(std::vector<Int> excluded);
  static GapSet sampled(std::vector<Int> prefix, TailMeta tail);
  // squares, primes or powers2, listed up to `horizon`.
  static GapSet family(std::string_view name, Int horizon,
                       std::optional<Bound> bounded = std::nullopt,
                       Int bound = 0);

  const Repr& repr() const { return repr_; }
  const FiniteGaps* finite_repr() const { return std::get_if<FiniteGaps>(&repr_); }
  const PeriodicGaps* periodic_repr() const { return std::get_if<PeriodicGaps>(&repr_); }
  const SampledGaps* sampled_repr() const { return std::get_if<SampledGaps>(&repr_); }

  bool is_finite() const { return finite_repr() != nullptr; }
  bool is_periodic() const { return periodic_repr() != nullptr; }
  bool is_sampled() const { return sampled_repr() != nullptr; }
  bool is_infinite() const { return !is_finite(); }

  Int min_element() const;
  // Largest element; only for finite S.
  Int max_element() const;
  // Largest n for which contains(n) is decidable.
  Int horizon() const;

  // Throws ErrorKind::Horizon beyond the horizon of a sampled set.
  bool contains(Int n) const;

  // First n elements. A finite S yields at most |S| elements; a sampled S
  // throws when the prefix is too short.
  std::vector<Int> elements(std::size_t n) const;
  // All elements <= limit (sampled: limit must not exceed the horizon).
  std::vector<Int> elements_upto(Int limit) const;
  // First n terms of the difference sequence (clamped like elements()).
  std::vector<Int> delta(std::size_t n) const;

  // Text form in the gap-set grammar; parse_gapset(to_string()) == *this for
  // finite and eventually periodic sets.
  std::string to_string() const;

  bool operator==(const GapSet&) const = default;

 private:
  explicit GapSet(Repr r) : repr_(std::move(r)) {}
  Repr repr_;
};

// Grammar:
//   finite:s0,s1,...
//   delta:d0[,d1,...];m1[,m2,...]
//   cofinite:exclude=a,b,...
//   family:{squares|primes|powers2}[,horizon=N][,bounded=yes:M|no]
GapSet parse_gapset(std::string_view spec);

GapSet canonicalize(const GapSet& g);

struct Judgement {
  Verdict verdict = Verdict::Unknown;
  std::string witness;
};

struct Classification {
  Verdict sft = Verdict::Unknown;
  Verdict sofic = Verdict::Unknown;
  Verdict aft = Verdict::Unknown;
  Verdict proper_pft = Verdict::Unknown;
  Verdict mixing = Verdict::Unknown;
  Verdict totally_transitive = Verdict::Unknown;
  Verdict almost_specified = Verdict::Unknown;
  Verdict synchronized = Verdict::Unknown;
  std::map<std::string, std::string> witnesses;

  bool operator==(const Classification&) const = default;
};

// gcd{s + 1 : s in S}; for a sampled set the gcd over the known prefix.
Int mixing_gcd(const GapSet& g);

Judgement is_sft(const GapSet& g);
Judgement is_sofic(const GapSet& g);
Judgement is_aft(const GapSet& g);
Judgement is_mixing(const GapSet& g);
Judgement is_totally_transitive(const GapSet& g);
Judgement is_proper_pft(const GapSet& g);
Judgement is_almost_specified(const GapSet& g);
Judgement is_synchronized(const GapSet& g);

Classification classify(const GapSet& g);

// Minimal forbidden words 1 0^n 1 (and 0^{1+max S} for finite S). Complete for
// finite and cofinite S; otherwise every member of length <= max_len.
std::vector<std::string> forbidden_words(const GapSet& g, std::size_t max_len);

struct ConjugacyVerdict {
  bool conjugate = false;
  std::string kind;  // "identical", "exceptional-pair" or "distinct"
  Int n = 0;         // the n of {0,n} ~ {n,n+1,...}; 0 otherwise
  std::string certificate;
};

// Throws ErrorKind::Undecidable for sampled input.
ConjugacyVerdict are_conjugate(const GapSet& a, const GapSet& b);

}  // namespace sgap

#endif  // SGAP_GAPSET_HPP_
