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

#ifndef SGAP_CFRAC_HPP_
#define SGAP_CFRAC_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sgap/gapset.hpp"

namespace sgap {

// num/den in lowest terms, den > 0.
struct Rational {
  Int num = 0;
  Int den = 1;
  bool operator==(const Rational&) const = default;
};

Rational make_rational(Int num, Int den);

// (a + b sqrt(d)) / c with d > 1 squarefree, b != 0, c > 0, gcd(a, b, c) = 1.
struct QuadraticSurd {
  Int a = 0;
  Int b = 1;
  Int c = 1;
  Int d = 2;
  bool operator==(const QuadraticSurd&) const = default;
};

// Normalizes; throws Domain when radicand makes the value rational.
QuadraticSurd make_surd(Int a, Int b, Int c, Int d);

using ExactReal = std::variant<Rational, QuadraticSurd>;

double to_double(const ExactReal& x);
std::string to_string(const ExactReal& x);

// [a0; pre..., (period...)]. An empty period is a finite expansion, unless
// declared_infinite marks `pre` as a known prefix of an infinite expansion.
struct CFNumber {
  Int a0 = 0;
  std::vector<Int> pre;
  std::vector<Int> period;
  bool declared_infinite = false;
  Bound tail_bounded = Bound::Unknown;
  Int tail_bound = 0;

  bool is_finite() const { return period.empty() && !declared_infinite; }
  bool is_periodic() const { return !period.empty(); }
  // Partial quotient i (a0 is index 0). Throws past a finite or known prefix.
  Int digit(std::size_t i) const;
  // Number of explicit digits (a0 + pre); periodic digits excluded.
  std::size_t head_length() const { return 1 + pre.size(); }
  // [a0;a1,a2,(m1,m2)], "..." appended for declared-infinite prefixes.
  std::string to_string() const;

  bool operator==(const CFNumber&) const = default;
};

// Primitive period, minimal pre; a0 is never folded into the period.
CFNumber canonical_cf(CFNumber cf);

// Accepts [a0], [a0;a1,...], [a0;a1,(m1,...)], [a0;a1,...,...] optionally
// followed by ",bounded=yes:M|no" for declared-infinite prefixes.
CFNumber parse_cf(std::string_view text);

// Euclid; the last partial quotient is >= 2 unless the expansion is [a0].
CFNumber cf_of_rational(const Rational& r);
// Periodic expansion of a positive quadratic irrational.
CFNumber cf_of_quadratic(const QuadraticSurd& s);
// Exact value of a finite or eventually periodic expansion.
ExactReal value_of_cf(const CFNumber& cf);

struct RealImage {
  CFNumber cf;                     // partial quotients = Delta(S) verbatim
  std::optional<ExactReal> value;  // absent for sampled S
};

// x_S = [d0; d1, d2, ...].
RealImage real_of_gapset(const GapSet& g);

// Value-level inverse: canonical expansion, every 1/n rejected with
// ErrorKind::ExcludedPoint and hint "delta:n;1".
GapSet gapset_of_real(const ExactReal& x);
// Digit-level inverse: partial quotients become Delta(S) verbatim; rejects the
// expansions [0;n], i.e. S = {0,n}. Declared-infinite prefixes give a sampled S.
GapSet gapset_of_real(const CFNumber& cf);

Classification classify_real(const CFNumber& cf);

// Replaces d_N by d_N + g, g = gcd{s+1 : s in S} > 1. The result agrees with x
// on its first N partial quotients and stays non-mixing. N >= 1.
CFNumber nonmixing_perturbation(const CFNumber& x, std::size_t N);

// [d0; ..., d_{N-1}, d_{N+1}, ...]. Preserves non-mixing; can return x itself
// when the tail is constant. N >= 1.
CFNumber drop_digit(const CFNumber& x, std::size_t N);

// Value text forms: rat:p/q, rat:n, quad:a,b,c,d, dec:X[,prec=P], cf:[...].
std::variant<ExactReal, CFNumber> parse_real(std::string_view text);

struct SurveyStats {
  uint64_t samples = 0;
  uint64_t excluded = 0;   // hits on 1/n
  uint64_t mixing = 0;
  uint64_t non_mixing = 0;
  uint64_t undecided = 0;  // expansion longer than the horizon, gcd still > 1
  uint64_t sft = 0;        // every admitted rational
  unsigned horizon = 0;
  uint64_t seed = 0;
  Int denominator = 0;
  Int range = 0;  // samples are drawn from [0, range)

  // mixing / (samples - excluded)
  double mixing_frequency() const;
};

inline constexpr Int kSurveyDenominator = 1'000'003;
inline constexpr Int kSurveyRange = 10;

// Uniform rationals p / kSurveyDenominator in [0, kSurveyRange), drawn from
// std::mt19937_64(seed). Deterministic for a fixed seed.
SurveyStats survey(uint64_t samples, unsigned horizon, uint64_t seed);
// Tallies the given values (same classification as survey()).
SurveyStats survey_values(const std::vector<Rational>& values, unsigned horizon);

}  // namespace sgap

#endif  // SGAP_CFRAC_HPP_
