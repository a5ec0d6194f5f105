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

#ifndef SGAP_POLYNOMIAL_HPP_
#define SGAP_POLYNOMIAL_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "sgap/gapset.hpp"

namespace sgap {

// Integer polynomial in t, coefficients in ascending degree, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Int> coeffs);
  static Polynomial monomial(Int coeff, std::size_t degree);

  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Int operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  bool operator==(const Polynomial&) const = default;

  // Ascending-degree text, e.g. "1 - t - t^3".
  std::string to_string() const;

 private:
  std::vector<Int> c_;
};

// gcd over Q, returned primitive with positive leading coefficient.
Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b);
// Exact quotient a / b over Z; throws Domain when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

struct RationalFunction {
  Polynomial numerator;
  Polynomial denominator;
  bool operator==(const RationalFunction&) const = default;

  // "num/den" with parentheses around multi-term polynomials.
  std::string to_string() const;
};

// Cancels common factors; keeps denominator(0) = 1 when it was +-1. Leaves the
// pair untouched if intermediate coefficients overflow.
RationalFunction reduce(const RationalFunction& f);

// First `order` + 1 power-series coefficients of f (denominator(0) must be 1).
std::vector<Int> series(const RationalFunction& f, std::size_t order);

}  // namespace sgap

#endif  // SGAP_POLYNOMIAL_HPP_
