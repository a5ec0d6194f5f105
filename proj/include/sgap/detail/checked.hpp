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

#ifndef SGAP_DETAIL_CHECKED_HPP_
#define SGAP_DETAIL_CHECKED_HPP_

#include <cstdint>
#include <numeric>

#include "sgap/error.hpp"

namespace sgap::detail {

inline int64_t add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in addition");
  }
  return r;
}

inline int64_t sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in subtraction");
  }
  return r;
}

inline int64_t mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorKind::Overflow, "integer overflow in multiplication");
  }
  return r;
}

inline int64_t narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) {
    throw Error(ErrorKind::Overflow, "integer overflow");
  }
  return static_cast<int64_t>(v);
}

// Floor division for a signed numerator and a nonzero denominator.
inline int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline int64_t gcd(int64_t a, int64_t b) { return std::gcd(a, b); }

}  // namespace sgap::detail

#endif  // SGAP_DETAIL_CHECKED_HPP_
