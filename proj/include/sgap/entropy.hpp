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

#ifndef SGAP_ENTROPY_HPP_
#define SGAP_ENTROPY_HPP_

#include <cstddef>
#include <vector>

#include "sgap/gapset.hpp"

namespace sgap {

// sum_{s in S} x^{-(s+1)} for x > 1, with the periodic tail summed in closed
// form. Strictly decreasing in x.
double gap_equation_value(const GapSet& g, double x);

struct EntropyValue {
  double lambda = 1.0;  // root of the gap equation in [1, 2]
  double h = 0.0;       // log lambda (natural log)
};

// Bisection on [1, 2] until the bracket is narrower than tol.
EntropyValue entropy(const GapSet& g, double tol = 1e-12);

// h(X(S_k)) for the truncations S_k = first k elements of S.
std::vector<double> entropy_truncations(const GapSet& g, const std::vector<std::size_t>& ks,
                                        double tol = 1e-12);

struct EntropyInterval {
  double lo = 0.0;
  double hi = 0.0;
  double width() const { return hi - lo; }
};

// lo = h(X(S_k)), hi = h(X(S_k u {n : n > max S_k})). Every S with the same
// first k elements has entropy in [lo, hi].
EntropyInterval entropy_bounds(const GapSet& g, std::size_t k, double tol = 1e-12);

}  // namespace sgap

#endif  // SGAP_ENTROPY_HPP_
