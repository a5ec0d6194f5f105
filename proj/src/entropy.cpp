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

#include "sgap/entropy.hpp"

#include <cmath>

namespace sgap {

double gap_equation_value(const GapSet& g, double x) {
  if (!(x > 1.0)) throw Error(ErrorKind::Domain, "gap_equation_value: x must be > 1");
  if (g.is_sampled()) throw Error(ErrorKind::Domain, "gap_equation_value: sampled set");
  double sum = 0.0;
  if (auto f = g.finite_repr()) {
    for (Int s : f->elements) sum += std::pow(x, -static_cast<double>(s + 1));
    return sum;
  }
  const PeriodicGaps& p = *g.periodic_repr();
  const std::vector<Int> head = g.elements(p.pre.size());
  for (Int s : head) sum += std::pow(x, -static_cast<double>(s + 1));
  double block = 0.0;
  Int c = 0;
  for (Int m : p.period) {
    c += m;
    block += std::pow(x, -static_cast<double>(head.back() + c + 1));
  }
  return sum + block / (1.0 - std::pow(x, -static_cast<double>(c)));
}

EntropyValue entropy(const GapSet& g, double tol) {
  if (!(tol > 0)) throw Error(ErrorKind::Domain, "entropy: tol must be > 0");
  if (g.is_sampled()) {
    throw Error(ErrorKind::Domain, "entropy: sampled set has no exact entropy; use entropy_bounds");
  }
  if (auto f = g.finite_repr(); f && f->elements.size() == 1) return {1.0, 0.0};
  if (gap_equation_value(g, 2.0) >= 1.0) return {2.0, std::log(2.0)};
  double lo = 1.0, hi = 2.0;
  for (int iter = 0; iter < 200 && hi - lo > tol; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (gap_equation_value(g, mid) > 1.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const double lambda = 0.5 * (lo + hi);
  return {lambda, std::log(lambda)};
}

std::vector<double> entropy_truncations(const GapSet& g, const std::vector<std::size_t>& ks,
                                        double tol) {
  std::vector<double> out;
  out.reserve(ks.size());
  for (std::size_t k : ks) {
    if (k == 0) throw Error(ErrorKind::Domain, "entropy_truncations: prefix sizes must be >= 1");
    out.push_back(entropy(GapSet::finite(g.elements(k)), tol).h);
  }
  return out;
}

EntropyInterval entropy_bounds(const GapSet& g, std::size_t k, double tol) {
  if (k == 0) throw Error(ErrorKind::Domain, "entropy_bounds: k >= 1");
  const std::vector<Int> prefix = g.elements(k);
  if (prefix.size() < k) throw Error(ErrorKind::Horizon, "entropy_bounds: S has fewer than k elements");
  std::vector<Int> d;
  for (std::size_t i = 0; i < prefix.size(); ++i) d.push_back(i == 0 ? prefix[0] : prefix[i] - prefix[i - 1]);
  const double lo = entropy(GapSet::finite(prefix), tol).h;
  const double hi = entropy(GapSet::periodic(d, {1}), tol).h;
  return {lo, hi};
}

}  // namespace sgap
