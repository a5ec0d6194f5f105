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

// Brute-force reference implementations used as test oracles. They work
// from explicit element lists and the definition of X(S) only, and share no
// code with the library.
#ifndef SGAP_TESTS_ORACLE_HPP_
#define SGAP_TESTS_ORACLE_HPP_

#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

// S listed up to `limit`; `infinite` says the set continues past it.
struct Set {
  std::set<long> elems;
  bool infinite = false;
  long limit = 0;

  bool has(long n) const { return elems.count(n) > 0; }
  // Some gap of length >= r exists.
  bool long_enough(long r) const { return infinite || (!elems.empty() && *elems.rbegin() >= r); }
};

inline Set finite(std::vector<long> xs) {
  Set s;
  s.elems.insert(xs.begin(), xs.end());
  s.limit = xs.empty() ? 0 : *s.elems.rbegin();
  return s;
}

// s_0 = pre[0], then partial sums of pre[1..] and the repeated period.
inline Set delta(std::vector<long> pre, std::vector<long> period, long limit = 600) {
  Set s;
  s.infinite = true;
  s.limit = limit;
  long x = 0;
  std::size_t i = 0;
  for (;;) {
    long d = i < pre.size() ? pre[i] : period[(i - pre.size()) % period.size()];
    x += d;
    if (x > limit) break;
    s.elems.insert(x);
    ++i;
  }
  return s;
}

inline std::string word_of(uint64_t bits, unsigned n) {
  std::string w(n, '0');
  for (unsigned i = 0; i < n; ++i) w[i] = (bits >> (n - 1 - i)) & 1 ? '1' : '0';
  return w;
}

// w occurs in some point of X(S).
inline bool in_language(const std::string& w, const Set& S) {
  std::vector<long> ones;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == '1') ones.push_back(static_cast<long>(i));
  }
  if (ones.empty()) return S.long_enough(static_cast<long>(w.size()));
  for (std::size_t i = 1; i < ones.size(); ++i) {
    if (!S.has(ones[i] - ones[i - 1] - 1)) return false;
  }
  return S.long_enough(ones.front()) &&
         S.long_enough(static_cast<long>(w.size()) - 1 - ones.back());
}

// Same rule as in_language, reading the word from the bits of b (MSB first).
inline bool in_language_bits(uint64_t b, unsigned n, const Set& S) {
  long first = -1, prev = -1;
  for (unsigned i = 0; i < n; ++i) {
    if (!((b >> (n - 1 - i)) & 1)) continue;
    if (first < 0) {
      first = i;
    } else if (!S.has(static_cast<long>(i) - prev - 1)) {
      return false;
    }
    prev = i;
  }
  if (first < 0) return S.long_enough(n);
  return S.long_enough(first) && S.long_enough(static_cast<long>(n) - 1 - prev);
}

inline uint64_t block_count(const Set& S, unsigned n) {
  uint64_t c = 0;
  for (uint64_t b = 0; b < (uint64_t{1} << n); ++b) c += in_language_bits(b, n, S);
  return c;
}

// u^infinity lies in X(S).
inline bool periodic_point(const std::string& u, const Set& S) {
  std::vector<long> ones;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == '1') ones.push_back(static_cast<long>(i));
  }
  if (ones.empty()) return S.infinite;
  const long n = static_cast<long>(u.size());
  for (std::size_t i = 0; i < ones.size(); ++i) {
    long next = i + 1 < ones.size() ? ones[i + 1] : ones[0] + n;
    if (!S.has(next - ones[i] - 1)) return false;
  }
  return true;
}

inline long periodic_points(const Set& S, unsigned n) {
  long c = 0;
  for (uint64_t b = 0; b < (uint64_t{1} << n); ++b) c += periodic_point(word_of(b, n), S);
  return c;
}

inline int mobius(long n) {
  int m = 1;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    m = -m;
  }
  return n > 1 ? -m : m;
}

// q_n from p_1..p_N.
inline std::vector<long> least_period(const std::vector<long>& p) {
  std::vector<long> q;
  for (long n = 1; n <= static_cast<long>(p.size()); ++n) {
    long s = 0;
    for (long d = 1; d <= n; ++d) {
      if (n % d == 0) s += mobius(n / d) * p[d - 1];
    }
    q.push_back(s);
  }
  return q;
}

inline long mixing_gcd(const Set& S) {
  long g = 0;
  for (long s : S.elems) g = std::gcd(g, s + 1);
  return g;
}

// Root in [1,2] of sum_{s in S} x^-(s+1) = 1 from the listed elements; the
// listed range must be long enough that the tail is below tolerance.
inline double gap_root(const Set& S) {
  auto f = [&](double x) {
    double t = 0;
    for (long s : S.elems) t += std::pow(x, -(s + 1.0));
    return t;
  };
  if (S.elems.size() == 1 && !S.infinite) return 1.0;
  double lo = 1.0 + 1e-9, hi = 2.0;
  if (f(hi) >= 1) return 2.0;
  for (int i = 0; i < 200; ++i) {
    double mid = (lo + hi) / 2;
    (f(mid) > 1 ? lo : hi) = mid;
  }
  return (lo + hi) / 2;
}

// Value of a finite continued fraction as numerator/denominator.
inline std::pair<long, long> cf_value(const std::vector<long>& digits) {
  long h = 1, k = 0, hp = 0, kp = 1;
  for (long a : digits) {
    long nh = a * h + hp, nk = a * k + kp;
    hp = h;
    kp = k;
    h = nh;
    k = nk;
  }
  return {h, k};
}

}  // namespace oracle

#endif  // SGAP_TESTS_ORACLE_HPP_
