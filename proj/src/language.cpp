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

#include "sgap/language.hpp"

#include <cmath>
#include <functional>
#include <set>

#include "sgap/detail/checked.hpp"

namespace sgap {

namespace {

// Cached membership for gaps up to a limit; queries past the table defer to
// GapSet::contains (which enforces the sampled horizon).
class Membership {
 public:
  Membership(const GapSet& g, Int limit) : g_(g) {
    finite_ = g.is_finite();
    max_ = finite_ ? g.max_element() : 0;
    const Int top = std::min(limit, g.horizon());
    table_.resize(static_cast<std::size_t>(std::max<Int>(top + 1, 0)));
    for (Int n = 0; n <= top; ++n) table_[n] = g.contains(n);
  }

  bool operator()(Int n) const {
    if (n >= 0 && n < static_cast<Int>(table_.size())) return table_[n];
    return g_.contains(n);
  }
  bool finite() const { return finite_; }
  Int max() const { return max_; }

 private:
  const GapSet& g_;
  std::vector<char> table_;
  bool finite_ = false;
  Int max_ = 0;
};

void require_binary(std::string_view w) {
  for (char c : w) {
    if (c != '0' && c != '1') {
      throw Error(ErrorKind::Domain, "word '" + std::string(w) + "' is not over {0,1}");
    }
  }
}

std::string cyclic_image(const SlidingBlockCode& code, std::string_view u) {
  const std::size_t len = u.size();
  std::string y(len, '0');
  std::string window(code.window(), '0');
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < window.size(); ++j) {
      // x_{i - memory + j}, read cyclically
      const std::size_t idx = (i + len * code.window() + j - code.memory) % len;
      window[j] = u[idx];
    }
    y[i] = static_cast<char>('0' + code(window));
  }
  return y;
}

std::string binary_word(uint64_t bits, unsigned len) {
  std::string w(len, '0');
  for (unsigned i = 0; i < len; ++i) {
    if (bits >> (len - 1 - i) & 1U) w[i] = '1';
  }
  return w;
}

}  // namespace

bool is_admissible(std::string_view w, const GapSet& g) {
  require_binary(w);
  const auto first = w.find('1');
  const bool finite = g.is_finite();
  const Int top = finite ? g.max_element() : 0;
  if (first == std::string_view::npos) return !finite || static_cast<Int>(w.size()) <= top;
  const auto last = w.rfind('1');
  const Int lead = static_cast<Int>(first);
  const Int trail = static_cast<Int>(w.size() - 1 - last);
  if (finite && (lead > top || trail > top)) return false;
  std::size_t prev = first;
  for (std::size_t i = first + 1; i <= last; ++i) {
    if (w[i] != '1') continue;
    if (!g.contains(static_cast<Int>(i - prev - 1))) return false;
    prev = i;
  }
  return true;
}

bool is_periodic_point(std::string_view u, const GapSet& g) {
  require_binary(u);
  if (u.empty()) throw Error(ErrorKind::Domain, "period word must be nonempty");
  const auto first = u.find('1');
  if (first == std::string_view::npos) return g.is_infinite();
  std::size_t prev = first;
  for (std::size_t i = first + 1; i < u.size(); ++i) {
    if (u[i] != '1') continue;
    if (!g.contains(static_cast<Int>(i - prev - 1))) return false;
    prev = i;
  }
  // wrap-around gap from the last 1 to the first
  return g.contains(static_cast<Int>(u.size() - 1 - prev + first));
}

uint64_t count_blocks(const GapSet& g, unsigned n) {
  if (n > 30) throw Error(ErrorKind::Domain, "count_blocks: n <= 30");
  const Membership in(g, n);
  uint64_t count = 0;
  std::function<void(unsigned, bool, Int)> rec = [&](unsigned i, bool seen, Int run) {
    if (i == n) {
      ++count;
      return;
    }
    if (!in.finite() || run + 1 <= in.max()) rec(i + 1, seen, run + 1);
    if (!seen || in(run)) rec(i + 1, true, 0);
  };
  rec(0, false, 0);
  return count;
}

double block_entropy_estimate(const GapSet& g, unsigned n) {
  if (n == 0) throw Error(ErrorKind::Domain, "block_entropy_estimate: n >= 1");
  return std::log(static_cast<double>(count_blocks(g, n))) / n;
}

double growth_rate_estimate(const GapSet& g, unsigned n) {
  if (n < 2) throw Error(ErrorKind::Domain, "growth_rate_estimate: n >= 2");
  const unsigned m = n / 2;
  const double bn = static_cast<double>(count_blocks(g, n));
  const double bm = static_cast<double>(count_blocks(g, m));
  return std::log(bn / bm) / (n - m);
}

uint64_t periodic_points_bruteforce(const GapSet& g, unsigned n) {
  if (n == 0 || n > 24) throw Error(ErrorKind::Domain, "periodic_points_bruteforce: 1 <= n <= 24");
  const Membership in(g, n);
  uint64_t count = 0;
  // first: position of the first 1, or -1 while only zeros have been placed.
  std::function<void(unsigned, Int, Int)> rec = [&](unsigned i, Int first, Int run) {
    if (i == n) {
      if (first < 0) {
        count += in.finite() ? 0 : 1;
      } else {
        count += in(run + first) ? 1 : 0;
      }
      return;
    }
    if (!in.finite() || run + 1 <= in.max()) rec(i + 1, first, run + 1);
    if (first < 0) {
      rec(i + 1, static_cast<Int>(i), 0);
    } else if (in(run)) {
      rec(i + 1, first, 0);
    }
  };
  rec(0, -1, 0);
  return count;
}

int mobius(Int n) {
  if (n < 1) throw Error(ErrorKind::Domain, "mobius: n >= 1");
  int mu = 1;
  for (Int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

std::vector<Int> mobius_inversion(const std::vector<Int>& p) {
  std::vector<Int> q(p.size(), 0);
  for (std::size_t n = 1; n <= p.size(); ++n) {
    Int acc = 0;
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      acc = detail::add(acc, detail::mul(mobius(static_cast<Int>(n / d)), p[d - 1]));
    }
    q[n - 1] = acc;
  }
  return q;
}

RationalFunction zeta_closed_form(const GapSet& g) {
  if (g.is_sampled()) throw Error(ErrorKind::Undecidable, "no closed form for a sampled set");
  const Polynomial one({1});
  if (auto f = g.finite_repr()) {
    Polynomial sum;
    for (Int s : f->elements) sum = sum + Polynomial::monomial(1, static_cast<std::size_t>(s) + 1);
    return reduce({one, one - sum});
  }
  const PeriodicGaps& p = *g.periodic_repr();
  const std::vector<Int> head = g.elements(p.pre.size());
  Polynomial a;
  for (Int s : head) a = a + Polynomial::monomial(1, static_cast<std::size_t>(s) + 1);
  Polynomial b;
  Int c = 0, period = 0;
  for (Int m : p.period) {
    c += m;
    b = b + Polynomial::monomial(1, static_cast<std::size_t>(head.back() + c + 1));
  }
  period = c;
  // zeta = (1 - t^P) / ((1 - t) ((1 - t^P)(1 - A) - B))
  Polynomial num;
  for (Int i = 0; i < period; ++i) num = num + Polynomial::monomial(1, static_cast<std::size_t>(i));
  const Polynomial tail = one - Polynomial::monomial(1, static_cast<std::size_t>(period));
  return reduce({num, tail * (one - a) - b});
}

std::vector<Int> periodic_points_from_zeta(const RationalFunction& zeta, unsigned order) {
  const std::vector<Int> z = series(zeta, order);
  std::vector<Int> p(order, 0);
  for (unsigned n = 1; n <= order; ++n) {
    __int128 acc = static_cast<__int128>(n) * z[n];
    for (unsigned k = 1; k < n; ++k) acc -= static_cast<__int128>(p[k - 1]) * z[n - k];
    p[n - 1] = detail::narrow(acc);
  }
  return p;
}

ZetaData zeta_series(const GapSet& g, unsigned order) {
  ZetaData z;
  z.order = order;
  if (g.is_sampled()) {
    if (order > 24) throw Error(ErrorKind::Domain, "zeta_series: sampled sets need order <= 24");
    for (unsigned n = 1; n <= order; ++n) {
      z.p.push_back(static_cast<Int>(periodic_points_bruteforce(g, n)));
    }
  } else {
    if (order > 62) throw Error(ErrorKind::Domain, "zeta_series: order <= 62");
    z.closed_form = zeta_closed_form(g);
    z.p = periodic_points_from_zeta(*z.closed_form, order);
  }
  z.q = mobius_inversion(z.p);
  return z;
}

std::vector<Int> least_period_counts(const ZetaData& z) { return mobius_inversion(z.p); }

uint8_t SlidingBlockCode::operator()(std::string_view w) const {
  if (w.size() != window()) throw Error(ErrorKind::Domain, "window has the wrong length");
  std::size_t idx = 0;
  for (char c : w) idx = idx << 1 | (c == '1' ? 1U : 0U);
  return table.at(idx);
}

SlidingBlockCode make_conjugacy_code(Int n) {
  if (n < 1 || n > 20) throw Error(ErrorKind::Domain, "make_conjugacy_code: 1 <= n <= 20");
  SlidingBlockCode c;
  c.memory = 0;
  c.anticipation = static_cast<unsigned>(n - 1);
  c.table.assign(std::size_t{1} << n, 0);
  c.table[0] = 1;  // the all-zero window
  c.source = GapSet::finite({0, n});
  c.target = GapSet::periodic({n}, {1});
  return c;
}

SlidingBlockCode identity_code() {
  SlidingBlockCode c;
  c.table = {0, 1};
  return c;
}

std::string apply_code(const SlidingBlockCode& code, std::string_view u) {
  require_binary(u);
  if (u.empty()) throw Error(ErrorKind::Domain, "period word must be nonempty");
  if (code.source && !is_periodic_point(u, *code.source)) {
    throw Error(ErrorKind::Domain, "(" + std::string(u) + ")^inf is not a point of the source shift");
  }
  return cyclic_image(code, u);
}

std::string apply_code_to_word(const SlidingBlockCode& code, std::string_view w) {
  require_binary(w);
  const std::size_t k = code.window();
  std::string y;
  for (std::size_t i = 0; i + k <= w.size(); ++i) y.push_back(static_cast<char>('0' + code(w.substr(i, k))));
  return y;
}

ConjugacyReport verify_conjugacy(const SlidingBlockCode& code, const GapSet& source,
                                 const GapSet& target, unsigned L) {
  if (L == 0 || L > 16) throw Error(ErrorKind::Domain, "verify_conjugacy: 1 <= L <= 16");
  for (uint64_t bits = 0; bits < (uint64_t{1} << L); ++bits) {
    const std::string w = binary_word(bits, L);
    if (!is_admissible(w, source)) continue;
    const std::string img = apply_code_to_word(code, w);
    if (!is_admissible(img, target)) {
      return {false, "image " + img + " of an admissible source word is not in the target language", w};
    }
  }
  for (unsigned m = 1; m <= L; ++m) {
    std::set<std::string> images;
    for (uint64_t bits = 0; bits < (uint64_t{1} << m); ++bits) {
      const std::string u = binary_word(bits, m);
      if (!is_periodic_point(u, source)) continue;
      const std::string img = cyclic_image(code, u);
      if (!is_periodic_point(img, target)) {
        return {false, "image of a period-" + std::to_string(m) + " point is not in the target", u};
      }
      if (!images.insert(img).second) {
        return {false, "not injective on points of period " + std::to_string(m), u};
      }
    }
    const uint64_t expected = periodic_points_bruteforce(target, m);
    if (images.size() != expected) {
      return {false, "period-" + std::to_string(m) + " counts differ: " +
                         std::to_string(images.size()) + " vs " + std::to_string(expected),
              std::to_string(m)};
    }
  }
  return {true, {}, {}};
}

ConjugacyReport verify_conjugacy_code(Int n, unsigned L) {
  const SlidingBlockCode code = make_conjugacy_code(n);
  return verify_conjugacy(code, *code.source, *code.target, L);
}

}  // namespace sgap
