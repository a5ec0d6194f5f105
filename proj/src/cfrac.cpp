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

#include "sgap/cfrac.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "sgap/detail/checked.hpp"

namespace sgap {

namespace {

using detail::add;
using detail::mul;
using detail::narrow;
using detail::sub;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

Int parse_int(std::string_view tok, std::string_view context) {
  tok = trim(tok);
  Int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw Error(ErrorKind::Parse,
                "expected an integer in " + std::string(context) + ", got '" + std::string(tok) + "'");
  }
  return v;
}

Int isqrt(Int n) {
  Int r = static_cast<Int>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

void validate(const CFNumber& cf) {
  if (cf.a0 < 0) throw Error(ErrorKind::Domain, "continued fraction: a0 must be >= 0");
  for (Int a : cf.pre) {
    if (a < 1) throw Error(ErrorKind::Domain, "continued fraction: partial quotients must be >= 1");
  }
  for (Int a : cf.period) {
    if (a < 1) throw Error(ErrorKind::Domain, "continued fraction: partial quotients must be >= 1");
  }
}

// Partial sums of the explicit digits.
std::vector<Int> partial_sums(const CFNumber& cf) {
  std::vector<Int> s{cf.a0};
  for (Int a : cf.pre) s.push_back(add(s.back(), a));
  return s;
}

// The gap set with Delta(S) = the digits, without the 1/n exclusion.
GapSet gapset_of_digits(const CFNumber& cf) {
  validate(cf);
  if (cf.is_periodic()) {
    std::vector<Int> pre{cf.a0};
    pre.insert(pre.end(), cf.pre.begin(), cf.pre.end());
    return GapSet::periodic(std::move(pre), cf.period);
  }
  if (cf.declared_infinite) {
    TailMeta tail;
    tail.delta_bounded = cf.tail_bounded;
    tail.bound = cf.tail_bound;
    std::vector<Int> prefix = partial_sums(cf);
    tail.horizon = prefix.back();
    return GapSet::sampled(std::move(prefix), tail);
  }
  return GapSet::finite(partial_sums(cf));
}

// Convergents h_{r-1}/k_{r-1} and h_{r-2}/k_{r-2} of digits[0..r).
struct Convergents {
  Int p = 1, q = 0;            // current
  Int p_prev = 0, q_prev = 1;  // previous
  void push(Int a) {
    Int np = add(mul(a, p), p_prev), nq = add(mul(a, q), q_prev);
    p_prev = p;
    q_prev = q;
    p = np;
    q = nq;
  }
};

}  // namespace

Rational make_rational(Int num, Int den) {
  if (den == 0) throw Error(ErrorKind::Domain, "rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Int g = std::gcd(num, den);
  return {num / g, den / g};
}

QuadraticSurd make_surd(Int a, Int b, Int c, Int d) {
  if (c == 0) throw Error(ErrorKind::Domain, "quadratic surd with zero denominator");
  if (d < 0) throw Error(ErrorKind::Domain, "quadratic surd needs a nonnegative radicand");
  if (b == 0 || d == 0) throw Error(ErrorKind::Domain, "quadratic surd is rational (b = 0 or d = 0)");
  for (Int f = 2; f <= d / f; ++f) {
    while (d % (f * f) == 0) {
      d /= f * f;
      b = mul(b, f);
    }
  }
  if (d == 1) throw Error(ErrorKind::Domain, "radicand is a perfect square, value is rational");
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  const Int g = std::gcd(std::gcd(a, b), c);
  return {a / g, b / g, c / g, d};
}

double to_double(const ExactReal& x) {
  if (auto r = std::get_if<Rational>(&x)) {
    return static_cast<double>(static_cast<long double>(r->num) / r->den);
  }
  const QuadraticSurd& s = std::get<QuadraticSurd>(x);
  return static_cast<double>((s.a + s.b * std::sqrt(static_cast<long double>(s.d))) / s.c);
}

std::string to_string(const ExactReal& x) {
  std::ostringstream os;
  if (auto r = std::get_if<Rational>(&x)) {
    os << r->num;
    if (r->den != 1) os << '/' << r->den;
    return os.str();
  }
  const QuadraticSurd& s = std::get<QuadraticSurd>(x);
  const Int mag = s.b < 0 ? -s.b : s.b;
  std::string root = (mag == 1 ? "" : std::to_string(mag) + "*") + "sqrt(" + std::to_string(s.d) + ")";
  std::string body;
  if (s.a == 0) {
    body = (s.b < 0 ? "-" : "") + root;
  } else {
    body = std::to_string(s.a) + (s.b < 0 ? " - " : " + ") + root;
  }
  if (s.c == 1) return body;
  os << '(' << body << ")/" << s.c;
  return os.str();
}

Int CFNumber::digit(std::size_t i) const {
  if (i == 0) return a0;
  if (i - 1 < pre.size()) return pre[i - 1];
  if (period.empty()) throw Error(ErrorKind::Horizon, "digit index past the known expansion");
  return period[(i - 1 - pre.size()) % period.size()];
}

std::string CFNumber::to_string() const {
  std::ostringstream os;
  os << '[' << a0;
  bool first = true;
  auto sep = [&] {
    os << (first ? ';' : ',');
    first = false;
  };
  for (Int a : pre) {
    sep();
    os << a;
  }
  if (!period.empty()) {
    sep();
    os << '(';
    for (std::size_t i = 0; i < period.size(); ++i) os << (i ? "," : "") << period[i];
    os << ')';
  }
  if (declared_infinite) {
    sep();
    os << "...";
  }
  os << ']';
  if (declared_infinite && tail_bounded != Bound::Unknown) {
    os << ",bounded=" << (tail_bounded == Bound::Yes ? "yes:" + std::to_string(tail_bound) : "no");
  }
  return os.str();
}

CFNumber canonical_cf(CFNumber cf) {
  validate(cf);
  if (cf.period.empty()) return cf;
  const std::size_t l = cf.period.size();
  for (std::size_t t = 1; t < l; ++t) {
    if (l % t != 0) continue;
    bool repeats = true;
    for (std::size_t i = t; i < l && repeats; ++i) repeats = cf.period[i] == cf.period[i - t];
    if (repeats) {
      cf.period.resize(t);
      break;
    }
  }
  while (!cf.pre.empty() && cf.pre.back() == cf.period.back()) {
    cf.pre.pop_back();
    std::rotate(cf.period.rbegin(), cf.period.rbegin() + 1, cf.period.rend());
  }
  cf.declared_infinite = false;
  return cf;
}

CFNumber parse_cf(std::string_view text) {
  text = trim(text);
  const auto close = text.find(']');
  if (text.empty() || text.front() != '[' || close == std::string_view::npos) {
    throw Error(ErrorKind::Parse, "continued fraction must look like [a0;a1,a2,(m1,m2)]");
  }
  std::string_view inner = text.substr(1, close - 1), rest = trim(text.substr(close + 1));
  CFNumber cf;
  const auto semi = inner.find(';');
  cf.a0 = parse_int(inner.substr(0, semi), "continued fraction a0");
  if (semi != std::string_view::npos) {
    std::string_view body = inner.substr(semi + 1);
    std::size_t i = 0;
    while (i < body.size()) {
      if (body[i] == ',' || body[i] == ' ') {
        ++i;
        continue;
      }
      if (cf.declared_infinite || !cf.period.empty()) {
        throw Error(ErrorKind::Parse, "continued fraction: nothing may follow the period or '...'");
      }
      if (body[i] == '(') {
        const auto end = body.find(')', i);
        if (end == std::string_view::npos) throw Error(ErrorKind::Parse, "continued fraction: unclosed '('");
        std::string_view list = body.substr(i + 1, end - i - 1);
        std::size_t start = 0;
        for (;;) {
          auto comma = list.find(',', start);
          cf.period.push_back(parse_int(list.substr(start, comma - start), "continued fraction period"));
          if (comma == std::string_view::npos) break;
          start = comma + 1;
        }
        i = end + 1;
      } else if (body.substr(i).starts_with("...")) {
        cf.declared_infinite = true;
        i += 3;
      } else {
        auto end = body.find(',', i);
        if (end == std::string_view::npos) end = body.size();
        cf.pre.push_back(parse_int(body.substr(i, end - i), "continued fraction"));
        i = end;
      }
    }
  }
  if (!rest.empty()) {
    if (!cf.declared_infinite || !rest.starts_with(",bounded=")) {
      throw Error(ErrorKind::Parse, "continued fraction: unexpected '" + std::string(rest) + "'");
    }
    std::string_view flag = rest.substr(9);
    if (flag == "no") {
      cf.tail_bounded = Bound::No;
    } else if (flag.starts_with("yes:")) {
      cf.tail_bounded = Bound::Yes;
      cf.tail_bound = parse_int(flag.substr(4), "continued fraction bound");
    } else {
      throw Error(ErrorKind::Parse, "continued fraction: bounded must be yes:M or no");
    }
  }
  validate(cf);
  if (cf.is_periodic()) cf = canonical_cf(cf);
  return cf;
}

CFNumber cf_of_rational(const Rational& r) {
  if (r.num < 0) throw Error(ErrorKind::Domain, "cf_of_rational: value must be >= 0");
  CFNumber cf;
  Int p = r.num, q = r.den;
  cf.a0 = p / q;
  Int rem = p % q;
  p = q;
  q = rem;
  while (q != 0) {
    cf.pre.push_back(p / q);
    rem = p % q;
    p = q;
    q = rem;
  }
  return cf;
}

CFNumber cf_of_quadratic(const QuadraticSurd& s0) {
  const QuadraticSurd s = make_surd(s0.a, s0.b, s0.c, s0.d);
  if (!(to_double(s) > 0)) throw Error(ErrorKind::Domain, "cf_of_quadratic: value must be > 0");
  // x = (P + sqrt(D)) / Q with Q | D - P^2
  Int P = s.b > 0 ? s.a : -s.a;
  Int Q = s.b > 0 ? s.c : -s.c;
  Int D = mul(mul(s.b, s.b), s.d);
  if (sub(D, mul(P, P)) % Q != 0) {
    const Int aq = Q < 0 ? -Q : Q;
    P = mul(P, aq);
    D = mul(D, mul(Q, Q));
    Q = mul(Q, aq);
  }
  const Int root = isqrt(D);
  std::vector<Int> digits;
  std::map<std::pair<Int, Int>, std::size_t> seen;
  for (std::size_t n = 0; n < 1'000'000; ++n) {
    auto [it, fresh] = seen.emplace(std::pair(P, Q), n);
    if (!fresh) {
      const std::size_t start = it->second;
      CFNumber cf;
      cf.a0 = digits[0];
      if (start == 0) {
        cf.period.assign(digits.begin() + 1, digits.end());
        cf.period.push_back(digits[0]);
      } else {
        cf.pre.assign(digits.begin() + 1, digits.begin() + static_cast<long>(start));
        cf.period.assign(digits.begin() + static_cast<long>(start), digits.end());
      }
      return canonical_cf(cf);
    }
    const Int a = Q > 0 ? detail::floor_div(add(P, root), Q)
                        : -(detail::floor_div(add(P, root), -Q) + 1);
    digits.push_back(a);
    P = sub(mul(a, Q), P);
    Q = sub(D, mul(P, P)) / Q;
  }
  throw Error(ErrorKind::NoConvergence, "cf_of_quadratic: period not found");
}

ExactReal value_of_cf(const CFNumber& cf) {
  validate(cf);
  if (cf.declared_infinite && !cf.is_periodic()) {
    throw Error(ErrorKind::Domain, "value_of_cf: only a prefix of the expansion is known");
  }
  if (cf.is_finite()) {
    std::vector<Int> d{cf.a0};
    d.insert(d.end(), cf.pre.begin(), cf.pre.end());
    Int num = d.back(), den = 1;
    for (std::size_t i = d.size() - 1; i-- > 0;) {
      Int n2 = add(mul(d[i], num), den);
      den = num;
      num = n2;
    }
    return make_rational(num, den);
  }
  // y = [m1; ...; ml, y] solves q_l y^2 + (q_{l-1} - p_l) y - p_{l-1} = 0, and
  // x = (P y + P') / (Q y + Q') over the explicit digits, so y = X / Y with
  // X = Q' x - P' and Y = P - Q x. Clearing Y^2 gives the quadratic for x.
  Convergents per;
  for (Int m : cf.period) per.push(m);
  Convergents head;
  head.push(cf.a0);
  for (Int a : cf.pre) head.push(a);

  using Lin = std::array<__int128, 2>;  // c1 x + c0
  using Quad = std::array<__int128, 3>;
  auto mul128 = [](__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "value_of_cf: period too long");
    return r;
  };
  auto add128 = [](__int128 a, __int128 b) {
    __int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "value_of_cf: period too long");
    return r;
  };
  auto times = [&](const Lin& u, const Lin& v) {
    return Quad{mul128(u[0], v[0]), add128(mul128(u[0], v[1]), mul128(u[1], v[0])),
                mul128(u[1], v[1])};
  };
  const Lin X{head.q_prev, -static_cast<__int128>(head.p_prev)};
  const Lin Y{-static_cast<__int128>(head.q), head.p};
  const Quad xx = times(X, X), xy = times(X, Y), yy = times(Y, Y);
  Quad poly{};
  for (int i = 0; i < 3; ++i) {
    poly[i] = add128(add128(mul128(per.q, xx[i]), mul128(sub(per.q_prev, per.p), xy[i])),
                     -mul128(per.p_prev, yy[i]));
  }
  auto abs128 = [](__int128 v) { return v < 0 ? -v : v; };
  __int128 g = 0;
  for (__int128 c : poly) {
    for (__int128 a = abs128(c), b = g; ; ) {
      if (b == 0) {
        g = a;
        break;
      }
      const __int128 t = a % b;
      a = b;
      b = t;
    }
  }
  const Int A = narrow(poly[0] / g), B = narrow(poly[1] / g), C = narrow(poly[2] / g);
  const Int disc = narrow(static_cast<__int128>(B) * B - static_cast<__int128>(4) * A * C);
  // pick the root nearest the truncated expansion
  long double approx = 0;
  for (int i = 40; i >= 1; --i) approx = 1 / (cf.digit(static_cast<std::size_t>(i)) + approx);
  approx += cf.a0;
  const long double r = std::sqrt(static_cast<long double>(disc));
  const long double plus = (-B + r) / (2.0L * A), minus = (-B - r) / (2.0L * A);
  const Int sign = std::abs(plus - approx) < std::abs(minus - approx) ? 1 : -1;
  return make_surd(-B, sign, mul(2, A), disc);
}

RealImage real_of_gapset(const GapSet& g) {
  RealImage img;
  if (auto f = g.finite_repr()) {
    const std::vector<Int> d = g.delta(f->elements.size());
    img.cf.a0 = d[0];
    img.cf.pre.assign(d.begin() + 1, d.end());
    img.value = value_of_cf(img.cf);
    return img;
  }
  if (auto p = g.periodic_repr()) {
    img.cf.a0 = p->pre[0];
    img.cf.pre.assign(p->pre.begin() + 1, p->pre.end());
    img.cf.period = p->period;
    img.value = value_of_cf(img.cf);
    return img;
  }
  const SampledGaps& s = *g.sampled_repr();
  const std::vector<Int> d = g.delta(s.prefix.size());
  img.cf.a0 = d[0];
  img.cf.pre.assign(d.begin() + 1, d.end());
  img.cf.declared_infinite = true;
  img.cf.tail_bounded = s.tail.delta_bounded;
  img.cf.tail_bound = s.tail.bound;
  return img;
}

GapSet gapset_of_real(const ExactReal& x) {
  if (auto r = std::get_if<Rational>(&x)) {
    if (r->num < 0) throw Error(ErrorKind::Domain, "gapset_of_real: value must be >= 0");
    if (r->num == 1) {
      throw Error(ErrorKind::ExcludedPoint,
                  "1/" + std::to_string(r->den) + " is excluded; its conjugacy class is S = {" +
                      std::to_string(r->den) + "," + std::to_string(r->den + 1) + ",...}",
                  "delta:" + std::to_string(r->den) + ";1");
    }
    return gapset_of_digits(cf_of_rational(*r));
  }
  return gapset_of_digits(cf_of_quadratic(std::get<QuadraticSurd>(x)));
}

GapSet gapset_of_real(const CFNumber& cf) {
  validate(cf);
  if (cf.is_finite() && cf.a0 == 0 && cf.pre.size() == 1) {
    const Int n = cf.pre[0];
    throw Error(ErrorKind::ExcludedPoint,
                "[0;" + std::to_string(n) + "] is S = {0," + std::to_string(n) +
                    "}, excluded as conjugate to S = {" + std::to_string(n) + "," +
                    std::to_string(n + 1) + ",...}",
                "delta:" + std::to_string(n) + ";1");
  }
  return gapset_of_digits(cf);
}

Classification classify_real(const CFNumber& cf) { return classify(gapset_of_real(cf)); }

namespace {

Int require_nonmixing(const CFNumber& x, std::size_t N) {
  if (N == 0) throw Error(ErrorKind::Domain, "perturbation depth N must be >= 1");
  if (!x.is_periodic() && N >= x.head_length()) {
    throw Error(ErrorKind::Domain, "perturbation depth N is past the known digits");
  }
  const Int g = mixing_gcd(gapset_of_digits(x));
  if (g == 1) throw Error(ErrorKind::Domain, "precondition: the input gap set is mixing");
  return g;
}

// Digits 1..upto of x, followed by the period re-phased to start at index
// upto + 1 when that index lies in the periodic part.
CFNumber rebase(const CFNumber& x, std::size_t upto) {
  CFNumber y = x;
  y.pre.clear();
  for (std::size_t i = 1; i <= upto; ++i) y.pre.push_back(x.digit(i));
  if (x.is_periodic()) {
    if (upto + 1 < x.head_length()) {
      y.pre.insert(y.pre.end(), x.pre.begin() + static_cast<long>(upto), x.pre.end());
    } else {
      const std::size_t l = x.period.size();
      const std::size_t start = (upto + 1 - x.head_length()) % l;
      y.period.clear();
      for (std::size_t i = 0; i < l; ++i) y.period.push_back(x.period[(start + i) % l]);
    }
  } else {
    y.pre.insert(y.pre.end(), x.pre.begin() + static_cast<long>(upto), x.pre.end());
  }
  return y;
}

CFNumber finish(CFNumber y, Int g) {
  if (y.is_periodic()) y = canonical_cf(y);
  const Int g2 = mixing_gcd(gapset_of_digits(y));
  if (g2 == 1 || g2 % g != 0) {
    throw Error(ErrorKind::Domain, "perturbation produced a mixing gap set (gcd " +
                                       std::to_string(g2) + ")");
  }
  return y;
}

}  // namespace

CFNumber nonmixing_perturbation(const CFNumber& x, std::size_t N) {
  const Int g = require_nonmixing(x, N);
  CFNumber y = rebase(x, N);
  y.pre[N - 1] = add(y.pre[N - 1], g);
  return finish(std::move(y), g);
}

CFNumber drop_digit(const CFNumber& x, std::size_t N) {
  const Int g = require_nonmixing(x, N);
  CFNumber y = rebase(x, N);
  y.pre.erase(y.pre.begin() + static_cast<long>(N - 1));
  return finish(std::move(y), g);
}

std::variant<ExactReal, CFNumber> parse_real(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::Parse, "real must start with rat:, quad:, dec: or cf:");
  }
  std::string_view kind = text.substr(0, colon), body = trim(text.substr(colon + 1));
  if (kind == "rat") {
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) return ExactReal{make_rational(parse_int(body, "rat"), 1)};
    return ExactReal{make_rational(parse_int(body.substr(0, slash), "rat numerator"),
                                   parse_int(body.substr(slash + 1), "rat denominator"))};
  }
  if (kind == "quad") {
    std::vector<Int> v;
    std::size_t start = 0;
    for (;;) {
      auto comma = body.find(',', start);
      v.push_back(parse_int(body.substr(start, comma - start), "quad"));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (v.size() != 4) throw Error(ErrorKind::Parse, "quad: expected a,b,c,d for (a + b*sqrt(d))/c");
    try {
      return ExactReal{make_surd(v[0], v[1], v[2], v[3])};
    } catch (const Error& e) {
      throw Error(ErrorKind::Parse, e.what());
    }
  }
  if (kind == "dec") {
    std::string_view num = body;
    std::optional<Int> prec;
    if (auto comma = body.find(','); comma != std::string_view::npos) {
      num = trim(body.substr(0, comma));
      std::string_view opt = trim(body.substr(comma + 1));
      if (!opt.starts_with("prec=")) throw Error(ErrorKind::Parse, "dec: expected prec=P");
      prec = parse_int(opt.substr(5), "dec precision");
      if (*prec < 0 || *prec > 17) throw Error(ErrorKind::Parse, "dec: prec must be in 0..17");
    }
    const auto dot = num.find('.');
    std::string_view ip = num.substr(0, dot);
    std::string_view fp = dot == std::string_view::npos ? std::string_view{} : num.substr(dot + 1);
    for (char ch : fp) {
      if (ch < '0' || ch > '9') throw Error(ErrorKind::Parse, "dec: bad fraction digits");
    }
    const std::size_t keep = prec ? static_cast<std::size_t>(*prec) : fp.size();
    Int value = ip.empty() ? 0 : parse_int(ip, "dec integer part");
    if (value < 0) throw Error(ErrorKind::Parse, "dec: value must be >= 0");
    Int scale = 1;
    for (std::size_t i = 0; i < keep; ++i) {
      const Int digit = i < fp.size() ? fp[i] - '0' : 0;
      value = add(mul(value, 10), digit);
      scale = mul(scale, 10);
    }
    if (keep < fp.size() && fp[keep] >= '5') value = add(value, 1);
    return ExactReal{make_rational(value, scale)};
  }
  if (kind == "cf") return parse_cf(body);
  throw Error(ErrorKind::Parse, "unknown real kind '" + std::string(kind) + "'");
}

double SurveyStats::mixing_frequency() const {
  const uint64_t admitted = samples - excluded;
  return admitted == 0 ? 0.0 : static_cast<double>(mixing) / static_cast<double>(admitted);
}

namespace {

void tally(SurveyStats& st, const Rational& x) {
  ++st.samples;
  if (x.num == 1) {
    ++st.excluded;
    return;
  }
  ++st.sft;
  Int p = x.num, q = x.den;
  Int s = 0, g = 0;
  for (unsigned depth = 0; depth < st.horizon; ++depth) {
    const Int a = p / q;
    s = depth == 0 ? a : s + a;
    g = std::gcd(g, s + 1);
    if (g == 1) {
      ++st.mixing;
      return;
    }
    const Int r = p % q;
    p = q;
    q = r;
    if (q == 0) {
      ++st.non_mixing;
      return;
    }
  }
  ++st.undecided;
}

}  // namespace

SurveyStats survey_values(const std::vector<Rational>& values, unsigned horizon) {
  if (horizon == 0) throw Error(ErrorKind::Domain, "survey: horizon must be >= 1");
  SurveyStats st;
  st.horizon = horizon;
  for (const Rational& x : values) tally(st, x);
  return st;
}

SurveyStats survey(uint64_t samples, unsigned horizon, uint64_t seed) {
  if (samples == 0) throw Error(ErrorKind::Domain, "survey: samples must be >= 1");
  if (horizon == 0) throw Error(ErrorKind::Domain, "survey: horizon must be >= 1");
  SurveyStats st;
  st.horizon = horizon;
  st.seed = seed;
  st.denominator = kSurveyDenominator;
  st.range = kSurveyRange;
  std::mt19937_64 rng(seed);
  const uint64_t span = static_cast<uint64_t>(kSurveyDenominator * kSurveyRange);
  const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  for (uint64_t i = 0; i < samples; ++i) {
    uint64_t v;
    do {
      v = rng();
    } while (v >= limit);
    tally(st, make_rational(static_cast<Int>(v % span), kSurveyDenominator));
  }
  return st;
}

}  // namespace sgap
