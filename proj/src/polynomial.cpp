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

#include "sgap/polynomial.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "sgap/detail/checked.hpp"

namespace sgap {

Polynomial::Polynomial(std::vector<Int> coeffs) : c_(std::move(coeffs)) {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial Polynomial::monomial(Int coeff, std::size_t degree) {
  std::vector<Int> c(degree + 1, 0);
  c[degree] = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = detail::add((*this)[i], o[i]);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Int> r(std::max(c_.size(), o.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = detail::sub((*this)[i], o[i]);
  return Polynomial(std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Int> r(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < o.c_.size(); ++j) {
      r[i + j] = detail::add(r[i + j], detail::mul(c_[i], o.c_[j]));
    }
  }
  return Polynomial(std::move(r));
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Int c = c_[i];
    if (c == 0) continue;
    const Int mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag;
    if (i >= 1) os << 't';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

namespace {

Polynomial primitive(const Polynomial& p) {
  if (p.is_zero()) return p;
  Int g = 0;
  for (Int c : p.coeffs()) g = std::gcd(g, c);
  std::vector<Int> r = p.coeffs();
  const Int sign = r.back() < 0 ? -1 : 1;
  for (Int& c : r) c = c / g * sign;
  return Polynomial(std::move(r));
}

Polynomial pseudo_remainder(Polynomial a, const Polynomial& b) {
  const Int lb = b.coeffs().back();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const Int la = a.coeffs().back();
    const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
    a = Polynomial({lb}) * a - Polynomial::monomial(la, shift) * b;
    a = primitive(a);
  }
  return a;
}

}  // namespace

Polynomial polynomial_gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = primitive(a), y = primitive(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = pseudo_remainder(x, y);
    x = y;
    y = primitive(r);
  }
  return x;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorKind::Domain, "division by the zero polynomial");
  std::vector<Int> rem = a.coeffs();
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw Error(ErrorKind::Domain, "polynomial does not divide");
  }
  const std::size_t db = static_cast<std::size_t>(b.degree());
  const Int lb = b.coeffs().back();
  std::vector<Int> q(rem.size() - db, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    const Int top = rem[i + db];
    if (top % lb != 0) throw Error(ErrorKind::Domain, "polynomial does not divide over Z");
    q[i] = top / lb;
    for (std::size_t j = 0; j <= db; ++j) {
      rem[i + j] = detail::sub(rem[i + j], detail::mul(q[i], b.coeffs()[j]));
    }
  }
  for (Int r : rem) {
    if (r != 0) throw Error(ErrorKind::Domain, "polynomial does not divide");
  }
  return Polynomial(std::move(q));
}

std::string RationalFunction::to_string() const {
  auto wrap = [](const Polynomial& p) {
    std::string s = p.to_string();
    std::size_t terms = 0;
    for (Int c : p.coeffs()) terms += c != 0;
    return terms > 1 ? "(" + s + ")" : s;
  };
  return wrap(numerator) + "/" + wrap(denominator);
}

RationalFunction reduce(const RationalFunction& f) {
  try {
    Polynomial g = polynomial_gcd(f.numerator, f.denominator);
    if (g.degree() <= 0) return f;
    Polynomial num = exact_divide(f.numerator, g), den = exact_divide(f.denominator, g);
    if (den[0] < 0) {
      num = Polynomial({-1}) * num;
      den = Polynomial({-1}) * den;
    }
    return {num, den};
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::Overflow) throw;
    return f;
  }
}

std::vector<Int> series(const RationalFunction& f, std::size_t order) {
  if (f.denominator[0] != 1) {
    throw Error(ErrorKind::Domain, "series expansion needs denominator(0) = 1");
  }
  std::vector<Int> z(order + 1, 0);
  for (std::size_t n = 0; n <= order; ++n) {
    __int128 acc = f.numerator[n];
    const std::size_t top = std::min<std::size_t>(n, f.denominator.coeffs().size() - 1);
    for (std::size_t j = 1; j <= top; ++j) {
      acc -= static_cast<__int128>(f.denominator[j]) * z[n - j];
    }
    z[n] = detail::narrow(acc);
  }
  return z;
}

}  // namespace sgap
