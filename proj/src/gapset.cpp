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

#include "sgap/gapset.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <numeric>
#include <sstream>

#include "sgap/detail/checked.hpp"

namespace sgap {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Horizon: return "HorizonExceeded";
    case ErrorKind::Undecidable: return "Undecidable";
    case ErrorKind::ExcludedPoint: return "ExcludedPoint";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::NoConvergence: return "NoConvergence";
  }
  return "Error";
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::False: return "false";
    case Verdict::True: return "true";
    case Verdict::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::string join(const std::vector<Int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

void require_increasing(const std::vector<Int>& v, const char* what) {
  if (v.empty()) throw Error(ErrorKind::Domain, std::string(what) + ": empty set");
  if (v.front() < 0) throw Error(ErrorKind::Domain, std::string(what) + ": negative element");
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] <= v[i - 1]) {
      throw Error(ErrorKind::Domain, std::string(what) + ": list is not strictly increasing");
    }
  }
}

std::vector<Int> differences(const std::vector<Int>& s) {
  std::vector<Int> d;
  d.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) d.push_back(i == 0 ? s[0] : s[i] - s[i - 1]);
  return d;
}

Int pre_last(const PeriodicGaps& g) {
  Int s = 0;
  for (Int d : g.pre) s = detail::add(s, d);
  return s;
}

Int period_sum(const PeriodicGaps& g) {
  Int p = 0;
  for (Int m : g.period) p = detail::add(p, m);
  return p;
}

}  // namespace

PeriodicGaps canonical_form(PeriodicGaps g) {
  if (g.pre.empty()) throw Error(ErrorKind::Domain, "delta: d0 is required");
  if (g.pre[0] < 0) throw Error(ErrorKind::Domain, "delta: d0 must be >= 0");
  for (std::size_t i = 1; i < g.pre.size(); ++i) {
    if (g.pre[i] < 1) throw Error(ErrorKind::Domain, "delta: d_i must be >= 1 for i >= 1");
  }
  if (g.period.empty()) throw Error(ErrorKind::Domain, "delta: period is empty");
  for (Int m : g.period) {
    if (m < 1) throw Error(ErrorKind::Domain, "delta: period entries must be >= 1");
  }

  const std::size_t l = g.period.size();
  for (std::size_t t = 1; t < l; ++t) {
    if (l % t != 0) continue;
    bool repeats = true;
    for (std::size_t i = t; i < l && repeats; ++i) repeats = g.period[i] == g.period[i - t];
    if (repeats) {
      g.period.resize(t);
      break;
    }
  }

  // d0 is never absorbed into the period: it is s_0, not a gap.
  while (g.pre.size() > 1 && g.pre.back() == g.period.back()) {
    g.pre.pop_back();
    std::rotate(g.period.rbegin(), g.period.rbegin() + 1, g.period.rend());
  }
  return g;
}

std::vector<Int> expand_elements(const PeriodicGaps& g, std::size_t n) {
  std::vector<Int> out;
  out.reserve(n);
  Int s = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Int d = i < g.pre.size() ? g.pre[i] : g.period[(i - g.pre.size()) % g.period.size()];
    s = i == 0 ? d : detail::add(s, d);
    out.push_back(s);
  }
  return out;
}

GapSet GapSet::finite(std::vector<Int> elements) {
  require_increasing(elements, "finite");
  return GapSet(FiniteGaps{std::move(elements)});
}

GapSet GapSet::periodic(std::vector<Int> pre, std::vector<Int> period) {
  return GapSet(canonical_form(PeriodicGaps{std::move(pre), std::move(period)}));
}

GapSet GapSet::cofinite(std::vector<Int> excluded) {
  std::sort(excluded.begin(), excluded.end());
  excluded.erase(std::unique(excluded.begin(), excluded.end()), excluded.end());
  if (!excluded.empty() && excluded.front() < 0) {
    throw Error(ErrorKind::Domain, "cofinite: excluded values must be >= 0");
  }
  const Int top = excluded.empty() ? 0 : detail::add(excluded.back(), 1);
  std::vector<Int> head;
  for (Int n = 0; n <= top; ++n) {
    if (!std::binary_search(excluded.begin(), excluded.end(), n)) head.push_back(n);
  }
  return periodic(differences(head), {1});
}

GapSet GapSet::sampled(std::vector<Int> prefix, TailMeta tail) {
  require_increasing(prefix, "sampled");
  if (tail.horizon < prefix.back()) tail.horizon = prefix.back();
  if (tail.delta_bounded == Bound::Yes && tail.bound < 1) {
    throw Error(ErrorKind::Domain, "sampled: bounded=yes needs M >= 1");
  }
  if (tail.delta_bounded != Bound::Yes) tail.bound = 0;
  return GapSet(SampledGaps{std::move(prefix), std::move(tail)});
}

GapSet GapSet::family(std::string_view name, Int horizon, std::optional<Bound> bounded,
                      Int bound) {
  if (horizon < 0) throw Error(ErrorKind::Domain, "family: horizon must be >= 0");
  std::vector<Int> prefix;
  if (name == "squares") {
    for (Int i = 0; i * i <= horizon; ++i) prefix.push_back(i * i);
  } else if (name == "powers2") {
    for (Int p = 1; p <= horizon; p *= 2) {
      prefix.push_back(p);
      if (p > std::numeric_limits<Int>::max() / 2) break;
    }
  } else if (name == "primes") {
    if (horizon >= 2) {
      std::vector<bool> composite(static_cast<std::size_t>(horizon) + 1, false);
      for (Int i = 2; i <= horizon; ++i) {
        if (composite[i]) continue;
        prefix.push_back(i);
        for (Int j = i * i; j <= horizon; j += i) composite[j] = true;
      }
    }
  } else {
    throw Error(ErrorKind::Domain, "family: unknown family '" + std::string(name) + "'");
  }
  if (prefix.empty()) throw Error(ErrorKind::Domain, "family: horizon too small, empty prefix");
  // Gaps between consecutive squares, primes and powers of two are unbounded.
  TailMeta tail{bounded.value_or(Bound::No), bound, horizon, std::string(name)};
  return sampled(std::move(prefix), std::move(tail));
}

Int GapSet::min_element() const {
  if (auto f = finite_repr()) return f->elements.front();
  if (auto p = periodic_repr()) return p->pre.front();
  return sampled_repr()->prefix.front();
}

Int GapSet::max_element() const {
  if (auto f = finite_repr()) return f->elements.back();
  throw Error(ErrorKind::Domain, "max_element: S is infinite");
}

Int GapSet::horizon() const {
  if (auto s = sampled_repr()) return s->tail.horizon;
  return std::numeric_limits<Int>::max();
}

bool GapSet::contains(Int n) const {
  if (n < 0) return false;
  if (auto f = finite_repr()) {
    return std::binary_search(f->elements.begin(), f->elements.end(), n);
  }
  if (auto s = sampled_repr()) {
    if (n > s->tail.horizon) {
      throw Error(ErrorKind::Horizon, "membership of " + std::to_string(n) +
                                          " is beyond the sampled horizon " +
                                          std::to_string(s->tail.horizon));
    }
    return std::binary_search(s->prefix.begin(), s->prefix.end(), n);
  }
  const PeriodicGaps& g = *periodic_repr();
  const std::vector<Int> head = expand_elements(g, g.pre.size());
  if (n <= head.back()) return std::binary_search(head.begin(), head.end(), n);
  const Int r = (n - head.back()) % period_sum(g);
  Int c = 0;
  for (Int m : g.period) {
    if (c == r) return true;
    c += m;
  }
  return false;
}

std::vector<Int> GapSet::elements(std::size_t n) const {
  if (auto f = finite_repr()) {
    return {f->elements.begin(), f->elements.begin() + std::min(n, f->elements.size())};
  }
  if (auto p = periodic_repr()) return expand_elements(*p, n);
  const SampledGaps& s = *sampled_repr();
  if (n > s.prefix.size()) {
    throw Error(ErrorKind::Horizon, "requested " + std::to_string(n) +
                                        " elements but the sampled prefix has " +
                                        std::to_string(s.prefix.size()));
  }
  return {s.prefix.begin(), s.prefix.begin() + n};
}

std::vector<Int> GapSet::elements_upto(Int limit) const {
  std::vector<Int> out;
  if (auto f = finite_repr()) {
    for (Int s : f->elements) {
      if (s <= limit) out.push_back(s);
    }
    return out;
  }
  if (auto s = sampled_repr()) {
    if (limit > s->tail.horizon) {
      throw Error(ErrorKind::Horizon, "elements up to " + std::to_string(limit) +
                                          " exceed the sampled horizon");
    }
    for (Int x : s->prefix) {
      if (x <= limit) out.push_back(x);
    }
    return out;
  }
  const PeriodicGaps& g = *periodic_repr();
  Int x = 0;
  for (std::size_t i = 0;; ++i) {
    Int d = i < g.pre.size() ? g.pre[i] : g.period[(i - g.pre.size()) % g.period.size()];
    x = i == 0 ? d : detail::add(x, d);
    if (x > limit) break;
    out.push_back(x);
  }
  return out;
}

std::vector<Int> GapSet::delta(std::size_t n) const { return differences(elements(n)); }

std::string GapSet::to_string() const {
  if (auto f = finite_repr()) return "finite:" + join(f->elements);
  if (auto p = periodic_repr()) return "delta:" + join(p->pre) + ";" + join(p->period);
  const SampledGaps& s = *sampled_repr();
  std::string bounded = s.tail.delta_bounded == Bound::Yes
                            ? "yes:" + std::to_string(s.tail.bound)
                            : (s.tail.delta_bounded == Bound::No ? "no" : "unknown");
  if (!s.tail.family.empty()) {
    return "family:" + s.tail.family + ",horizon=" + std::to_string(s.tail.horizon) +
           ",bounded=" + bounded;
  }
  return "sampled:" + join(s.prefix) + ";horizon=" + std::to_string(s.tail.horizon) +
         ",bounded=" + bounded;
}

namespace {

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

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<Int> parse_list(std::string_view s, std::string_view context, bool allow_empty) {
  s = trim(s);
  std::vector<Int> out;
  if (s.empty()) {
    if (!allow_empty) throw Error(ErrorKind::Parse, std::string(context) + ": empty list");
    return out;
  }
  for (auto tok : split(s, ',')) out.push_back(parse_int(tok, context));
  return out;
}

GapSet parse_family(std::string_view body) {
  auto parts = split(body, ',');
  std::string_view name = trim(parts[0]);
  Int horizon = 1000;
  std::optional<Bound> bounded;
  Int bound = 0;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::string_view kv = trim(parts[i]);
    auto eq = kv.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::Parse, "family: expected key=value, got '" + std::string(kv) + "'");
    }
    std::string_view key = kv.substr(0, eq), val = kv.substr(eq + 1);
    if (key == "horizon") {
      horizon = parse_int(val, "family horizon");
    } else if (key == "bounded") {
      if (val == "no") {
        bounded = Bound::No;
      } else if (val == "unknown") {
        bounded = Bound::Unknown;
      } else if (val.starts_with("yes:")) {
        bounded = Bound::Yes;
        bound = parse_int(val.substr(4), "family bound");
      } else {
        throw Error(ErrorKind::Parse, "family: bounded must be yes:M, no or unknown");
      }
    } else {
      throw Error(ErrorKind::Parse, "family: unknown key '" + std::string(key) + "'");
    }
  }
  return GapSet::family(name, horizon, bounded, bound);
}

}  // namespace

GapSet parse_gapset(std::string_view spec) {
  spec = trim(spec);
  auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::Parse, "gap set must start with finite:, delta:, cofinite: or family:");
  }
  std::string_view kind = spec.substr(0, colon), body = spec.substr(colon + 1);
  try {
    if (kind == "finite") return GapSet::finite(parse_list(body, "finite", false));
    if (kind == "delta") {
      auto semi = body.find(';');
      if (semi == std::string_view::npos) {
        throw Error(ErrorKind::Parse, "delta: expected 'd0[,d1,...];m1[,m2,...]'");
      }
      return GapSet::periodic(parse_list(body.substr(0, semi), "delta prefix", false),
                              parse_list(body.substr(semi + 1), "delta period", false));
    }
    if (kind == "cofinite") {
      body = trim(body);
      if (!body.starts_with("exclude=")) throw Error(ErrorKind::Parse, "cofinite: expected exclude=...");
      return GapSet::cofinite(parse_list(body.substr(8), "cofinite exclude", true));
    }
    if (kind == "family") return parse_family(body);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::Domain) throw Error(ErrorKind::Parse, e.what());
    throw;
  }
  throw Error(ErrorKind::Parse, "unknown gap set kind '" + std::string(kind) + "'");
}

GapSet canonicalize(const GapSet& g) {
  if (auto p = g.periodic_repr()) return GapSet::periodic(p->pre, p->period);
  return g;
}

Int mixing_gcd(const GapSet& g) {
  Int acc = 0;
  if (auto p = g.periodic_repr()) {
    for (Int s : g.elements(p->pre.size() + p->period.size())) acc = std::gcd(acc, s + 1);
    return std::gcd(acc, period_sum(*p));
  }
  const std::vector<Int>& xs = g.is_finite() ? g.finite_repr()->elements : g.sampled_repr()->prefix;
  for (Int s : xs) {
    acc = std::gcd(acc, s + 1);
    if (acc == 1) break;
  }
  return acc;
}

Judgement is_sft(const GapSet& g) {
  if (g.is_finite()) return {Verdict::True, "S is finite"};
  if (auto p = g.periodic_repr()) {
    if (p->period == std::vector<Int>{1}) return {Verdict::True, "S is cofinite"};
    return {Verdict::False, "S is neither finite nor cofinite"};
  }
  return {Verdict::Unknown, "sampled prefix cannot decide finiteness of the complement"};
}

Judgement is_sofic(const GapSet& g) {
  if (g.is_finite()) return {Verdict::True, "S is finite (SFT)"};
  if (auto p = g.periodic_repr()) {
    return {Verdict::True, "Delta(S) eventually periodic with period (" + join(p->period) + ")"};
  }
  return {Verdict::Unknown, "no eventually periodic pattern can be certified within horizon " +
                                std::to_string(g.horizon())};
}

Judgement is_aft(const GapSet& g) {
  if (g.is_finite()) return {Verdict::True, "S is finite (SFT)"};
  if (auto p = g.periodic_repr()) {
    if (p->period.size() == 1) {
      return {Verdict::True, "Delta(S) eventually constant = " + std::to_string(p->period[0])};
    }
    return {Verdict::False,
            "Delta(S) has minimal period length " + std::to_string(p->period.size())};
  }
  return {Verdict::Unknown, "sampled prefix cannot certify an eventually constant Delta(S)"};
}

Judgement is_mixing(const GapSet& g) {
  const Int d = mixing_gcd(g);
  std::string w = "gcd{s+1 : s in S} = " + std::to_string(d);
  if (g.is_sampled()) {
    if (d == 1) return {Verdict::True, w + " on the sampled prefix"};
    return {Verdict::Unknown, w + " on the sampled prefix"};
  }
  return {verdict_of(d == 1), w};
}

Judgement is_totally_transitive(const GapSet& g) {
  Judgement j = is_mixing(g);
  j.witness = "totally transitive iff mixing; " + j.witness;
  return j;
}

Judgement is_proper_pft(const GapSet& g) {
  const Verdict sft = is_sft(g).verdict, aft = is_aft(g).verdict, mix = is_mixing(g).verdict;
  if (sft == Verdict::Unknown || aft == Verdict::Unknown || mix == Verdict::Unknown) {
    return {Verdict::Unknown, "needs sft, aft and mixing decided"};
  }
  if (sft == Verdict::True) return {Verdict::False, "X(S) is SFT"};
  if (aft == Verdict::False) return {Verdict::False, "X(S) is not AFT"};
  if (mix == Verdict::True) return {Verdict::False, "X(S) is mixing"};
  return {Verdict::True, "non-SFT, AFT and non-mixing (" + is_mixing(g).witness + ")"};
}

Judgement is_almost_specified(const GapSet& g) {
  if (auto f = g.finite_repr()) {
    return {Verdict::True, "finite S: every u,v joined by w with |w| <= " +
                               std::to_string(f->elements.back() + 1)};
  }
  if (auto p = g.periodic_repr()) {
    Int m = *std::max_element(p->period.begin(), p->period.end());
    for (std::size_t i = 1; i < p->pre.size(); ++i) m = std::max(m, p->pre[i]);
    return {Verdict::True, "Delta(S) bounded by " + std::to_string(m)};
  }
  const TailMeta& t = g.sampled_repr()->tail;
  if (t.delta_bounded == Bound::Yes) {
    return {Verdict::True, "Delta(S) declared bounded by " + std::to_string(t.bound)};
  }
  if (t.delta_bounded == Bound::No) return {Verdict::False, "Delta(S) declared unbounded"};
  return {Verdict::Unknown, "boundedness of Delta(S) not declared"};
}

Judgement is_synchronized(const GapSet&) { return {Verdict::True, "1"}; }

Classification classify(const GapSet& g) {
  Classification c;
  auto put = [&](Verdict& slot, const char* name, Judgement j) {
    slot = j.verdict;
    c.witnesses[name] = std::move(j.witness);
  };
  put(c.sft, "sft", is_sft(g));
  put(c.sofic, "sofic", is_sofic(g));
  put(c.aft, "aft", is_aft(g));
  put(c.proper_pft, "proper_pft", is_proper_pft(g));
  put(c.mixing, "mixing", is_mixing(g));
  put(c.totally_transitive, "totally_transitive", is_totally_transitive(g));
  put(c.almost_specified, "almost_specified", is_almost_specified(g));
  put(c.synchronized, "synchronized", is_synchronized(g));
  return c;
}

std::vector<std::string> forbidden_words(const GapSet& g, std::size_t max_len) {
  auto gap_word = [](Int n) { return "1" + std::string(static_cast<std::size_t>(n), '0') + "1"; };
  std::vector<std::string> out;
  if (auto f = g.finite_repr()) {
    const Int top = f->elements.back();
    for (Int n = 0; n <= top; ++n) {
      if (!g.contains(n)) out.push_back(gap_word(n));
    }
    out.push_back(std::string(static_cast<std::size_t>(top) + 1, '0'));
    return out;
  }
  if (auto p = g.periodic_repr(); p && p->period == std::vector<Int>{1}) {
    const Int top = pre_last(*p);
    for (Int n = 0; n < top; ++n) {
      if (!g.contains(n)) out.push_back(gap_word(n));
    }
    return out;
  }
  for (Int n = 0; n + 2 <= static_cast<Int>(max_len); ++n) {
    if (!g.contains(n)) out.push_back(gap_word(n));
  }
  return out;
}

ConjugacyVerdict are_conjugate(const GapSet& a, const GapSet& b) {
  if (a.is_sampled() || b.is_sampled()) {
    throw Error(ErrorKind::Undecidable, "conjugacy is undecidable from a sampled prefix");
  }
  const GapSet ca = canonicalize(a), cb = canonicalize(b);
  if (ca == cb) return {true, "identical", 0, "S = S'"};

  auto pair_n = [](const GapSet& fin, const GapSet& inf) -> Int {
    auto f = fin.finite_repr();
    auto p = inf.periodic_repr();
    if (!f || !p) return 0;
    if (f->elements.size() != 2 || f->elements[0] != 0) return 0;
    const Int n = f->elements[1];
    if (p->pre == std::vector<Int>{n} && p->period == std::vector<Int>{1}) return n;
    return 0;
  };
  Int n = pair_n(ca, cb);
  if (n == 0) n = pair_n(cb, ca);
  if (n > 0) {
    return {true, "exceptional-pair", n,
            "Phi(w) = 1 iff w = 0^" + std::to_string(n) + ", memory 0, anticipation " +
                std::to_string(n - 1) + ": X({0," + std::to_string(n) + "}) -> X({" +
                std::to_string(n) + "," + std::to_string(n + 1) + ",...})"};
  }

  std::string cert = "S != S' and {S,S'} is not {{0,n},{n,n+1,...}}";
  for (Int k = 0; k < 10'000'000; ++k) {
    if (ca.contains(k) != cb.contains(k)) {
      cert += "; min(S symdiff S') = " + std::to_string(k);
      break;
    }
  }
  return {false, "distinct", 0, cert};
}

}  // namespace sgap
