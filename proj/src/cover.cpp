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

#include "sgap/cover.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "sgap/detail/checked.hpp"
#include "sgap/language.hpp"

namespace sgap {

ResidualSet residual(const GapSet& g, Int a) {
  if (a < 0) throw Error(ErrorKind::Domain, "residual: shift must be >= 0");
  if (g.is_sampled()) throw Error(ErrorKind::Undecidable, "residual: sampled set");
  if (auto f = g.finite_repr()) {
    std::vector<Int> r;
    for (Int s : f->elements) {
      if (s >= a) r.push_back(s - a);
    }
    if (r.empty()) return {};
    return {GapSet::finite(std::move(r))};
  }
  const PeriodicGaps& p = *g.periodic_repr();
  const std::size_t k = p.pre.size(), l = p.period.size();
  auto digit = [&](std::size_t i) { return i < k ? p.pre[i] : p.period[(i - k) % l]; };
  Int s = 0;
  std::size_t j = 0;
  for (;; ++j) {
    s = j == 0 ? digit(0) : detail::add(s, digit(j));
    if (s >= a) break;
  }
  std::vector<Int> pre{s - a};
  std::vector<Int> period;
  if (j + 1 < k) {
    pre.insert(pre.end(), p.pre.begin() + static_cast<long>(j) + 1, p.pre.end());
    period = p.period;
  } else {
    const std::size_t start = (j + 1 - k) % l;
    for (std::size_t i = 0; i < l; ++i) period.push_back(p.period[(start + i) % l]);
  }
  return {GapSet::periodic(std::move(pre), std::move(period))};
}

std::vector<std::vector<Int>> LabeledGraph::adjacency() const {
  std::vector<std::vector<Int>> a(state_count, std::vector<Int>(state_count, 0));
  for (const Edge& e : edges) ++a[e.from][e.to];
  return a;
}

std::optional<std::size_t> LabeledGraph::successor(std::size_t state, int label) const {
  for (const Edge& e : edges) {
    if (e.from == state && e.label == label) return e.to;
  }
  return std::nullopt;
}

LabeledGraph fischer_cover(const GapSet& g) {
  if (g.is_sampled()) {
    throw Error(ErrorKind::Undecidable, "fischer_cover: sofic presentation needs a finite or "
                                        "eventually periodic S");
  }
  LabeledGraph G;
  G.residuals.push_back(g);
  for (Int a = 0;; ++a) {
    ResidualSet next = residual(g, a + 1);
    if (next.is_empty()) break;
    auto it = std::find(G.residuals.begin(), G.residuals.end(), *next.set);
    if (it != G.residuals.end()) {
      G.u0 = static_cast<std::size_t>(it - G.residuals.begin());
      G.folds = true;
      G.edges.push_back({static_cast<std::size_t>(a), 0, G.u0});
      break;
    }
    G.residuals.push_back(*next.set);
    G.edges.push_back({static_cast<std::size_t>(a), 0, static_cast<std::size_t>(a + 1)});
  }
  G.state_count = G.residuals.size();
  for (std::size_t i = 0; i < G.state_count; ++i) {
    if (G.residuals[i].contains(0)) G.edges.push_back({i, 1, 0});
  }
  std::sort(G.edges.begin(), G.edges.end(), [](const Edge& x, const Edge& y) {
    return std::pair(x.from, x.label) < std::pair(y.from, y.label);
  });
  if (auto f = g.finite_repr()) {
    G.pre_count = f->elements.size();
    G.last_pre_element = f->elements.back();
  } else {
    const PeriodicGaps& p = *g.periodic_repr();
    G.pre_count = p.pre.size();
    G.last_pre_element = g.elements(p.pre.size()).back();
  }
  return G;
}

bool is_right_resolving(const LabeledGraph& G) {
  std::set<std::pair<std::size_t, int>> seen;
  for (const Edge& e : G.edges) {
    if (!seen.insert({e.from, e.label}).second) return false;
  }
  return true;
}

Int delay_bound(const LabeledGraph& G) {
  return std::max<Int>(static_cast<Int>(G.u0), G.last_pre_element + 1);
}

Int default_delay_cap(const LabeledGraph& G) {
  return static_cast<Int>(G.u0) + G.last_pre_element + 2;
}

std::optional<Int> left_closing_delay(const LabeledGraph& G, Int max_delay) {
  // Pairs of start states of two equally labelled paths that end in the same
  // state through different last edges.
  std::set<std::pair<std::size_t, std::size_t>> frontier;
  for (std::size_t i = 0; i < G.edges.size(); ++i) {
    for (std::size_t j = 0; j < G.edges.size(); ++j) {
      const Edge &x = G.edges[i], &y = G.edges[j];
      if (i != j && x.to == y.to && x.label == y.label) frontier.insert({x.from, y.from});
    }
  }
  for (Int d = 0; d <= max_delay; ++d) {
    if (frontier.empty()) return d;
    std::set<std::pair<std::size_t, std::size_t>> next;
    for (auto [u, v] : frontier) {
      for (const Edge& x : G.edges) {
        if (x.to != u) continue;
        for (const Edge& y : G.edges) {
          if (y.to == v && y.label == x.label) next.insert({x.from, y.from});
        }
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

namespace {

std::vector<bool> reachable(const LabeledGraph& G, bool forward) {
  std::vector<bool> seen(G.state_count, false);
  if (G.state_count == 0) return seen;
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (const Edge& e : G.edges) {
      std::size_t from = forward ? e.from : e.to, to = forward ? e.to : e.from;
      if (from == u && !seen[to]) {
        seen[to] = true;
        queue.push_back(to);
      }
    }
  }
  return seen;
}

using Matrix = std::vector<std::vector<double>>;

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

}  // namespace

PeriodClasses period_and_classes(const LabeledGraph& G) {
  if (G.state_count == 0) throw Error(ErrorKind::Domain, "period_and_classes: empty graph");
  const auto fwd = reachable(G, true), bwd = reachable(G, false);
  for (std::size_t i = 0; i < G.state_count; ++i) {
    if (!fwd[i] || !bwd[i]) throw Error(ErrorKind::Domain, "graph is not strongly connected");
  }
  std::vector<Int> level(G.state_count, -1);
  level[0] = 0;
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (const Edge& e : G.edges) {
      if (e.from == u && level[e.to] < 0) {
        level[e.to] = level[u] + 1;
        queue.push_back(e.to);
      }
    }
  }
  Int p = 0;
  for (const Edge& e : G.edges) p = std::gcd(p, std::abs(level[e.from] + 1 - level[e.to]));
  PeriodClasses pc;
  pc.period = p;
  pc.classes.resize(static_cast<std::size_t>(p));
  pc.class_of.resize(G.state_count);
  for (std::size_t i = 0; i < G.state_count; ++i) {
    pc.class_of[i] = static_cast<std::size_t>(level[i] % p);
    pc.classes[pc.class_of[i]].push_back(i);
  }
  return pc;
}

PftCertificate pft_certificate(const GapSet& g) {
  if (g.is_sampled()) throw Error(ErrorKind::Domain, "pft_certificate: S must be sofic (not sampled)");
  if (is_sft(g).verdict == Verdict::True) throw Error(ErrorKind::Domain, "pft_certificate: X(S) is SFT");
  if (is_aft(g).verdict != Verdict::True) throw Error(ErrorKind::Domain, "pft_certificate: X(S) is not AFT");
  if (is_mixing(g).verdict != Verdict::False) {
    throw Error(ErrorKind::Domain, "pft_certificate: X(S) is mixing");
  }
  const LabeledGraph G = fischer_cover(g);
  const PeriodClasses pc = period_and_classes(G);
  const Int p = pc.period;
  std::optional<std::size_t> one_class;
  for (const Edge& e : G.edges) {
    if (e.label != 1) continue;
    if (one_class && *one_class != pc.class_of[e.from]) {
      throw Error(ErrorKind::Domain, "pft_certificate: 1-edges start in different period classes");
    }
    one_class = pc.class_of[e.from];
  }
  PftCertificate cert;
  cert.period = p;
  cert.classes.resize(static_cast<std::size_t>(p));
  std::vector<std::size_t> rotated(G.state_count);
  for (std::size_t i = 0; i < G.state_count; ++i) {
    rotated[i] = static_cast<std::size_t>((static_cast<Int>(pc.class_of[i]) -
                                           static_cast<Int>(*one_class) + p - 1) % p);
    cert.classes[rotated[i]].push_back(i);
  }
  for (Int n = 0; n + 2 <= p; ++n) {
    for (const Edge& e : G.edges) {
      if (e.label == 1 && rotated[e.from] == static_cast<std::size_t>(n)) {
        throw Error(ErrorKind::Domain, "pft_certificate: class D_" + std::to_string(n) +
                                           " can read a 1");
      }
    }
    cert.offenders.push_back("1^(" + std::to_string(n) + ")");
  }
  cert.proper = true;
  return cert;
}

double spectral_radius(const LabeledGraph& G, double tol) {
  if (!(tol > 0)) throw Error(ErrorKind::Domain, "spectral_radius: tol must be > 0");
  const PeriodClasses pc = period_and_classes(G);
  const std::size_t n = G.state_count;
  Matrix a(n, std::vector<double>(n, 0.0));
  for (const Edge& e : G.edges) a[e.from][e.to] += 1.0;
  Matrix m = a;
  for (Int i = 1; i < pc.period; ++i) m = multiply(m, a);

  std::vector<double> v(n, 1.0 / static_cast<double>(n)), w(n);
  double estimate = 0.0;
  for (int iter = 0; iter < 100000; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = 0.0;
      for (std::size_t j = 0; j < n; ++j) w[i] += m[i][j] * v[j];
    }
    double sum = 0.0;
    for (double x : w) sum += x;
    estimate = sum;  // v sums to 1
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      w[i] /= sum;
      change = std::max(change, std::abs(w[i] - v[i]));
    }
    std::swap(v, w);
    if (change < tol) return std::pow(estimate, 1.0 / static_cast<double>(pc.period));
  }
  throw Error(ErrorKind::NoConvergence, "spectral_radius: no convergence in 100000 iterations");
}

std::vector<char> path_labels(const LabeledGraph& G, std::size_t state, unsigned L) {
  if (L > 24) throw Error(ErrorKind::Domain, "path_labels: L <= 24");
  std::vector<char> mask(std::size_t{1} << L, 0);
  std::function<void(std::size_t, unsigned, std::size_t)> rec = [&](std::size_t u, unsigned depth,
                                                                     std::size_t bits) {
    if (depth == L) {
      mask[bits] = 1;
      return;
    }
    for (const Edge& e : G.edges) {
      if (e.from == u) rec(e.to, depth + 1, bits << 1 | static_cast<std::size_t>(e.label));
    }
  };
  rec(state, 0, 0);
  return mask;
}

bool graph_language_check(const LabeledGraph& G, const GapSet& g, unsigned L) {
  std::vector<char> labels(std::size_t{1} << L, 0);
  for (std::size_t s = 0; s < G.state_count; ++s) {
    const auto m = path_labels(G, s, L);
    for (std::size_t i = 0; i < m.size(); ++i) labels[i] |= m[i];
  }
  std::string w(L, '0');
  for (std::size_t bits = 0; bits < labels.size(); ++bits) {
    for (unsigned i = 0; i < L; ++i) w[i] = (bits >> (L - 1 - i) & 1U) ? '1' : '0';
    if (static_cast<bool>(labels[bits]) != is_admissible(w, g)) return false;
  }
  return true;
}

std::string to_dot(const LabeledGraph& G) {
  Int period = 0;
  try {
    period = period_and_classes(G).period;
  } catch (const Error&) {
    period = 0;
  }
  std::ostringstream os;
  os << "digraph cover {\n";
  os << "  u0=" << G.u0 << ";\n";
  os << "  period=" << period << ";\n";
  for (std::size_t i = 0; i < G.state_count; ++i) {
    os << "  \"R" << i << "\"";
    if (i < G.residuals.size()) os << " [tooltip=\"" << G.residuals[i].to_string() << "\"]";
    os << ";\n";
  }
  for (const Edge& e : G.edges) {
    os << "  \"R" << e.from << "\" -> \"R" << e.to << "\" [label=\"" << e.label << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace sgap
