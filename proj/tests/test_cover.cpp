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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>
#include <map>
#include <numeric>

#include "oracle.hpp"
#include "sgap/cover.hpp"
#include "sgap/language.hpp"

using namespace sgap;

namespace {

struct Member {
  const char* spec;
  oracle::Set set;
  bool aft;
};

const std::vector<Member>& sofic_members() {
  static const std::vector<Member> m = {
      {"delta:0;1", oracle::delta({0}, {1}), true},
      {"finite:0", oracle::finite({0}), true},
      {"finite:0,2", oracle::finite({0, 2}), true},
      {"finite:0,3", oracle::finite({0, 3}), true},
      {"finite:1,3", oracle::finite({1, 3}), true},
      {"finite:2,5", oracle::finite({2, 5}), true},
      {"delta:1;2", oracle::delta({1}, {2}), true},
      {"delta:2;3", oracle::delta({2}, {3}), true},
      {"delta:1;1", oracle::delta({1}, {1}), true},
      {"delta:2;1", oracle::delta({2}, {1}), true},
      {"delta:1;1,2", oracle::delta({1}, {1, 2}), false},
      {"delta:2,1;3,1", oracle::delta({2, 1}, {3, 1}), false},
      {"delta:0,3;2", oracle::delta({0, 3}, {2}), true},
  };
  return m;
}

// Words labelling some length-L path, by walking the edge list.
std::set<std::string> graph_words(const LabeledGraph& G, unsigned L) {
  std::set<std::string> out;
  std::function<void(std::size_t, std::string&)> walk = [&](std::size_t v, std::string& w) {
    if (w.size() == L) {
      out.insert(w);
      return;
    }
    for (const Edge& e : G.edges) {
      if (e.from != v) continue;
      w.push_back(static_cast<char>('0' + e.label));
      walk(e.to, w);
      w.pop_back();
    }
  };
  for (std::size_t v = 0; v < G.state_count; ++v) {
    std::string w;
    walk(v, w);
  }
  return out;
}

// gcd of the lengths n <= 2|V| of closed walks, from traces of A^n.
Int period_by_traces(const LabeledGraph& G) {
  const std::size_t k = G.state_count;
  std::vector<std::vector<double>> A(k, std::vector<double>(k, 0)), P = A;
  for (const Edge& e : G.edges) A[e.from][e.to] += 1;
  for (std::size_t i = 0; i < k; ++i) P[i][i] = 1;
  Int g = 0;
  for (std::size_t n = 1; n <= 2 * k + 2; ++n) {
    std::vector<std::vector<double>> Q(k, std::vector<double>(k, 0));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l) Q[i][j] += P[i][l] * A[l][j];
    P = Q;
    double tr = 0;
    for (std::size_t i = 0; i < k; ++i) tr += P[i][i];
    if (tr > 0) g = std::gcd(g, static_cast<Int>(n));
  }
  return g;
}

// Smallest D <= cap with the left-closing property, by listing all paths.
std::optional<Int> delay_by_paths(const LabeledGraph& G, Int cap) {
  for (Int D = 0; D <= cap; ++D) {
    // key: (end state, label string) -> last edge index seen
    std::map<std::pair<std::size_t, std::string>, std::size_t> seen;
    bool ok = true;
    std::function<void(std::size_t, std::string&, std::size_t, Int)> walk =
        [&](std::size_t v, std::string& w, std::size_t last, Int len) {
          if (!ok) return;
          if (len == D + 1) {
            auto [it, fresh] = seen.emplace(std::pair(v, w), last);
            if (!fresh && it->second != last) ok = false;
            return;
          }
          for (std::size_t i = 0; i < G.edges.size(); ++i) {
            const Edge& e = G.edges[i];
            if (e.from != v) continue;
            w.push_back(static_cast<char>('0' + e.label));
            walk(e.to, w, i, len + 1);
            w.pop_back();
          }
        };
    for (std::size_t v = 0; v < G.state_count && ok; ++v) {
      std::string w;
      walk(v, w, 0, 0);
    }
    if (ok) return D;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("residual sets") {
  CHECK(residual(parse_gapset("delta:1;2"), 1).set == parse_gapset("delta:0;2"));
  CHECK(residual(parse_gapset("delta:1;2"), 2).set == parse_gapset("delta:1;2"));
  CHECK(residual(parse_gapset("finite:0,2"), 3).is_empty());
  CHECK(residual(parse_gapset("finite:0,2"), 1).set == parse_gapset("finite:1"));
  CHECK(residual(parse_gapset("delta:1;1,2"), 3).set == parse_gapset("delta:1;1,2"));
  CHECK(residual(parse_gapset("delta:1;1,2"), 2).set == parse_gapset("delta:0;2,1"));
  CHECK_THROWS_AS(residual(parse_gapset("family:squares"), 1), Error);

  const GapSet g = parse_gapset("delta:2,1;3,1");
  const oracle::Set o = oracle::delta({2, 1}, {3, 1}, 300);
  for (Int a = 0; a <= 12; ++a) {
    const GapSet r = *residual(g, a).set;
    for (Int n = 0; n + a <= 300; ++n) CHECK(r.contains(n) == o.has(n + a));
  }
}

TEST_CASE("cover shapes") {
  const LabeledGraph odds = fischer_cover(parse_gapset("delta:1;2"));
  CHECK(odds.state_count == 2);
  CHECK(odds.edges == std::vector<Edge>{{0, 0, 1}, {1, 0, 0}, {1, 1, 0}});

  const LabeledGraph f02 = fischer_cover(parse_gapset("finite:0,2"));
  CHECK(f02.state_count == 3);
  CHECK(f02.residuals ==
        std::vector<GapSet>{GapSet::finite({0, 2}), GapSet::finite({1}), GapSet::finite({0})});
  CHECK(f02.edges == std::vector<Edge>{{0, 0, 1}, {0, 1, 0}, {1, 0, 2}, {2, 1, 0}});

  CHECK(fischer_cover(parse_gapset("delta:2;1")).state_count == 3);
  CHECK(fischer_cover(parse_gapset("delta:0;1")).state_count == 1);
  CHECK_THROWS_AS(fischer_cover(parse_gapset("family:squares")), Error);
}

TEST_CASE("right resolving") {
  CHECK(is_right_resolving(fischer_cover(parse_gapset("delta:1;2"))));
  CHECK(is_right_resolving(fischer_cover(parse_gapset("finite:0,2"))));
  LabeledGraph bad;
  bad.state_count = 2;
  bad.edges = {{0, 0, 0}, {0, 0, 1}, {1, 1, 0}};
  CHECK_FALSE(is_right_resolving(bad));
}

TEST_CASE("cover language equals X(S) language") {
  for (const Member& m : sofic_members()) {
    CAPTURE(m.spec);
    const GapSet g = parse_gapset(m.spec);
    const LabeledGraph G = fischer_cover(g);
    CHECK(is_right_resolving(G));
    CHECK(graph_language_check(G, g, 10));
    for (unsigned L = 1; L <= 10; ++L) {
      std::set<std::string> expect;
      for (uint64_t b = 0; b < (uint64_t{1} << L); ++b) {
        std::string w = oracle::word_of(b, L);
        if (oracle::in_language(w, m.set)) expect.insert(w);
      }
      CHECK(graph_words(G, L) == expect);
    }
  }
  const LabeledGraph odds = fischer_cover(parse_gapset("delta:1;2"));
  CHECK_FALSE(graph_language_check(odds, parse_gapset("finite:1,3"), 6));
}

TEST_CASE("left closing delay") {
  for (const Member& m : sofic_members()) {
    CAPTURE(m.spec);
    const LabeledGraph G = fischer_cover(parse_gapset(m.spec));
    const Int cap = default_delay_cap(G);
    const std::optional<Int> D = left_closing_delay(G, cap);
    CHECK(D == delay_by_paths(G, cap));
    CHECK(D.has_value() == m.aft);
    if (D) CHECK(*D <= delay_bound(G));
  }
  const LabeledGraph odds = fischer_cover(parse_gapset("delta:1;2"));
  CHECK(delay_bound(odds) == 2);
}

TEST_CASE("period and classes") {
  const PeriodClasses odds = period_and_classes(fischer_cover(parse_gapset("delta:1;2")));
  CHECK(odds.period == 2);
  CHECK(odds.classes == std::vector<std::vector<std::size_t>>{{0}, {1}});
  CHECK(period_and_classes(fischer_cover(parse_gapset("finite:0,2"))).period == 1);

  LabeledGraph cycle;
  cycle.state_count = 5;
  for (std::size_t i = 0; i < 5; ++i) cycle.edges.push_back({i, 0, (i + 1) % 5});
  CHECK(period_and_classes(cycle).period == 5);

  for (const Member& m : sofic_members()) {
    CAPTURE(m.spec);
    const LabeledGraph G = fischer_cover(parse_gapset(m.spec));
    const PeriodClasses pc = period_and_classes(G);
    CHECK(pc.period == period_by_traces(G));
    CHECK((pc.period == 1) == (oracle::mixing_gcd(m.set) == 1));
    for (const Edge& e : G.edges) {
      CHECK(pc.class_of[e.to] == (pc.class_of[e.from] + 1) % static_cast<std::size_t>(pc.period));
    }
  }
}

TEST_CASE("PFT certificate") {
  const PftCertificate odds = pft_certificate(parse_gapset("delta:1;2"));
  CHECK(odds.period == 2);
  CHECK(odds.offenders == std::vector<std::string>{"1^(0)"});
  CHECK(odds.proper);

  const PftCertificate three = pft_certificate(parse_gapset("delta:2;3"));
  CHECK(three.period == 3);
  CHECK(three.offenders == std::vector<std::string>{"1^(0)", "1^(1)"});

  CHECK_THROWS_AS(pft_certificate(parse_gapset("finite:0,2")), Error);
  CHECK_THROWS_AS(pft_certificate(parse_gapset("delta:1;1,2")), Error);
}

TEST_CASE("spectral radius") {
  CHECK(spectral_radius(fischer_cover(parse_gapset("delta:1;2"))) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(spectral_radius(fischer_cover(parse_gapset("delta:1;1"))) ==
        doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
  CHECK(spectral_radius(fischer_cover(parse_gapset("delta:0;1"))) ==
        doctest::Approx(2.0).epsilon(1e-12));
  for (const Member& m : sofic_members()) {
    CAPTURE(m.spec);
    CHECK(std::abs(spectral_radius(fischer_cover(parse_gapset(m.spec))) - oracle::gap_root(m.set)) <
          1e-9);
  }
}

TEST_CASE("dot output") {
  const std::string dot = to_dot(fischer_cover(parse_gapset("delta:1;2")));
  CHECK(dot.find("digraph") == 0);
  CHECK(dot.find("u0=0;") != std::string::npos);
  CHECK(dot.find("period=2;") != std::string::npos);
  CHECK(dot.find("\"R1\" -> \"R0\" [label=\"1\"];") != std::string::npos);
}
