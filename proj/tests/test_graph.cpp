// Copyright 2026 The pairham Authors
//
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

#include <doctest.h>

#include <bit>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <string>

#include "oracles.hpp"
#include "pairham/dot.hpp"
#include "pairham/error.hpp"
#include "pairham/generators.hpp"
#include "pairham/graph6.hpp"
#include "pairham/json_io.hpp"
#include "pairham/paths.hpp"
#include "pairham/products.hpp"

using namespace pairham;
using pairham::testing::are_isomorphic;

namespace {

// Adjacency straight from the product definitions, on coordinates.
bool cartesian_adjacent(const Graph& g, const Graph& h, Vertex a, Vertex b) {
  const Vertex n = g.order();
  Vertex u = a % n, v = a / n, u2 = b % n, v2 = b / n;
  return (u == u2 && h.has_edge(v, v2)) || (g.has_edge(u, u2) && v == v2);
}

bool strong_adjacent(const Graph& g, const Graph& h, Vertex a, Vertex b) {
  const Vertex n = g.order();
  Vertex u = a % n, v = a / n, u2 = b % n, v2 = b / n;
  return cartesian_adjacent(g, h, a, b) || (g.has_edge(u, u2) && h.has_edge(v, v2));
}

}  // namespace

TEST_CASE("graph construction enforces a simple graph") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> twice{{0, 1}, {1, 0}};
  const std::vector<Edge> outside{{0, 3}};
  CHECK_THROWS_AS(Graph(3, loop), DomainError);
  CHECK_THROWS_AS(Graph(3, twice), DomainError);
  CHECK_THROWS_AS(Graph(3, outside), DomainError);

  const std::vector<Edge> edges{{2, 0}, {1, 2}};
  Graph g(3, edges);
  CHECK(g.size() == 2);
  CHECK(g.edges()[0] == Edge{0, 2});
  CHECK(g.has_edge(2, 0));
  CHECK(g.has_edge(0, 2));
  CHECK_FALSE(g.has_edge(0, 1));
  CHECK_FALSE(g.has_edge(0, 7));
}

TEST_CASE("complete graphs") {
  CHECK(complete_graph(1).size() == 0);
  CHECK(complete_graph(4).size() == 6);
  CHECK(complete_graph(6).size() == 15);
  CHECK_THROWS_AS(complete_graph(0), DomainError);
}

TEST_CASE("standard generators") {
  CHECK(hypercube(3).order() == 8);
  CHECK(hypercube(3).size() == 12);
  CHECK(complete_bipartite(3, 3).order() == 6);
  CHECK(complete_bipartite(3, 3).size() == 9);
  CHECK(star_graph(4).order() == 4);
  CHECK(star_graph(4).size() == 3);
  CHECK(star_graph(4) == complete_bipartite(1, 3));
  CHECK(cycle_graph(5).size() == 5);
  CHECK(path_graph(5).size() == 4);
  CHECK(hypercube(0).order() == 1);

  const Graph sp = spider(3, 2);
  CHECK(sp.order() == 7);
  CHECK(sp.size() == 6);
  CHECK(sp.degree(0) == 3);

  CHECK_THROWS_AS(cycle_graph(2), DomainError);
  CHECK_THROWS_AS(hypercube(-1), DomainError);
  CHECK_THROWS_AS(complete_bipartite(0, 3), DomainError);
  CHECK_THROWS_AS(parse_family("wheel"), DomainError);

  const std::vector<int> params{3, 3};
  CHECK(generate(Family::complete_bipartite, params) == complete_bipartite(3, 3));
  CHECK_THROWS_AS(generate(Family::cycle, params), DomainError);
}

TEST_CASE("hypercubes are prism towers over Q2 with identical labels") {
  for (int d = 2; d <= 5; ++d) {
    CHECK(hypercube(d) == prism_power(hypercube(2), d - 2).top());
    CHECK(hypercube(d) == prism_power(complete_graph(1), d).top());
  }
  CHECK(are_isomorphic(hypercube(2), cycle_graph(4)));
}

TEST_CASE("prism examples") {
  const PrismStructure k2 = prism(complete_graph(1));
  CHECK(k2.host() == complete_graph(2));

  CHECK(prism(hypercube(2)).host() == hypercube(3));
  CHECK(are_isomorphic(prism(cycle_graph(4)).host(), hypercube(3)));

  // prism(C4): rebuild from the definition and compare.
  const Graph c4 = cycle_graph(4);
  std::vector<Edge> expected;
  for (Vertex a = 0; a < 8; ++a)
    for (Vertex b = a + 1; b < 8; ++b) {
      bool same_layer = (a < 4) == (b < 4) && c4.has_edge(a % 4, b % 4);
      if (same_layer || b == a + 4) expected.push_back({a, b});
    }
  CHECK(expected.size() == 12);
  CHECK(prism(c4).host() == Graph(8, expected));
}

TEST_CASE("prism structure identification") {
  const PrismStructure s = prism(complete_graph(4));
  CHECK(s.base_order() == 4);
  CHECK(s.layer() == complete_graph(4));
  CHECK(s.mirror(1) == 5);
  CHECK(s.mirror(6) == 2);
  CHECK(s.layer_of(3) == 0);
  CHECK(s.layer_of(4) == 1);
  CHECK(s.is_vertical({2, 6}));
  CHECK_FALSE(s.is_vertical({2, 7}));

  CHECK(PrismStructure::identify(s.host(), 4).layer() == complete_graph(4));
  CHECK_THROWS_AS(PrismStructure::identify(complete_graph(8), 4), DomainError);
  CHECK_THROWS_AS(PrismStructure::identify(cycle_graph(8), 4), DomainError);
  CHECK_THROWS_AS(PrismStructure::identify(s.host(), 3), DomainError);
}

TEST_CASE("prism equals the Cartesian product with K2 and has 2|E| + |V| edges") {
  std::vector<Graph> sample;
  for (int n = 1; n <= 5; ++n)
    for (const Graph& g : pairham::testing::connected_graphs(n)) sample.push_back(g);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    sample.push_back(pairham::testing::random_graph(1 + static_cast<Vertex>(rng() % 10), 0.4, rng));
  }
  for (const Graph& g : sample) {
    const Graph host = prism(g).host();
    CHECK(host == cartesian_product(g, complete_graph(2)));
    CHECK(host.order() == 2 * g.order());
    CHECK(host.size() == 2 * g.size() + static_cast<std::size_t>(g.order()));
  }
}

TEST_CASE("prism towers") {
  const Graph base = cycle_graph(3);
  const PrismTower t = prism_power(base, 3);
  CHECK(t.height() == 3);
  CHECK(t.top().order() == 3 * 8);
  CHECK(prism_power(hypercube(2), 0).top() == hypercube(2));
  CHECK(prism_power(hypercube(2), 2).top() == hypercube(4));
  CHECK(are_isomorphic(prism_power(complete_graph(1), 3).top(), hypercube(3)));

  // Full adjacency rule across all prism bits.
  for (Vertex a = 0; a < t.top().order(); ++a)
    for (Vertex b = a + 1; b < t.top().order(); ++b) {
      auto [ba, wa] = t.decode(a);
      auto [bb, wb] = t.decode(b);
      bool expected = (wa == wb && base.has_edge(ba, bb)) || (ba == bb && std::popcount(wa ^ wb) == 1);
      CHECK(t.top().has_edge(a, b) == expected);
    }
  CHECK(t.encode(2, 5) == 2 + 3 * 5);

  for (int j = 1; j <= 3; ++j) {
    const PrismStructure s = t.structure(j);
    CHECK(s.layer() == t.level(j - 1));
    CHECK_NOTHROW(PrismStructure::identify(t.level(j), s.base_order()));
    CHECK(t.level(j) == t.top().induced_range(0, t.level(j).order()));
  }
  CHECK_THROWS_AS(t.structure(0), DomainError);
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(prism_power(complete_graph(4), 11), SizeCapExceeded);  // 8192 > 4096
  CHECK_NOTHROW(prism_power(complete_graph(4), 10));
  CHECK_THROWS_AS(prism_power(complete_graph(4), 3, SizeCaps{64, 16}), SizeCapExceeded);
  CHECK_THROWS_AS(cartesian_product(complete_graph(9), complete_graph(8)), SizeCapExceeded);
  CHECK_THROWS_AS(strong_product(cycle_graph(9), complete_graph(8)), SizeCapExceeded);
  CHECK_NOTHROW(cartesian_product(complete_graph(8), complete_graph(8)));
}

TEST_CASE("Cartesian product examples and definition") {
  const Graph c5 = cycle_graph(5);
  CHECK(cartesian_product(c5, complete_graph(1)) == c5);
  CHECK(are_isomorphic(cartesian_product(complete_graph(2), complete_graph(2)), cycle_graph(4)));
  const Graph q4 = cartesian_product(hypercube(2), hypercube(2));
  CHECK(q4.order() == 16);
  CHECK(q4.size() == 32);
  CHECK(q4 == hypercube(4));

  const Graph g = spider(2, 2);
  const Graph h = cycle_graph(4);
  const Graph p = cartesian_product(g, h);
  for (Vertex a = 0; a < p.order(); ++a)
    for (Vertex b = a + 1; b < p.order(); ++b) CHECK(p.has_edge(a, b) == cartesian_adjacent(g, h, a, b));
}

TEST_CASE("strong product examples and definition") {
  CHECK(strong_product(complete_graph(2), complete_graph(2)) == complete_graph(4));
  const Graph c5 = cycle_graph(5);
  CHECK(strong_product(c5, complete_graph(1)) == c5);

  const Graph c4 = cycle_graph(4);
  const Graph k2 = complete_graph(2);
  const Graph s = strong_product(c4, k2);
  CHECK(s.order() == 8);
  int adjacent_pairs = 0;
  for (Vertex a = 0; a < 8; ++a)
    for (Vertex b = a + 1; b < 8; ++b) {
      const bool expected = strong_adjacent(c4, k2, a, b);
      adjacent_pairs += expected;
      CHECK(s.has_edge(a, b) == expected);
    }
  CHECK(adjacent_pairs == 20);
  CHECK(s.size() == 20);

  const Graph cart = cartesian_product(c4, k2);
  for (const Edge& e : cart.edges()) CHECK(s.has_edge(e.u, e.v));
}

TEST_CASE("products commute up to isomorphism on small factors") {
  std::vector<Graph> factors;
  for (int n = 1; n <= 4; ++n)
    for (const Graph& g : pairham::testing::connected_graphs(n)) factors.push_back(g);
  for (const Graph& g : factors)
    for (const Graph& h : factors) {
      CHECK(are_isomorphic(cartesian_product(g, h), cartesian_product(h, g)));
      CHECK(are_isomorphic(strong_product(g, h), strong_product(h, g)));
    }
}

TEST_CASE("traceability") {
  auto p4 = is_traceable(path_graph(4));
  CHECK(p4.traceable);
  CHECK(is_hamiltonian_path(path_graph(4), p4.path));

  CHECK_FALSE(pairham::testing::traceable_by_permutations(star_graph(4)));
  CHECK_FALSE(is_traceable(star_graph(4)).traceable);

  const Graph prism_star = prism(star_graph(4)).host();
  auto r = is_traceable(prism_star);
  REQUIRE(r.traceable);
  CHECK(is_hamiltonian_path(prism_star, r.path));

  CHECK(is_traceable(complete_graph(1)).traceable);
  const std::vector<Edge> two_components{{0, 1}, {2, 3}};
  CHECK_FALSE(is_traceable(Graph(4, two_components)).traceable);

  const std::vector<Vertex> not_a_path{0, 2, 1, 3};
  CHECK_FALSE(is_hamiltonian_path(path_graph(4), not_a_path));

  CHECK_THROWS_AS(is_traceable(prism_power(star_graph(6), 2).top(), SearchBudget{10}), BudgetExceeded);
}

TEST_CASE("traceability agrees with exhaustive orderings on every connected graph up to 6 vertices") {
  for (int n = 1; n <= 6; ++n)
    for (const Graph& g : pairham::testing::connected_graphs(n)) {
      auto r = is_traceable(g);
      CHECK(r.traceable == pairham::testing::traceable_by_permutations(g));
      if (r.traceable) CHECK(is_hamiltonian_path(g, r.path));
    }
}

TEST_CASE("graph6 encoding") {
  CHECK(encode_graph6(complete_graph(4)) == "C~");
  CHECK(encode_graph6(complete_graph(1)) == "@");
  CHECK(encode_graph6(Graph()) == "?");
  CHECK(decode_graph6("C~") == complete_graph(4));
  CHECK(decode_graph6(">>graph6<<C~\n") == complete_graph(4));
  CHECK(decode_graph6("@") == complete_graph(1));

  // n = 63 switches to the four-byte order header.
  const Graph big = cycle_graph(63);
  const std::string text = encode_graph6(big);
  CHECK(text.substr(0, 4) == "~??~");
  CHECK(decode_graph6(text) == big);
}

TEST_CASE("graph6 decoding errors carry byte offsets") {
  auto offset_of = [](std::string_view s) -> std::size_t {
    try {
      decode_graph6(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return 9999;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("C") == 1);     // missing data byte
  CHECK(offset_of("C~~") == 2);   // trailing byte
  CHECK(offset_of("C!") == 1);    // byte below 63
  CHECK(offset_of("B~") == 1);    // n=3 uses 3 bits; low padding bits set
  CHECK(offset_of("~?") == 2);    // truncated long header
}

TEST_CASE("graph6 matches an independent encoder on the census fixtures") {
  for (int n = 1; n <= 7; ++n) {
    std::ifstream file(std::string(PAIRHAM_FIXTURE_DIR) + "/connected_n" + std::to_string(n) + ".g6");
    for (std::string line; std::getline(file, line);) CHECK(encode_graph6(decode_graph6(line)) == line);
  }
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 2000; ++i) {
    const Graph g = pairham::testing::random_graph(static_cast<Vertex>(rng() % 13), 0.5, rng);
    CHECK(decode_graph6(encode_graph6(g)) == g);
  }
}

TEST_CASE("DOT export") {
  const Graph k4 = complete_graph(4);
  const std::string plain = export_dot(k4);
  CHECK(plain.starts_with("graph G {"));
  for (Vertex v = 0; v < 4; ++v) CHECK(plain.find("  " + std::to_string(v) + ";\n") != std::string::npos);
  CHECK(plain.find("style=") == std::string::npos);

  const Graph c4 = cycle_graph(4);
  const std::vector<Highlight> marks{{{{0, 2}, {1, 3}}, EdgeStyle::bold}, {{{0, 1}, {2, 3}}, EdgeStyle::dashed}};
  const std::string dot = export_dot(c4, marks);
  CHECK(dot.find("0 -- 2 [style=bold") != std::string::npos);
  CHECK(dot.find("1 -- 3 [style=bold") != std::string::npos);
  CHECK(dot.find("0 -- 1 [style=dashed]") != std::string::npos);
  CHECK(dot.find("1 -- 2 [color=gray60]") != std::string::npos);
  CHECK(dot.find("0 -- 1 [color") == std::string::npos);

  const std::vector<Highlight> bad{{{{0, 9}}, EdgeStyle::dotted}};
  CHECK_THROWS_AS(export_dot(c4, bad), DomainError);
}

TEST_CASE("graph JSON") {
  const Graph g = spider(2, 2);
  const Json j = to_json(g);
  CHECK(j.dump() == R"({"edges":[[0,1],[0,3],[1,2],[3,4]],"n":5})");
  CHECK(graph_from_json(j) == g);
  CHECK_THROWS_AS(graph_from_json(Json::parse(R"({"n":2,"edges":[[0,0]]})")), DomainError);
}

TEST_CASE("connected census fixtures match an exhaustive canonical-form census") {
  const std::map<int, std::size_t> known{{1, 1}, {2, 1}, {3, 2}, {4, 6}, {5, 21}, {6, 112}};
  for (auto [n, count] : known) {
    std::set<std::string> classes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
      std::vector<Edge> edges;
      int bit = 0;
      for (Vertex v = 1; v < n; ++v)
        for (Vertex u = 0; u < v; ++u, ++bit)
          if (mask >> bit & 1u) edges.push_back({u, v});
      const Graph g(n, edges);
      if (is_connected(g)) classes.insert(pairham::testing::canonical_form(g));
    }
    CHECK(classes.size() == count);

    std::set<std::string> fixture;
    for (const Graph& g : pairham::testing::connected_graphs(n)) fixture.insert(pairham::testing::canonical_form(g));
    CHECK(fixture == classes);
  }
}
