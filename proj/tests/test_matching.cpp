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

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "pairham/cycles.hpp"
#include "pairham/error.hpp"
#include "pairham/generators.hpp"
#include "pairham/json_io.hpp"
#include "pairham/pairing.hpp"
#include "pairham/ph_verify.hpp"

using namespace pairham;
namespace oracle = pairham::testing;

namespace {

Pairing pairs_of(Vertex n, std::initializer_list<Edge> pairs) { return Pairing(n, std::vector<Edge>(pairs)); }

std::vector<Graph> small_even_connected() {
  std::vector<Graph> out;
  for (int n : {4, 6})
    for (const Graph& g : oracle::connected_graphs(n)) out.push_back(g);
  return out;
}

}  // namespace

TEST_CASE("pairing construction") {
  const Pairing p = pairs_of(4, {{2, 0}, {1, 3}});
  CHECK(p.partner(0) == 2);
  CHECK(p.partner(3) == 1);
  CHECK(p.pairs() == std::vector<Edge>{{0, 2}, {1, 3}});
  CHECK(p.contains({0, 2}));
  CHECK_FALSE(p.contains({0, 1}));

  CHECK_THROWS_AS(pairs_of(4, {{0, 1}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(pairs_of(4, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(pairs_of(3, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(pairs_of(4, {{0, 0}, {1, 2}}), DomainError);
  CHECK_THROWS_AS(Pairing::from_partners({1, 2, 0, 3}), DomainError);

  CHECK_THROWS_AS(PerfectMatching(cycle_graph(4), pairs_of(4, {{0, 2}, {1, 3}})), DomainError);
  CHECK_NOTHROW(PerfectMatching(cycle_graph(4), pairs_of(4, {{0, 1}, {2, 3}})));
}

TEST_CASE("pairing enumeration counts and canonical order") {
  CHECK(pairing_count(4) == 3);
  CHECK(pairing_count(6) == 15);
  CHECK(pairing_count(8) == 105);
  CHECK(pairing_count(16) == 2027025);
  CHECK_THROWS_AS(pairing_count(5), DomainError);
  CHECK_THROWS_AS(pairing_count(36), SizeCapExceeded);

  CHECK(pairing_at(4, 0) == pairs_of(4, {{0, 1}, {2, 3}}));
  CHECK(pairing_at(4, 1) == pairs_of(4, {{0, 2}, {1, 3}}));
  CHECK(pairing_at(4, 2) == pairs_of(4, {{0, 3}, {1, 2}}));
  CHECK(pairing_at(6, 14) == pairs_of(6, {{0, 5}, {1, 4}, {2, 3}}));
  CHECK_THROWS_AS(pairing_at(4, 3), DomainError);

  for (Vertex n : {4, 6, 8, 10}) {
    std::set<std::vector<Edge>> seen;
    PairingStream stream(n);
    std::uint64_t i = 0;
    std::vector<Edge> previous;
    while (auto p = stream.next()) {
      CHECK(pairing_index(*p) == i);
      auto pairs = p->pairs();
      // Canonical order is lexicographic on the sorted pair lists.
      if (i > 0) CHECK(previous < pairs);
      previous = pairs;
      seen.insert(pairs);
      ++i;
    }
    CHECK(seen.size() == oracle::double_factorial(n - 1));
    CHECK(stream.position() == pairing_count(n));
  }

  PairingStream resumed(8, 100);
  CHECK(resumed.next() == pairing_at(8, 100));
}

TEST_CASE("random pairings are reproducible per sample stream") {
  auto a = sample_rng(7, 3);
  auto b = sample_rng(7, 3);
  auto c = sample_rng(7, 4);
  const Pairing pa = random_pairing(16, a);
  CHECK(pa == random_pairing(16, b));
  CHECK_FALSE(pa == random_pairing(16, c));

  // Every pairing of 4 vertices shows up with roughly equal frequency.
  std::mt19937_64 rng(1);
  std::vector<int> hits(3, 0);
  for (int i = 0; i < 3000; ++i) ++hits[pairing_index(random_pairing(4, rng))];
  for (int h : hits) CHECK(h > 850);
}

TEST_CASE("perfect matching enumeration") {
  CHECK(enumerate_perfect_matchings(cycle_graph(4)).size() == 2);
  CHECK(enumerate_perfect_matchings(complete_graph(4)).size() == 3);
  CHECK(oracle::perfect_matchings_by_subsets(hypercube(3)).size() == 9);
  CHECK(enumerate_perfect_matchings(hypercube(3)).size() == 9);
  CHECK(enumerate_perfect_matchings(star_graph(4)).empty());
  CHECK(enumerate_perfect_matchings(cycle_graph(5)).empty());

  std::vector<Graph> graphs = small_even_connected();
  for (const Graph& g : oracle::load_fixture("cubic_connected.g6")) graphs.push_back(g);
  for (const Graph& g : graphs) {
    std::set<std::vector<Edge>> mine;
    for (const auto& m : enumerate_perfect_matchings(g)) mine.insert(m.pairs());
    auto brute = oracle::perfect_matchings_by_subsets(g);
    CHECK(mine.size() == brute.size());
    CHECK(mine == std::set<std::vector<Edge>>(brute.begin(), brute.end()));
  }

  int seen = 0;
  for_each_perfect_matching(hypercube(3), [&](const PerfectMatching&) { return ++seen < 4; });
  CHECK(seen == 4);
}

TEST_CASE("cycle decomposition examples") {
  const Pairing a = pairs_of(4, {{0, 1}, {2, 3}});
  const CycleDecomposition same = union_cycle_decomposition(a, a);
  CHECK(same.cycles.size() == 2);
  for (const auto& c : same.cycles) CHECK(c.length() == 2);

  const Pairing b = pairs_of(4, {{1, 2}, {0, 3}});
  const CycleDecomposition one = union_cycle_decomposition(a, b);
  REQUIRE(one.cycles.size() == 1);
  CHECK(one.cycles[0].vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(one.cycles[0].steps == std::vector<Side>{Side::first, Side::second, Side::first, Side::second});

  CHECK_THROWS_AS(union_cycle_decomposition(a, pairing_at(6, 0)), DomainError);
}

TEST_CASE("cycle decomposition invariants on random pairs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const Vertex n = 2 * (1 + static_cast<Vertex>(rng() % 5));
    const Pairing a = random_pairing(n, rng);
    const Pairing b = trial % 4 == 0 ? a : random_pairing(n, rng);
    const CycleDecomposition d = union_cycle_decomposition(a, b);

    std::size_t shared = 0;
    for (const Edge& e : a.pairs()) shared += b.contains(e);
    std::size_t twos = 0, total = 0;
    std::vector<int> cover(n, 0);
    for (const auto& c : d.cycles) {
      CHECK(c.length() % 2 == 0);
      CHECK(c.length() >= 2);
      twos += c.length() == 2;
      total += c.length();
      for (std::size_t i = 0; i < c.length(); ++i) {
        ++cover[c.vertices[i]];
        const Vertex next = c.vertices[(i + 1) % c.length()];
        const Pairing& side = c.steps[i] == Side::first ? a : b;
        CHECK(side.partner(c.vertices[i]) == next);
        CHECK(c.steps[i] == (i % 2 == 0 ? Side::first : Side::second));
      }
    }
    CHECK(total == static_cast<std::size_t>(n));
    CHECK(twos == shared);
    CHECK(std::all_of(cover.begin(), cover.end(), [](int x) { return x == 1; }));
  }
}

TEST_CASE("Hamiltonian extension check") {
  const Graph c4 = cycle_graph(4);
  const Pairing p = pairs_of(4, {{0, 1}, {2, 3}});
  const PerfectMatching n(c4, pairs_of(4, {{1, 2}, {0, 3}}));
  CHECK(is_hamiltonian_extension(p, n));
  CHECK_FALSE(is_hamiltonian_extension(p, p));
  CHECK(hamiltonian_cycle(p, n.pairing()) == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(hamiltonian_cycle(p, p).empty());

  // Q3: a pairing sharing one pair with a perfect matching is never extended by it.
  const Graph q3 = hypercube(3);
  for (const auto& m : enumerate_perfect_matchings(q3)) {
    auto pairs = m.pairs();
    // Keep one pair, rotate the partners of the rest.
    std::vector<Edge> mixed{pairs[0], make_edge(pairs[1].u, pairs[2].v), make_edge(pairs[2].u, pairs[3].v),
                            make_edge(pairs[3].u, pairs[1].v)};
    const Pairing shared(8, mixed);
    CHECK_FALSE(is_hamiltonian_extension(shared, m));
    CHECK_FALSE(validates_against(q3, shared, m.pairing()));
  }
}

TEST_CASE("brute-force extension examples") {
  const Graph c4 = cycle_graph(4);
  const Pairing diagonals = pairs_of(4, {{0, 2}, {1, 3}});
  auto n = find_extension_bruteforce(c4, diagonals);
  REQUIRE(n);
  CHECK(n->pairs() == std::vector<Edge>{{0, 3}, {1, 2}});
  CHECK(hamiltonian_cycle(diagonals, n->pairing()) == std::vector<Vertex>{0, 2, 1, 3});

  const Graph c6 = cycle_graph(6);
  // The antipodal pairing does extend: 0-3-2-5-4-1-0.
  const Pairing antipodal = pairs_of(6, {{0, 3}, {1, 4}, {2, 5}});
  CHECK(oracle::extendable_by_enumeration(c6, antipodal));
  auto anti = find_extension_bruteforce(c6, antipodal);
  REQUIRE(anti);
  CHECK(anti->pairs() == std::vector<Edge>{{0, 1}, {2, 3}, {4, 5}});

  const Pairing stuck = pairs_of(6, {{0, 1}, {2, 5}, {3, 4}});
  CHECK_FALSE(oracle::extendable_by_enumeration(c6, stuck));
  CHECK_FALSE(find_extension_bruteforce(c6, stuck));

  const Graph k33 = complete_bipartite(3, 3);
  PairingStream all(6);
  while (auto p = all.next()) {
    auto m = find_extension_bruteforce(k33, *p);
    REQUIRE(m);
    CHECK(validates_against(k33, *p, m->pairing()));
  }

  CHECK_THROWS_AS(find_extension_bruteforce(complete_graph(2), pairs_of(2, {{0, 1}})), DomainError);
  CHECK_THROWS_AS(find_extension_bruteforce(c4, pairing_at(6, 0)), DomainError);
}

TEST_CASE("brute-force extension agrees with full enumeration") {
  std::vector<Graph> graphs = small_even_connected();
  for (const Graph& g : oracle::load_fixture("cubic_connected.g6")) graphs.push_back(g);
  for (const Graph& g : graphs) {
    PairingStream all(g.order());
    while (auto p = all.next()) {
      auto m = find_extension_bruteforce(g, *p);
      CHECK(m.has_value() == oracle::extendable_by_enumeration(g, *p));
      if (m) CHECK(oracle::forms_hamiltonian_cycle(g.order(), p->pairs(), m->pairs()));
    }
  }
}

TEST_CASE("extension search budget") {
  const Graph c8 = cycle_graph(8);
  const ExtensionSearch s = search_extension(c8, pairing_at(8, 50), 1);
  CHECK(s.outcome == SearchOutcome::budget_exceeded);
  CHECK_FALSE(s.matching);
  const ExtensionSearch full = search_extension(c8, pairing_at(8, 50), 1'000'000);
  CHECK(full.outcome != SearchOutcome::budget_exceeded);
  CHECK(full.nodes > 1);
}

TEST_CASE("verify_ph examples") {
  const PHVerdict k4 = verify_ph(complete_graph(4));
  CHECK(k4.is_ph());
  CHECK(k4.stats.pairings_checked == 3);
  CHECK_FALSE(k4.witness);

  const PHVerdict q3 = verify_ph(hypercube(3));
  CHECK(q3.is_ph());
  CHECK(q3.stats.pairings_checked == 105);
  CHECK(q3.stats.extensions_found == 105);

  const PHVerdict c6 = verify_ph(cycle_graph(6));
  CHECK(c6.outcome == PHOutcome::not_ph);
  REQUIRE(c6.witness);
  CHECK(*c6.witness == pairs_of(6, {{0, 1}, {2, 5}, {3, 4}}));
  CHECK(c6.witness_index == 2u);
  CHECK(c6.stats.pairings_checked == 3);
  CHECK(c6.stats.extensions_found == 2);
  CHECK_FALSE(oracle::extendable_by_enumeration(cycle_graph(6), *c6.witness));

  CHECK_THROWS_AS(verify_ph(complete_graph(2)), DomainError);
  CHECK_THROWS_AS(verify_ph(complete_graph(5)), DomainError);
}

TEST_CASE("verify_ph budget outcomes") {
  PHBudget few_pairings;
  few_pairings.max_pairings = 10;
  const PHVerdict q4 = verify_ph(hypercube(4), few_pairings);
  CHECK(q4.outcome == PHOutcome::budget_exceeded);
  CHECK(q4.stats.pairings_checked == 10);
  CHECK_FALSE(q4.witness);

  // A failure inside the examined prefix is still a definite answer.
  const PHVerdict c8 = verify_ph(cycle_graph(8), few_pairings);
  CHECK(c8.outcome == PHOutcome::not_ph);

  PHBudget few_nodes;
  few_nodes.max_nodes_per_pairing = 1;
  const PHVerdict k4 = verify_ph(complete_graph(4), few_nodes);
  CHECK(k4.outcome == PHOutcome::budget_exceeded);
  CHECK(k4.stats.undecided == 3);
}

TEST_CASE("verify_ph verdicts do not depend on the worker count") {
  std::vector<Graph> graphs = small_even_connected();
  graphs.push_back(cycle_graph(8));
  graphs.push_back(hypercube(3));
  for (const Graph& g : graphs) {
    const PHVerdict one = verify_ph(g, {}, 1);
    const PHVerdict four = verify_ph(g, {}, 4);
    CHECK(one.outcome == four.outcome);
    CHECK(one.witness == four.witness);
    CHECK(one.stats.pairings_checked == four.stats.pairings_checked);
    CHECK(one.stats.extensions_found == four.stats.extensions_found);
    if (one.witness) CHECK_FALSE(oracle::extendable_by_enumeration(g, *one.witness));
  }
}

TEST_CASE("pairing and verdict JSON") {
  const Pairing p = pairs_of(4, {{3, 0}, {1, 2}});
  CHECK(to_json(p).dump() == R"({"n":4,"pairs":[[0,3],[1,2]]})");
  CHECK(pairing_from_json(to_json(p)) == p);
  CHECK(pairing_from_json(Json::parse("[[0,3],[2,1]]")) == p);
  CHECK_THROWS_AS(pairing_from_json(Json::parse("[[0,3],[3,1]]")), DomainError);

  const Json v = to_json(verify_ph(cycle_graph(6)));
  CHECK(v["outcome"] == "not_ph");
  CHECK(v["is_ph"] == false);
  CHECK(v["witness"]["pairs"].dump() == "[[0,1],[2,5],[3,4]]");
  CHECK(v["stats"]["pairings_total"] == 15);
}
