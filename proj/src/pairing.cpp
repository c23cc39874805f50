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

#include "pairham/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "pairham/error.hpp"

namespace pairham {
namespace {

void require_even(Vertex n) {
  if (n < 0 || n % 2 != 0) throw DomainError("pairings need an even vertex count, got " + std::to_string(n));
}

// (m-1)!! for even m >= 0, with (-1)!! = 1.
std::uint64_t double_factorial_odd(Vertex m) {
  std::uint64_t r = 1;
  for (Vertex k = m - 1; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

}  // namespace

Pairing::Pairing(Vertex n, std::span<const Edge> pairs) {
  require_even(n);
  if (pairs.size() * 2 != static_cast<std::size_t>(n)) {
    throw DomainError("a pairing of " + std::to_string(n) + " vertices has " + std::to_string(n / 2) + " pairs");
  }
  partner_.assign(static_cast<std::size_t>(n), -1);
  for (const Edge& e : pairs) {
    if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw DomainError("invalid pair " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    if (partner_[e.u] != -1 || partner_[e.v] != -1) throw DomainError("pairs are not disjoint");
    partner_[e.u] = e.v;
    partner_[e.v] = e.u;
  }
}

Pairing Pairing::from_partners(std::vector<Vertex> partner) {
  const auto n = static_cast<Vertex>(partner.size());
  require_even(n);
  for (Vertex v = 0; v < n; ++v) {
    Vertex w = partner[v];
    if (w < 0 || w >= n || w == v || partner[w] != v) throw DomainError("partner map is not a pairing");
  }
  return Pairing(std::move(partner));
}

bool Pairing::contains(Edge e) const noexcept {
  if (e.u < 0 || e.u >= order()) return false;
  return partner_[e.u] == e.v;
}

std::vector<Edge> Pairing::pairs() const {
  std::vector<Edge> out;
  out.reserve(partner_.size() / 2);
  for (Vertex v = 0; v < order(); ++v)
    if (v < partner_[v]) out.push_back({v, partner_[v]});
  return out;
}

PerfectMatching::PerfectMatching(const Graph& host, Pairing pairs) : pairs_(std::move(pairs)) {
  if (pairs_.order() != host.order()) throw DomainError("matching and host differ in order");
  for (const Edge& e : pairs_.pairs()) {
    if (!host.has_edge(e.u, e.v)) {
      throw DomainError("pair " + std::to_string(e.u) + "-" + std::to_string(e.v) + " is not an edge of the host");
    }
  }
}

std::uint64_t pairing_count(Vertex n) {
  require_even(n);
  if (n > 34) throw SizeCapExceeded("pairing count of " + std::to_string(n) + " vertices overflows 64 bits");
  return double_factorial_odd(n);
}

Pairing pairing_at(Vertex n, std::uint64_t index) {
  if (index >= pairing_count(n)) throw DomainError("pairing index out of range");
  std::vector<Vertex> free(static_cast<std::size_t>(n));
  std::iota(free.begin(), free.end(), 0);
  std::vector<Vertex> partner(static_cast<std::size_t>(n), -1);
  while (!free.empty()) {
    const auto m = static_cast<Vertex>(free.size());
    const std::uint64_t weight = double_factorial_odd(m - 2);
    const auto choice = static_cast<std::size_t>(index / weight);
    index %= weight;
    Vertex a = free.front();
    Vertex b = free[1 + choice];
    partner[a] = b;
    partner[b] = a;
    free.erase(free.begin() + static_cast<std::ptrdiff_t>(1 + choice));
    free.erase(free.begin());
  }
  return Pairing::from_partners(std::move(partner));
}

std::uint64_t pairing_index(const Pairing& p) {
  std::vector<Vertex> free(static_cast<std::size_t>(p.order()));
  std::iota(free.begin(), free.end(), 0);
  std::uint64_t index = 0;
  while (!free.empty()) {
    const auto m = static_cast<Vertex>(free.size());
    Vertex a = free.front();
    auto it = std::find(free.begin() + 1, free.end(), p.partner(a));
    index += static_cast<std::uint64_t>(it - free.begin() - 1) * double_factorial_odd(m - 2);
    free.erase(it);
    free.erase(free.begin());
  }
  return index;
}

PairingStream::PairingStream(Vertex n, std::uint64_t first_index)
    : n_(n), index_(first_index), total_(pairing_count(n)) {}

std::optional<Pairing> PairingStream::next() {
  if (index_ >= total_) return std::nullopt;
  return pairing_at(n_, index_++);
}

Pairing random_pairing(Vertex n, std::mt19937_64& rng) {
  require_even(n);
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Vertex> partner(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < order.size(); i += 2) {
    partner[order[i]] = order[i + 1];
    partner[order[i + 1]] = order[i];
  }
  return Pairing::from_partners(std::move(partner));
}

std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return std::mt19937_64(seq);
}

void for_each_perfect_matching(const Graph& g, const std::function<bool(const PerfectMatching&)>& visit) {
  const Vertex n = g.order();
  if (n % 2 != 0) return;
  std::vector<Vertex> partner(static_cast<std::size_t>(n), -1);
  bool stopped = false;

  std::function<void(Vertex)> rec = [&](Vertex from) {
    Vertex a = from;
    while (a < n && partner[a] != -1) ++a;
    if (a == n) {
      if (!visit(PerfectMatching(g, Pairing::from_partners(partner)))) stopped = true;
      return;
    }
    for (Vertex b : g.neighbors(a)) {
      if (b < a || partner[b] != -1) continue;
      partner[a] = b;
      partner[b] = a;
      rec(a + 1);
      partner[a] = partner[b] = -1;
      if (stopped) return;
    }
  };
  rec(0);
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g) {
  std::vector<PerfectMatching> out;
  for_each_perfect_matching(g, [&](const PerfectMatching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace pairham
