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

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "pairham/graph.hpp"

namespace pairham {

/// A partition of {0..n-1} into unordered pairs, i.e. a perfect matching of
/// the complete graph on n vertices. Pairs need not be edges of any host.
class Pairing {
 public:
  Pairing() = default;

  /// Throws DomainError unless `pairs` are disjoint and cover 0..n-1.
  Pairing(Vertex n, std::span<const Edge> pairs);

  /// `partner[v]` is the vertex paired with v; must be a fixed-point-free involution.
  static Pairing from_partners(std::vector<Vertex> partner);

  Vertex order() const noexcept { return static_cast<Vertex>(partner_.size()); }
  Vertex partner(Vertex v) const { return partner_.at(static_cast<std::size_t>(v)); }
  bool contains(Edge e) const noexcept;

  /// Pairs as (u < v), sorted lexicographically.
  std::vector<Edge> pairs() const;

  friend bool operator==(const Pairing&, const Pairing&) = default;

 private:
  explicit Pairing(std::vector<Vertex> partner) : partner_(std::move(partner)) {}
  std::vector<Vertex> partner_;
};

/// A pairing all of whose pairs are edges of the graph it was checked against.
class PerfectMatching {
 public:
  /// Throws DomainError if some pair is not an edge of `host`.
  PerfectMatching(const Graph& host, Pairing pairs);

  const Pairing& pairing() const noexcept { return pairs_; }
  Vertex order() const noexcept { return pairs_.order(); }
  Vertex partner(Vertex v) const { return pairs_.partner(v); }
  std::vector<Edge> pairs() const { return pairs_.pairs(); }

  friend bool operator==(const PerfectMatching&, const PerfectMatching&) = default;

 private:
  Pairing pairs_;
};

/// (n-1)!!, the number of pairings of n vertices. Throws DomainError for odd
/// n and SizeCapExceeded when the count does not fit in 64 bits.
std::uint64_t pairing_count(Vertex n);

/// Canonical order: the smallest unpaired vertex is paired next, with its
/// partner candidates tried in ascending order. Index 0 is {01, 23, ...}.
Pairing pairing_at(Vertex n, std::uint64_t index);
std::uint64_t pairing_index(const Pairing& p);

/// Single-consumer stream over all pairings of n vertices in canonical order.
class PairingStream {
 public:
  explicit PairingStream(Vertex n, std::uint64_t first_index = 0);
  std::optional<Pairing> next();
  std::uint64_t position() const noexcept { return index_; }

 private:
  Vertex n_;
  std::uint64_t index_;
  std::uint64_t total_;
};

/// Uniformly random pairing.
Pairing random_pairing(Vertex n, std::mt19937_64& rng);

/// Deterministic generator for sample `stream` under `seed`; independent of
/// which worker draws the sample.
std::mt19937_64 sample_rng(std::uint64_t seed, std::uint64_t stream);

/// Calls `visit` for every perfect matching of `g` (pairing order restricted
/// to edges). Stops early when `visit` returns false.
void for_each_perfect_matching(const Graph& g, const std::function<bool(const PerfectMatching&)>& visit);
std::vector<PerfectMatching> enumerate_perfect_matchings(const Graph& g);

}  // namespace pairham
