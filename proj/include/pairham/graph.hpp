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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace pairham {

using Vertex = std::int32_t;

/// An unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Construction limits for products and prism towers.
struct SizeCaps {
  std::size_t product_vertices = 64;
  std::size_t tower_vertices = 4096;
};

/// Immutable simple undirected graph on vertices 0..order()-1.
///
/// Copies share the underlying storage, so passing graphs by value is cheap
/// and a graph may be read from any number of threads.
class Graph {
 public:
  Graph();

  /// Throws DomainError on loops, out-of-range endpoints or repeated edges.
  Graph(Vertex order, std::span<const Edge> edges);

  Vertex order() const noexcept { return data_->order; }
  std::size_t size() const noexcept { return data_->edges.size(); }

  /// Edges with u < v, sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return data_->edges; }

  /// Ascending neighbour list.
  std::span<const Vertex> neighbors(Vertex v) const { return data_->adjacency.at(v); }
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  bool has_edge(Vertex a, Vertex b) const;

  /// Subgraph induced on vertices [first, first + count), relabelled to start at 0.
  Graph induced_range(Vertex first, Vertex count) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  struct Data {
    Vertex order = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> adjacency;
  };
  std::shared_ptr<const Data> data_;
};

bool is_connected(const Graph& g);

}  // namespace pairham
