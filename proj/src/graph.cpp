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

#include "pairham/graph.hpp"

#include <algorithm>
#include <string>

#include "pairham/error.hpp"

namespace pairham {

Graph::Graph() : data_(std::make_shared<const Data>()) {}

Graph::Graph(Vertex order, std::span<const Edge> edges) {
  if (order < 0) throw DomainError("graph order must be non-negative");
  auto data = std::make_shared<Data>();
  data->order = order;
  data->edges.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u == e.v) throw DomainError("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order) {
      throw DomainError("edge endpoint out of range");
    }
    data->edges.push_back(make_edge(e.u, e.v));
  }
  std::sort(data->edges.begin(), data->edges.end());
  auto dup = std::adjacent_find(data->edges.begin(), data->edges.end());
  if (dup != data->edges.end()) {
    throw DomainError("repeated edge " + std::to_string(dup->u) + "-" + std::to_string(dup->v));
  }
  data->adjacency.resize(static_cast<std::size_t>(order));
  for (const Edge& e : data->edges) {
    data->adjacency[e.u].push_back(e.v);
    data->adjacency[e.v].push_back(e.u);
  }
  for (auto& row : data->adjacency) std::sort(row.begin(), row.end());
  data_ = std::move(data);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
  const auto& row = data_->adjacency[a];
  return std::binary_search(row.begin(), row.end(), b);
}

Graph Graph::induced_range(Vertex first, Vertex count) const {
  if (first < 0 || count < 0 || first + count > order()) {
    throw DomainError("induced range outside the vertex set");
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges()) {
    if (e.u >= first && e.v < first + count) kept.push_back({e.u - first, e.v - first});
  }
  return Graph(count, kept);
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.data_ == b.data_) return true;
  return a.order() == b.order() && a.data_->edges == b.data_->edges;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  Vertex reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

}  // namespace pairham
