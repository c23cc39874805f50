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

#include "pairham/generators.hpp"

#include <string>
#include <vector>

#include "pairham/error.hpp"

namespace pairham {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw DomainError(what);
}

}  // namespace

Graph complete_graph(Vertex n) {
  require(n >= 1, "complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph cycle_graph(Vertex n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.push_back(make_edge(i, (i + 1) % n));
  return Graph(n, edges);
}

Graph path_graph(Vertex n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph star_graph(Vertex n) {
  require(n >= 1, "star needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({0, i});
  return Graph(n, edges);
}

Graph complete_bipartite(Vertex a, Vertex b) {
  require(a >= 1 && b >= 1, "complete bipartite needs both sides >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) edges.push_back({u, a + v});
  return Graph(a + b, edges);
}

Graph hypercube(int d) {
  require(d >= 0 && d <= 12, "hypercube dimension must lie in 0..12");
  const Vertex n = Vertex{1} << d;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    for (int bit = 0; bit < d; ++bit) {
      Vertex w = v ^ (Vertex{1} << bit);
      if (v < w) edges.push_back({v, w});
    }
  return Graph(n, edges);
}

Graph spider(Vertex legs, Vertex leg_length) {
  require(legs >= 1 && leg_length >= 1, "spider needs legs >= 1 and leg length >= 1");
  std::vector<Edge> edges;
  for (Vertex leg = 0; leg < legs; ++leg) {
    Vertex prev = 0;
    for (Vertex step = 0; step < leg_length; ++step) {
      Vertex cur = 1 + leg * leg_length + step;
      edges.push_back(make_edge(prev, cur));
      prev = cur;
    }
  }
  return Graph(1 + legs * leg_length, edges);
}

Family parse_family(std::string_view name) {
  if (name == "complete") return Family::complete;
  if (name == "cycle") return Family::cycle;
  if (name == "path") return Family::path;
  if (name == "star") return Family::star;
  if (name == "complete-bipartite" || name == "complete_bipartite") return Family::complete_bipartite;
  if (name == "hypercube") return Family::hypercube;
  if (name == "spider") return Family::spider;
  throw DomainError("unknown graph family '" + std::string(name) + "'");
}

Graph generate(Family family, std::span<const int> params) {
  auto arity = [&](std::size_t k) {
    if (params.size() != k) {
      throw DomainError("generator expects " + std::to_string(k) + " parameter(s), got " +
                        std::to_string(params.size()));
    }
  };
  switch (family) {
    case Family::complete: arity(1); return complete_graph(params[0]);
    case Family::cycle: arity(1); return cycle_graph(params[0]);
    case Family::path: arity(1); return path_graph(params[0]);
    case Family::star:
      // "star n" has n vertices; "star 1 b" is K_{1,b}.
      if (params.size() == 2 && params[0] == 1) return star_graph(params[1] + 1);
      arity(1);
      return star_graph(params[0]);
    case Family::complete_bipartite: arity(2); return complete_bipartite(params[0], params[1]);
    case Family::hypercube: arity(1); return hypercube(params[0]);
    case Family::spider: arity(2); return spider(params[0], params[1]);
  }
  throw DomainError("unknown graph family");
}

}  // namespace pairham
