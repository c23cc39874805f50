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

#include "pairham/paths.hpp"

#include <algorithm>

#include "pairham/error.hpp"

namespace pairham {
namespace {

class PathSearch {
 public:
  PathSearch(const Graph& g, const SearchBudget& budget)
      : g_(g), budget_(budget), visited_(g.order(), 0), free_degree_(g.order(), 0) {
    for (Vertex v = 0; v < g.order(); ++v) free_degree_[v] = static_cast<int>(g.degree(v));
  }

  bool run_from(Vertex start) {
    visit(start);
    bool found = extend(start);
    if (!found) unvisit(start);
    return found;
  }

  const std::vector<Vertex>& path() const { return path_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void visit(Vertex v) {
    visited_[v] = 1;
    path_.push_back(v);
    for (Vertex w : g_.neighbors(v)) --free_degree_[w];
  }

  void unvisit(Vertex v) {
    visited_[v] = 0;
    path_.pop_back();
    for (Vertex w : g_.neighbors(v)) ++free_degree_[w];
  }

  // Every unvisited vertex other than the final endpoint needs two path
  // neighbours among the unvisited vertices and the current end.
  bool feasible(Vertex end) const {
    int endpoints = 0;
    for (Vertex u = 0; u < g_.order(); ++u) {
      if (visited_[u]) continue;
      int avail = free_degree_[u] + (g_.has_edge(u, end) ? 1 : 0);
      if (avail == 0) return false;
      if (avail == 1 && ++endpoints > 1) return false;
    }
    return true;
  }

  bool extend(Vertex end) {
    if (++nodes_ > budget_.max_nodes) {
      throw BudgetExceeded("Hamiltonian path search exceeded " +
                           std::to_string(budget_.max_nodes) + " nodes");
    }
    if (path_.size() == static_cast<std::size_t>(g_.order())) return true;
    if (!feasible(end)) return false;
    for (Vertex w : g_.neighbors(end)) {
      if (visited_[w]) continue;
      visit(w);
      if (extend(w)) return true;
      unvisit(w);
    }
    return false;
  }

  const Graph& g_;
  SearchBudget budget_;
  std::vector<char> visited_;
  std::vector<int> free_degree_;
  std::vector<Vertex> path_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

TraceResult is_traceable(const Graph& g, const SearchBudget& budget) {
  TraceResult result;
  const Vertex n = g.order();
  if (n == 0) return result;
  if (!is_connected(g)) return result;

  std::vector<Vertex> starts;
  std::vector<Vertex> pendant;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == 1) pendant.push_back(v);
  if (pendant.size() > 2) return result;
  // A pendant vertex must be an end of any Hamiltonian path, so it is the
  // only start worth trying.
  if (!pendant.empty()) {
    starts.push_back(pendant.front());
  } else {
    for (Vertex v = 0; v < n; ++v) starts.push_back(v);
  }

  PathSearch search(g, budget);
  for (Vertex s : starts) {
    if (search.run_from(s)) {
      result.traceable = true;
      result.path = search.path();
      break;
    }
  }
  result.nodes = search.nodes();
  return result;
}

bool is_hamiltonian_path(const Graph& g, std::span<const Vertex> path) {
  if (path.size() != static_cast<std::size_t>(g.order()) || path.empty()) return false;
  std::vector<char> seen(path.size(), 0);
  for (std::size_t i = 0; i < path.size(); ++i) {
    Vertex v = path[i];
    if (v < 0 || v >= g.order() || seen[v]) return false;
    seen[v] = 1;
    if (i > 0 && !g.has_edge(path[i - 1], v)) return false;
  }
  return true;
}

}  // namespace pairham
