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

#include "pairham/leaf_tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "pairham/error.hpp"
#include "pairham/products.hpp"

namespace pairham {
namespace {

Vertex leaves_of(Vertex n, std::span<const Edge> edges) {
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return static_cast<Vertex>(std::count(deg.begin(), deg.end(), 1));
}

void require_connected(const Graph& g) {
  if (g.order() < 2) throw DomainError("leaf numbers need at least 2 vertices");
  if (!is_connected(g)) throw DomainError("graph is not connected");
}

class LeafSearch {
 public:
  LeafSearch(const Graph& g, std::uint64_t max_nodes, Vertex floor, LeafTree incumbent)
      : g_(g),
        n_(g.order()),
        edges_(g.edges().begin(), g.edges().end()),
        max_nodes_(max_nodes),
        floor_(floor),
        best_(std::move(incumbent)),
        in_tree_(n_, 0),
        tree_degree_(n_, 0),
        excluded_(edges_.size(), 0) {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      incident_[edges_[i].u].push_back(i);
      incident_[edges_[i].v].push_back(i);
    }
  }

  // Returns false if the node budget ran out.
  bool run() {
    in_tree_[0] = 1;
    tree_size_ = 1;
    try {
      branch();
    } catch (const BudgetExceeded&) {
      return false;
    }
    return true;
  }

  const LeafTree& best() const { return best_; }

 private:
  bool done() const { return best_.leaf_count <= floor_; }

  std::optional<std::size_t> frontier_edge() const {
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      if (excluded_[i]) continue;
      if (in_tree_[edges_[i].u] != in_tree_[edges_[i].v]) return i;
    }
    return std::nullopt;
  }

  // Every vertex must stay reachable from the tree through non-excluded edges.
  bool reachable() const {
    std::vector<char> seen(in_tree_);
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n_; ++v)
      if (seen[v]) stack.push_back(v);
    Vertex count = tree_size_;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (std::size_t i : incident_[v]) {
        if (excluded_[i]) continue;
        Vertex w = edges_[i].u == v ? edges_[i].v : edges_[i].u;
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
      }
    }
    return count == n_;
  }

  Vertex lower_bound() const {
    Vertex forced = 0;
    for (Vertex v = 0; v < n_; ++v) {
      int to_tree = 0;
      int to_outside = 0;
      for (std::size_t i : incident_[v]) {
        if (excluded_[i]) continue;
        Vertex w = edges_[i].u == v ? edges_[i].v : edges_[i].u;
        (in_tree_[w] ? to_tree : to_outside) += 1;
      }
      if (in_tree_[v]) {
        if (tree_size_ > 1 && tree_degree_[v] == 1 && to_outside == 0) ++forced;
      } else if (std::min(to_tree, 1) + to_outside <= 1) {
        ++forced;
      }
    }
    return std::max<Vertex>(forced, 2);
  }

  void branch() {
    if (++nodes_ > max_nodes_) throw BudgetExceeded("spanning tree search budget exhausted");
    if (tree_size_ == n_) {
      Vertex leaves = leaves_of(n_, chosen_);
      if (leaves < best_.leaf_count) {
        best_.edges = chosen_;
        std::sort(best_.edges.begin(), best_.edges.end());
        best_.leaf_count = leaves;
      }
      return;
    }
    if (lower_bound() >= best_.leaf_count) return;
    auto pick = frontier_edge();
    if (!pick) return;
    const std::size_t i = *pick;
    const Edge e = edges_[i];
    const Vertex outside = in_tree_[e.u] ? e.v : e.u;

    in_tree_[outside] = 1;
    ++tree_size_;
    ++tree_degree_[e.u];
    ++tree_degree_[e.v];
    chosen_.push_back(e);
    branch();
    chosen_.pop_back();
    --tree_degree_[e.u];
    --tree_degree_[e.v];
    --tree_size_;
    in_tree_[outside] = 0;
    if (done()) return;

    excluded_[i] = 1;
    if (reachable()) branch();
    excluded_[i] = 0;
  }

  const Graph& g_;
  Vertex n_;
  std::vector<Edge> edges_;
  std::uint64_t max_nodes_;
  Vertex floor_;
  LeafTree best_;
  std::vector<char> in_tree_;
  std::vector<int> tree_degree_;
  std::vector<char> excluded_;
  std::vector<std::vector<std::size_t>> incident_ = std::vector<std::vector<std::size_t>>(n_);
  std::vector<Edge> chosen_;
  Vertex tree_size_ = 0;
  std::uint64_t nodes_ = 0;
};

// Depth-first spanning tree, used as the first incumbent.
LeafTree dfs_tree(const Graph& g) {
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<Edge> edges;
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    bool advanced = false;
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        edges.push_back(make_edge(v, w));
        stack.push_back(w);
        advanced = true;
        break;
      }
    }
    if (!advanced) stack.pop_back();
  }
  return make_leaf_tree(g, std::move(edges));
}

// Tree on a fixed vertex set, kept as adjacency sets for the surgery below.
class MutableTree {
 public:
  explicit MutableTree(Vertex n) : adj_(static_cast<std::size_t>(n)) {}

  void add(Edge e) {
    adj_[e.u].insert(e.v);
    adj_[e.v].insert(e.u);
  }
  void remove(Edge e) {
    adj_[e.u].erase(e.v);
    adj_[e.v].erase(e.u);
  }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }

  Vertex leaves() const {
    Vertex c = 0;
    for (const auto& s : adj_)
      if (s.size() == 1) ++c;
    return c;
  }

  std::vector<Vertex> path(Vertex from, Vertex to) const {
    std::vector<Vertex> parent(adj_.size(), -1);
    std::vector<Vertex> queue{from};
    parent[from] = from;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex v = queue[head];
      if (v == to) break;
      for (Vertex w : adj_[v]) {
        if (parent[w] == -1) {
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }
    if (parent[to] == -1) throw std::logic_error("tree is disconnected");
    std::vector<Vertex> out{to};
    while (out.back() != from) out.push_back(parent[out.back()]);
    std::reverse(out.begin(), out.end());
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex v = 0; v < static_cast<Vertex>(adj_.size()); ++v)
      for (Vertex w : adj_[v])
        if (v < w) out.push_back({v, w});
    return out;
  }

 private:
  std::vector<std::set<Vertex>> adj_;
};

}  // namespace

bool is_spanning_tree(const Graph& g, std::span<const Edge> edges) {
  const Vertex n = g.order();
  if (n == 0 || edges.size() + 1 != static_cast<std::size_t>(n)) return false;
  std::vector<Vertex> root(static_cast<std::size_t>(n));
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](Vertex v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const Edge& e : edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    Vertex a = find(e.u);
    Vertex b = find(e.v);
    if (a == b) return false;
    root[a] = b;
  }
  return true;
}

LeafTree make_leaf_tree(const Graph& g, std::vector<Edge> edges) {
  for (Edge& e : edges) e = make_edge(e.u, e.v);
  if (!is_spanning_tree(g, edges)) throw DomainError("edge set is not a spanning tree of the graph");
  std::sort(edges.begin(), edges.end());
  LeafTree t;
  t.leaf_count = leaves_of(g.order(), edges);
  t.edges = std::move(edges);
  return t;
}

MlResult min_leaf_number(const Graph& g, const MlBudget& budget) {
  require_connected(g);
  if (g.order() > budget.max_order) {
    throw SizeCapExceeded("minimum leaf search is capped at " + std::to_string(budget.max_order) + " vertices");
  }

  Vertex floor = 2;
  try {
    TraceResult path = is_traceable(g, budget.path_search);
    if (path.traceable) {
      std::vector<Edge> edges;
      for (std::size_t i = 1; i < path.path.size(); ++i) edges.push_back(make_edge(path.path[i - 1], path.path[i]));
      return {2, make_leaf_tree(g, std::move(edges)), true};
    }
    floor = 3;
  } catch (const BudgetExceeded&) {
    // Fall through: the tree search alone is still exact.
  }

  LeafSearch search(g, budget.max_nodes, floor, dfs_tree(g));
  const bool complete = search.run();
  MlResult result;
  result.witness = search.best();
  result.value = result.witness.leaf_count;
  result.exact = complete || result.value <= floor;
  return result;
}

LeafReduction lemma1_reduce(const Graph& g, const LeafTree& tree) {
  if (!is_spanning_tree(g, tree.edges)) throw DomainError("input is not a spanning tree of the graph");
  const Vertex n = g.order();
  std::vector<Vertex> leaves;
  {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (const Edge& e : tree.edges) {
      ++deg[e.u];
      ++deg[e.v];
    }
    for (Vertex v = 0; v < n; ++v)
      if (deg[v] == 1) leaves.push_back(v);
  }
  const auto t = static_cast<Vertex>(leaves.size());
  if (t <= 2) throw DomainError("leaf reduction needs a spanning tree with more than 2 leaves");

  const PrismStructure s = prism(g);
  MutableTree work(2 * n);
  for (const Edge& e : tree.edges) {
    work.add(e);
    work.add({e.u + n, e.v + n});
  }
  work.add({leaves[0], leaves[0] + n});

  LeafReduction out;
  out.leaf_history.push_back(work.leaves());

  for (Vertex j = 1; j < t; ++j) {
    const Edge added{leaves[j], leaves[j] + n};
    std::vector<Vertex> cycle = work.path(added.u, added.v);
    work.add(added);
    const Vertex bound = 2 * t - 2 - j;

    // Cycle edges other than the new vertical, in walk order.
    std::vector<Edge> cycle_edges;
    for (std::size_t i = 1; i < cycle.size(); ++i) cycle_edges.push_back(make_edge(cycle[i - 1], cycle[i]));

    auto leaves_without = [&](Edge f) {
      work.remove(f);
      Vertex c = work.leaves();
      work.add(f);
      return c;
    };

    std::vector<Edge> preferred;
    std::vector<Vertex> hubs(cycle.begin(), cycle.end());
    std::sort(hubs.begin(), hubs.end());
    for (Vertex v : hubs) {
      if (work.degree(v) < 3) continue;
      std::vector<Edge> incident;
      for (const Edge& f : cycle_edges)
        if (f.u == v || f.v == v) incident.push_back(f);
      std::sort(incident.begin(), incident.end());
      preferred.insert(preferred.end(), incident.begin(), incident.end());
    }
    if (preferred.empty()) throw std::logic_error("closed cycle has no vertex of degree >= 3");

    std::optional<Edge> removed;
    for (const Edge& f : preferred) {
      if (leaves_without(f) <= bound) {
        removed = f;
        break;
      }
    }
    if (!removed) {
      std::vector<Edge> any = cycle_edges;
      std::sort(any.begin(), any.end());
      for (const Edge& f : any)
        if (leaves_without(f) <= bound) {
          removed = f;
          break;
        }
    }
    if (!removed) throw std::logic_error("no cycle edge keeps the leaf bound");

    work.remove(*removed);
    out.added.push_back(added);
    out.removed.push_back(*removed);
    out.leaf_history.push_back(work.leaves());
  }

  out.tree = make_leaf_tree(s.host(), work.edges());
  return out;
}

int traceable_threshold(const Graph& g, const MlBudget& budget) { return min_leaf_number(g, budget).value - 2; }

int ph_power_upper_bound(const Graph& g, const MlBudget& budget) { return min_leaf_number(g, budget).value + 3; }

PowerProbe ph_power_exact(const Graph& g, int max_k, const PHBudget& budget, Vertex max_order, unsigned workers) {
  if (g.order() < 1 || !is_connected(g)) throw DomainError("graph is not connected");
  if (max_k < 0) throw DomainError("max_k must be non-negative");
  PowerProbe probe;
  for (int k = 0; k <= max_k; ++k) {
    const auto order = static_cast<std::size_t>(g.order()) << k;
    if (order > static_cast<std::size_t>(max_order)) {
      probe.status = ProbeStatus::cap_exceeded;
      return probe;
    }
    LevelVerdict level{k, static_cast<Vertex>(order), LevelStatus::undefined};
    if (order >= 4 && order % 2 == 0) {
      const Graph top = prism_power(g, k, SizeCaps{.product_vertices = 64, .tower_vertices = order}).top();
      const PHVerdict v = verify_ph(top, budget, workers);
      level.status = v.outcome == PHOutcome::ph       ? LevelStatus::ph
                     : v.outcome == PHOutcome::not_ph ? LevelStatus::not_ph
                                                      : LevelStatus::budget_exceeded;
    }
    probe.levels.push_back(level);
    if (level.status == LevelStatus::ph) {
      probe.status = ProbeStatus::found;
      probe.power = k;
      return probe;
    }
    if (level.status == LevelStatus::budget_exceeded) {
      probe.status = ProbeStatus::budget_exceeded;
      return probe;
    }
  }
  probe.status = ProbeStatus::not_found;
  return probe;
}

}  // namespace pairham
