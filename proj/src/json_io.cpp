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

#include "pairham/json_io.hpp"

#include "pairham/error.hpp"

namespace pairham {

Json edges_to_json(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

std::vector<Edge> edges_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected an array of pairs");
  std::vector<Edge> out;
  for (const Json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() || !pair[1].is_number_integer()) {
      throw DomainError("expected a pair [u, v] of integers");
    }
    out.push_back(make_edge(pair[0].get<Vertex>(), pair[1].get<Vertex>()));
  }
  return out;
}

Json to_json(const Graph& g) { return {{"n", g.order()}, {"edges", edges_to_json(g.edges())}}; }

Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) throw DomainError("graph JSON needs n and edges");
  return Graph(j.at("n").get<Vertex>(), edges_from_json(j.at("edges")));
}

Json to_json(const Pairing& p) { return {{"n", p.order()}, {"pairs", edges_to_json(p.pairs())}}; }

Pairing pairing_from_json(const Json& j) {
  if (j.is_array()) {
    auto pairs = edges_from_json(j);
    return Pairing(static_cast<Vertex>(2 * pairs.size()), pairs);
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("pairs")) throw DomainError("pairing JSON needs n and pairs");
  return Pairing(j.at("n").get<Vertex>(), edges_from_json(j.at("pairs")));
}

const char* to_string(PHOutcome o) {
  switch (o) {
    case PHOutcome::ph: return "ph";
    case PHOutcome::not_ph: return "not_ph";
    case PHOutcome::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

const char* to_string(ExtensionCase c) {
  switch (c) {
    case ExtensionCase::base: return "base";
    case ExtensionCase::splice: return "splice";
    case ExtensionCase::bridge: return "bridge";
  }
  return "?";
}

Json to_json(const PHVerdict& v) {
  Json out;
  out["outcome"] = to_string(v.outcome);
  out["is_ph"] = v.outcome == PHOutcome::budget_exceeded ? Json(nullptr) : Json(v.is_ph());
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  out["witness_index"] = v.witness_index ? Json(*v.witness_index) : Json(nullptr);
  out["stats"] = {{"pairings_total", v.stats.pairings_total},
                  {"pairings_checked", v.stats.pairings_checked},
                  {"extensions_found", v.stats.extensions_found},
                  {"undecided", v.stats.undecided}};
  return out;
}

Json to_json(const MlResult& r) {
  return {{"ml", r.value}, {"exact", r.exact}, {"witness_edges", edges_to_json(r.witness.edges)}};
}

Json to_json(const ExtensionTrace& t) {
  Json out{{"case", to_string(t.kind)}, {"layer_order", t.layer_order}};
  if (t.kind == ExtensionCase::splice) {
    out["cycle_count"] = t.cycle_count;
    out["splices"] = edges_to_json(t.splices);
  } else if (t.kind == ExtensionCase::bridge) {
    out["left"] = edges_to_json(t.left);
    out["right"] = edges_to_json(t.right);
    out["paths"] = t.paths;
  }
  if (!t.children.empty()) {
    Json kids = Json::array();
    for (const auto& c : t.children) kids.push_back(to_json(c));
    out["children"] = std::move(kids);
  }
  return out;
}

TraceSummary summarize(const ExtensionTrace& t) {
  TraceSummary s;
  s.top = t.kind;
  auto walk = [&s](const auto& self, const ExtensionTrace& node) -> void {
    switch (node.kind) {
      case ExtensionCase::base: ++s.base_calls; break;
      case ExtensionCase::splice: ++s.splice_levels; break;
      case ExtensionCase::bridge: ++s.bridge_levels; break;
    }
    for (const auto& c : node.children) self(self, c);
  };
  walk(walk, t);
  return s;
}

Json to_json(const TraceSummary& s) {
  return {{"top_case", to_string(s.top)},
          {"splice_levels", s.splice_levels},
          {"bridge_levels", s.bridge_levels},
          {"base_calls", s.base_calls}};
}

}  // namespace pairham
