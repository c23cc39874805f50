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

#include <json.hpp>

#include "pairham/engine.hpp"
#include "pairham/graph.hpp"
#include "pairham/leaf_tree.hpp"
#include "pairham/pairing.hpp"
#include "pairham/ph_verify.hpp"

// JSON forms of the library types:
//   graph    {"n": int, "edges": [[u, v], ...]}   u < v, sorted
//   pairing  {"n": int, "pairs": [[u, v], ...]}   u < v, sorted
//   verdict  {"outcome", "is_ph", "witness", "witness_index", "stats"}
//   ml       {"ml": int, "exact": bool, "witness_edges": [[u, v], ...]}
namespace pairham {

using Json = nlohmann::json;

Json edges_to_json(std::span<const Edge> edges);
std::vector<Edge> edges_from_json(const Json& j);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);

Json to_json(const Pairing& p);
/// Accepts {"n", "pairs"} or a bare pair list (n inferred as 2 * pairs).
Pairing pairing_from_json(const Json& j);

Json to_json(const PHVerdict& v);
Json to_json(const MlResult& r);
Json to_json(const ExtensionTrace& t);

struct TraceSummary {
  ExtensionCase top = ExtensionCase::base;
  std::size_t splice_levels = 0;
  std::size_t bridge_levels = 0;
  std::size_t base_calls = 0;
};
TraceSummary summarize(const ExtensionTrace& t);
Json to_json(const TraceSummary& s);

const char* to_string(PHOutcome o);
const char* to_string(ExtensionCase c);

}  // namespace pairham
