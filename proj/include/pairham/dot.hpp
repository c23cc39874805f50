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

#include <span>
#include <string>
#include <vector>

#include "pairham/graph.hpp"

namespace pairham {

enum class EdgeStyle { bold, dashed, dotted };

/// A set of vertex pairs drawn with one style. Pairs need not be edges of the graph.
struct Highlight {
  std::vector<Edge> edges;
  EdgeStyle style = EdgeStyle::bold;
};

/// Undirected DOT rendering. Graph edges not covered by any highlight are
/// drawn plain; each highlighted pair gets one line per highlight containing it.
std::string export_dot(const Graph& g, std::span<const Highlight> highlights = {});

}  // namespace pairham
