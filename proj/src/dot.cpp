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

#include "pairham/dot.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pairham/error.hpp"

namespace pairham {
namespace {

const char* style_attributes(EdgeStyle style) {
  switch (style) {
    case EdgeStyle::bold: return "style=bold, penwidth=2.5";
    case EdgeStyle::dashed: return "style=dashed";
    case EdgeStyle::dotted: return "style=dotted";
  }
  return "";
}

}  // namespace

std::string export_dot(const Graph& g, std::span<const Highlight> highlights) {
  std::set<Edge> covered;
  for (const Highlight& h : highlights) {
    for (const Edge& e : h.edges) {
      if (e.u < 0 || e.v < 0 || e.u >= g.order() || e.v >= g.order() || e.u == e.v) {
        throw DomainError("highlighted pair is not a pair of distinct vertices");
      }
      covered.insert(make_edge(e.u, e.v));
    }
  }

  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    if (!covered.contains(e)) out << "  " << e.u << " -- " << e.v << " [color=gray60];\n";
  }
  for (const Highlight& h : highlights) {
    for (const Edge& raw : h.edges) {
      Edge e = make_edge(raw.u, raw.v);
      out << "  " << e.u << " -- " << e.v << " [" << style_attributes(h.style) << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace pairham
