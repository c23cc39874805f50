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

#include <string>
#include <string_view>

#include "pairham/graph.hpp"

namespace pairham {

/// graph6 encoding (no header, no trailing newline).
std::string encode_graph6(const Graph& g);

/// Accepts an optional ">>graph6<<" header and one trailing newline.
/// Throws ParseError carrying the offending byte offset.
Graph decode_graph6(std::string_view text);

}  // namespace pairham
