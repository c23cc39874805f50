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

#include "pairham/graph6.hpp"

#include <cstdint>
#include <vector>

#include "pairham/error.hpp"

namespace pairham {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

void put_order(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  const auto n = static_cast<std::uint64_t>(g.order());
  std::string out;
  put_order(out, n);
  // Upper triangle, column by column: x(0,1), x(0,2), x(1,2), x(0,3), ...
  int filled = 0;
  unsigned chunk = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        filled = 0;
        chunk = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

Graph decode_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kHeader)) pos = kHeader.size();
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);

  auto sextet = [&](std::size_t at) -> std::uint64_t {
    if (at >= text.size()) throw ParseError("graph6 input truncated", at);
    auto c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("byte outside the graph6 range 63..126", at);
    return c - 63u;
  };

  std::uint64_t n = 0;
  if (pos >= text.size()) throw ParseError("empty graph6 input", pos);
  if (text[pos] != '~') {
    n = sextet(pos);
    pos += 1;
  } else if (pos + 1 < text.size() && text[pos + 1] == '~') {
    for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | sextet(pos + 2 + i);
    pos += 8;
  } else {
    for (std::size_t i = 0; i < 3; ++i) n = (n << 6) | sextet(pos + 1 + i);
    pos += 4;
  }
  if (n > 1'000'000) throw ParseError("graph6 order too large", pos);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() - pos < bytes) throw ParseError("graph6 input truncated", text.size());
  if (text.size() - pos > bytes) throw ParseError("trailing bytes after graph6 data", pos + bytes);

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      std::uint64_t byte = sextet(pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1u) edges.push_back({i, j});
    }
  }
  if (k % 6 != 0) {
    std::uint64_t last = sextet(pos + k / 6);
    if (last & ((1u << (6 - k % 6)) - 1)) throw ParseError("nonzero graph6 padding bits", pos + k / 6);
  }
  return Graph(static_cast<Vertex>(n), edges);
}

}  // namespace pairham
