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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pairham/graph.hpp"
#include "pairham/leaf_tree.hpp"
#include "pairham/ph_verify.hpp"

namespace pairham::cli {

enum class OutputFormat { json, dot, table };

/// Everything a command may need besides its positional inputs. All
/// randomness derives from `seed`; `workers` changes throughput only.
struct RunConfig {
  SizeCaps caps;
  PHBudget ph_budget;
  MlBudget ml_budget;
  unsigned workers = 1;
  std::uint64_t seed = 1;
  OutputFormat format = OutputFormat::json;
};

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;  // not PH / some extension failed / no power found
inline constexpr int kBudget = 2;     // search budget or size cap hit
inline constexpr int kBadInput = 3;

/// Graph argument: "-" reads graph6 from `in`; a token containing a digit is
/// a name (Kn, Ka,b, Cn, Pn, Qd, Sn); anything else is graph6.
Graph parse_graph_argument(std::string_view arg, std::istream& in);

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace pairham::cli
