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

#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <regex>
#include <sstream>
#include <thread>

#include "pairham/cycles.hpp"
#include "pairham/dot.hpp"
#include "pairham/engine.hpp"
#include "pairham/error.hpp"
#include "pairham/generators.hpp"
#include "pairham/graph6.hpp"
#include "pairham/json_io.hpp"
#include "pairham/products.hpp"

namespace pairham::cli {
namespace {

Graph parse_named(std::string_view name) {
  static const std::regex pattern(R"(([KCPQS])(\d+)(?:,(\d+))?)");
  std::cmatch m;
  if (!std::regex_match(name.begin(), name.end(), m, pattern)) {
    throw DomainError("unrecognised graph name '" + std::string(name) + "'");
  }
  const char family = m[1].str()[0];
  const int a = std::stoi(m[2].str());
  if (m[3].matched) {
    if (family != 'K') throw DomainError("only K takes two parameters");
    return complete_bipartite(a, std::stoi(m[3].str()));
  }
  switch (family) {
    case 'K': return complete_graph(a);
    case 'C': return cycle_graph(a);
    case 'P': return path_graph(a);
    case 'Q': return hypercube(a);
    default: return star_graph(a);
  }
}

std::string read_text(std::string_view arg) {
  if (!arg.starts_with("@")) return std::string(arg);
  std::ifstream file{std::string(arg.substr(1))};
  if (!file) throw DomainError("cannot read " + std::string(arg.substr(1)));
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "dot") return OutputFormat::dot;
  if (s == "table") return OutputFormat::table;
  throw DomainError("unknown output format '" + s + "'");
}

struct ExtendOutcome {
  bool ok = false;
  Pairing pairing;
  std::optional<Extension> extension;
  std::optional<Pairing> stuck;
  std::string error;
};

ExtendOutcome extend_one(const Pairing& p, const PrismTower& tower, const ExtensionOracle& oracle) {
  ExtendOutcome r;
  r.pairing = p;
  try {
    Extension ext = extend(p, tower, oracle);
    // Nothing is reported as a success without an independent re-check.
    if (validates_against(tower.top(), p, ext.matching.pairing())) {
      r.ok = true;
    } else {
      r.error = "validation_failed";
    }
    r.extension = std::move(ext);
  } catch (const BaseNotExtendable& e) {
    r.error = "base_not_extendable";
    r.stuck = e.stuck();
  }
  return r;
}

Json outcome_json(const ExtendOutcome& r, std::uint64_t index, bool full_trace) {
  Json j{{"index", index}, {"ok", r.ok}, {"pairing", to_json(r.pairing)}};
  if (r.extension) {
    j["matching"] = to_json(r.extension->matching.pairing());
    j["cycle"] = hamiltonian_cycle(r.pairing, r.extension->matching.pairing());
    j["trace"] = full_trace ? to_json(r.extension->trace) : to_json(summarize(r.extension->trace));
  }
  if (!r.ok) j["error"] = r.error;
  if (r.stuck) j["stuck_pairing"] = to_json(*r.stuck);
  return j;
}

std::vector<Edge> shifted_up(const std::vector<Edge>& edges, Vertex by) {
  std::vector<Edge> out;
  for (const Edge& e : edges) out.push_back({e.u + by, e.v + by});
  return out;
}

// Bold pairing, dashed matching, dotted splice or L/R edges of the top level.
std::string extension_dot(const Graph& top, const ExtendOutcome& r) {
  std::vector<Highlight> marks;
  marks.push_back({r.pairing.pairs(), EdgeStyle::bold});
  if (r.extension) {
    marks.push_back({r.extension->matching.pairs(), EdgeStyle::dashed});
    const ExtensionTrace& t = r.extension->trace;
    std::vector<Edge> dotted;
    if (t.kind == ExtensionCase::splice) {
      dotted = t.splices;
      auto up = shifted_up(t.splices, t.layer_order);
      dotted.insert(dotted.end(), up.begin(), up.end());
    } else if (t.kind == ExtensionCase::bridge) {
      dotted = t.left;
      auto up = shifted_up(t.right, t.layer_order);
      dotted.insert(dotted.end(), up.begin(), up.end());
    }
    if (!dotted.empty()) marks.push_back({dotted, EdgeStyle::dotted});
  }
  return export_dot(top, marks);
}

int cmd_extend(const std::string& base_arg, int k, const std::optional<std::string>& pairing_arg,
               std::optional<std::uint64_t> random_count, bool all, bool summary_only, bool full_trace,
               const RunConfig& cfg, std::ostream& out, std::istream& in) {
  const Graph base = parse_graph_argument(base_arg, in);
  const PrismTower tower = prism_power(base, k, cfg.caps);
  const Vertex n = tower.top().order();
  const ExtensionOracle oracle = memoized_base_oracle(base);

  const int modes = (pairing_arg ? 1 : 0) + (random_count ? 1 : 0) + (all ? 1 : 0);
  if (modes != 1) throw DomainError("give exactly one of --pairing, --random, --all");

  std::uint64_t total = 0;
  std::function<Pairing(std::uint64_t)> make;
  if (pairing_arg) {
    Pairing p = pairing_from_json(Json::parse(read_text(*pairing_arg)));
    if (p.order() != n) throw DomainError("pairing order does not match the tower top (" + std::to_string(n) + ")");
    total = 1;
    make = [p](std::uint64_t) { return p; };
  } else if (random_count) {
    total = *random_count;
    make = [n, seed = cfg.seed](std::uint64_t i) {
      auto rng = sample_rng(seed, i);
      return random_pairing(n, rng);
    };
  } else {
    total = pairing_count(n);
    if (total > cfg.ph_budget.max_pairings) {
      throw SizeCapExceeded(std::to_string(total) + " pairings exceed --max-pairings");
    }
    make = [n](std::uint64_t i) { return pairing_at(n, i); };
  }

  if (cfg.format == OutputFormat::dot) {
    if (total != 1) throw DomainError("--format dot renders a single pairing");
    ExtendOutcome r = extend_one(make(0), tower, oracle);
    out << extension_dot(tower.top(), r);
    return r.ok ? kOk : kNegative;
  }

  std::vector<std::optional<ExtendOutcome>> kept(summary_only ? 0 : total);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> ok_count{0};
  std::atomic<std::uint64_t> first_failure{total};
  auto worker = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < total;) {
      ExtendOutcome r = extend_one(make(i), tower, oracle);
      if (r.ok) {
        ok_count.fetch_add(1);
      } else {
        std::uint64_t cur = first_failure.load();
        while (i < cur && !first_failure.compare_exchange_weak(cur, i)) {
        }
      }
      if (!summary_only) kept[i] = std::move(r);
    }
  };
  const unsigned workers = std::max(1u, std::min<unsigned>(cfg.workers, static_cast<unsigned>(std::max<std::uint64_t>(total, 1))));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  const std::uint64_t oks = ok_count.load();
  if (cfg.format == OutputFormat::table) {
    out << "base " << encode_graph6(base) << "  k " << k << "  top order " << n << "\n";
    if (!summary_only) {
      for (std::uint64_t i = 0; i < total; ++i) {
        const ExtendOutcome& r = *kept[i];
        out << i << "\t" << (r.ok ? "ok" : r.error);
        if (r.extension) out << "\t" << to_string(r.extension->trace.kind);
        out << "\n";
      }
    }
    out << "extended " << oks << " of " << total << "\n";
  } else {
    Json doc{{"base", encode_graph6(base)}, {"k", k}, {"top_order", n}};
    if (!summary_only) {
      Json results = Json::array();
      for (std::uint64_t i = 0; i < total; ++i) results.push_back(outcome_json(*kept[i], i, full_trace));
      doc["results"] = std::move(results);
    }
    doc["summary"] = {{"total", total}, {"ok", oks}, {"failed", total - oks}};
    if (first_failure.load() < total) doc["summary"]["first_failure"] = first_failure.load();
    out << doc.dump(summary_only ? 2 : -1) << "\n";
  }
  return oks == total ? kOk : kNegative;
}

// Table format prints one "key<TAB>value" line per top-level field.
void emit(const Json& doc, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != OutputFormat::table) {
    out << doc.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    out << key << "\t" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

int cmd_verify(const Graph& g, const RunConfig& cfg, std::ostream& out) {
  const PHVerdict v = verify_ph(g, cfg.ph_budget, cfg.workers);
  if (cfg.format == OutputFormat::table) {
    out << "outcome " << to_string(v.outcome) << "\n"
        << "checked " << v.stats.pairings_checked << " of " << v.stats.pairings_total << " pairings, "
        << v.stats.extensions_found << " extended\n";
    if (v.witness) out << "witness " << to_json(*v.witness)["pairs"].dump() << "\n";
  } else {
    Json doc = to_json(v);
    doc["graph"] = encode_graph6(g);
    out << doc.dump(2) << "\n";
  }
  switch (v.outcome) {
    case PHOutcome::ph: return kOk;
    case PHOutcome::not_ph: return kNegative;
    case PHOutcome::budget_exceeded: return kBudget;
  }
  return kBudget;
}

int cmd_reduce_tree(const Graph& g, const std::optional<std::string>& tree_arg, const RunConfig& cfg,
                    std::ostream& out) {
  LeafTree input;
  if (tree_arg) {
    input = make_leaf_tree(g, edges_from_json(Json::parse(read_text(*tree_arg))));
  } else {
    input = min_leaf_number(g, cfg.ml_budget).witness;
  }
  if (input.leaf_count <= 2) throw DomainError("the spanning tree is a path; there is nothing to reduce");
  const LeafReduction r = lemma1_reduce(g, input);
  if (cfg.format == OutputFormat::dot) {
    std::vector<Highlight> marks{{r.tree.edges, EdgeStyle::bold}};
    out << export_dot(prism(g).host(), marks);
    return kOk;
  }
  Json doc{{"prism", encode_graph6(prism(g).host())},
           {"input_leaves", input.leaf_count},
           {"input_edges", edges_to_json(input.edges)},
           {"leaf_history", r.leaf_history},
           {"added", edges_to_json(r.added)},
           {"removed", edges_to_json(r.removed)},
           {"leaf_count", r.tree.leaf_count},
           {"tree_edges", edges_to_json(r.tree.edges)}};
  emit(doc, cfg, out);
  return kOk;
}

const char* to_string(LevelStatus s) {
  switch (s) {
    case LevelStatus::ph: return "ph";
    case LevelStatus::not_ph: return "not_ph";
    case LevelStatus::undefined: return "undefined";
    case LevelStatus::budget_exceeded: return "budget_exceeded";
  }
  return "?";
}

const char* to_string(ProbeStatus s) {
  switch (s) {
    case ProbeStatus::found: return "found";
    case ProbeStatus::not_found: return "not_found";
    case ProbeStatus::budget_exceeded: return "budget_exceeded";
    case ProbeStatus::cap_exceeded: return "cap_exceeded";
  }
  return "?";
}

}  // namespace

Graph parse_graph_argument(std::string_view arg, std::istream& in) {
  if (arg == "-") {
    std::string line;
    if (!std::getline(in, line)) throw DomainError("no graph6 line on standard input");
    return decode_graph6(line);
  }
  if (arg.starts_with("@")) {
    std::string text = read_text(arg);
    auto end = text.find('\n');
    return decode_graph6(std::string_view(text).substr(0, end));
  }
  if (std::any_of(arg.begin(), arg.end(), [](char c) { return c >= '0' && c <= '9'; })) return parse_named(arg);
  return decode_graph6(arg);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
  CLI::App app{"pairham: pairing extensions in graph prisms, PH verification and leaf-number tools"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json";
  std::uint64_t max_nodes = cfg.ph_budget.max_nodes_per_pairing;
  std::size_t tower_cap = cfg.caps.tower_vertices;
  std::size_t product_cap = cfg.caps.product_vertices;
  app.add_option("--format", format, "json, dot or table")->check(CLI::IsMember({"json", "dot", "table"}));
  app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for all sampling");
  app.add_option("--max-pairings", cfg.ph_budget.max_pairings, "pairings examined before giving up");
  app.add_option("--max-nodes", max_nodes, "search nodes per pairing / spanning-tree search");
  app.add_option("--tower-cap", tower_cap, "largest prism tower order");
  app.add_option("--product-cap", product_cap, "largest product order");

  // gen
  auto* gen = app.add_subcommand("gen", "print a generated graph as graph6");
  std::string family;
  std::vector<std::string> gen_args;
  std::string product_op = "cartesian";
  gen->add_option("family", family, "complete|cycle|path|star|complete-bipartite|hypercube|spider|product")
      ->required();
  gen->add_option("params", gen_args, "generator parameters, or two graphs for product");
  gen->add_option("--op", product_op, "product kind")->check(CLI::IsMember({"cartesian", "strong", "prism"}));

  // extend
  auto* ext = app.add_subcommand("extend", "extend pairings of P^k(base) to Hamiltonian cycles");
  std::string base_arg;
  int k = 0;
  std::string pairing_text;
  std::uint64_t random_count = 0;
  bool all = false, summary_only = false, full_trace = false;
  ext->add_option("--base", base_arg, "base graph (graph6 or name)")->required();
  ext->add_option("--k", k, "prism power")->check(CLI::NonNegativeNumber);
  auto* pairing_opt = ext->add_option("--pairing", pairing_text, "pairing JSON, or @file");
  auto* random_opt = ext->add_option("--random", random_count, "number of random pairings");
  ext->add_flag("--all", all, "every pairing of the tower top");
  ext->add_flag("--summary-only", summary_only, "print counts only");
  ext->add_flag("--full-trace", full_trace, "include the full construction trace");

  auto* verify = app.add_subcommand("verify-ph", "decide the PH-property exhaustively (exit 0/1/2)");
  std::string graph_arg;
  verify->add_option("graph", graph_arg, "graph6, name, or - for stdin")->required();

  auto* ml = app.add_subcommand("ml", "minimum leaf number of a spanning tree");
  ml->add_option("graph", graph_arg)->required();

  auto* reduce = app.add_subcommand("reduce-tree", "prism spanning tree with fewer leaves");
  reduce->add_option("graph", graph_arg)->required();
  std::string tree_text;
  auto* tree_opt = reduce->add_option("--tree", tree_text, "input spanning tree edges JSON (default: an ml witness)");

  auto* pbound = app.add_subcommand("p-bound", "traceability threshold and PH prism-power bound");
  pbound->add_option("graph", graph_arg)->required();

  auto* pexact = app.add_subcommand("p-exact", "smallest prism power with the PH-property, exhaustively");
  pexact->add_option("graph", graph_arg)->required();
  int max_k = 2;
  Vertex max_order = 16;
  pexact->add_option("--max-k", max_k)->check(CLI::NonNegativeNumber);
  pexact->add_option("--max-order", max_order, "largest prism power order to verify");

  auto* show = app.add_subcommand("show", "print a graph as JSON, DOT or graph6");
  show->add_option("graph", graph_arg)->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  cfg.format = parse_format(format);
  cfg.ph_budget.max_nodes_per_pairing = max_nodes;
  cfg.ml_budget.max_nodes = max_nodes;
  cfg.caps.tower_vertices = tower_cap;
  cfg.caps.product_vertices = product_cap;

  try {
    if (*gen) {
      Graph g;
      if (family == "product") {
        if (gen_args.size() != 2) throw DomainError("product needs two graphs");
        Graph a = parse_graph_argument(gen_args[0], in);
        Graph b = parse_graph_argument(gen_args[1], in);
        g = product_op == "strong"    ? strong_product(a, b, cfg.caps)
            : product_op == "prism"   ? prism(a).host()
                                      : cartesian_product(a, b, cfg.caps);
      } else {
        std::vector<int> params;
        for (const auto& arg : gen_args) {
          std::stringstream parts(arg);
          for (std::string tok; std::getline(parts, tok, ',');) {
            int v = 0;
            const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || end != tok.data() + tok.size()) {
              throw DomainError("generator parameter '" + tok + "' is not an integer");
            }
            params.push_back(v);
          }
        }
        g = generate(parse_family(family), params);
      }
      out << encode_graph6(g) << "\n";
      return kOk;
    }
    if (*ext) {
      return cmd_extend(base_arg, k, pairing_opt->count() ? std::optional(pairing_text) : std::nullopt,
                        random_opt->count() ? std::optional(random_count) : std::nullopt, all, summary_only,
                        full_trace, cfg, out, in);
    }
    const Graph g = parse_graph_argument(graph_arg, in);
    if (*verify) return cmd_verify(g, cfg, out);
    if (*ml) {
      const MlResult r = min_leaf_number(g, cfg.ml_budget);
      if (cfg.format == OutputFormat::dot) {
        const std::vector<Highlight> marks{{r.witness.edges, EdgeStyle::bold}};
        out << export_dot(g, marks);
      } else {
        emit(to_json(r), cfg, out);
      }
      return kOk;
    }
    if (*reduce) return cmd_reduce_tree(g, tree_opt->count() ? std::optional(tree_text) : std::nullopt, cfg, out);
    if (*pbound) {
      const MlResult r = min_leaf_number(g, cfg.ml_budget);
      Json doc{{"ml", r.value},
               {"exact", r.exact},
               {"traceable_threshold", r.value - 2},
               {"ph_power_upper_bound", r.value + 3}};
      emit(doc, cfg, out);
      return kOk;
    }
    if (*pexact) {
      const PowerProbe probe = ph_power_exact(g, max_k, cfg.ph_budget, max_order, cfg.workers);
      Json levels = Json::array();
      for (const auto& l : probe.levels) levels.push_back({{"k", l.power}, {"order", l.order}, {"status", to_string(l.status)}});
      Json doc{{"status", to_string(probe.status)},
               {"p", probe.power ? Json(*probe.power) : Json(nullptr)},
               {"levels", levels}};
      emit(doc, cfg, out);
      switch (probe.status) {
        case ProbeStatus::found: return kOk;
        case ProbeStatus::not_found: return kNegative;
        default: return kBudget;
      }
    }
    if (*show) {
      if (cfg.format == OutputFormat::dot) {
        out << export_dot(g);
      } else if (cfg.format == OutputFormat::table) {
        out << encode_graph6(g) << "\n";
      } else {
        out << to_json(g).dump() << "\n";
      }
      return kOk;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const Json::exception& e) {
    err << "error: bad JSON: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    err << "error: bad number: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace pairham::cli
