// Copyright 2026 The popmatch Authors.
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

// Command-line front end. Exit status: 0 found / holds, 1 not found / fails,
// 2 usage or input error.

#ifndef POPMATCH_TOOLS_CLI_HPP_
#define POPMATCH_TOOLS_CLI_HPP_

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "popmatch/popmatch.hpp"

namespace popmatch::cli {

inline constexpr int kFound = 0;
inline constexpr int kNotFound = 1;
inline constexpr int kUsage = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Instance load_instance(const std::string& path) {
  try {
    return parse_instance(read_file(path));
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline void print_matching(std::ostream& out, const Instance& inst, const Matching& m) {
  out << serialize_matching(inst, m);
}

// {(a1,b2), (a2,b1)}
inline std::string brace_form(const Instance& inst, const Matching& m) {
  std::vector<std::string> pairs;
  for (const Edge& e : m.pairs()) pairs.push_back("(" + inst.man_name(e.man) + "," + inst.woman_name(e.woman) + ")");
  std::sort(pairs.begin(), pairs.end());
  std::string out = "{";
  for (std::size_t i = 0; i < pairs.size(); ++i) out += (i ? ", " : "") + pairs[i];
  return out + "}";
}

inline Edge parse_edge_arg(const Instance& inst, const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw InputError("--edge expects 'man,woman'");
  const auto e = edge_from_names(inst, text.substr(0, comma), text.substr(comma + 1));
  if (!e) throw InputError("--edge: '" + text + "' does not name a man and a woman");
  if (!inst.has_edge(*e)) throw InputError("--edge: (" + text + ") is not an edge");
  return *e;
}

inline void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stable, popular and dominant matchings under strict preferences", "popmatch"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::string instance_path, matching_path, costs_path, edge_text, property, algo, what, output;
  bool json = false, cubic = false;
  unsigned threads = 1;
  std::size_t max_edges = default_max_edges();
  int men = 0, women = 0;
  double density = 0.5;
  std::uint64_t seed = 0;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--instance", instance_path, "Instance file (PREF v1)")->required();
    sub->add_flag("--json", json, "Emit JSON");
  };

  auto* solve = app.add_subcommand("solve", "Compute a stable or dominant matching");
  add_input(solve);
  solve->add_option("--property", property, "stable | dominant")
      ->required()
      ->check(CLI::IsMember({"stable", "dominant"}));
  solve->add_option("--algo", algo, "gs | level-graph | two-level")
      ->check(CLI::IsMember({"gs", "level-graph", "two-level"}));

  auto* verify = app.add_subcommand("verify", "Check a matching and print a certificate on failure");
  add_input(verify);
  verify->add_option("--property", property, "stable | popular | dominant")
      ->required()
      ->check(CLI::IsMember({"stable", "popular", "dominant"}));
  verify->add_option("-m,--matching", matching_path, "Matching file")->required();

  auto* pedge = app.add_subcommand("popular-edge", "Find a popular matching containing an edge");
  add_input(pedge);
  pedge->add_option("--edge", edge_text, "man,woman")->required();

  auto* pvs = app.add_subcommand("popular-vs-stable", "Decide whether every popular matching is stable");
  add_input(pvs);
  pvs->add_flag("--cubic", cubic, "Use the pairwise search");

  auto* mcd = app.add_subcommand("min-cost-dominant", "Cheapest dominant matching");
  add_input(mcd);
  mcd->add_option("--costs", costs_path, "Cost file: <man> <woman> <cost> per line")->required();

  auto* en = app.add_subcommand("enumerate", "Exhaustive listings for small instances");
  add_input(en);
  en->add_option("--what", what, "matchings | stable | popular | dominant | popular-edges")
      ->required()
      ->check(CLI::IsMember({"matchings", "stable", "popular", "dominant", "popular-edges"}));
  en->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  en->add_option("--max-edges", max_edges, "Enumeration limit on |E|");

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--men", men, "Number of men")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--women", women, "Number of women")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--density", density, "Edge probability in (0,1]")->required();
  gen->add_option("--seed", seed, "Seed")->required();
  gen->add_option("-o,--output", output, "Output file (default: stdout)");
  gen->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (*gen) {
      if (!(density > 0.0 && density <= 1.0)) throw InputError("--density must lie in (0, 1]");
      const Instance inst = generate_random(men, women, density, seed);
      const std::string text = serialize_instance(inst);
      if (!output.empty()) {
        std::ofstream f(output, std::ios::binary);
        if (!f || !(f << text)) throw InputError("cannot write '" + output + "'");
      }
      if (json) {
        emit_json(out, {{"men", inst.num_men()},
                        {"women", inst.num_women()},
                        {"edges", inst.num_edges()},
                        {"instance", text}});
      } else if (output.empty()) {
        out << text;
      }
      return kFound;
    }

    const Instance inst = load_instance(instance_path);

    if (*solve) {
      if (algo.empty()) algo = property == "stable" ? "gs" : "level-graph";
      if (property == "stable" && algo != "gs") throw InputError("--algo " + algo + " computes dominant matchings");
      if (property == "dominant" && algo == "gs") throw InputError("--algo gs computes stable matchings");
      const Matching m = property == "stable"  ? men_optimal(inst)
                         : algo == "two-level" ? dominant_two_level(inst)
                                               : dominant_via_level_graph(inst);
      if (json) {
        emit_json(out, {{"property", property},
                        {"algo", algo},
                        {"size", m.size()},
                        {"matching", matching_to_json(inst, m)}});
      } else {
        print_matching(out, inst, m);
      }
      return kFound;
    }

    if (*verify) {
      Matching m;
      try {
        m = parse_matching_auto(read_file(matching_path), inst);
      } catch (const ParseError& e) {
        throw InputError(matching_path + ": " + e.what());
      }
      const Verdict v = property == "stable"    ? check_stable(inst, m)
                        : property == "popular" ? is_popular(inst, m)
                                                : is_dominant(inst, m);
      if (json) {
        emit_json(out, {{"property", property},
                        {"holds", v.holds},
                        {"certificate", v.certificate ? certificate_to_json(inst, *v.certificate)
                                                      : nlohmann::json(nullptr)}});
      } else {
        out << property << ": " << (v.holds ? "yes" : "no") << "\n";
        if (v.certificate) out << "certificate " << describe(inst, *v.certificate) << "\n";
      }
      return v.holds ? kFound : kNotFound;
    }

    if (*pedge) {
      const Edge e = parse_edge_arg(inst, edge_text);
      const auto w = popular_edge(inst, e);
      const std::string kind = !w ? "" : w->kind == WitnessKind::kStable ? "stable" : "dominant";
      if (json) {
        emit_json(out, {{"edge", edge_to_json(inst, e)},
                        {"found", w.has_value()},
                        {"kind", w ? nlohmann::json(kind) : nlohmann::json(nullptr)},
                        {"matching", w ? matching_to_json(inst, w->matching) : nlohmann::json(nullptr)}});
      } else if (w) {
        out << "# " << kind << " matching containing (" << inst.man_name(e.man) << ","
            << inst.woman_name(e.woman) << ")\n";
        print_matching(out, inst, w->matching);
      } else {
        out << "no popular matching contains (" << inst.man_name(e.man) << "," << inst.woman_name(e.woman)
            << ")\n";
      }
      return w ? kFound : kNotFound;
    }

    if (*pvs) {
      const auto w = cubic ? exists_unstable_popular_cubic(inst) : exists_unstable_popular(inst);
      if (json) {
        emit_json(out, {{"all_popular_stable", !w},
                        {"matching", w ? matching_to_json(inst, w->matching) : nlohmann::json(nullptr)},
                        {"blocking_pair", w ? edge_to_json(inst, w->blocking_pair) : nlohmann::json(nullptr)}});
      } else if (!w) {
        out << "all popular matchings are stable\n";
      } else {
        out << "# unstable popular matching, blocked by (" << inst.man_name(w->blocking_pair.man) << ","
            << inst.woman_name(w->blocking_pair.woman) << ")\n";
        print_matching(out, inst, w->matching);
      }
      return w ? kNotFound : kFound;
    }

    if (*mcd) {
      CostFunction c;
      try {
        c = parse_costs(read_file(costs_path), inst);
        require_total(inst, c);
      } catch (const ParseError& e) {
        throw InputError(costs_path + ": " + e.what());
      } catch (const std::invalid_argument& e) {
        throw InputError(costs_path + ": " + e.what());
      }
      const auto best = min_cost_dominant(inst, c);
      if (json) {
        emit_json(out, {{"matching", matching_to_json(inst, best.matching)},
                        {"cost", {{"fraction", format_fraction(best.cost)},
                                  {"decimal", format_decimal(best.cost)}}}});
      } else {
        print_matching(out, inst, best.matching);
        out << "# cost " << format_fraction(best.cost) << " = " << format_decimal(best.cost) << "\n";
      }
      return kFound;
    }

    if (*en) {
      OracleOptions opt;
      opt.threads = threads;
      opt.max_edges = max_edges;
      if (what == "popular-edges") {
        const auto edges = popular_edges(inst, opt);
        if (json) {
          nlohmann::json list = nlohmann::json::array();
          for (const Edge& e : edges) list.push_back(edge_to_json(inst, e));
          emit_json(out, {{"what", what}, {"count", edges.size()}, {"edges", list}});
        } else {
          for (const Edge& e : edges) out << inst.man_name(e.man) << " " << inst.woman_name(e.woman) << "\n";
        }
        return kFound;
      }
      std::vector<Matching> family;
      if (what == "matchings") {
        family = enumerate_matchings(inst, opt);
      } else {
        const auto c = census(inst, opt);
        family = what == "stable" ? c.stable_set() : what == "popular" ? c.popular_set() : c.dominant_set();
      }
      if (json) {
        nlohmann::json list = nlohmann::json::array();
        for (const auto& m : family) list.push_back(matching_to_json(inst, m));
        emit_json(out, {{"what", what}, {"count", family.size()}, {"matchings", list}});
      } else {
        for (const auto& m : family) out << brace_form(inst, m) << "\n";
      }
      return kFound;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const EnumerationLimitError& e) {
    err << "error: " << e.what() << " (raise it with --max-edges or POPMATCH_MAX_ENUM)\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace popmatch::cli

#endif  // POPMATCH_TOOLS_CLI_HPP_
