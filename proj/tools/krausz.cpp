// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "krausz/chordal_kdim3.hpp"
#include "krausz/errors.hpp"
#include "krausz/gadgets.hpp"
#include "krausz/generators.hpp"
#include "krausz/graph_io.hpp"
#include "krausz/partition.hpp"
#include "krausz/polar.hpp"
#include "krausz/serialize.hpp"

namespace {

using namespace krausz;

constexpr int kExitInvalid = 1;
constexpr int kExitInput = 2;
constexpr int kExitClass = 3;
constexpr int kExitInstance = 4;
constexpr int kExitLimit = 5;

struct Config {
  std::string input;
  std::string second_input;
  std::string format = "auto";
  std::string out;
  int k = 2;
  int m = 1;
  std::optional<int> k_max;
  bool prime = false;
  bool trace = false;
  std::optional<std::uint64_t> seed;
  int n = 10;
  int q = 2;
  double density = 0.3;
  std::string bipartition;
};

std::string read_text(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
  if (!out) throw ParseError("write failed for " + path);
}

void emit(const Config& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    write_text(cfg.out, text);
  }
}

std::string dump(const Json& doc) { return doc.dump() + "\n"; }

Graph load_graph(const Config& cfg) {
  const GraphFormat format = cfg.format == "auto"
                                 ? (cfg.input == "-" ? GraphFormat::kGraph6
                                                     : format_from_path(cfg.input))
                                 : parse_graph_format(cfg.format);
  return read_graph(read_text(cfg.input), format);
}

void check_params(const Config& cfg) {
  if (cfg.k < 1 || cfg.m < 1) throw ParseError("--k and --m must be positive");
  if (cfg.k_max && *cfg.k_max < 1) throw ParseError("--kmax must be positive");
}

int cmd_solve(const Config& cfg) {
  check_params(cfg);
  const Graph g = load_graph(cfg);
  const int k_max = cfg.k_max.value_or(std::max(1, g.max_degree()));
  Json out;
  if (auto r = exact_kdim(g, cfg.m, k_max)) {
    out["kdim"] = r->k;
    out["witness"] = to_json(r->witness);
  } else {
    out["kdim"] = ">" + std::to_string(k_max);
  }
  emit(cfg, dump(out));
  return 0;
}

int cmd_chordal3(const Config& cfg) {
  const Graph g = load_graph(cfg);
  Json trace = Json::array();
  ReductionOptions options;
  if (cfg.trace) options.trace = [&](const TraceStep& s) { trace.push_back(to_json(s)); };
  const Kdim3Decision d = decide_kdim3_chordal(g, options);
  Json out;
  out["answer"] = d.yes ? "yes" : "no";
  if (d.partition) out["partition"] = to_json(*d.partition);
  out["outcome"] = to_json(d.outcome);
  if (cfg.trace) out["trace"] = std::move(trace);
  emit(cfg, dump(out));
  return 0;
}

int cmd_gadget(const Config& cfg) {
  ThreeDMInstance inst = instance_from_json(parse_json(read_text(cfg.input), "instance"));
  check_instance(inst);
  if (auto v = validate_star(inst)) {
    Json err;
    err["error"] = "closure condition violated";
    err["violation"] = to_json(*v);
    std::cerr << err.dump() << "\n";
    return kExitInstance;
  }
  const Gadget gd = cfg.prime ? build_gadget_prime(inst) : build_gadget(inst);
  Json map = to_json(gd.map);
  if (gd.coloring) map["coloring"] = to_json(*gd.coloring);
  if (cfg.out.empty()) {
    Json out;
    out["graph6"] = to_graph6(gd.graph);
    out["map"] = std::move(map);
    std::cout << dump(out);
  } else {
    write_text(cfg.out + ".g6", to_graph6(gd.graph) + "\n");
    write_text(cfg.out + ".map.json", dump(map));
  }
  return 0;
}

int cmd_recognize(const Config& cfg) {
  check_params(cfg);
  const Graph g = load_graph(cfg);
  Json out;
  std::optional<MembershipResult> result;
  if (!cfg.bipartition.empty()) {
    const PolarBipartition bip =
        bipartition_from_json(parse_json(read_text(cfg.bipartition), "bipartition"));
    for (const VertexSet* s : {&bip.a, &bip.b})
      for (Vertex v : *s)
        if (!g.contains(v)) throw ParseError("bipartition: vertex out of range");
    if (!check_polar_bipartition(g, bip))
      throw ClassPreconditionError("supplied bipartition is not (infinity,1)-polar");
    out["class"] = "infty1polar";
    out["bipartition"] = to_json(bip);
    result = polar_membership(g, bip, cfg.k, cfg.m);
  } else if (find_split_bipartition(g)) {
    out["class"] = "split";
    result = split_membership(g, cfg.k, cfg.m);
  } else if (bipartition_colors(g)) {
    out["class"] = "bipartite";
    result = bipartite_membership(g, cfg.k, cfg.m);
  } else if (auto bip = find_infty1_polar(g)) {
    out["class"] = "infty1polar";
    out["bipartition"] = to_json(*bip);
    result = polar_membership(g, *bip, cfg.k, cfg.m);
  } else {
    out["class"] = "none";
  }
  out["membership"] = result ? to_json(*result) : Json(nullptr);
  emit(cfg, dump(out));
  return 0;
}

int cmd_validate(const Config& cfg) {
  const Graph g = load_graph(cfg);
  const KrauszPartition q =
      partition_from_json(parse_json(read_text(cfg.second_input), "partition"));
  ValidationReport report;
  try {
    report = validate(g, q);
  } catch (const std::exception& e) {
    throw ParseError(std::string("partition: ") + e.what());
  }
  emit(cfg, dump(to_json(report)));
  return report.ok ? 0 : kExitInvalid;
}

std::uint64_t announce_seed(const Config& cfg) {
  const std::uint64_t seed = cfg.seed ? *cfg.seed : std::random_device{}();
  std::cerr << "seed " << seed << "\n";
  return seed;
}

int cmd_generate_chordal(const Config& cfg) {
  if (cfg.n < 0) throw ParseError("--n must be non-negative");
  Rng rng(announce_seed(cfg));
  const Graph g = random_chordal(cfg.n, rng);
  const GraphFormat format =
      cfg.format == "auto" ? GraphFormat::kGraph6 : parse_graph_format(cfg.format);
  std::string text = write_graph(g, format);
  emit(cfg, text);
  return 0;
}

int cmd_generate_instance(const Config& cfg) {
  if (cfg.q < 1) throw ParseError("--q must be positive");
  if (!(cfg.density >= 0.0 && cfg.density <= 1.0))
    throw ParseError("--density must lie in [0, 1]");
  Rng rng(announce_seed(cfg));
  emit(cfg, dump(to_json(random_instance(cfg.q, cfg.density, rng))));
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"krausz (k,m)-partitions: exact solver, chordal KDIM(3), hardness gadgets, "
               "split and polar membership"};
  app.require_subcommand(1);
  Config cfg;

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "graph6, edgelist, json or auto")
        ->check(CLI::IsMember({"auto", "graph6", "g6", "edgelist", "json"}));
  };
  auto add_out = [&](CLI::App* sub, const char* help) {
    sub->add_option("--out", cfg.out, help);
  };

  CLI::App* solve = app.add_subcommand("solve", "smallest k with a krausz (k,m)-partition");
  solve->add_option("input", cfg.input, "graph file, - for stdin")->required();
  add_format(solve);
  solve->add_option("--m", cfg.m, "maximum cluster intersection");
  solve->add_option("--kmax", cfg.k_max, "largest k to try (default: max degree)");
  add_out(solve, "output file");

  CLI::App* chordal3 = app.add_subcommand("chordal3", "decide kdim <= 3 for a chordal graph");
  chordal3->add_option("input", cfg.input, "graph file, - for stdin")->required();
  add_format(chordal3);
  chordal3->add_flag("--trace", cfg.trace, "record every reduction step");
  add_out(chordal3, "output file");

  CLI::App* gadget = app.add_subcommand("gadget", "build the gadget graph of a 3DM instance");
  gadget->add_option("input", cfg.input, "instance JSON {q, M}")->required();
  gadget->add_flag("--prime", cfg.prime, "build the (1,2)-colourable variant");
  add_out(gadget, "prefix for <prefix>.g6 and <prefix>.map.json");

  CLI::App* recognize =
      app.add_subcommand("recognize", "classify and decide membership in L_k^m");
  recognize->add_option("input", cfg.input, "graph file, - for stdin")->required();
  add_format(recognize);
  recognize->add_option("--k", cfg.k, "load bound")->required();
  recognize->add_option("--m", cfg.m, "intersection bound");
  recognize->add_option("--bipartition", cfg.bipartition,
                        "(infinity,1)-polar certificate JSON {A, B, A_parts}");
  add_out(recognize, "output file");

  CLI::App* check = app.add_subcommand("validate", "check a partition against a graph");
  check->add_option("graph", cfg.input, "graph file")->required();
  check->add_option("partition", cfg.second_input, "partition JSON {k, m, clusters}")
      ->required();
  add_format(check);
  add_out(check, "output file");

  CLI::App* generate = app.add_subcommand("generate", "seeded random inputs");
  generate->require_subcommand(1);
  CLI::App* gen_chordal = generate->add_subcommand("chordal", "random chordal graph");
  gen_chordal->add_option("--n", cfg.n, "number of vertices");
  gen_chordal->add_option("--seed", cfg.seed, "random seed");
  add_format(gen_chordal);
  add_out(gen_chordal, "output file");
  CLI::App* gen_instance =
      generate->add_subcommand("instance", "random star-closed 3DM instance");
  gen_instance->add_option("--q", cfg.q, "size of X, Y and Z");
  gen_instance->add_option("--density", cfg.density, "probability of each triple");
  gen_instance->add_option("--seed", cfg.seed, "random seed");
  add_out(gen_instance, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  if (*solve) return cmd_solve(cfg);
  if (*chordal3) return cmd_chordal3(cfg);
  if (*gadget) return cmd_gadget(cfg);
  if (*recognize) return cmd_recognize(cfg);
  if (*check) return cmd_validate(cfg);
  if (*gen_chordal) return cmd_generate_chordal(cfg);
  if (*gen_instance) return cmd_generate_instance(cfg);
  return kExitInput;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const ClassPreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitClass;
  } catch (const InstanceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInstance;
  } catch (const SearchLimitExceeded& e) {
    std::cerr << "error: bound too large: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
