// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

// Runs every acceptance criterion and prints one PASS/FAIL line each.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graph_enum.hpp"
#include "krausz/chordal_kdim3.hpp"
#include "krausz/gadgets.hpp"
#include "krausz/generators.hpp"
#include "krausz/graph_io.hpp"
#include "krausz/hypergraph.hpp"
#include "krausz/partition.hpp"
#include "krausz/polar.hpp"
#include "oracles.hpp"

namespace krausz {
namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(why));
  }
};

std::string describe(const Graph& g) { return to_graph6(g); }

bool has_cluster(const KrauszPartition& q, VertexSet c) {
  std::sort(c.begin(), c.end());
  for (VertexSet d : q.clusters) {
    std::sort(d.begin(), d.end());
    if (d == c) return true;
  }
  return false;
}

bool witness_ok(const Graph& g, const KrauszPartition& q, int k, int m) {
  return q.k <= k && q.m <= m && validate(g, q).ok;
}

// Witnesses collected in the first criterion, reused by the bridge checks.
struct Witness {
  Graph g;
  KrauszPartition q;
  int k;
  int m;
};
std::vector<Witness> g_witnesses;

Outcome oracle_cross_check() {
  Outcome out;
  int graphs = 0, six = 0, checks = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      ++graphs;
      if (n == 6) ++six;
      for (int m : {1, 2}) {
        ++checks;
        const int k_max = std::max(1, g.max_degree());
        const auto got = exact_kdim(g, m, k_max);
        const int want = testing::min_kdim_unpruned(g, m);
        if (!got || got->k != want) {
          out.fail(describe(g) + " m=" + std::to_string(m));
          continue;
        }
        if (!witness_ok(g, got->witness, got->k, m)) {
          out.fail(describe(g) + " witness invalid");
          continue;
        }
        g_witnesses.push_back({g, got->witness, got->k, m});
      }
    }
  }
  if (six != 112) out.fail("expected 112 connected graphs on 6 vertices, got " +
                           std::to_string(six));
  out.detail = std::to_string(graphs) + " connected graphs on 1..6 vertices (" +
               std::to_string(six) + " on 6), " + std::to_string(checks) +
               " (graph, m) pairs against the unpruned enumerator";
  return out;
}

// Graphs swept by the chordal criterion, kept for the output contract check.
std::vector<Graph> g_reduced_inputs;
std::vector<Reduced> g_reduced;

Outcome chordal_kdim3() {
  Outcome out;
  int exhaustive = 0, random = 0, yes = 0;
  auto check = [&](const Graph& g) {
    const Kdim3Decision d = decide_kdim3_chordal(g);
    const bool want = find_krausz_partition(g, 3, 1).has_value();
    if (d.yes != want) {
      out.fail(describe(g) + (want ? " expected yes" : " expected no"));
      return;
    }
    if (d.yes) {
      ++yes;
      if (!d.partition || !witness_ok(g, *d.partition, 3, 1))
        out.fail(describe(g) + " partition does not validate");
    }
    if (const auto* r = std::get_if<Reduced>(&d.outcome)) {
      g_reduced_inputs.push_back(g);
      g_reduced.push_back(*r);
    }
  };
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : testing::all_graphs(n)) {
      if (!is_chordal(g)) continue;
      ++exhaustive;
      check(g);
    }
  }
  Rng rng(20260101);
  for (int i = 0; i < 1200; ++i) {
    const int n = 1 + static_cast<int>(uniform_below(rng, 12));
    check(random_chordal(n, rng));
    ++random;
  }
  out.detail = std::to_string(exhaustive) + " chordal graphs on <= 8 vertices and " +
               std::to_string(random) + " seeded random chordal graphs on <= 12, " +
               std::to_string(yes) + " yes-instances";
  return out;
}

// Length of some induced cycle longer than bound, or 0. Grows chordless
// paths from their smallest vertex.
int long_induced_cycle(const Graph& h, int bound) {
  std::vector<Vertex> path;
  std::function<int()> extend = [&]() -> int {
    const Vertex last = path.back();
    for (Vertex w : h.neighbors(last)) {
      if (w <= path.front() || std::find(path.begin(), path.end(), w) != path.end())
        continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) chord = chord || h.adjacent(w, path[i]);
      if (chord) continue;
      const int len = static_cast<int>(path.size()) + 1;
      if (len >= 3 && h.adjacent(w, path.front())) {
        if (len > bound) return len;
        continue;
      }
      path.push_back(w);
      const int found = extend();
      path.pop_back();
      if (found) return found;
    }
    return 0;
  };
  for (Vertex s = 0; s < h.order(); ++s) {
    path = {s};
    if (const int found = extend()) return found;
  }
  return 0;
}

Outcome reduction_contract() {
  Outcome out;
  int worst_degree = 0;
  for (std::size_t i = 0; i < g_reduced.size(); ++i) {
    const Graph& h = g_reduced[i].graph;
    worst_degree = std::max(worst_degree, h.max_degree());
    if (h.max_degree() > 18)
      out.fail(describe(g_reduced_inputs[i]) + " reduced graph has degree " +
               std::to_string(h.max_degree()));
    if (const int len = long_induced_cycle(h, 6))
      out.fail(describe(g_reduced_inputs[i]) + " reduced graph has an induced " +
               std::to_string(len) + "-cycle");
    if (longest_induced_cycle_length(h) > 6)
      out.fail(describe(g_reduced_inputs[i]) + " library lc disagrees");
  }
  if (g_reduced.empty()) out.fail("no reduced outputs to check");
  out.detail = std::to_string(g_reduced.size()) +
               " reduced outputs, max degree seen " + std::to_string(worst_degree);
  return out;
}

// Maximal cliques of size >= f(k,m), found from the oracle's full clique list.
std::vector<VertexSet> large_maximal_cliques(const Graph& g, int k, int m) {
  const int f = m * (k * k - k + 1) + 1;
  std::vector<VertexSet> result;
  for (const VertexSet& c : testing::all_cliques(g)) {
    if (static_cast<int>(c.size()) < f) continue;
    bool maximal = true;
    for (Vertex v = 0; v < g.order() && maximal; ++v) {
      if (std::find(c.begin(), c.end(), v) != c.end()) continue;
      if (std::all_of(c.begin(), c.end(), [&](Vertex u) { return g.adjacent(u, v); }))
        maximal = false;
    }
    if (maximal) result.push_back(c);
  }
  return result;
}

Outcome mandatory_cliques() {
  Outcome out;
  std::string detail;
  for (int k : {2, 3}) {
    const int m = 1;
    const int f = m * (k * k - k + 1) + 1;
    // A (3,1)-large clique needs 8 vertices, so that case uses up to 10.
    const int max_n = std::max(7, f + 2);
    Rng rng(7000 + k);
    int accepted = 0, with_witness = 0;
    while (accepted < 200) {
      const int n = f + static_cast<int>(uniform_below(rng, max_n - f + 1));
      Graph g = random_graph(n, 0.35, rng);
      VertexSet planted;
      for (Vertex v = 0; v < n; ++v) planted.push_back(v);
      for (int i = n - 1; i > 0; --i)
        std::swap(planted[i], planted[uniform_below(rng, i + 1)]);
      planted.resize(f);
      for (std::size_t i = 0; i < planted.size(); ++i)
        for (std::size_t j = i + 1; j < planted.size(); ++j) g.add_edge(planted[i], planted[j]);

      const auto large = large_maximal_cliques(g, k, m);
      if (large.empty()) continue;
      ++accepted;
      auto library = large_cliques(g, k, m);
      for (auto& c : library) std::sort(c.begin(), c.end());
      std::sort(library.begin(), library.end());
      auto expected = large;
      std::sort(expected.begin(), expected.end());
      if (library != expected) out.fail(describe(g) + " large_cliques disagrees");

      const auto q = find_krausz_partition(g, k, m);
      if (!q) continue;
      ++with_witness;
      if (!witness_ok(g, *q, k, m)) out.fail(describe(g) + " witness invalid");
      for (const VertexSet& c : large)
        if (!has_cluster(*q, c)) out.fail(describe(g) + " witness misses a large clique");
    }
    if (with_witness == 0) out.fail("k=" + std::to_string(k) + ": no witnesses produced");
    detail += (detail.empty() ? "" : "; ") + std::string("k=") + std::to_string(k) +
              ": 200 graphs on " + std::to_string(f) + ".." + std::to_string(max_n) +
              " vertices, " + std::to_string(with_witness) + " witnesses";
  }
  out.detail = detail;
  return out;
}

std::vector<ThreeDMInstance> closed_instances(int q) {
  std::vector<Triple> all;
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b)
      for (int c = 0; c < q; ++c) all.push_back({a, b, c});
  std::vector<ThreeDMInstance> result;
  for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
    ThreeDMInstance inst{q, {}};
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask >> i & 1) inst.triples.push_back(all[i]);
    if (!validate_star(inst)) result.push_back(std::move(inst));
  }
  return result;
}

// Primed gadgets built during the equivalence sweep.
std::vector<Gadget> g_primed;

Outcome reduction_equivalence() {
  Outcome out;
  int instances = 0, matchings = 0;
  for (int q : {1, 2}) {
    for (const ThreeDMInstance& inst : closed_instances(q)) {
      ++instances;
      const bool matching = testing::has_perfect_matching(inst);
      if (matching) ++matchings;
      const Gadget g = build_gadget(inst);
      Gadget gp = build_gadget_prime(inst);
      for (int m : {1, 2}) {
        const auto w = find_krausz_partition(g.graph, 2 * q, m);
        if (w.has_value() != matching)
          out.fail("G q=" + std::to_string(q) + " m=" + std::to_string(m) + " " +
                   describe(g.graph));
        if (w && m == 1) {
          try {
            const auto tri = extract_matching(g.graph, *w, inst, g.map);
            if (static_cast<int>(tri.size()) != q) out.fail("short extracted matching");
          } catch (const std::exception& e) {
            out.fail(std::string("extract_matching: ") + e.what());
          }
        }
        const auto wp = find_krausz_partition(gp.graph, 2 * q + 1, m);
        if (wp.has_value() != matching)
          out.fail("G' q=" + std::to_string(q) + " m=" + std::to_string(m) + " " +
                   describe(gp.graph));
      }
      g_primed.push_back(std::move(gp));
    }
  }
  out.detail = std::to_string(instances) + " closed instances with q in {1,2} (" +
               std::to_string(matchings) + " with a perfect matching), G and G' for m in {1,2}";
  return out;
}

Outcome coloring_certificates() {
  Outcome out;
  Rng rng(424242);
  for (int q = 1; q <= 5; ++q)
    for (int i = 0; i < 20; ++i)
      g_primed.push_back(build_gadget_prime(random_instance(q, 0.3, rng)));
  for (const Gadget& gd : g_primed) {
    if (!gd.coloring) {
      out.fail(describe(gd.graph) + " has no certificate");
      continue;
    }
    const Graph& g = gd.graph;
    const ColoringCertificate& c = *gd.coloring;
    std::vector<int> seen(g.order(), 0);
    bool ok = true;
    for (const VertexSet* part : {&c.clique, &c.stable1, &c.stable2}) {
      for (Vertex v : *part) {
        if (v < 0 || v >= g.order()) ok = false;
        else ++seen[v];
      }
    }
    ok = ok && std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
    for (std::size_t i = 0; ok && i < c.clique.size(); ++i)
      for (std::size_t j = i + 1; j < c.clique.size(); ++j)
        if (!g.adjacent(c.clique[i], c.clique[j])) ok = false;
    for (const VertexSet* s : {&c.stable1, &c.stable2})
      for (std::size_t i = 0; ok && i < s->size(); ++i)
        for (std::size_t j = i + 1; j < s->size(); ++j)
          if (g.adjacent((*s)[i], (*s)[j])) ok = false;
    if (!ok || !check_coloring(g, c)) out.fail(describe(g) + " certificate invalid");
  }
  out.detail = std::to_string(g_primed.size()) + " primed gadgets";
  return out;
}

Outcome forbidden_families() {
  Outcome out;
  int family = 0, split = 0, polar = 0;
  for (int k : {1, 2}) {
    for (int m : {1, 2}) {
      std::vector<NamedGraph> members = forbidden_family_f0(k, m);
      members.push_back({"star", star_graph(k + 1)});
      const int f = m * (k * k - k + 1) + 1;
      const Graph kfe = build_large_clique_minus_edge(k, m);
      if (kfe.order() != f + 1 ||
          kfe.size() != static_cast<std::size_t>((f + 1) * f / 2 - 1))
        out.fail("K_{f+1}-e has the wrong shape");
      members.push_back({"clique-minus-edge", kfe});
      for (const NamedGraph& g : members) {
        ++family;
        if (find_krausz_partition(g.graph, k, m))
          out.fail(g.name + " admits a partition at k=" + std::to_string(k) +
                   " m=" + std::to_string(m));
      }
    }
  }

  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : testing::all_graphs(n)) {
      const auto sb = find_split_bipartition(g);
      if (sb.has_value() != testing::is_split_brute_force(g))
        out.fail(describe(g) + " split recognition");
      const auto pb = find_infty1_polar(g);
      if (sb) ++split;
      if (pb) ++polar;
      if (!sb && !pb) continue;
      for (int k : {1, 2, 3}) {
        for (int m : {1, 2}) {
          const bool want = find_krausz_partition(g, k, m).has_value();
          const std::string tag =
              describe(g) + " k=" + std::to_string(k) + " m=" + std::to_string(m);
          if (sb) {
            const MembershipResult r = split_membership(g, k, m);
            if (r.member != want) out.fail("split " + tag);
            if (r.witness && !witness_ok(g, *r.witness, k, m)) out.fail("split witness " + tag);
          }
          if (pb) {
            if (!check_polar_bipartition(g, *pb)) out.fail("polar certificate " + tag);
            const MembershipResult r = polar_membership(g, *pb, k, m);
            if (r.member != want) out.fail("polar " + tag);
            if (r.witness && !witness_ok(g, *r.witness, k, m)) out.fail("polar witness " + tag);
          }
        }
      }
    }
  }
  out.detail = std::to_string(family) + " forbidden graphs rejected; " +
               std::to_string(split) + " split and " + std::to_string(polar) +
               " (inf,1)-polar graphs on <= 8 vertices, k in {1,2,3}, m in {1,2}";
  return out;
}

Graph intersection_oracle(const Hypergraph& h) {
  const int e = static_cast<int>(h.edges.size());
  Graph g(e);
  for (int i = 0; i < e; ++i)
    for (int j = i + 1; j < e; ++j)
      for (Vertex v : h.edges[i])
        if (std::find(h.edges[j].begin(), h.edges[j].end(), v) != h.edges[j].end())
          g.add_edge(i, j);
  return g;
}

int multiplicity_oracle(const Hypergraph& h) {
  int best = 0;
  for (Vertex a = 0; a < h.n; ++a)
    for (Vertex b = a + 1; b < h.n; ++b) {
      int count = 0;
      for (const VertexSet& e : h.edges)
        if (std::find(e.begin(), e.end(), a) != e.end() &&
            std::find(e.begin(), e.end(), b) != e.end())
          ++count;
      best = std::max(best, count);
    }
  return best;
}

Outcome hypergraph_bridge() {
  Outcome out;
  int hypergraphs = 0;
  for (int n = 0; n <= 4; ++n) {
    for (const Hypergraph& h : testing::all_hypergraphs(n, 4)) {
      ++hypergraphs;
      const Graph lhs = intersection_graph(h);
      if (lhs != intersection_oracle(h)) out.fail("intersection graph oracle mismatch");
      if (lhs != two_section(dual(drop_isolated_vertices(h))))
        out.fail("intersection graph differs from the 2-section of the dual");
    }
  }
  for (const Witness& w : g_witnesses) {
    const Hypergraph h = partition_to_hypergraph(w.g, w.q);
    const std::string tag = describe(w.g) + " m=" + std::to_string(w.m);
    const bool uniform = std::all_of(h.edges.begin(), h.edges.end(), [&](const VertexSet& e) {
      return static_cast<int>(e.size()) == w.k;
    });
    if (!uniform || !is_uniform(h, w.k)) out.fail(tag + " not uniform");
    if (multiplicity_oracle(h) > w.m || multiplicity(h) != multiplicity_oracle(h))
      out.fail(tag + " multiplicity");
    if (intersection_oracle(h) != w.g) out.fail(tag + " intersection graph differs");
    try {
      auto [g2, q2] = hypergraph_to_partition(h, w.k, w.m);
      if (!testing::isomorphic(g2, w.g)) out.fail(tag + " round trip not isomorphic");
      if (!witness_ok(g2, q2, w.k, w.m)) out.fail(tag + " round trip partition invalid");
      const Hypergraph h2 = partition_to_hypergraph(g2, q2);
      if (!is_uniform(h2, w.k) || multiplicity_oracle(h2) > w.m)
        out.fail(tag + " second round trip loses uniformity or multiplicity");
    } catch (const std::exception& e) {
      out.fail(tag + " " + e.what());
    }
  }
  out.detail = std::to_string(hypergraphs) + " hypergraphs on <= 4 vertices with <= 4 edges; " +
               std::to_string(g_witnesses.size()) + " solver witnesses round-tripped";
  return out;
}

#ifdef KRAUSZ_CLI
namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  Outcome out;
  const fs::path dir = KRAUSZ_WORK_DIR;
  fs::create_directories(dir);

  // "{r}" in a command or output name stands for the run tag.
  struct Command {
    std::string args;
    std::vector<std::string> outputs;
  };
  auto path = [&](const std::string& name) { return "'" + (dir / name).string() + "'"; };
  auto tagged = [](std::string s, const std::string& tag) {
    for (std::size_t pos; (pos = s.find("{r}")) != std::string::npos;) s.replace(pos, 3, tag);
    return s;
  };

  std::vector<Command> commands;
  for (const char* fmt : {"graph6", "edgelist", "json"}) {
    for (int seed : {1, 2, 3}) {
      const std::string name = "chordal_" + std::to_string(seed) + "_{r}." + fmt;
      commands.push_back({"generate chordal --n 11 --seed " + std::to_string(seed) +
                              " --format " + fmt + " --out " + path(name),
                          {name}});
    }
  }
  for (int seed : {1, 2, 3}) {
    const std::string s = std::to_string(seed);
    const std::string name = "instance_" + s + "_{r}.json";
    commands.push_back(
        {"generate instance --q 3 --density 0.25 --seed " + s + " --out " + path(name), {name}});
    // Downstream commands read the first run's generated files.
    const std::string g6 = path("chordal_" + s + "_a.graph6");
    commands.push_back({"solve " + g6 + " --out " + path("solve_" + s + "_{r}.json"),
                        {"solve_" + s + "_{r}.json"}});
    commands.push_back({"chordal3 " + g6 + " --trace --out " + path("chordal3_" + s + "_{r}.json"),
                        {"chordal3_" + s + "_{r}.json"}});
    commands.push_back({"recognize " + g6 + " --k 3 --out " + path("recognize_" + s + "_{r}.json"),
                        {"recognize_" + s + "_{r}.json"}});
    commands.push_back({"gadget " + path("instance_" + s + "_a.json") + " --prime --out " +
                            path("gadget_" + s + "_{r}"),
                        {"gadget_" + s + "_{r}.g6", "gadget_" + s + "_{r}.map.json"}});
  }

  int runs = 0;
  for (const Command& c : commands) {
    for (const char* tag : {"a", "b"}) {
      const std::string cmd =
          std::string("'") + KRAUSZ_CLI + "' " + tagged(c.args, tag) + " 2>/dev/null";
      const int status = std::system(cmd.c_str());
      if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) out.fail("failed: " + c.args);
      ++runs;
    }
    for (const std::string& o : c.outputs) {
      const std::string a = slurp(dir / tagged(o, "a"));
      const std::string b = slurp(dir / tagged(o, "b"));
      if (a.empty()) out.fail("empty output " + o);
      if (a != b) out.fail("outputs differ: " + o);
    }
  }
  out.detail = std::to_string(runs / 2) + " CLI commands run twice, outputs identical";
  return out;
}
#else
Outcome determinism() {
  Outcome out;
  out.fail("CLI not built");
  return out;
}
#endif

}  // namespace
}  // namespace krausz

int main() {
  using namespace krausz;
  struct Criterion {
    const char* name;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {"C1 oracle cross-check", oracle_cross_check},
      {"C2 chordal kdim<=3 correctness", chordal_kdim3},
      {"C3 reduction output contract", reduction_contract},
      {"C4 mandatory large cliques", mandatory_cliques},
      {"C5 matching reduction equivalence", reduction_equivalence},
      {"C6 (1,2)-colouring certificates", coloring_certificates},
      {"C7 forbidden families and class membership", forbidden_families},
      {"C8 hypergraph bridge", hypergraph_bridge},
      {"C9 CLI determinism", determinism},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                secs);
    for (const std::string& f : o.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
