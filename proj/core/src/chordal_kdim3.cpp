// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "krausz/chordal_kdim3.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "detail/clique_search.hpp"
#include "krausz/errors.hpp"

namespace krausz {

namespace {

constexpr int kMaxLoad = 3;
constexpr int kDegreeTrigger = 19;   // a vertex this busy sits in a large clique
constexpr int kLargeClique = 8;      // k^2 - k + 2 for k = 3
constexpr int kMaxRadius = 5;
constexpr int kMaxResidualDegree = 18;
constexpr int kMaxInducedCycle = 6;

}  // namespace

int Fragment::load(Vertex v) const { return krausz::load(clusters, v); }

ValidationReport check_fragment(const Graph& g, const Fragment& f) {
  ValidationReport report;
  std::map<Edge, std::vector<int>> covering;
  for (int i = 0; i < static_cast<int>(f.clusters.size()); ++i) {
    const VertexSet& c = f.clusters[i];
    check_vertices(g, c);
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        if (g.adjacent(c[a], c[b])) {
          covering[make_edge(c[a], c[b])].push_back(i);
        } else {
          report.add({ViolationKind::kNonCliqueCluster, {c[a], c[b]}, {i}});
        }
      }
    }
  }
  for (const auto& [e, holders] : covering) {
    if (holders.size() > 1)
      report.add({ViolationKind::kDoublyCoveredEdge, {e.u, e.v}, holders});
  }
  for (int i = 0; i < static_cast<int>(f.clusters.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(f.clusters.size()); ++j) {
      VertexSet a = f.clusters[i], b = f.clusters[j], shared;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                            std::back_inserter(shared));
      if (shared.size() > 1)
        report.add({ViolationKind::kIntersectionExceeded, shared, {i, j}});
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f.load(v) > kMaxLoad) report.add({ViolationKind::kLoadExceeded, {v}, {}});
  }
  if (f.residual.order() < g.order()) {
    report.add({ViolationKind::kResidualMismatch, {}, {}});
    return report;
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const bool expected = g.adjacent(u, v) && !covering.contains(Edge{u, v});
      if (f.residual.adjacent(u, v) != expected)
        report.add({ViolationKind::kResidualMismatch, {u, v}, {}});
    }
  }
  return report;
}

std::vector<LocalFragment> enumerate_local_fragments(
    const Fragment& f, Vertex center, int radius, const LocalFragmentOptions& options) {
  const Graph& h = f.residual;
  check_vertices(h, std::span<const Vertex>(&center, 1));
  if (radius < 1) throw std::invalid_argument("local fragment radius must be >= 1");
  if (h.degree(center) == 0)
    throw std::invalid_argument("local fragment center must not be isolated");

  const VertexSet region = ball(h, center, radius);
  std::vector<bool> inside(h.order(), false);
  for (Vertex v : region) inside[v] = true;

  detail::CliqueSearchConfig config;
  config.capacity.assign(h.order(), detail::CliqueSearchConfig::kUnbounded);
  config.forcing_threshold.assign(h.order(), 0);
  for (Vertex v : region) {
    const int budget = std::max(0, kMaxLoad - f.load(v));
    config.capacity[v] = budget;
    if (options.membership_forcing) config.forcing_threshold[v] = budget + 1;
  }
  config.max_intersection = 1;
  for (const Edge& e : h.edges())
    if (inside[e.u] || inside[e.v]) config.required.push_back(e);

  std::vector<LocalFragment> out;
  detail::CliqueSearch search(h, std::move(config));
  search.run([&](const std::vector<VertexSet>& clusters) {
    if (out.size() >= options.cap) {
      throw SearchLimitExceeded("more than " + std::to_string(options.cap) +
                                " local fragments around vertex " +
                                std::to_string(center));
    }
    LocalFragment lf{center, radius, clusters};
    for (VertexSet& c : lf.clusters) std::sort(c.begin(), c.end());
    std::sort(lf.clusters.begin(), lf.clusters.end());
    out.push_back(std::move(lf));
    return true;
  });
  std::sort(out.begin(), out.end(), [](const LocalFragment& a, const LocalFragment& b) {
    return a.clusters < b.clusters;
  });
  return out;
}

std::vector<VertexSet> special_cliques(std::span<const LocalFragment> fragments) {
  if (fragments.empty())
    throw std::invalid_argument("special cliques need at least one local fragment");
  std::vector<VertexSet> common = fragments.front().clusters;
  for (const LocalFragment& lf : fragments.subspan(1)) {
    std::vector<VertexSet> next;
    std::set_intersection(common.begin(), common.end(), lf.clusters.begin(),
                          lf.clusters.end(), std::back_inserter(next));
    common = std::move(next);
    if (common.empty()) break;
  }
  return common;
}

std::vector<VertexSet> special_cliques(const Fragment& f, Vertex center, int radius,
                                       const LocalFragmentOptions& options) {
  const std::vector<LocalFragment> all =
      enumerate_local_fragments(f, center, radius, options);
  return special_cliques(all);
}

std::string_view to_string(RejectRule rule) {
  switch (rule) {
    case RejectRule::kLoadTwoNotClique:
      return "load-two-not-clique";
    case RejectRule::kHighDegreeNoLarge:
      return "high-degree-without-large-clique";
    case RejectRule::kNoLocalFragment:
      return "no-local-fragment";
    case RejectRule::kFragmentOverloaded:
      return "fragment-overloaded";
  }
  return "unknown";
}

namespace {

class Reduction {
 public:
  Reduction(const Graph& g, const ReductionOptions& options)
      : g_(g), options_(options), fragment_{{}, g} {}

  Kdim3Outcome run() {
    while (true) {
      if (auto r = load_two_step()) {
        if (*r) return **r;
        continue;
      }
      if (auto r = high_degree_step()) {
        if (*r) return **r;
        continue;
      }
      if (auto r = special_step()) {
        if (*r) return **r;
        continue;
      }
      emit("stop", -1, {});
      return finish();
    }
  }

 private:
  // nullopt: rule did not apply. Inner nullopt: rule applied and the loop
  // continues. Otherwise the loop ends with the contained outcome.
  using StepResult = std::optional<std::optional<Kdim3Outcome>>;

  const Graph& h() const { return fragment_.residual; }

  StepResult load_two_step() {
    for (Vertex v = 0; v < h().order(); ++v) {
      if (fragment_.load(v) != 2 || h().degree(v) == 0) continue;
      VertexSet c(h().neighbors(v).begin(), h().neighbors(v).end());
      c.push_back(v);
      std::sort(c.begin(), c.end());
      if (!is_clique(h(), c)) return reject(RejectRule::kLoadTwoNotClique, v, c);
      return commit(std::move(c), "load-two", v);
    }
    return std::nullopt;
  }

  StepResult high_degree_step() {
    for (Vertex v = 0; v < h().order(); ++v) {
      if (h().degree(v) < kDegreeTrigger) continue;
      for (const VertexSet& c : maximal_cliques_containing(h(), v)) {
        if (static_cast<int>(c.size()) >= kLargeClique)
          return commit(extend_to_maximal_clique(h(), c), "large-clique", v);
      }
      return reject(RejectRule::kHighDegreeNoLarge, v, {});
    }
    return std::nullopt;
  }

  StepResult special_step() {
    std::vector<std::pair<Vertex, std::vector<LocalFragment>>> all;
    for (Vertex v = 0; v < h().order(); ++v) {
      if (h().degree(v) == 0) continue;
      const int radius = std::min(eccentricity(h(), v), kMaxRadius);
      all.emplace_back(v, enumerate_local_fragments(fragment_, v, radius, options_.local));
    }
    for (const auto& [v, fragments] : all) {
      if (fragments.empty()) return reject(RejectRule::kNoLocalFragment, v, {});
    }
    for (const auto& [v, fragments] : all) {
      std::vector<VertexSet> special = special_cliques(fragments);
      if (!special.empty()) return commit(std::move(special.front()), "special", v);
    }
    return std::nullopt;
  }

  StepResult commit(VertexSet clique, const char* rule, Vertex v) {
    for (std::size_t a = 0; a < clique.size(); ++a)
      for (std::size_t b = a + 1; b < clique.size(); ++b)
        fragment_.residual.remove_edge(clique[a], clique[b]);
    fragment_.clusters.push_back(clique);
    for (Vertex x : clique) {
      if (fragment_.load(x) > kMaxLoad)
        return reject(RejectRule::kFragmentOverloaded, x, clique);
    }
    if (options_.verify_each_step) {
      const ValidationReport report = check_fragment(g_, fragment_);
      if (!report.ok) throw std::logic_error("fragment invariant broken by rule " +
                                             std::string(rule));
    }
    emit(rule, v, clique);
    return std::optional<Kdim3Outcome>{};
  }

  StepResult reject(RejectRule rule, Vertex v, VertexSet witness) {
    emit("reject", v, witness);
    return std::optional<Kdim3Outcome>{Rejected{rule, v, std::move(witness)}};
  }

  Kdim3Outcome finish() {
    Reduced out{fragment_.residual, fragment_, {}};
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (fragment_.load(v) != 1) continue;
      const Vertex p = out.graph.add_vertex();
      out.graph.add_edge(v, p);
      out.pendants.push_back({v, p});
    }
    return out;
  }

  void emit(const char* rule, Vertex v, const VertexSet& clique) const {
    if (!options_.trace) return;
    options_.trace(TraceStep{rule, v, clique, fragment_.clusters.size(),
                             fragment_.residual.size()});
  }

  const Graph& g_;
  const ReductionOptions& options_;
  Fragment fragment_;
};

}  // namespace

Kdim3Outcome reduce_chordal_kdim3(const Graph& g, const ReductionOptions& options) {
  if (!is_chordal(g)) throw ClassPreconditionError("graph is not chordal");
  return Reduction(g, options).run();
}

ValidationReport check_reduction_guarantees(const Graph& g, const Kdim3Outcome& out) {
  const auto* reduced = std::get_if<Reduced>(&out);
  if (reduced == nullptr)
    throw std::invalid_argument("reduction guarantees apply to reduced outcomes only");
  ValidationReport report = check_fragment(g, reduced->fragment);
  for (Vertex v = 0; v < reduced->graph.order(); ++v) {
    if (reduced->graph.degree(v) > kMaxResidualDegree)
      report.add({ViolationKind::kDegreeExceeded, {v}, {}});
  }
  const int cycle = longest_induced_cycle_length(reduced->graph, kMaxInducedCycle + 1);
  if (cycle > kMaxInducedCycle)
    report.add({ViolationKind::kInducedCycleTooLong, {cycle}, {}});
  return report;
}

Kdim3Decision decide_kdim3_chordal(const Graph& g, const ReductionOptions& options) {
  Kdim3Decision decision{false, std::nullopt, reduce_chordal_kdim3(g, options)};
  const auto* reduced = std::get_if<Reduced>(&decision.outcome);
  if (reduced == nullptr) return decision;

  const std::optional<KrauszPartition> rest =
      find_krausz_partition(reduced->graph, kMaxLoad, 1);
  if (!rest) return decision;

  KrauszPartition q{reduced->fragment.clusters, kMaxLoad, 1};
  for (const VertexSet& c : rest->clusters) {
    const bool pendant = std::any_of(c.begin(), c.end(),
                                     [&](Vertex x) { return x >= g.order(); });
    if (!pendant) q.clusters.push_back(c);
  }
  normalize(q);
  if (!validate(g, q).ok)
    throw std::logic_error("assembled partition does not validate");
  decision.yes = true;
  decision.partition = std::move(q);
  return decision;
}

}  // namespace krausz
