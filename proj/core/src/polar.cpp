// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "krausz/polar.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

#include "krausz/errors.hpp"

namespace krausz {

std::optional<SplitBipartition> find_split_bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> by_degree(n);
  std::iota(by_degree.begin(), by_degree.end(), 0);
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

  int split_index = 0;  // number of vertices on the clique side
  for (int i = 0; i < n; ++i)
    if (g.degree(by_degree[i]) >= i) split_index = i + 1;

  long long head = 0, tail = 0;
  for (int i = 0; i < n; ++i)
    (i < split_index ? head : tail) += g.degree(by_degree[i]);
  if (head != static_cast<long long>(split_index) * (split_index - 1) + tail)
    return std::nullopt;

  SplitBipartition out;
  out.clique.assign(by_degree.begin(), by_degree.begin() + split_index);
  out.stable.assign(by_degree.begin() + split_index, by_degree.end());
  std::sort(out.clique.begin(), out.clique.end());
  std::sort(out.stable.begin(), out.stable.end());
  if (!is_clique(g, out.clique) || !is_stable(g, out.stable))
    throw std::logic_error("degree-sequence split test produced an invalid bipartition");

  for (auto it = out.stable.begin(); it != out.stable.end(); ++it) {
    const bool dominates = std::all_of(out.clique.begin(), out.clique.end(),
                                       [&](Vertex c) { return g.adjacent(*it, c); });
    if (dominates) {
      out.clique.push_back(*it);
      std::sort(out.clique.begin(), out.clique.end());
      out.stable.erase(it);
      break;  // the rest of S is non-adjacent to the moved vertex
    }
  }
  return out;
}

std::optional<PolarBipartition> make_polar_bipartition(const Graph& g, VertexSet a,
                                                       VertexSet b) {
  check_vertices(g, a);
  check_vertices(g, b);
  std::vector<int> side(g.order(), -1);
  for (Vertex v : a) {
    if (side[v] >= 0) return std::nullopt;
    side[v] = 0;
  }
  for (Vertex v : b) {
    if (side[v] >= 0) return std::nullopt;
    side[v] = 1;
  }
  if (std::find(side.begin(), side.end(), -1) != side.end()) return std::nullopt;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (!is_stable(g, b)) return std::nullopt;

  // Components of the complement of G(A).
  std::vector<int> part(g.order(), -1);
  std::vector<VertexSet> parts;
  for (Vertex s : a) {
    if (part[s] >= 0) continue;
    VertexSet members{s};
    part[s] = static_cast<int>(parts.size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (Vertex t : a) {
        if (t != members[i] && part[t] < 0 && !g.adjacent(members[i], t)) {
          part[t] = part[s];
          members.push_back(t);
        }
      }
    }
    std::sort(members.begin(), members.end());
    if (!is_stable(g, members)) return std::nullopt;
    parts.push_back(std::move(members));
  }
  std::sort(parts.begin(), parts.end());
  return PolarBipartition{std::move(a), std::move(b), std::move(parts)};
}

bool check_polar_bipartition(const Graph& g, const PolarBipartition& bip) {
  auto computed = make_polar_bipartition(g, bip.a, bip.b);
  if (!computed) return false;
  std::vector<VertexSet> given = bip.a_parts;
  for (VertexSet& p : given) std::sort(p.begin(), p.end());
  std::sort(given.begin(), given.end());
  return given == computed->a_parts;
}

namespace {

// Places vertices in ascending order, side A before side B.
class PolarSearch {
 public:
  explicit PolarSearch(const Graph& g) : g_(g) {}

  void run(const std::function<bool(const VertexSet&, const VertexSet&)>& visit) {
    visit_ = &visit;
    place(0);
  }

 private:
  bool fits_a(Vertex v) const {
    for (std::size_t i = 0; i < a_.size(); ++i) {
      for (std::size_t j = i + 1; j < a_.size(); ++j) {
        const int edges = g_.adjacent(v, a_[i]) + g_.adjacent(v, a_[j]) +
                          g_.adjacent(a_[i], a_[j]);
        if (edges == 1) return false;  // induced K2 + K1
      }
    }
    return true;
  }

  bool fits_b(Vertex v) const {
    return std::none_of(b_.begin(), b_.end(), [&](Vertex u) { return g_.adjacent(u, v); });
  }

  // Returns true when the visitor asked to stop.
  bool place(Vertex v) {
    if (v == g_.order()) return !(*visit_)(a_, b_);
    if (fits_a(v)) {
      a_.push_back(v);
      const bool stop = place(v + 1);
      a_.pop_back();
      if (stop) return true;
    }
    if (fits_b(v)) {
      b_.push_back(v);
      const bool stop = place(v + 1);
      b_.pop_back();
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  const std::function<bool(const VertexSet&, const VertexSet&)>* visit_ = nullptr;
  VertexSet a_, b_;
};

}  // namespace

std::optional<PolarBipartition> find_infty1_polar(const Graph& g) {
  std::optional<PolarBipartition> found;
  PolarSearch(g).run([&](const VertexSet& a, const VertexSet& b) {
    found = make_polar_bipartition(g, a, b);
    return false;
  });
  return found;
}

std::vector<PolarBipartition> all_infty1_polar_bipartitions(const Graph& g) {
  std::vector<PolarBipartition> out;
  PolarSearch(g).run([&](const VertexSet& a, const VertexSet& b) {
    if (auto bip = make_polar_bipartition(g, a, b)) out.push_back(std::move(*bip));
    return true;
  });
  return out;
}

Graph build_rp(int k, int m, int p) {
  const int f = large_clique_threshold(k, m);
  if (p < 0 || p > f) throw std::invalid_argument("R_p needs 0 <= p <= f(k,m)");
  Graph g = complete_graph(f);
  const Vertex extra = g.add_vertex();
  for (Vertex v = 0; v < p; ++v) g.add_edge(v, extra);
  return g;
}

Graph build_large_clique_minus_edge(int k, int m) {
  Graph g = complete_graph(large_clique_threshold(k, m) + 1);
  g.remove_edge(0, 1);
  return g;
}

std::vector<NamedGraph> forbidden_family_f0(int k, int m) {
  const int f = large_clique_threshold(k, m);
  std::vector<NamedGraph> out;
  for (int p = k * m + 1; p <= f - 1; ++p)
    out.push_back({"R_" + std::to_string(p), build_rp(k, m, p)});
  out.push_back({"K_1," + std::to_string(k + 1), star_graph(k + 1)});
  return out;
}

namespace {

std::optional<ForbiddenWitness> find_forbidden(const Graph& g,
                                               const std::vector<NamedGraph>& family) {
  for (const NamedGraph& member : family) {
    if (auto embedding = find_induced(g, member.graph))
      return ForbiddenWitness{member.name, std::move(*embedding)};
  }
  return std::nullopt;
}

MembershipResult forbidden_result(ForbiddenWitness w) {
  return MembershipResult{false, std::nullopt, std::move(w), "forbidden"};
}

MembershipResult exact_result(const Graph& g, int k, int m, const char* method,
                              const MembershipOptions& options) {
  if (g.order() > options.max_exact_order) {
    throw SearchLimitExceeded("exact fallback on " + std::to_string(g.order()) +
                              " vertices exceeds the configured bound of " +
                              std::to_string(options.max_exact_order));
  }
  auto q = find_krausz_partition(g, k, m);
  const bool member = q.has_value();
  return MembershipResult{member, std::move(q), std::nullopt, method};
}

// Decides each connected component separately and stitches the answers back
// to the original labels.
MembershipResult by_components(
    const Graph& g, int k, int m,
    const std::function<MembershipResult(const Graph&, const VertexSet&)>& decide) {
  MembershipResult total{true, KrauszPartition{{}, k, m}, std::nullopt, ""};
  for (const VertexSet& comp : connected_components(g)) {
    if (comp.size() == 1) continue;
    const Graph sub = induced_subgraph(g, comp);
    MembershipResult part = decide(sub, comp);
    if (total.method.find(part.method) == std::string::npos)
      total.method += (total.method.empty() ? "" : "+") + part.method;
    if (!part.member) {
      if (part.forbidden)
        for (Vertex& v : part.forbidden->embedding) v = comp[v];
      part.witness.reset();
      return part;
    }
    for (const VertexSet& c : part.witness->clusters) {
      VertexSet mapped;
      for (Vertex v : c) mapped.push_back(comp[v]);
      total.witness->clusters.push_back(std::move(mapped));
    }
  }
  if (total.method.empty()) total.method = "edgeless";
  normalize(*total.witness);
  return total;
}

MembershipResult split_component(const Graph& h, int k, int m,
                                 const MembershipOptions& options) {
  const SplitBipartition bip = *find_split_bipartition(h);
  const int bound = (k * m - 1) * k + 1;
  if (static_cast<int>(bip.clique.size()) > bound) {
    if (auto w = find_forbidden(h, forbidden_family_f0(k, m))) return forbidden_result(*w);
    KrauszPartition q{{}, k, m};
    if (bip.clique.size() >= 2) q.clusters.push_back(bip.clique);
    for (Vertex s : bip.stable) {
      const auto nb = h.neighbors(s);
      for (std::size_t i = 0; i < nb.size(); i += m) {
        VertexSet block(nb.begin() + i, nb.begin() + std::min(nb.size(), i + m));
        block.push_back(s);
        q.clusters.push_back(std::move(block));
      }
    }
    normalize(q);
    if (!validate(h, q).ok)
      throw std::logic_error("constructed split-graph partition does not validate");
    return MembershipResult{true, std::move(q), std::nullopt, "split-construct"};
  }
  if (auto w = find_induced(h, star_graph(k + 1)))
    return forbidden_result({"K_1," + std::to_string(k + 1), std::move(*w)});
  return exact_result(h, k, m, "split-exact", options);
}

MembershipResult bipartite_component(const Graph& h, int k, int m) {
  for (Vertex v = 0; v < h.order(); ++v) {
    if (h.degree(v) > k) {
      std::vector<Vertex> embedding{v};
      for (int i = 0; i <= k; ++i) embedding.push_back(h.neighbors(v)[i]);
      return forbidden_result({"K_1," + std::to_string(k + 1), std::move(embedding)});
    }
  }
  KrauszPartition q{{}, k, m};
  for (const Edge& e : h.edges()) q.clusters.push_back({e.u, e.v});
  return MembershipResult{true, std::move(q), std::nullopt, "bipartite"};
}

}  // namespace

MembershipResult split_membership(const Graph& g, int k, int m,
                                  const MembershipOptions& options) {
  large_clique_threshold(k, m);  // validates k, m
  if (!find_split_bipartition(g)) throw ClassPreconditionError("graph is not split");
  return by_components(g, k, m, [&](const Graph& h, const VertexSet&) {
    return split_component(h, k, m, options);
  });
}

MembershipResult bipartite_membership(const Graph& g, int k, int m) {
  large_clique_threshold(k, m);
  if (!bipartition_colors(g)) throw ClassPreconditionError("graph is not bipartite");
  return by_components(g, k, m, [&](const Graph& h, const VertexSet&) {
    return bipartite_component(h, k, m);
  });
}

MembershipResult polar_membership(const Graph& g, const PolarBipartition& bip, int k,
                                  int m, const MembershipOptions& options) {
  const int f = large_clique_threshold(k, m);
  if (!check_polar_bipartition(g, bip))
    throw std::invalid_argument("not an (infinity,1)-polar bipartition of the graph");
  std::vector<bool> in_a(g.order(), false);
  for (Vertex v : bip.a) in_a[v] = true;

  return by_components(g, k, m, [&](const Graph& h, const VertexSet& comp) {
    VertexSet a, b;
    for (int i = 0; i < static_cast<int>(comp.size()); ++i)
      (in_a[comp[i]] ? a : b).push_back(i);
    const PolarBipartition local = *make_polar_bipartition(h, a, b);

    if (is_clique(h, local.a)) return split_component(h, k, m, options);
    if (is_stable(h, local.a)) return bipartite_component(h, k, m);

    const std::vector<NamedGraph> family{
        {"K_1," + std::to_string(k + 1), star_graph(k + 1)},
        {"K_" + std::to_string(f + 1) + "-e", build_large_clique_minus_edge(k, m)}};
    if (auto w = find_forbidden(h, family)) return forbidden_result(*w);

    const int bound = (k + 1) * k * (f - 1);
    if (h.order() > bound) {
      const bool parts_ok =
          std::all_of(local.a_parts.begin(), local.a_parts.end(),
                      [&](const VertexSet& p) { return static_cast<int>(p.size()) <= k; }) &&
          static_cast<int>(local.a_parts.size()) <= f - 1;
      throw std::logic_error(parts_ok ? "polar graph exceeds the order bound"
                                      : "polar part bounds violated without a forbidden subgraph");
    }
    return exact_result(h, k, m, "polar-exact", options);
  });
}

}  // namespace krausz
