// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "krausz/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace krausz {

void check_hypergraph(Hypergraph& h) {
  if (h.n < 0) throw std::invalid_argument("hypergraph order must be non-negative");
  for (VertexSet& e : h.edges) {
    if (e.empty()) throw std::invalid_argument("hypergraph edge is empty");
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw std::invalid_argument("hypergraph edge repeats a vertex");
    if (e.front() < 0 || e.back() >= h.n)
      throw std::invalid_argument("hypergraph vertex out of range");
  }
}

Hypergraph dual(const Hypergraph& h) {
  Hypergraph out{static_cast<int>(h.edges.size()), std::vector<VertexSet>(h.n)};
  for (int j = 0; j < static_cast<int>(h.edges.size()); ++j) {
    for (Vertex x : h.edges[j]) {
      if (x < 0 || x >= h.n) throw std::invalid_argument("hypergraph vertex out of range");
      out.edges[x].push_back(j);
    }
  }
  for (Vertex x = 0; x < h.n; ++x) {
    if (out.edges[x].empty())
      throw std::invalid_argument("vertex " + std::to_string(x) +
                                  " is isolated; its dual edge would be empty");
  }
  return out;
}

Hypergraph drop_isolated_vertices(const Hypergraph& h) {
  std::vector<int> relabel(h.n, -1);
  for (const VertexSet& e : h.edges)
    for (Vertex x : e) relabel[x] = 0;
  int next = 0;
  for (int& r : relabel)
    if (r == 0) r = next++;
  Hypergraph out{next, {}};
  for (const VertexSet& e : h.edges) {
    VertexSet mapped;
    for (Vertex x : e) mapped.push_back(relabel[x]);
    out.edges.push_back(std::move(mapped));
  }
  return out;
}

Graph two_section(const Hypergraph& h) {
  Graph g(h.n);
  for (const VertexSet& e : h.edges) {
    check_vertices(g, e);
    for (std::size_t a = 0; a < e.size(); ++a)
      for (std::size_t b = a + 1; b < e.size(); ++b)
        if (e[a] != e[b]) g.add_edge(e[a], e[b]);
  }
  return g;
}

Graph intersection_graph(const Hypergraph& h) {
  const int count = static_cast<int>(h.edges.size());
  std::vector<VertexSet> sorted = h.edges;
  for (VertexSet& e : sorted) {
    if (e.empty()) throw std::invalid_argument("hypergraph edge is empty");
    std::sort(e.begin(), e.end());
  }
  Graph g(count);
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      VertexSet shared;
      std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(),
                            sorted[j].end(), std::back_inserter(shared));
      if (!shared.empty()) g.add_edge(i, j);
    }
  }
  return g;
}

int multiplicity(const Hypergraph& h) {
  std::vector<int> count(static_cast<std::size_t>(h.n) * h.n, 0);
  int best = 0;
  for (const VertexSet& e : h.edges) {
    for (std::size_t a = 0; a < e.size(); ++a) {
      for (std::size_t b = a + 1; b < e.size(); ++b) {
        const Vertex x = std::min(e[a], e[b]);
        const Vertex y = std::max(e[a], e[b]);
        if (x == y) continue;
        best = std::max(best, ++count[static_cast<std::size_t>(x) * h.n + y]);
      }
    }
  }
  return best;
}

bool is_uniform(const Hypergraph& h, int k) {
  return std::all_of(h.edges.begin(), h.edges.end(), [k](const VertexSet& e) {
    return static_cast<int>(e.size()) == k;
  });
}

Hypergraph partition_to_hypergraph(const Graph& g, const KrauszPartition& q) {
  if (!validate(g, q).ok) throw std::invalid_argument("not a valid krausz partition");

  std::vector<const VertexSet*> proper;
  for (const VertexSet& c : q.clusters)
    if (c.size() >= 2) proper.push_back(&c);

  std::vector<VertexSet> edges(g.order());
  for (int c = 0; c < static_cast<int>(proper.size()); ++c)
    for (Vertex v : *proper[c]) edges[v].push_back(c);

  int next_padding = static_cast<int>(proper.size());
  for (VertexSet& e : edges) {
    while (static_cast<int>(e.size()) < q.k) e.push_back(next_padding++);
  }
  return Hypergraph{next_padding, std::move(edges)};
}

std::pair<Graph, KrauszPartition> hypergraph_to_partition(const Hypergraph& h,
                                                          int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("k and m must be at least 1");
  Hypergraph checked = h;
  check_hypergraph(checked);
  if (!is_uniform(checked, k)) throw std::invalid_argument("hypergraph is not k-uniform");
  if (multiplicity(checked) > m)
    throw std::invalid_argument("hypergraph multiplicity exceeds m");

  Graph g = intersection_graph(checked);

  std::vector<VertexSet> stars(checked.n);
  for (int j = 0; j < static_cast<int>(checked.edges.size()); ++j)
    for (Vertex x : checked.edges[j]) stars[x].push_back(j);

  std::vector<VertexSet> candidates;
  for (VertexSet& s : stars)
    if (s.size() >= 2) candidates.push_back(std::move(s));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::vector<VertexSet> clusters;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool absorbed = false;
    for (std::size_t j = 0; j < candidates.size() && !absorbed; ++j) {
      absorbed = i != j && candidates[j].size() > candidates[i].size() &&
                 std::includes(candidates[j].begin(), candidates[j].end(),
                               candidates[i].begin(), candidates[i].end());
    }
    if (!absorbed) clusters.push_back(candidates[i]);
  }

  KrauszPartition q{std::move(clusters), k, m};
  const ValidationReport report = validate(g, q);
  if (!report.ok) {
    throw std::invalid_argument(
        "vertex stars of the hypergraph do not form a krausz partition "
        "(two edges share several vertices with incomparable stars)");
  }
  return {std::move(g), std::move(q)};
}

}  // namespace krausz
