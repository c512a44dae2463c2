// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "krausz/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "detail/clique_search.hpp"

namespace krausz {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kUncoveredEdge:
      return "uncovered-edge";
    case ViolationKind::kDoublyCoveredEdge:
      return "doubly-covered-edge";
    case ViolationKind::kNonCliqueCluster:
      return "non-clique-cluster";
    case ViolationKind::kLoadExceeded:
      return "load-exceeded";
    case ViolationKind::kIntersectionExceeded:
      return "intersection-exceeded";
    case ViolationKind::kDegreeExceeded:
      return "degree-exceeded";
    case ViolationKind::kInducedCycleTooLong:
      return "induced-cycle-too-long";
    case ViolationKind::kResidualMismatch:
      return "residual-mismatch";
  }
  return "unknown";
}

int load(std::span<const VertexSet> clusters, Vertex v) {
  int count = 0;
  for (const VertexSet& c : clusters) {
    if (c.size() >= 2 && std::find(c.begin(), c.end(), v) != c.end()) ++count;
  }
  return count;
}

int load(const KrauszPartition& q, Vertex v) { return load(q.clusters, v); }

ValidationReport validate(const Graph& g, const KrauszPartition& q) {
  if (q.k < 1 || q.m < 1) throw std::invalid_argument("k and m must be at least 1");
  std::vector<VertexSet> sorted;
  sorted.reserve(q.clusters.size());
  for (const VertexSet& c : q.clusters) {
    check_vertices(g, c);
    if (c.empty()) throw std::invalid_argument("empty cluster");
    VertexSet s = c;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw std::invalid_argument("cluster lists a vertex twice");
    sorted.push_back(std::move(s));
  }

  ValidationReport report;
  std::map<Edge, std::vector<int>> covering;
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    const VertexSet& c = sorted[i];
    bool clique_reported = false;
    for (std::size_t a = 0; a < c.size(); ++a) {
      for (std::size_t b = a + 1; b < c.size(); ++b) {
        if (g.adjacent(c[a], c[b])) {
          covering[{c[a], c[b]}].push_back(i);
        } else if (!clique_reported) {
          report.add({ViolationKind::kNonCliqueCluster, {c[a], c[b]}, {i}});
          clique_reported = true;
        }
      }
    }
  }
  for (const Edge& e : g.edges()) {
    auto it = covering.find(e);
    if (it == covering.end()) {
      report.add({ViolationKind::kUncoveredEdge, {e.u, e.v}, {}});
    } else if (it->second.size() > 1) {
      report.add({ViolationKind::kDoublyCoveredEdge, {e.u, e.v}, it->second});
    }
  }

  std::vector<std::vector<int>> holding(g.order());
  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    if (sorted[i].size() < 2) continue;
    for (Vertex v : sorted[i]) holding[v].push_back(i);
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (static_cast<int>(holding[v].size()) > q.k)
      report.add({ViolationKind::kLoadExceeded, {v}, holding[v]});
  }

  for (int i = 0; i < static_cast<int>(sorted.size()); ++i) {
    for (int j = i + 1; j < static_cast<int>(sorted.size()); ++j) {
      VertexSet shared;
      std::set_intersection(sorted[i].begin(), sorted[i].end(), sorted[j].begin(),
                            sorted[j].end(), std::back_inserter(shared));
      if (static_cast<int>(shared.size()) > q.m)
        report.add({ViolationKind::kIntersectionExceeded, std::move(shared), {i, j}});
    }
  }
  return report;
}

int large_clique_threshold(int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("k and m must be at least 1");
  return m * (k * k - k + 1) + 1;
}

std::vector<VertexSet> large_cliques(const Graph& g, int k, int m) {
  const int threshold = large_clique_threshold(k, m);
  std::vector<VertexSet> out;
  for (VertexSet& c : maximal_cliques(g)) {
    if (static_cast<int>(c.size()) >= threshold) out.push_back(std::move(c));
  }
  return out;
}

void normalize(KrauszPartition& q) {
  for (VertexSet& c : q.clusters) std::sort(c.begin(), c.end());
  std::sort(q.clusters.begin(), q.clusters.end());
}

std::optional<KrauszPartition> find_krausz_partition(const Graph& g, int k, int m) {
  if (k < 1 || m < 1) throw std::invalid_argument("k and m must be at least 1");
  detail::CliqueSearchConfig config;
  config.capacity.assign(g.order(), k);
  config.max_intersection = m;
  config.required = g.edges();

  std::optional<KrauszPartition> found;
  detail::CliqueSearch search(g, std::move(config));
  search.run([&](const std::vector<VertexSet>& clusters) {
    found = KrauszPartition{clusters, k, m};
    return false;
  });
  if (found) normalize(*found);
  return found;
}

std::optional<KdimResult> exact_kdim(const Graph& g, int m, int k_max) {
  if (m < 1 || k_max < 1) throw std::invalid_argument("m and k_max must be at least 1");
  for (int k = 1; k <= k_max; ++k) {
    if (auto q = find_krausz_partition(g, k, m)) return KdimResult{k, std::move(*q)};
  }
  return std::nullopt;
}

}  // namespace krausz
