// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "detail/clique_search.hpp"

#include <stdexcept>

namespace krausz::detail {

CliqueSearch::CliqueSearch(const Graph& graph, CliqueSearchConfig config)
    : g_(graph), config_(std::move(config)), n_(graph.order()) {
  if (config_.capacity.empty())
    config_.capacity.assign(n_, CliqueSearchConfig::kUnbounded);
  if (static_cast<int>(config_.capacity.size()) != n_)
    throw std::invalid_argument("capacity vector size mismatch");
  if (!config_.forcing_threshold.empty()) {
    if (static_cast<int>(config_.forcing_threshold.size()) != n_)
      throw std::invalid_argument("forcing vector size mismatch");
    for (int t : config_.forcing_threshold) use_forcing_ = use_forcing_ || t > 0;
  }
  for (const Edge& e : config_.required) {
    if (!g_.adjacent(e.u, e.v)) throw std::invalid_argument("required pair is not an edge");
  }
  // Clusters are edge-disjoint and non-empty, so |E| bounds their number.
  const std::size_t max_clusters = g_.size() + 1;
  member_.assign(max_clusters * static_cast<std::size_t>(n_), 0);
  cover_.assign(static_cast<std::size_t>(n_) * n_, -1);
  of_vertex_.assign(n_, {});
}

bool CliqueSearch::run(const Visitor& visit) {
  visit_ = &visit;
  nodes_ = 0;
  const bool stopped = search(0);
  visit_ = nullptr;
  return stopped;
}

bool CliqueSearch::can_join(int cluster, Vertex w) const {
  if (static_cast<int>(of_vertex_[w].size()) >= config_.capacity[w]) return false;
  for (Vertex x : clusters_[cluster]) {
    if (!g_.adjacent(w, x) || cover(w, x) >= 0) return false;
  }
  for (int other : of_vertex_[w]) {
    int shared = 1;  // w itself, once it joins
    for (Vertex x : clusters_[cluster]) shared += in_cluster(other, x) ? 1 : 0;
    if (shared > config_.max_intersection) return false;
  }
  return true;
}

void CliqueSearch::join(int cluster, Vertex w) {
  for (Vertex x : clusters_[cluster]) {
    cover(w, x) = cluster;
    cover(x, w) = cluster;
  }
  member_[static_cast<std::size_t>(cluster) * n_ + w] = 1;
  clusters_[cluster].push_back(w);
  of_vertex_[w].push_back(cluster);
}

void CliqueSearch::leave(int cluster, Vertex w) {
  of_vertex_[w].pop_back();
  clusters_[cluster].pop_back();
  member_[static_cast<std::size_t>(cluster) * n_ + w] = 0;
  for (Vertex x : clusters_[cluster]) {
    cover(w, x) = -1;
    cover(x, w) = -1;
  }
}

int CliqueSearch::open(Vertex u, Vertex v) {
  const int id = static_cast<int>(clusters_.size());
  clusters_.push_back({u, v});
  member_[static_cast<std::size_t>(id) * n_ + u] = 1;
  member_[static_cast<std::size_t>(id) * n_ + v] = 1;
  cover(u, v) = id;
  cover(v, u) = id;
  of_vertex_[u].push_back(id);
  of_vertex_[v].push_back(id);
  return id;
}

void CliqueSearch::close() {
  const int id = static_cast<int>(clusters_.size()) - 1;
  const Vertex u = clusters_[id][0];
  const Vertex v = clusters_[id][1];
  of_vertex_[u].pop_back();
  of_vertex_[v].pop_back();
  cover(u, v) = -1;
  cover(v, u) = -1;
  member_[static_cast<std::size_t>(id) * n_ + u] = 0;
  member_[static_cast<std::size_t>(id) * n_ + v] = 0;
  clusters_.pop_back();
}

// A vertex at capacity can only cover its remaining edges by pulling the
// other endpoint into one of its clusters.
bool CliqueSearch::saturation_ok(Vertex w) const {
  if (config_.capacity[w] == CliqueSearchConfig::kUnbounded) return true;
  if (static_cast<int>(of_vertex_[w].size()) < config_.capacity[w]) return true;
  for (Vertex x : g_.neighbors(w)) {
    if (cover(w, x) >= 0) continue;
    bool placeable = false;
    for (int c : of_vertex_[w]) {
      if (can_join(c, x)) {
        placeable = true;
        break;
      }
    }
    if (!placeable) return false;
  }
  return true;
}

bool CliqueSearch::forcing_ok() const {
  for (int c = 0; c < static_cast<int>(clusters_.size()); ++c) {
    for (Vertex v = 0; v < n_; ++v) {
      const int threshold = config_.forcing_threshold[v];
      if (threshold <= 0 || in_cluster(c, v)) continue;
      int hits = 0;
      for (Vertex x : clusters_[c]) hits += g_.adjacent(v, x) ? 1 : 0;
      if (hits >= threshold && !can_join(c, v)) return false;
    }
  }
  return true;
}

bool CliqueSearch::search(std::size_t next) {
  ++nodes_;
  while (next < config_.required.size() &&
         cover(config_.required[next].u, config_.required[next].v) >= 0) {
    ++next;
  }
  if (next == config_.required.size()) return !(*visit_)(clusters_);

  const Vertex u = config_.required[next].u;
  const Vertex v = config_.required[next].v;

  auto consistent = [&](int cluster, Vertex moved) {
    if (!saturation_ok(moved)) return false;
    for (Vertex x : clusters_[cluster])
      if (x != moved && !saturation_ok(x)) return false;
    return !use_forcing_ || forcing_ok();
  };

  // Grow an existing cluster through one endpoint.
  for (auto [anchor, joiner] : {std::pair{u, v}, std::pair{v, u}}) {
    for (std::size_t i = 0; i < of_vertex_[anchor].size(); ++i) {
      const int c = of_vertex_[anchor][i];
      if (in_cluster(c, joiner) || !can_join(c, joiner)) continue;
      join(c, joiner);
      if (consistent(c, joiner) && search(next + 1)) return true;
      leave(c, joiner);
    }
  }

  // Open a new cluster on this edge.
  if (static_cast<int>(of_vertex_[u].size()) < config_.capacity[u] &&
      static_cast<int>(of_vertex_[v].size()) < config_.capacity[v]) {
    const int c = open(u, v);
    if (consistent(c, v) && search(next + 1)) return true;
    close();
  }
  return false;
}

}  // namespace krausz::detail
