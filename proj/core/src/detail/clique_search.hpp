// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "krausz/graph.hpp"

namespace krausz::detail {

// Backtracking engine shared by the exact solver and the local-fragment
// enumerator. It builds families of edge-disjoint cliques of `graph` that
// cover every required edge, growing clusters one vertex at a time.
//
// Required edges are processed in lexicographic order. The smallest
// uncovered required edge (u, v) is covered by adding v to a cluster that
// already holds u, adding u to a cluster that holds v, or opening {u, v}.
// Clusters may cover additional, non-required edges along the way; no edge is
// ever covered twice.
struct CliqueSearchConfig {
  static constexpr int kUnbounded = std::numeric_limits<int>::max();

  // Per-vertex cap on the number of clusters; kUnbounded for no cap.
  std::vector<int> capacity;
  // Largest allowed intersection of two clusters.
  int max_intersection = 1;
  // Edges that must be covered. Must be sorted lexicographically.
  std::vector<Edge> required;
  // Membership forcing: a vertex v with forcing_threshold[v] > 0 that is
  // adjacent to at least that many members of a cluster must end up inside
  // it. 0 disables the rule for v.
  std::vector<int> forcing_threshold;
};

class CliqueSearch {
 public:
  // Receives the completed family; return false to stop the search.
  using Visitor = std::function<bool(const std::vector<VertexSet>&)>;

  CliqueSearch(const Graph& graph, CliqueSearchConfig config);

  // Runs the search; returns true if the visitor stopped it early.
  bool run(const Visitor& visit);

  std::size_t nodes() const { return nodes_; }

 private:
  bool search(std::size_t next_required);
  bool can_join(int cluster, Vertex w) const;
  void join(int cluster, Vertex w);
  void leave(int cluster, Vertex w);
  int open(Vertex u, Vertex v);
  void close();
  bool saturation_ok(Vertex w) const;
  bool forcing_ok() const;
  bool in_cluster(int cluster, Vertex v) const {
    return member_[static_cast<std::size_t>(cluster) * n_ + v] != 0;
  }
  int& cover(Vertex a, Vertex b) {
    return cover_[static_cast<std::size_t>(a) * n_ + b];
  }
  int cover(Vertex a, Vertex b) const {
    return cover_[static_cast<std::size_t>(a) * n_ + b];
  }

  const Graph& g_;
  CliqueSearchConfig config_;
  int n_;
  bool use_forcing_ = false;
  const Visitor* visit_ = nullptr;
  std::size_t nodes_ = 0;

  std::vector<VertexSet> clusters_;
  std::vector<unsigned char> member_;     // cluster-major membership flags
  std::vector<int> cover_;                // n x n, covering cluster or -1
  std::vector<std::vector<int>> of_vertex_;  // clusters containing v
};

}  // namespace krausz::detail
