// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "krausz/graph.hpp"

namespace krausz {

// A family of cliques (clusters) covering every edge exactly once, each
// vertex in at most k clusters, any two clusters sharing at most m vertices.
// Singleton clusters are allowed but carry no load.
struct KrauszPartition {
  std::vector<VertexSet> clusters;
  int k = 1;
  int m = 1;

  friend bool operator==(const KrauszPartition&, const KrauszPartition&) = default;
};

enum class ViolationKind {
  kUncoveredEdge,
  kDoublyCoveredEdge,
  kNonCliqueCluster,
  kLoadExceeded,
  kIntersectionExceeded,
  // Only produced by the chordal reduction checks.
  kDegreeExceeded,
  kInducedCycleTooLong,
  kResidualMismatch,
};

std::string_view to_string(ViolationKind kind);

// `vertices` and `clusters` (indices into the checked family) identify the
// offending objects; which of them is populated depends on the kind.
struct Violation {
  ViolationKind kind;
  VertexSet vertices;
  std::vector<int> clusters;
};

struct ValidationReport {
  bool ok = true;
  std::vector<Violation> violations;

  void add(Violation v) {
    ok = false;
    violations.push_back(std::move(v));
  }
};

// Number of clusters with at least two vertices that contain v.
int load(const KrauszPartition& q, Vertex v);
int load(std::span<const VertexSet> clusters, Vertex v);

// Checks every partition invariant and reports each breach with a witness.
// Throws std::out_of_range for labels outside the graph and
// std::invalid_argument for empty clusters, repeated vertices inside a
// cluster, or k, m < 1.
ValidationReport validate(const Graph& g, const KrauszPartition& q);

// m(k^2 - k + 1) + 1: cliques at least this large are forced into every
// krausz (k,m)-partition.
int large_clique_threshold(int k, int m);

// Maximal cliques with at least large_clique_threshold(k, m) vertices.
std::vector<VertexSet> large_cliques(const Graph& g, int k, int m);

// A krausz (k,m)-partition of g if one exists. Exhaustive backtracking over
// the edges in lexicographic order; every edge either grows an existing
// cluster through one of its endpoints or opens a new cluster, which makes
// each partition reachable along exactly one branch.
std::optional<KrauszPartition> find_krausz_partition(const Graph& g, int k, int m);

struct KdimResult {
  int k = 1;
  KrauszPartition witness;
};

// Smallest k <= k_max admitting a krausz (k,m)-partition, with a witness.
// Edgeless graphs report k = 1 with no clusters.
std::optional<KdimResult> exact_kdim(const Graph& g, int m, int k_max);

// Sorts each cluster and the cluster list.
void normalize(KrauszPartition& q);

}  // namespace krausz
