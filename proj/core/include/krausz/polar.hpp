// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "krausz/graph.hpp"
#include "krausz/partition.hpp"

namespace krausz {

// Clique C (inclusion-maximal) and stable set S partitioning the vertices.
struct SplitBipartition {
  VertexSet clique;
  VertexSet stable;
};

// A is complete multipartite with parts a_parts (the components of the
// complement of G(A)); B is stable.
struct PolarBipartition {
  VertexSet a;
  VertexSet b;
  std::vector<VertexSet> a_parts;
};

// Degree-sequence split test followed by greedy maximalization of the
// clique side.
std::optional<SplitBipartition> find_split_bipartition(const Graph& g);

// Computes a_parts for the given sides; std::nullopt unless (a, b) is a
// valid (infinity,1)-polar bipartition of g.
std::optional<PolarBipartition> make_polar_bipartition(const Graph& g, VertexSet a,
                                                       VertexSet b);
// Checks a certificate, including that a_parts matches the complement
// components of G(A) (order of parts and of vertices is irrelevant).
bool check_polar_bipartition(const Graph& g, const PolarBipartition& bip);

// Exhaustive search (vertices placed on side A first, in ascending order);
// exponential worst case.
std::optional<PolarBipartition> find_infty1_polar(const Graph& g);
// Every valid bipartition; for tests and small graphs only.
std::vector<PolarBipartition> all_infty1_polar_bipartitions(const Graph& g);

// R_p: K_f with f = large_clique_threshold(k, m) plus a vertex (labelled f)
// adjacent to the clique vertices 0..p-1.
Graph build_rp(int k, int m, int p);
// K_{f+1} minus the edge {0, 1}.
Graph build_large_clique_minus_edge(int k, int m);

struct NamedGraph {
  std::string name;
  Graph graph;
};

// R_p for km+1 <= p <= f-1 in increasing p, then K_{1,k+1}.
std::vector<NamedGraph> forbidden_family_f0(int k, int m);

struct ForbiddenWitness {
  std::string name;
  std::vector<Vertex> embedding;  // pattern vertex i -> host vertex
};

struct MembershipResult {
  bool member = false;
  std::optional<KrauszPartition> witness;
  std::optional<ForbiddenWitness> forbidden;
  // Which branch decided: "split-construct", "split-exact", "bipartite",
  // "polar-exact", "forbidden", or "edgeless".
  std::string method;
};

struct MembershipOptions {
  // Inputs routed to the exact solver may not exceed this order; larger ones
  // raise SearchLimitExceeded.
  int max_exact_order = 40;
};

// Membership in L_k^m for split graphs. Disconnected inputs are decided per
// component. Throws ClassPreconditionError if g is not split.
MembershipResult split_membership(const Graph& g, int k, int m,
                                  const MembershipOptions& options = {});

// Bipartite graphs are in L_k^m iff the maximum degree is at most k; the
// witness uses every edge as its own cluster. Throws ClassPreconditionError
// if g is not bipartite.
MembershipResult bipartite_membership(const Graph& g, int k, int m = 1);

// Membership for (infinity,1)-polar graphs given a bipartition certificate.
// Throws std::invalid_argument if the certificate does not check out.
MembershipResult polar_membership(const Graph& g, const PolarBipartition& bip, int k,
                                  int m, const MembershipOptions& options = {});

}  // namespace krausz
