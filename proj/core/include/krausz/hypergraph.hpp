// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>
#include <vector>

#include "krausz/graph.hpp"
#include "krausz/partition.hpp"

namespace krausz {

// Vertices 0..n-1 and an ordered multiset of non-empty edges. Edges are
// stored sorted; repeated edges are allowed.
struct Hypergraph {
  int n = 0;
  std::vector<VertexSet> edges;

  friend bool operator==(const Hypergraph&, const Hypergraph&) = default;
};

// Throws std::invalid_argument for empty edges, repeated vertices in an edge
// or labels outside 0..n-1. Sorts each edge in place.
void check_hypergraph(Hypergraph& h);

// Edge j of the result lists the indices of the edges of h containing
// vertex j. Throws if h has an isolated vertex.
Hypergraph dual(const Hypergraph& h);

// Removes vertices that lie in no edge and relabels the rest in order.
Hypergraph drop_isolated_vertices(const Hypergraph& h);

Graph two_section(const Hypergraph& h);

// One vertex per edge of h, adjacent when the edges intersect. Computed
// directly, not through dual().
Graph intersection_graph(const Hypergraph& h);

// Maximum number of edges jointly containing a pair of distinct vertices;
// 0 when no pair co-occurs.
int multiplicity(const Hypergraph& h);

bool is_uniform(const Hypergraph& h, int k);

// k-uniform hypergraph of multiplicity <= m whose intersection graph is g
// (edge i corresponds to vertex i). Vertex c < #clusters stands for the c-th
// cluster of q with at least two vertices; padding vertices follow, handed
// out in ascending graph-vertex order. Throws if q is not a valid partition.
Hypergraph partition_to_hypergraph(const Graph& g, const KrauszPartition& q);

// Inverse direction: the intersection graph of h together with the
// partition formed by the stars {edges through x} of its vertices. Stars
// with fewer than two edges are dropped, equal stars are merged and stars
// contained in another star are absorbed by it.
//
// Throws std::invalid_argument if h is not k-uniform, has multiplicity above
// m, or if two incomparable stars share an edge pair (which would cover a
// graph edge twice).
std::pair<Graph, KrauszPartition> hypergraph_to_partition(const Hypergraph& h,
                                                          int k, int m);

}  // namespace krausz
