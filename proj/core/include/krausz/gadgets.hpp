// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "krausz/graph.hpp"
#include "krausz/partition.hpp"

namespace krausz {

// Coordinates index X, Y and Z respectively (each in 0..q-1).
using Triple = std::array<int, 3>;

// Sets X, Y, Z of size q and a set M of triples. Triples are kept sorted and
// unique.
struct ThreeDMInstance {
  int q = 0;
  std::vector<Triple> triples;

  friend bool operator==(const ThreeDMInstance&, const ThreeDMInstance&) = default;
};

// Sorts and deduplicates the triples; throws InstanceError for q < 1 or
// coordinates outside 0..q-1.
void check_instance(ThreeDMInstance& inst);

// A breach of the closure condition: (a,b,w), (a,x,c), (y,b,c) are in M but
// (a,b,c) is not.
struct StarViolation {
  Triple ab;       // (a, b, w)
  Triple ac;       // (a, x, c)
  Triple bc;       // (y, b, c)
  Triple missing;  // (a, b, c)
};

std::optional<StarViolation> validate_star(const ThreeDMInstance& inst);

// Smallest superset of the triples closed under the condition.
std::vector<Triple> star_closure(int q, std::vector<Triple> triples);

// Vertex labels of the gadget graphs. X occupies 0..q-1, Y q..2q-1,
// Z 2q..3q-1, then v, v_1..v_q. The primed gadget appends w, w_1..w_2q and
// finally f_u for u in Y, Z and v (in that order).
struct GadgetMap {
  int q = 0;
  std::vector<Vertex> x, y, z;
  Vertex v = -1;
  std::vector<Vertex> v_pendants;
  std::optional<Vertex> w;
  std::vector<Vertex> w_pendants;
  std::vector<std::pair<Vertex, Vertex>> f;  // (u, f_u)
};

GadgetMap gadget_map(int q, bool prime);

// One clique and two stable sets covering the vertex set.
struct ColoringCertificate {
  VertexSet clique;
  VertexSet stable1;
  VertexSet stable2;
};

bool check_coloring(const Graph& g, const ColoringCertificate& cert);

struct Gadget {
  Graph graph;
  GadgetMap map;
  std::optional<ColoringCertificate> coloring;  // primed gadget only
};

// Triangle on every triple, v joined to X, Y, Z and to its q pendants.
// kdim_m(G) <= 2q iff M holds a perfect 3-dimensional matching. Throws
// InstanceError if the closure condition fails.
Gadget build_gadget(const ThreeDMInstance& inst);

// The (1,2)-colourable extension: kdim_m(G') <= 2q + 1 iff a matching
// exists.
Gadget build_gadget_prime(const ThreeDMInstance& inst);

// Reads the matching off a krausz (2q, m)-partition of the plain gadget:
// the q four-vertex clusters through v, minus v. Throws
// std::invalid_argument if the partition is invalid or lacks that shape.
std::vector<Triple> extract_matching(const Graph& gadget, const KrauszPartition& q,
                                     const ThreeDMInstance& inst, const GadgetMap& map);

}  // namespace krausz
