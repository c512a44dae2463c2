// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "krausz/graph.hpp"
#include "krausz/partition.hpp"

namespace krausz {

// Clusters committed so far (cliques of the original graph) together with
// the residual graph of edges they leave uncovered.
struct Fragment {
  std::vector<VertexSet> clusters;
  Graph residual;

  int load(Vertex v) const;
};

// Fragment invariants against the original graph: clusters are cliques,
// pairwise share at most one vertex, cover no edge twice, give every vertex
// load <= 3, and the residual holds exactly the uncovered edges (vertices
// beyond the original order, such as pendants, are ignored).
ValidationReport check_fragment(const Graph& g, const Fragment& f);

// Family of cliques of the residual graph around `center`: every residual
// edge with an end in the radius ball is covered, each ball vertex v lies in
// at most 3 - load_F(v) clusters, and two clusters share at most one vertex.
// Every cluster meets the ball.
struct LocalFragment {
  Vertex center = 0;
  int radius = 1;
  std::vector<VertexSet> clusters;  // sorted, each sorted

  friend bool operator==(const LocalFragment&, const LocalFragment&) = default;
};

struct LocalFragmentOptions {
  // Hard cap on the number of fragments; exceeding it throws
  // SearchLimitExceeded.
  std::size_t cap = 1'000'000;
  // Prune with the rule "a ball vertex adjacent to 4 - load_F(v) members of a
  // cluster belongs to it". Does not change the result.
  bool membership_forcing = true;
};

// All local fragments around `center` in canonical (lexicographic) order.
// `f.residual` is the graph the fragments live in. Throws
// std::invalid_argument if the center is isolated or radius < 1.
std::vector<LocalFragment> enumerate_local_fragments(
    const Fragment& f, Vertex center, int radius,
    const LocalFragmentOptions& options = {});

// Clusters common to every local fragment around `center`, sorted. Throws
// std::invalid_argument when there is no local fragment at all.
std::vector<VertexSet> special_cliques(const Fragment& f, Vertex center,
                                       int radius,
                                       const LocalFragmentOptions& options = {});
std::vector<VertexSet> special_cliques(std::span<const LocalFragment> fragments);

enum class RejectRule {
  kLoadTwoNotClique,      // N_H(v) + v is not a clique although load_F(v) = 2
  kHighDegreeNoLarge,     // deg_H(v) >= 19 without an 8-clique through v
  kNoLocalFragment,       // some non-isolated vertex admits no local fragment
  kFragmentOverloaded,    // committing a forced cluster pushes a load past 3
};

std::string_view to_string(RejectRule rule);

struct Reduced {
  Graph graph;   // residual plus pendant edges
  Fragment fragment;
  std::vector<Edge> pendants;  // (v, p_v) with p_v a fresh vertex
};

struct Rejected {
  RejectRule rule;
  Vertex vertex = -1;
  VertexSet witness;  // offending clique / neighbourhood when relevant
};

using Kdim3Outcome = std::variant<Reduced, Rejected>;

// One record per loop iteration of the reduction.
struct TraceStep {
  std::string rule;  // "load-two", "large-clique", "special", "stop", "reject"
  Vertex vertex = -1;
  VertexSet clique;
  std::size_t fragment_size = 0;
  std::size_t residual_edges = 0;
};

struct ReductionOptions {
  LocalFragmentOptions local;
  // Re-check the fragment invariants after every iteration and throw
  // std::logic_error on a breach.
  bool verify_each_step = false;
  std::function<void(const TraceStep&)> trace;
};

// Reduces a chordal graph to one of maximum degree <= 18 and longest induced
// cycle <= 6 with the same answer to "kdim <= 3", or rejects. Throws
// ClassPreconditionError for non-chordal input.
Kdim3Outcome reduce_chordal_kdim3(const Graph& g, const ReductionOptions& options = {});

// Degree <= 18, longest induced cycle <= 6, fragment invariants.
ValidationReport check_reduction_guarantees(const Graph& g, const Kdim3Outcome& out);

struct Kdim3Decision {
  bool yes = false;
  std::optional<KrauszPartition> partition;  // a krausz 3-partition of g
  Kdim3Outcome outcome;
};

// kdim(g) <= 3 for chordal g: the reduction followed by the exact solver on
// the reduced graph. Throws ClassPreconditionError for non-chordal input.
Kdim3Decision decide_kdim3_chordal(const Graph& g, const ReductionOptions& options = {});

}  // namespace krausz
