// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "graph_enum.hpp"
#include "krausz/hypergraph.hpp"

namespace krausz {
namespace {

using testing::all_hypergraphs;
using testing::isomorphic;

TEST(Dual, Examples) {
  const Hypergraph one{3, {{0, 1, 2}}};
  EXPECT_EQ(dual(one), (Hypergraph{1, {{0}, {0}, {0}}}));
  const Hypergraph two{2, {{0}, {1}}};
  EXPECT_EQ(dual(two), (Hypergraph{2, {{0}, {1}}}));
  EXPECT_THROW(dual(Hypergraph{3, {{0, 1}}}), std::invalid_argument);
}

// Same hypergraph up to renaming vertices and reordering edges, by brute
// force over vertex permutations.
bool hypergraphs_isomorphic(const Hypergraph& a, const Hypergraph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  std::vector<int> perm(a.n);
  for (int i = 0; i < a.n; ++i) perm[i] = i;
  auto sorted_edges = [](std::vector<VertexSet> edges) {
    for (auto& e : edges) std::sort(e.begin(), e.end());
    std::sort(edges.begin(), edges.end());
    return edges;
  };
  const auto target = sorted_edges(b.edges);
  do {
    std::vector<VertexSet> mapped = a.edges;
    for (auto& e : mapped)
      for (auto& v : e) v = perm[v];
    if (sorted_edges(mapped) == target) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

TEST(Dual, InvolutionOnSimpleHypergraphs) {
  int checked = 0;
  for (int n = 1; n <= 3; ++n) {
    for (const Hypergraph& h : all_hypergraphs(n, 3)) {
      std::vector<int> seen(n, 0);
      for (const auto& e : h.edges)
        for (Vertex v : e) seen[v] = 1;
      if (std::count(seen.begin(), seen.end(), 0) > 0) continue;
      auto edges = h.edges;
      std::sort(edges.begin(), edges.end());
      if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
      ASSERT_TRUE(hypergraphs_isomorphic(dual(dual(h)), h));
      ++checked;
    }
  }
  EXPECT_GT(checked, 0);
}

TEST(TwoSection, Examples) {
  EXPECT_EQ(two_section({3, {{0, 1, 2}}}), complete_graph(3));
  EXPECT_EQ(two_section({3, {{0, 1}, {1, 2}}}), path_graph(3));
  EXPECT_EQ(two_section({3, {{0}, {1}, {2}}}), empty_graph(3));
}

TEST(IntersectionGraph, Examples) {
  EXPECT_EQ(intersection_graph({3, {{0, 1}, {1, 2}, {0, 2}}}), complete_graph(3));
  EXPECT_EQ(intersection_graph({4, {{0, 1}, {2, 3}}}), empty_graph(2));
  EXPECT_EQ(intersection_graph({5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}}), complete_graph(4));
  EXPECT_THROW(intersection_graph({2, {{}}}), std::invalid_argument);
}

TEST(IntersectionGraph, EqualsTwoSectionOfDual) {
  for (int n = 0; n <= 4; ++n) {
    for (const Hypergraph& h : all_hypergraphs(n, 4)) {
      const Hypergraph core = drop_isolated_vertices(h);
      ASSERT_EQ(intersection_graph(h), two_section(dual(core)));
    }
  }
}

TEST(Multiplicity, Examples) {
  EXPECT_EQ(multiplicity({4, {{0, 1, 2}, {2, 3}, {0, 3}}}), 1);
  EXPECT_EQ(multiplicity({2, {{0, 1}, {0, 1}}}), 2);
  EXPECT_EQ(multiplicity({3, {{0}, {1}, {2}}}), 0);
}

TEST(PartitionToHypergraph, Examples) {
  const Hypergraph k3 = partition_to_hypergraph(complete_graph(3), {{{0, 1, 2}}, 1, 1});
  EXPECT_EQ(k3, (Hypergraph{1, {{0}, {0}, {0}}}));
  EXPECT_EQ(intersection_graph(k3), complete_graph(3));

  const Graph claw = star_graph(3);
  const Hypergraph h = partition_to_hypergraph(claw, {{{0, 1}, {0, 2}, {0, 3}}, 3, 1});
  EXPECT_EQ(h.edges[0], (VertexSet{0, 1, 2}));
  EXPECT_EQ(h.edges[1], (VertexSet{0, 3, 4}));
  EXPECT_EQ(h.edges[2], (VertexSet{1, 5, 6}));
  EXPECT_EQ(h.edges[3], (VertexSet{2, 7, 8}));
  EXPECT_EQ(intersection_graph(h), claw);
  EXPECT_TRUE(is_uniform(h, 3));

  const Hypergraph iso = partition_to_hypergraph(empty_graph(2), {{}, 1, 1});
  EXPECT_EQ(iso, (Hypergraph{2, {{0}, {1}}}));
  EXPECT_THROW(partition_to_hypergraph(claw, {{{0, 1}, {0, 2}, {0, 3}}, 2, 1}),
               std::invalid_argument);
}

TEST(HypergraphToPartition, Examples) {
  auto [g1, q1] = hypergraph_to_partition({3, {{0, 1}, {1, 2}, {0, 2}}}, 2, 1);
  EXPECT_EQ(g1, complete_graph(3));
  EXPECT_EQ(q1.clusters, (std::vector<VertexSet>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_TRUE(validate(g1, q1).ok);

  auto [g2, q2] = hypergraph_to_partition({3, {{0, 1, 2}}}, 3, 1);
  EXPECT_EQ(g2.order(), 1);
  EXPECT_TRUE(q2.clusters.empty());

  auto [g3, q3] = hypergraph_to_partition({2, {{0, 1}, {0, 1}}}, 2, 2);
  EXPECT_EQ(g3, complete_graph(2));
  EXPECT_EQ(q3.clusters, (std::vector<VertexSet>{{0, 1}}));
  EXPECT_TRUE(validate(g3, q3).ok);

  EXPECT_THROW(hypergraph_to_partition({3, {{0, 1}, {2}}}, 2, 1), std::invalid_argument);
  EXPECT_THROW(hypergraph_to_partition({2, {{0, 1}, {0, 1}}}, 2, 1), std::invalid_argument);
}

TEST(Bridge, RoundTripsOnSolverWitnesses) {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : testing::connected_graphs(n)) {
      for (int m : {1, 2}) {
        const auto r = exact_kdim(g, m, std::max(1, g.max_degree()));
        ASSERT_TRUE(r.has_value());
        const Hypergraph h = partition_to_hypergraph(g, r->witness);
        ASSERT_TRUE(is_uniform(h, r->k));
        ASSERT_LE(multiplicity(h), m);
        ASSERT_EQ(intersection_graph(h), g);
        auto [g2, q2] = hypergraph_to_partition(h, r->k, m);
        ASSERT_TRUE(isomorphic(g2, g));
        ASSERT_TRUE(validate(g2, q2).ok);
      }
    }
  }
}

}  // namespace
}  // namespace krausz
