// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "graph_enum.hpp"
#include "krausz/graph.hpp"
#include "oracles.hpp"

namespace krausz {
namespace {

using testing::all_graphs;

VertexSet iota_set(int n) {
  VertexSet s(n);
  std::iota(s.begin(), s.end(), 0);
  return s;
}

TEST(Graph, RejectsLoopsAndIgnoresDuplicates) {
  Graph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  EXPECT_EQ(g.size(), 1u);
  EXPECT_THROW(g.add_edge(2, 2), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::out_of_range);
  g.remove_edge(0, 1);
  EXPECT_EQ(g.size(), 0u);
  EXPECT_FALSE(g.adjacent(1, 0));
}

TEST(Graph, EdgesInLexOrder) {
  Graph g(4);
  g.add_edge(2, 3);
  g.add_edge(0, 3);
  g.add_edge(1, 0);
  const std::vector<Edge> want{{0, 1}, {0, 3}, {2, 3}};
  EXPECT_EQ(g.edges(), want);
}

TEST(InducedSubgraph, Examples) {
  const Graph c5 = cycle_graph(5);
  EXPECT_EQ(induced_subgraph(c5, iota_set(5)), c5);
  EXPECT_EQ(induced_subgraph(c5, {}).order(), 0);
  const VertexSet three{0, 2, 3};
  EXPECT_EQ(induced_subgraph(complete_graph(4), three), complete_graph(3));
  EXPECT_THROW(induced_subgraph(c5, VertexSet{5}), std::out_of_range);
}

TEST(InducedSubgraph, KeepsCallerOrder) {
  const Graph p = path_graph(3);  // 0-1-2
  const Graph sub = induced_subgraph(p, VertexSet{2, 0, 1});
  EXPECT_TRUE(sub.adjacent(0, 2));
  EXPECT_TRUE(sub.adjacent(1, 2));
  EXPECT_FALSE(sub.adjacent(0, 1));
}

TEST(InducedSubgraph, IdentityOnAllSmallGraphs) {
  for (int n = 0; n <= 8; ++n)
    for (const Graph& g : all_graphs(n)) ASSERT_EQ(induced_subgraph(g, iota_set(n)), g);
}

TEST(IsClique, Examples) {
  EXPECT_TRUE(is_clique(complete_graph(4), iota_set(4)));
  EXPECT_FALSE(is_clique(cycle_graph(4), VertexSet{0, 1, 2}));
  EXPECT_TRUE(is_clique(cycle_graph(4), VertexSet{3}));
  EXPECT_THROW(is_clique(cycle_graph(4), VertexSet{4}), std::out_of_range);
}

TEST(IsChordal, Examples) {
  const auto peo = is_chordal(complete_graph(6));
  ASSERT_TRUE(peo.has_value());
  EXPECT_EQ(peo->size(), 6u);
  EXPECT_FALSE(is_chordal(cycle_graph(4)).has_value());
  EXPECT_TRUE(is_chordal(star_graph(3)).has_value());
}

bool is_peo(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<int> pos(g.order());
  for (int i = 0; i < g.order(); ++i) pos[order[i]] = i;
  for (Vertex v : order) {
    VertexSet later;
    for (Vertex u : g.neighbors(v))
      if (pos[u] > pos[v]) later.push_back(u);
    if (!is_clique(g, later)) return false;
  }
  return true;
}

TEST(IsChordal, AgreesWithInducedCycleDefinition) {
  for (int n = 0; n <= 8; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const auto peo = is_chordal(g);
      ASSERT_EQ(peo.has_value(), longest_induced_cycle_length(g) <= 3);
      if (peo) {
        ASSERT_EQ(static_cast<int>(peo->size()), n);
        ASSERT_TRUE(is_peo(g, *peo));
      }
    }
  }
}

TEST(LongestInducedCycle, Examples) {
  EXPECT_EQ(longest_induced_cycle_length(cycle_graph(5)), 5);
  EXPECT_EQ(longest_induced_cycle_length(complete_graph(4)), 3);
  EXPECT_EQ(longest_induced_cycle_length(path_graph(6)), 0);
  EXPECT_EQ(longest_induced_cycle_length(star_graph(4)), 0);
  EXPECT_EQ(longest_induced_cycle_length(complete_bipartite(3, 3)), 4);
  EXPECT_EQ(longest_induced_cycle_length(cycle_graph(9), 7), 9);
}

TEST(LongestInducedCycle, MatchesBruteForceOnSmallGraphs) {
  // A subset induces a chordless cycle iff it is connected and 2-regular.
  for (int n = 3; n <= 7; ++n) {
    for (const Graph& g : all_graphs(n)) {
      int best = 0;
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
          if (mask >> v & 1) s.push_back(v);
        if (s.size() < 3) continue;
        const Graph sub = induced_subgraph(g, s);
        bool two_regular = true;
        for (Vertex v = 0; v < sub.order(); ++v) two_regular &= sub.degree(v) == 2;
        if (two_regular && is_connected(sub)) best = std::max(best, sub.order());
      }
      ASSERT_EQ(longest_induced_cycle_length(g), best);
    }
  }
}

TEST(Ball, Examples) {
  const Graph c6 = cycle_graph(6);
  EXPECT_EQ(ball(c6, 2, 0), VertexSet{2});
  EXPECT_EQ(ball(c6, 0, 1), (VertexSet{0, 1, 5}));
  EXPECT_EQ(ball(path_graph(5), 0, 2), (VertexSet{0, 1, 2}));
  EXPECT_THROW(ball(c6, 6, 1), std::out_of_range);
}

TEST(Ball, GrowsByNeighbourhoods) {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 8; ++n) {
    for (const Graph& g : all_graphs(n)) {
      const Vertex a = static_cast<Vertex>(rng() % n);
      for (int k = 1; k <= 4; ++k) {
        VertexSet grown = ball(g, a, k - 1);
        const VertexSet prev = grown;
        for (Vertex u : prev)
          for (Vertex w : g.neighbors(u)) grown.push_back(w);
        std::sort(grown.begin(), grown.end());
        grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
        ASSERT_EQ(ball(g, a, k), grown);
      }
    }
  }
}

TEST(Eccentricity, Examples) {
  EXPECT_EQ(eccentricity(complete_graph(5), 3), 1);
  EXPECT_EQ(eccentricity(path_graph(5), 0), 4);
  EXPECT_EQ(eccentricity(path_graph(5), 2), 2);
  Graph g(4);
  g.add_edge(0, 1);
  EXPECT_EQ(eccentricity(g, 3), 0);
  EXPECT_EQ(eccentricity(g, 0), 1);
}

TEST(MaximalCliques, Examples) {
  EXPECT_EQ(maximal_cliques(complete_graph(4)), std::vector<VertexSet>{iota_set(4)});
  const std::vector<VertexSet> c4{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
  EXPECT_EQ(maximal_cliques(cycle_graph(4)), c4);
  const std::vector<VertexSet> claw{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(maximal_cliques(star_graph(3)), claw);
  EXPECT_EQ(maximal_cliques(empty_graph(2)), (std::vector<VertexSet>{{0}, {1}}));
}

TEST(MaximalCliques, MatchesBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    for (const Graph& g : all_graphs(n)) {
      std::vector<VertexSet> want;
      for (unsigned mask = 1; mask < (1u << n); ++mask) {
        VertexSet s;
        for (Vertex v = 0; v < n; ++v)
          if (mask >> v & 1) s.push_back(v);
        if (!is_clique(g, s)) continue;
        bool maximal = true;
        for (Vertex v = 0; v < n && maximal; ++v) {
          if (mask >> v & 1) continue;
          maximal = !std::all_of(s.begin(), s.end(), [&](Vertex u) { return g.adjacent(u, v); });
        }
        if (maximal) want.push_back(s);
      }
      std::sort(want.begin(), want.end());
      ASSERT_EQ(maximal_cliques(g), want);
    }
  }
}

TEST(ExtendToMaximalClique, AscendingLabels) {
  Graph g = complete_graph(4);
  g.remove_edge(1, 3);
  EXPECT_EQ(extend_to_maximal_clique(g, {0}), (VertexSet{0, 1, 2}));
  EXPECT_EQ(extend_to_maximal_clique(g, {3}), (VertexSet{0, 2, 3}));
}

TEST(FindInduced, Examples) {
  const auto diag = find_induced(cycle_graph(4), empty_graph(2));
  ASSERT_TRUE(diag.has_value());
  EXPECT_FALSE(cycle_graph(4).adjacent((*diag)[0], (*diag)[1]));
  EXPECT_FALSE(find_induced(complete_graph(4), star_graph(3)).has_value());
  const auto id = find_induced(star_graph(3), star_graph(3));
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ((*id)[0], 0);
}

TEST(FindInduced, AgreesWithBruteForce) {
  std::vector<Graph> patterns;
  for (int p = 1; p <= 5; ++p)
    for (const Graph& g : all_graphs(p)) patterns.push_back(g);
  std::mt19937_64 rng(11);
  for (int n = 1; n <= 8; ++n) {
    const auto& hosts = all_graphs(n);
    for (int trial = 0; trial < 60; ++trial) {
      const Graph& host = hosts[rng() % hosts.size()];
      for (const Graph& pattern : patterns) {
        const auto emb = find_induced(host, pattern);
        ASSERT_EQ(emb.has_value(), testing::has_induced_brute_force(host, pattern));
        if (!emb) continue;
        std::vector<Vertex> sorted = *emb;
        std::sort(sorted.begin(), sorted.end());
        ASSERT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
        for (int a = 0; a < pattern.order(); ++a)
          for (int b = a + 1; b < pattern.order(); ++b)
            ASSERT_EQ(pattern.adjacent(a, b), host.adjacent((*emb)[a], (*emb)[b]));
      }
    }
  }
}

TEST(Components, AndBipartition) {
  Graph g(5);
  g.add_edge(0, 1);
  g.add_edge(3, 4);
  EXPECT_EQ(connected_components(g), (std::vector<VertexSet>{{0, 1}, {2}, {3, 4}}));
  EXPECT_FALSE(is_connected(g));
  EXPECT_TRUE(bipartition_colors(cycle_graph(6)).has_value());
  EXPECT_FALSE(bipartition_colors(cycle_graph(5)).has_value());
}

TEST(Complement, Involution) {
  for (const Graph& g : all_graphs(5)) ASSERT_EQ(complement(complement(g)), g);
  EXPECT_EQ(complement(complete_graph(4)), empty_graph(4));
}

}  // namespace
}  // namespace krausz
