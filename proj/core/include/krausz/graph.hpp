// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace krausz {

using Vertex = int;

// Ordered list of vertex labels. Most operations keep it sorted ascending;
// induced_subgraph honours the caller's order.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Normalizes so that u < v.
Edge make_edge(Vertex a, Vertex b);

// Simple undirected graph on the vertices 0..n-1.
//
// Adjacency is kept twice: sorted neighbor lists for iteration and a dense
// matrix for O(1) adjacency tests. The graphs this library works with are
// small (exhaustive searches), so the quadratic matrix is not a concern.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int order() const { return n_; }
  std::size_t size() const { return edge_count_; }

  bool adjacent(Vertex a, Vertex b) const {
    return matrix_[static_cast<std::size_t>(a) * n_ + b] != 0;
  }
  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;

  // Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  // Construction helpers. Adding an existing edge is a no-op; self-loops and
  // out-of-range labels throw.
  void add_edge(Vertex a, Vertex b);
  void remove_edge(Vertex a, Vertex b);
  Vertex add_vertex();

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.matrix_ == b.matrix_;
  }

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<unsigned char> matrix_;
};

// Common graph families.
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center 0
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);

// Throws std::out_of_range if any label of `s` is not a vertex of `g`.
void check_vertices(const Graph& g, std::span<const Vertex> s);

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s);
bool is_clique(const Graph& g, std::span<const Vertex> s);
bool is_stable(const Graph& g, std::span<const Vertex> s);
Graph complement(const Graph& g);

// Perfect elimination ordering via lexicographic BFS followed by an explicit
// verification pass; std::nullopt when the graph is not chordal.
std::optional<std::vector<Vertex>> is_chordal(const Graph& g);

// Length of a longest chordless cycle, 0 for forests. Exponential in the
// worst case. When `stop_at` is given the search returns as soon as a
// chordless cycle of at least that length is found.
int longest_induced_cycle_length(const Graph& g,
                                 std::optional<int> stop_at = std::nullopt);

// Hop distances from `source`; -1 for unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);
VertexSet ball(const Graph& g, Vertex a, int radius);
// Eccentricity within the connected component of `v`.
int eccentricity(const Graph& g, Vertex v);

std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
// Two-colouring, or std::nullopt when the graph has an odd cycle.
std::optional<std::vector<int>> bipartition_colors(const Graph& g);

// All inclusion-maximal cliques, each sorted, listed in lexicographic order.
std::vector<VertexSet> maximal_cliques(const Graph& g);
// Maximal cliques that contain `v`.
std::vector<VertexSet> maximal_cliques_containing(const Graph& g, Vertex v);
// Adds common neighbours in ascending label order until maximal.
VertexSet extend_to_maximal_clique(const Graph& g, VertexSet clique);

// Injective map V(pattern) -> V(host) preserving adjacency and
// non-adjacency; result[i] is the image of pattern vertex i.
std::optional<std::vector<Vertex>> find_induced(const Graph& host,
                                                const Graph& pattern);

}  // namespace krausz
