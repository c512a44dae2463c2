// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "krausz/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace krausz {

Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("graph order must be non-negative");
  adj_.resize(static_cast<std::size_t>(n));
  matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(Vertex v) const {
  if (!contains(v)) {
    throw std::out_of_range("vertex " + std::to_string(v) +
                            " out of range for graph of order " +
                            std::to_string(n_));
  }
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

void Graph::add_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("self-loops are not allowed");
  if (adjacent(a, b)) return;
  matrix_[static_cast<std::size_t>(a) * n_ + b] = 1;
  matrix_[static_cast<std::size_t>(b) * n_ + a] = 1;
  adj_[a].insert(std::lower_bound(adj_[a].begin(), adj_[a].end(), b), b);
  adj_[b].insert(std::lower_bound(adj_[b].begin(), adj_[b].end(), a), a);
  ++edge_count_;
}

void Graph::remove_edge(Vertex a, Vertex b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b || !adjacent(a, b)) return;
  matrix_[static_cast<std::size_t>(a) * n_ + b] = 0;
  matrix_[static_cast<std::size_t>(b) * n_ + a] = 0;
  adj_[a].erase(std::lower_bound(adj_[a].begin(), adj_[a].end(), b));
  adj_[b].erase(std::lower_bound(adj_[b].begin(), adj_[b].end(), a));
  --edge_count_;
}

Vertex Graph::add_vertex() {
  Graph grown(n_ + 1);
  for (const Edge& e : edges()) grown.add_edge(e.u, e.v);
  *this = std::move(grown);
  return n_ - 1;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph star_graph(int leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

void check_vertices(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) {
    if (!g.contains(v)) {
      throw std::out_of_range("vertex " + std::to_string(v) +
                              " out of range for graph of order " +
                              std::to_string(g.order()));
    }
  }
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  check_vertices(g, s);
  const int k = static_cast<int>(s.size());
  Graph out(k);
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (s[i] == s[j]) throw std::invalid_argument("duplicate vertex in set");
      if (g.adjacent(s[i], s[j])) out.add_edge(i, j);
    }
  }
  return out;
}

bool is_clique(const Graph& g, std::span<const Vertex> s) {
  check_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || !g.adjacent(s[i], s[j])) return false;
  return true;
}

bool is_stable(const Graph& g, std::span<const Vertex> s) {
  check_vertices(g, s);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) return false;
  return true;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) out.add_edge(u, v);
  return out;
}

std::optional<std::vector<Vertex>> is_chordal(const Graph& g) {
  const int n = g.order();
  // Lexicographic BFS with explicit labels; O(n^2 log n), adequate here.
  std::vector<std::vector<int>> label(n);
  std::vector<bool> visited(n, false);
  std::vector<Vertex> visit_order;
  visit_order.reserve(n);
  for (int step = 0; step < n; ++step) {
    Vertex best = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (visited[v]) continue;
      if (best < 0 || label[v] > label[best]) best = v;
    }
    visited[best] = true;
    visit_order.push_back(best);
    for (Vertex w : g.neighbors(best))
      if (!visited[w]) label[w].push_back(n - step);
  }
  std::vector<Vertex> peo(visit_order.rbegin(), visit_order.rend());
  std::vector<int> position(n);
  for (int i = 0; i < n; ++i) position[peo[i]] = i;

  for (Vertex v : peo) {
    Vertex parent = -1;
    for (Vertex w : g.neighbors(v)) {
      if (position[w] > position[v] &&
          (parent < 0 || position[w] < position[parent])) {
        parent = w;
      }
    }
    if (parent < 0) continue;
    for (Vertex w : g.neighbors(v)) {
      if (w != parent && position[w] > position[v] && !g.adjacent(parent, w))
        return std::nullopt;
    }
  }
  return peo;
}

namespace {

struct CycleSearch {
  const Graph& g;
  int stop_at;
  int best = 0;
  std::vector<Vertex> path;
  std::vector<bool> on_path;

  // Extends the induced path `path` (first vertex is the minimum of the
  // cycle). Returns true when the early-exit length was reached.
  bool extend() {
    const Vertex start = path.front();
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w <= start || on_path[w]) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.adjacent(w, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      if (path.size() >= 2 && g.adjacent(w, start)) {
        best = std::max(best, static_cast<int>(path.size()) + 1);
        if (best >= stop_at) return true;
        continue;
      }
      path.push_back(w);
      on_path[w] = true;
      const bool done = extend();
      on_path[w] = false;
      path.pop_back();
      if (done) return true;
    }
    return false;
  }
};

}  // namespace

int longest_induced_cycle_length(const Graph& g, std::optional<int> stop_at) {
  CycleSearch search{g, stop_at.value_or(g.order() + 1), 0, {},
                     std::vector<bool>(g.order(), false)};
  for (Vertex s = 0; s < g.order(); ++s) {
    search.path = {s};
    search.on_path[s] = true;
    const bool done = search.extend();
    search.on_path[s] = false;
    if (done) break;
  }
  return search.best;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  check_vertices(g, std::span<const Vertex>(&source, 1));
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

VertexSet ball(const Graph& g, Vertex a, int radius) {
  if (radius < 0) throw std::invalid_argument("radius must be non-negative");
  const std::vector<int> dist = bfs_distances(g, a);
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (dist[v] >= 0 && dist[v] <= radius) out.push_back(v);
  return out;
}

int eccentricity(const Graph& g, Vertex v) {
  const std::vector<int> dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    std::deque<Vertex> queue{s};
    seen[s] = true;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return connected_components(g).size() <= 1;
}

std::optional<std::vector<int>> bipartition_colors(const Graph& g) {
  std::vector<int> color(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

namespace {

// Bron-Kerbosch with Tomita pivoting.
void bron_kerbosch(const Graph& g, VertexSet& r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (p.empty() && x.empty()) {
    VertexSet clique = r;
    std::sort(clique.begin(), clique.end());
    out.push_back(std::move(clique));
    return;
  }
  Vertex pivot = -1;
  int pivot_hits = -1;
  for (const VertexSet* side : {&p, &x}) {
    for (Vertex u : *side) {
      int hits = 0;
      for (Vertex w : p) hits += g.adjacent(u, w) ? 1 : 0;
      if (hits > pivot_hits) {
        pivot_hits = hits;
        pivot = u;
      }
    }
  }
  VertexSet candidates;
  for (Vertex v : p)
    if (!g.adjacent(pivot, v)) candidates.push_back(v);
  for (Vertex v : candidates) {
    VertexSet next_p, next_x;
    for (Vertex w : p)
      if (g.adjacent(v, w)) next_p.push_back(w);
    for (Vertex w : x)
      if (g.adjacent(v, w)) next_x.push_back(w);
    r.push_back(v);
    bron_kerbosch(g, r, std::move(next_p), std::move(next_x), out);
    r.pop_back();
    p.erase(std::find(p.begin(), p.end(), v));
    x.push_back(v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  VertexSet r, p(g.order());
  for (Vertex v = 0; v < g.order(); ++v) p[v] = v;
  bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> maximal_cliques_containing(const Graph& g, Vertex v) {
  check_vertices(g, std::span<const Vertex>(&v, 1));
  std::vector<VertexSet> out;
  VertexSet r{v};
  VertexSet p(g.neighbors(v).begin(), g.neighbors(v).end());
  bron_kerbosch(g, r, std::move(p), {}, out);
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet extend_to_maximal_clique(const Graph& g, VertexSet clique) {
  check_vertices(g, clique);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (std::find(clique.begin(), clique.end(), v) != clique.end()) continue;
    bool all = true;
    for (Vertex c : clique) {
      if (!g.adjacent(v, c)) {
        all = false;
        break;
      }
    }
    if (all) clique.push_back(v);
  }
  std::sort(clique.begin(), clique.end());
  return clique;
}

namespace {

struct InducedMatcher {
  const Graph& host;
  const Graph& pattern;
  std::vector<Vertex> order;      // pattern vertices in matching order
  std::vector<Vertex> image;      // pattern vertex -> host vertex
  std::vector<bool> used;

  bool match(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex p = order[depth];
    for (Vertex h = 0; h < host.order(); ++h) {
      if (used[h] || host.degree(h) < pattern.degree(p)) continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex q = order[i];
        ok = pattern.adjacent(p, q) == host.adjacent(h, image[q]);
      }
      if (!ok) continue;
      image[p] = h;
      used[h] = true;
      if (match(depth + 1)) return true;
      used[h] = false;
    }
    image[p] = -1;
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_induced(const Graph& host,
                                                const Graph& pattern) {
  const int k = pattern.order();
  if (k > host.order()) return std::nullopt;

  // Match vertices with many already-placed neighbours first so that
  // adjacency constraints bite early.
  std::vector<Vertex> order;
  std::vector<bool> placed(k, false);
  for (int step = 0; step < k; ++step) {
    Vertex best = -1;
    int best_links = -1;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      int links = 0;
      for (Vertex w : pattern.neighbors(v)) links += placed[w] ? 1 : 0;
      if (links > best_links ||
          (links == best_links && pattern.degree(v) > pattern.degree(best))) {
        best = v;
        best_links = links;
      }
    }
    placed[best] = true;
    order.push_back(best);
  }

  InducedMatcher m{host, pattern, std::move(order), std::vector<Vertex>(k, -1),
                   std::vector<bool>(host.order(), false)};
  if (!m.match(0)) return std::nullopt;
  return m.image;
}

}  // namespace krausz
