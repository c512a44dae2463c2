// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "krausz/generators.hpp"

#include <algorithm>
#include <stdexcept>

namespace krausz {

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = Rng::max() - Rng::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

bool bernoulli(Rng& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

Graph random_graph(int n, double p, Rng& rng) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (bernoulli(rng, p)) g.add_edge(u, v);
  return g;
}

Graph random_chordal(int n, Rng& rng) {
  if (n < 0) throw std::invalid_argument("random_chordal: negative order");
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) {
    if (uniform_below(rng, 8) == 0) continue;
    // Random maximal clique among 0..v-1 grown from a random vertex.
    VertexSet clique{static_cast<Vertex>(uniform_below(rng, v))};
    VertexSet pool;
    for (Vertex u : g.neighbors(clique[0]))
      if (u < v) pool.push_back(u);
    while (!pool.empty()) {
      const Vertex pick = pool[uniform_below(rng, pool.size())];
      clique.push_back(pick);
      std::erase_if(pool, [&](Vertex u) { return u == pick || !g.adjacent(u, pick); });
    }
    // Keep each member with probability 1/2, but at least one.
    VertexSet chosen;
    for (Vertex u : clique)
      if (bernoulli(rng, 0.5)) chosen.push_back(u);
    if (chosen.empty()) chosen.push_back(clique[uniform_below(rng, clique.size())]);
    for (Vertex u : chosen) g.add_edge(u, v);
  }
  return g;
}

ThreeDMInstance random_instance(int q, double density, Rng& rng) {
  if (q < 1) throw std::invalid_argument("random_instance: q must be positive");
  const std::size_t full = static_cast<std::size_t>(q) * q * q;
  ThreeDMInstance inst{q, {}};
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Triple> triples;
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        for (int c = 0; c < q; ++c)
          if (bernoulli(rng, density)) triples.push_back({a, b, c});
    inst.triples = star_closure(q, std::move(triples));
    if (density >= 1.0 || inst.triples.size() < full) break;
  }
  check_instance(inst);
  return inst;
}

}  // namespace krausz
