// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "krausz/gadgets.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "krausz/errors.hpp"

namespace krausz {

void check_instance(ThreeDMInstance& inst) {
  if (inst.q < 1) throw InstanceError("q must be at least 1");
  for (const Triple& t : inst.triples) {
    for (int c : t) {
      if (c < 0 || c >= inst.q) throw InstanceError("triple coordinate out of range");
    }
  }
  std::sort(inst.triples.begin(), inst.triples.end());
  inst.triples.erase(std::unique(inst.triples.begin(), inst.triples.end()),
                     inst.triples.end());
}

namespace {

struct PairIndex {
  // First triple witnessing each projected pair, or nullopt.
  std::vector<std::optional<Triple>> xy, xz, yz;
  int q;

  explicit PairIndex(const ThreeDMInstance& inst)
      : xy(inst.q * inst.q), xz(inst.q * inst.q), yz(inst.q * inst.q), q(inst.q) {
    for (const Triple& t : inst.triples) {
      if (!xy[t[0] * q + t[1]]) xy[t[0] * q + t[1]] = t;
      if (!xz[t[0] * q + t[2]]) xz[t[0] * q + t[2]] = t;
      if (!yz[t[1] * q + t[2]]) yz[t[1] * q + t[2]] = t;
    }
  }
};

}  // namespace

std::optional<StarViolation> validate_star(const ThreeDMInstance& inst) {
  ThreeDMInstance checked = inst;
  check_instance(checked);
  const int q = checked.q;
  const PairIndex index(checked);
  const std::set<Triple> present(checked.triples.begin(), checked.triples.end());
  for (int a = 0; a < q; ++a) {
    for (int b = 0; b < q; ++b) {
      if (!index.xy[a * q + b]) continue;
      for (int c = 0; c < q; ++c) {
        if (!index.xz[a * q + c] || !index.yz[b * q + c]) continue;
        const Triple t{a, b, c};
        if (!present.contains(t)) {
          return StarViolation{*index.xy[a * q + b], *index.xz[a * q + c],
                               *index.yz[b * q + c], t};
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<Triple> star_closure(int q, std::vector<Triple> triples) {
  ThreeDMInstance inst{q, std::move(triples)};
  check_instance(inst);
  while (auto violation = validate_star(inst)) {
    inst.triples.push_back(violation->missing);
    std::sort(inst.triples.begin(), inst.triples.end());
  }
  return inst.triples;
}

GadgetMap gadget_map(int q, bool prime) {
  GadgetMap map;
  map.q = q;
  for (int i = 0; i < q; ++i) {
    map.x.push_back(i);
    map.y.push_back(q + i);
    map.z.push_back(2 * q + i);
  }
  map.v = 3 * q;
  for (int i = 0; i < q; ++i) map.v_pendants.push_back(3 * q + 1 + i);
  if (!prime) return map;

  Vertex next = 4 * q + 1;
  map.w = next++;
  for (int i = 0; i < 2 * q; ++i) map.w_pendants.push_back(next++);
  for (Vertex u : map.y) map.f.emplace_back(u, next++);
  for (Vertex u : map.z) map.f.emplace_back(u, next++);
  map.f.emplace_back(map.v, next++);
  return map;
}

bool check_coloring(const Graph& g, const ColoringCertificate& cert) {
  std::vector<int> seen(g.order(), 0);
  for (const VertexSet* part : {&cert.clique, &cert.stable1, &cert.stable2}) {
    check_vertices(g, *part);
    for (Vertex v : *part) ++seen[v];
  }
  const bool cover = std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
  return cover && is_clique(g, cert.clique) && is_stable(g, cert.stable1) &&
         is_stable(g, cert.stable2);
}

namespace {

ThreeDMInstance checked_closed(const ThreeDMInstance& inst) {
  ThreeDMInstance checked = inst;
  check_instance(checked);
  if (auto v = validate_star(checked)) {
    auto fmt = [](const Triple& t) {
      return "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
             std::to_string(t[2]) + ")";
    };
    throw InstanceError("closure condition violated: " + fmt(v->ab) + ", " + fmt(v->ac) +
                        ", " + fmt(v->bc) + " present but " + fmt(v->missing) +
                        " missing");
  }
  return checked;
}

}  // namespace

Gadget build_gadget(const ThreeDMInstance& raw) {
  const ThreeDMInstance inst = checked_closed(raw);
  GadgetMap map = gadget_map(inst.q, false);
  Graph g(4 * inst.q + 1);
  for (const Triple& t : inst.triples) {
    const Vertex a = map.x[t[0]], b = map.y[t[1]], c = map.z[t[2]];
    g.add_edge(a, b);
    g.add_edge(b, c);
    g.add_edge(a, c);
  }
  for (Vertex p : map.v_pendants) g.add_edge(map.v, p);
  for (const auto* block : {&map.x, &map.y, &map.z})
    for (Vertex d : *block) g.add_edge(map.v, d);
  return Gadget{std::move(g), std::move(map), std::nullopt};
}

Gadget build_gadget_prime(const ThreeDMInstance& raw) {
  const ThreeDMInstance inst = checked_closed(raw);
  const Gadget base = build_gadget(inst);
  GadgetMap map = gadget_map(inst.q, true);
  const int order = static_cast<int>(map.f.back().second) + 1;

  Graph g(order, base.graph.edges());
  for (Vertex p : map.w_pendants) g.add_edge(*map.w, p);
  for (Vertex x : map.x) g.add_edge(*map.w, x);
  for (std::size_t i = 0; i < map.x.size(); ++i)
    for (std::size_t j = i + 1; j < map.x.size(); ++j) g.add_edge(map.x[i], map.x[j]);
  for (const auto& [u, fu] : map.f) g.add_edge(u, fu);

  ColoringCertificate cert;
  cert.clique = map.x;
  cert.clique.push_back(map.v);
  cert.stable1 = map.y;
  cert.stable2 = map.z;
  for (const auto& [u, fu] : map.f) {
    if (u >= map.y.front() && u <= map.y.back()) cert.stable2.push_back(fu);
    if (u >= map.z.front() && u <= map.z.back()) cert.stable1.push_back(fu);
    if (u == map.v) cert.stable1.push_back(fu);
  }
  for (Vertex p : map.v_pendants) cert.stable1.push_back(p);
  cert.stable1.push_back(*map.w);
  for (Vertex p : map.w_pendants) cert.stable2.push_back(p);
  for (VertexSet* s : {&cert.clique, &cert.stable1, &cert.stable2})
    std::sort(s->begin(), s->end());

  return Gadget{std::move(g), std::move(map), std::move(cert)};
}

std::vector<Triple> extract_matching(const Graph& gadget, const KrauszPartition& q,
                                     const ThreeDMInstance& raw, const GadgetMap& map) {
  ThreeDMInstance inst = raw;
  check_instance(inst);
  if (map.q != inst.q || gadget.order() < 4 * inst.q + 1)
    throw std::invalid_argument("gadget map does not match the instance");
  if (!validate(gadget, q).ok) throw std::invalid_argument("partition does not validate");
  if (q.k > 2 * inst.q)
    throw std::invalid_argument("partition load bound exceeds 2q");

  const std::set<Triple> present(inst.triples.begin(), inst.triples.end());
  auto index_in = [](const std::vector<Vertex>& block, Vertex u) {
    auto it = std::find(block.begin(), block.end(), u);
    return it == block.end() ? -1 : static_cast<int>(it - block.begin());
  };

  std::vector<Triple> matching;
  std::vector<bool> used(3 * inst.q, false);
  for (const VertexSet& c : q.clusters) {
    if (c.size() < 2 || std::find(c.begin(), c.end(), map.v) == c.end()) continue;
    if (c.size() == 2 && index_in(map.v_pendants, c[0] == map.v ? c[1] : c[0]) >= 0)
      continue;
    if (c.size() != 4)
      throw std::invalid_argument("cluster through v does not have four vertices");
    Triple t{-1, -1, -1};
    for (Vertex u : c) {
      if (u == map.v) continue;
      int i;
      if ((i = index_in(map.x, u)) >= 0 && t[0] < 0) {
        t[0] = i;
      } else if ((i = index_in(map.y, u)) >= 0 && t[1] < 0) {
        t[1] = i;
      } else if ((i = index_in(map.z, u)) >= 0 && t[2] < 0) {
        t[2] = i;
      } else {
        throw std::invalid_argument("cluster through v is not of the form {v, x, y, z}");
      }
    }
    if (!present.contains(t)) throw std::invalid_argument("extracted triple not in M");
    for (int axis = 0; axis < 3; ++axis) {
      const int slot = axis * inst.q + t[axis];
      if (used[slot]) throw std::invalid_argument("extracted triples overlap");
      used[slot] = true;
    }
    matching.push_back(t);
  }
  if (static_cast<int>(matching.size()) != inst.q)
    throw std::invalid_argument("partition does not encode a perfect matching");
  std::sort(matching.begin(), matching.end());
  return matching;
}

}  // namespace krausz
