// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "krausz/serialize.hpp"

#include <string>

#include "krausz/errors.hpp"

namespace krausz {

namespace {

using nlohmann::json;

template <typename T>
T field(const json& doc, const char* key, std::string_view what) {
  if (!doc.is_object() || !doc.contains(key))
    throw ParseError(std::string(what) + ": missing key \"" + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ParseError(std::string(what) + ": bad value for \"" + key + "\"");
  }
}

Json sets_to_json(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const VertexSet& s : sets) out.push_back(s);
  return out;
}

}  // namespace

json parse_json(std::string_view text, std::string_view what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Json to_json(const KrauszPartition& q) {
  Json out;
  out["k"] = q.k;
  out["m"] = q.m;
  out["clusters"] = sets_to_json(q.clusters);
  return out;
}

KrauszPartition partition_from_json(const json& doc) {
  constexpr std::string_view what = "partition";
  KrauszPartition q;
  q.k = field<int>(doc, "k", what);
  q.m = field<int>(doc, "m", what);
  q.clusters = field<std::vector<VertexSet>>(doc, "clusters", what);
  if (q.k < 1 || q.m < 1) throw ParseError("partition: k and m must be positive");
  return q;
}

Json to_json(const ValidationReport& report) {
  Json out;
  out["ok"] = report.ok;
  Json list = Json::array();
  for (const Violation& v : report.violations) {
    Json item;
    item["kind"] = std::string(to_string(v.kind));
    item["vertices"] = v.vertices;
    item["clusters"] = v.clusters;
    list.push_back(std::move(item));
  }
  out["violations"] = std::move(list);
  return out;
}

Json to_json(const Hypergraph& h) {
  Json out;
  out["n"] = h.n;
  out["edges"] = sets_to_json(h.edges);
  return out;
}

Hypergraph hypergraph_from_json(const json& doc) {
  constexpr std::string_view what = "hypergraph";
  Hypergraph h{field<int>(doc, "n", what),
               field<std::vector<VertexSet>>(doc, "edges", what)};
  try {
    check_hypergraph(h);
  } catch (const std::exception& e) {
    throw ParseError(std::string("hypergraph: ") + e.what());
  }
  return h;
}

Json to_json(const ThreeDMInstance& inst) {
  Json out;
  out["q"] = inst.q;
  Json triples = Json::array();
  for (const Triple& t : inst.triples) triples.push_back(t);
  out["M"] = std::move(triples);
  return out;
}

ThreeDMInstance instance_from_json(const json& doc) {
  constexpr std::string_view what = "instance";
  ThreeDMInstance inst;
  inst.q = field<int>(doc, "q", what);
  inst.triples = field<std::vector<Triple>>(doc, "M", what);
  if (inst.q < 1) throw ParseError("instance: q must be positive");
  for (const Triple& t : inst.triples)
    for (int c : t)
      if (c < 0 || c >= inst.q) throw ParseError("instance: triple index out of range");
  return inst;
}

Json to_json(const StarViolation& violation) {
  Json out;
  out["ab"] = violation.ab;
  out["ac"] = violation.ac;
  out["bc"] = violation.bc;
  out["missing"] = violation.missing;
  return out;
}

Json to_json(const GadgetMap& map) {
  Json out;
  out["q"] = map.q;
  out["X"] = map.x;
  out["Y"] = map.y;
  out["Z"] = map.z;
  out["v"] = map.v;
  out["v_pendants"] = map.v_pendants;
  if (map.w) {
    out["w"] = *map.w;
    out["w_pendants"] = map.w_pendants;
    Json f = Json::array();
    for (const auto& [u, fu] : map.f) f.push_back({u, fu});
    out["f"] = std::move(f);
  }
  return out;
}

Json to_json(const ColoringCertificate& cert) {
  Json out;
  out["clique"] = cert.clique;
  out["stable1"] = cert.stable1;
  out["stable2"] = cert.stable2;
  return out;
}

Json to_json(const PolarBipartition& bip) {
  Json out;
  out["A"] = bip.a;
  out["B"] = bip.b;
  out["A_parts"] = sets_to_json(bip.a_parts);
  return out;
}

PolarBipartition bipartition_from_json(const json& doc) {
  constexpr std::string_view what = "bipartition";
  PolarBipartition bip;
  bip.a = field<VertexSet>(doc, "A", what);
  bip.b = field<VertexSet>(doc, "B", what);
  bip.a_parts = field<std::vector<VertexSet>>(doc, "A_parts", what);
  return bip;
}

Json to_json(const MembershipResult& result) {
  Json out;
  out["member"] = result.member;
  out["method"] = result.method;
  if (result.witness) out["witness"] = to_json(*result.witness);
  if (result.forbidden) {
    Json w;
    w["name"] = result.forbidden->name;
    w["embedding"] = result.forbidden->embedding;
    out["forbidden_witness"] = std::move(w);
  }
  return out;
}

Json to_json(const TraceStep& step) {
  Json out;
  out["rule"] = step.rule;
  out["vertex"] = step.vertex;
  out["clique"] = step.clique;
  out["fragment_size"] = step.fragment_size;
  out["residual_edges"] = step.residual_edges;
  return out;
}

Json to_json(const Kdim3Outcome& outcome) {
  Json out;
  if (const auto* reduced = std::get_if<Reduced>(&outcome)) {
    out["status"] = "reduced";
    out["fragment"] = sets_to_json(reduced->fragment.clusters);
    Json pendants = Json::array();
    for (const Edge& e : reduced->pendants) pendants.push_back({e.u, e.v});
    out["pendants"] = std::move(pendants);
    out["max_degree"] = reduced->graph.max_degree();
    out["residual_edges"] = reduced->graph.size();
  } else {
    const auto& rejected = std::get<Rejected>(outcome);
    out["status"] = "rejected";
    out["rule"] = std::string(to_string(rejected.rule));
    out["vertex"] = rejected.vertex;
    out["witness"] = rejected.witness;
  }
  return out;
}

}  // namespace krausz
