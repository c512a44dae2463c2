// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <nlohmann/json.hpp>

#include "krausz/chordal_kdim3.hpp"
#include "krausz/gadgets.hpp"
#include "krausz/hypergraph.hpp"
#include "krausz/partition.hpp"
#include "krausz/polar.hpp"

namespace krausz {

// Writers emit keys in a fixed order. Readers accept any key order and throw
// ParseError on schema mismatches.
using Json = nlohmann::ordered_json;

Json to_json(const KrauszPartition& q);
KrauszPartition partition_from_json(const nlohmann::json& doc);

Json to_json(const ValidationReport& report);

Json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const nlohmann::json& doc);

// {"q": q, "M": [[i, j, k], ...]}
Json to_json(const ThreeDMInstance& inst);
ThreeDMInstance instance_from_json(const nlohmann::json& doc);

Json to_json(const StarViolation& violation);
Json to_json(const GadgetMap& map);
Json to_json(const ColoringCertificate& cert);

// {"A": [...], "B": [...], "A_parts": [[...], ...]}
Json to_json(const PolarBipartition& bip);
PolarBipartition bipartition_from_json(const nlohmann::json& doc);

Json to_json(const MembershipResult& result);
Json to_json(const TraceStep& step);
Json to_json(const Kdim3Outcome& outcome);

// Parses text into a JSON document, mapping syntax errors to ParseError.
nlohmann::json parse_json(std::string_view text, std::string_view what);

}  // namespace krausz
