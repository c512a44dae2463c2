// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "krausz/graph.hpp"

namespace krausz {

enum class GraphFormat { kGraph6, kEdgeList, kJson };

// "graph6", "edgelist", "json"; throws ParseError on anything else.
GraphFormat parse_graph_format(std::string_view name);
std::string_view format_name(GraphFormat format);
// Guess from a file name: .g6/.graph6 -> graph6, .json -> json, otherwise
// edge list.
GraphFormat format_from_path(std::string_view path);

// graph6 without the optional ">>graph6<<" header and without a trailing
// newline. Decoding accepts (and skips) the header and surrounding
// whitespace; padding bits must be zero.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

// One "u v" pair per line, 0-based. The writer emits a leading "# n N"
// comment so that trailing isolated vertices survive a round trip; the
// reader honours that comment and otherwise ignores lines starting with '#'.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(std::string_view text);

// {"n": N, "edges": [[u, v], ...]}
nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& doc);

std::string write_graph(const Graph& g, GraphFormat format);
Graph read_graph(std::string_view text, GraphFormat format);

}  // namespace krausz
