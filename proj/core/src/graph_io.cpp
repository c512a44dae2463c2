// Copyright 2026 The krausz Authors.
// SPDX-License-Identifier: Apache-2.0

#include "krausz/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <string>
#include <vector>

#include "krausz/errors.hpp"

namespace krausz {

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::kGraph6;
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "json") return GraphFormat::kJson;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

std::string_view format_name(GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6:
      return "graph6";
    case GraphFormat::kEdgeList:
      return "edgelist";
    case GraphFormat::kJson:
      return "json";
  }
  return "edgelist";
}

GraphFormat format_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.substr(path.size() - suffix.size()) == suffix;
  };
  if (ends_with(".g6") || ends_with(".graph6")) return GraphFormat::kGraph6;
  if (ends_with(".json")) return GraphFormat::kJson;
  return GraphFormat::kEdgeList;
}

std::string to_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }

  int bits = 0;
  int acc = 0;
  for (Vertex j = 1; j < g.order(); ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

Graph from_graph6(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: invalid character");
  }

  std::size_t pos = 0;
  auto take6 = [&](int count) {
    std::uint64_t value = 0;
    for (int i = 0; i < count; ++i) {
      if (pos >= text.size()) throw ParseError("graph6: truncated order field");
      value = (value << 6) | static_cast<std::uint64_t>(text[pos++] - 63);
    }
    return value;
  };

  std::uint64_t n = 0;
  if (text[0] != 126) {
    n = take6(1);
  } else if (text.size() > 1 && text[1] == 126) {
    pos = 2;
    n = take6(6);
  } else {
    pos = 1;
    n = take6(3);
  }
  if (n > 100000) throw ParseError("graph6: graph too large");

  const std::uint64_t bit_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos != byte_count) {
    throw ParseError("graph6: expected " + std::to_string(byte_count) +
                     " adjacency bytes, found " +
                     std::to_string(text.size() - pos));
  }

  Graph g(static_cast<int>(n));
  std::uint64_t index = 0;
  for (Vertex j = 1; j < static_cast<Vertex>(n); ++j) {
    for (Vertex i = 0; i < j; ++i, ++index) {
      const int byte = text[pos + index / 6] - 63;
      if ((byte >> (5 - index % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; index < byte_count * 6; ++index) {
    const int byte = text[pos + index / 6] - 63;
    if ((byte >> (5 - index % 6)) & 1)
      throw ParseError("graph6: non-zero padding bits");
  }
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::string out = "# n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

namespace {

bool parse_int(std::string_view token, long long& value) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

constexpr long long kMaxOrder = 1'000'000;

}  // namespace

Graph from_edge_list(std::string_view text) {
  long long declared = -1;
  long long max_label = -1;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto tokens = split_ws(line.substr(1));
      long long n = 0;
      if (tokens.size() == 2 && tokens[0] == "n" && parse_int(tokens[1], n)) {
        if (n < 0 || n > kMaxOrder) throw ParseError("edgelist: bad vertex count");
        declared = n;
      }
      continue;
    }
    const auto tokens = split_ws(line);
    long long u = 0, v = 0;
    if (tokens.size() != 2 || !parse_int(tokens[0], u) || !parse_int(tokens[1], v)) {
      throw ParseError("edgelist: line " + std::to_string(line_no) +
                       " is not a pair of integers");
    }
    if (u < 0 || v < 0 || u > kMaxOrder || v > kMaxOrder)
      throw ParseError("edgelist: label out of range on line " + std::to_string(line_no));
    if (u == v) throw ParseError("edgelist: self-loop on line " + std::to_string(line_no));
    max_label = std::max({max_label, u, v});
    edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  const long long n = declared >= 0 ? declared : max_label + 1;
  if (max_label >= n)
    throw ParseError("edgelist: label exceeds declared vertex count");
  return Graph(static_cast<int>(n), edges);
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.order();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  doc["edges"] = std::move(edges);
  return doc;
}

Graph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges") ||
      !doc["n"].is_number_integer() || !doc["edges"].is_array()) {
    throw ParseError("json graph: expected {\"n\": int, \"edges\": [[u, v], ...]}");
  }
  const long long n = doc["n"].get<long long>();
  if (n < 0 || n > kMaxOrder) throw ParseError("json graph: bad vertex count");
  Graph g(static_cast<int>(n));
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError("json graph: each edge must be a pair of integers");
    }
    const long long u = e[0].get<long long>();
    const long long v = e[1].get<long long>();
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("json graph: edge endpoint out of range");
    if (u == v) throw ParseError("json graph: self-loop");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

std::string write_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6:
      return to_graph6(g) + "\n";
    case GraphFormat::kEdgeList:
      return to_edge_list(g);
    case GraphFormat::kJson:
      return graph_to_json(g).dump() + "\n";
  }
  return {};
}

Graph read_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::kGraph6:
      return from_graph6(text);
    case GraphFormat::kEdgeList:
      return from_edge_list(text);
    case GraphFormat::kJson: {
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(text);
      } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("json graph: ") + e.what());
      }
      return graph_from_json(doc);
    }
  }
  throw ParseError("unknown graph format");
}

}  // namespace krausz
