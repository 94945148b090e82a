// Copyright 2026 The gwlkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gwlkit/graph_io.h"

#include <fstream>
#include <sstream>

#include "gwlkit/diagnostics.h"

namespace gwl {
namespace {

using nlohmann::json;

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kParse, what);
}

Scalar ComponentFromJson(const json& c, NumericMode mode) {
  if (c.is_string()) return Scalar::Parse(c.get<std::string>(), mode);
  if (c.is_number_integer()) {
    return Scalar::Parse(c.dump(), mode);
  }
  if (c.is_number()) {
    if (mode == NumericMode::kExact) {
      Bad("exact components must be strings \"p/q\" or integers, got " +
          c.dump());
    }
    return Scalar(c.get<double>());
  }
  Bad("expected a numeric component, got " + c.dump());
}

json ComponentToJson(const Scalar& s) {
  if (s.is_exact()) return s.ToString();
  return s.ToDouble();
}

Vec VecFromJson(const json& arr, NumericMode mode, const char* what) {
  if (!arr.is_array()) Bad(std::string(what) + " must be an array");
  Vec v;
  for (const auto& c : arr) v.push_back(ComponentFromJson(c, mode));
  return v;
}

json VecToJson(const Vec& v) {
  json arr = json::array();
  for (const auto& x : v) arr.push_back(ComponentToJson(x));
  return arr;
}

std::string LineColumn(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending token.
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::kParse,
                LineColumn(text, byte) + ": " + std::string(e.what()));
  }
}

}  // namespace

GeometricGraph GraphFromJson(const json& doc) {
  if (!doc.is_object()) Bad("graph must be a JSON object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) {
    Bad("graph needs an integer \"dim\"");
  }
  const long dim = doc["dim"].get<long>();
  if (dim < 1 || dim > 3) Bad("\"dim\" must be 1, 2 or 3");
  NumericMode mode = NumericMode::kExact;
  if (doc.contains("numeric")) {
    if (!doc["numeric"].is_string()) Bad("\"numeric\" must be a string");
    const std::string name = doc["numeric"].get<std::string>();
    if (name != "exact" && name != "float") {
      Bad("\"numeric\" must be \"exact\" or \"float\"");
    }
    mode = ParseNumericMode(name);
  }
  if (!doc.contains("nodes") || !doc["nodes"].is_array()) {
    Bad("graph needs a \"nodes\" array");
  }
  std::vector<NodeSpec> nodes;
  for (const auto& jn : doc["nodes"]) {
    if (!jn.is_object()) Bad("each node must be an object");
    NodeSpec spec;
    if (jn.contains("s")) {
      if (!jn["s"].is_array()) Bad("node \"s\" must be an array");
      for (const auto& tok : jn["s"]) {
        spec.scalars.push_back(tok.is_string() ? tok.get<std::string>()
                                               : tok.dump());
      }
    }
    if (jn.contains("v")) {
      if (!jn["v"].is_array()) Bad("node \"v\" must be an array of vectors");
      for (const auto& jv : jn["v"]) {
        spec.vectors.push_back(VecFromJson(jv, mode, "vector feature"));
      }
    }
    if (!jn.contains("x")) Bad("node is missing its position \"x\"");
    spec.position = VecFromJson(jn["x"], mode, "position");
    nodes.push_back(std::move(spec));
  }
  const bool has_edges = doc.contains("edges");
  const bool has_cutoff = doc.contains("cutoff");
  if (has_edges && has_cutoff) Bad("give either \"edges\" or \"cutoff\", not both");
  if (has_cutoff) {
    return BuildRadialGraph(static_cast<std::size_t>(dim), std::move(nodes),
                            ComponentFromJson(doc["cutoff"], mode));
  }
  std::vector<Edge> edges;
  if (has_edges) {
    if (!doc["edges"].is_array()) Bad("\"edges\" must be an array");
    for (const auto& je : doc["edges"]) {
      if (!je.is_array() || je.size() != 2 || !je[0].is_number_unsigned() ||
          !je[1].is_number_unsigned()) {
        Bad("each edge must be a pair of node indices, got " + je.dump());
      }
      edges.emplace_back(je[0].get<std::size_t>(), je[1].get<std::size_t>());
    }
  }
  return GeometricGraph(static_cast<std::size_t>(dim), mode, std::move(nodes),
                        edges);
}

json GraphToJson(const GeometricGraph& g) {
  json doc;
  doc["dim"] = g.dim();
  doc["numeric"] = NumericModeName(g.mode());
  json nodes = json::array();
  for (std::size_t i = 0; i < g.size(); ++i) {
    json jn;
    jn["s"] = g.scalars(i);
    if (!g.vectors(i).empty()) {
      json vs = json::array();
      for (const auto& v : g.vectors(i)) vs.push_back(VecToJson(v));
      jn["v"] = std::move(vs);
    }
    jn["x"] = VecToJson(g.position(i));
    nodes.push_back(std::move(jn));
  }
  doc["nodes"] = std::move(nodes);
  json edges = json::array();
  for (const auto& [i, j] : g.edges()) edges.push_back({i, j});
  doc["edges"] = std::move(edges);
  return doc;
}

GeometricGraph ParseGraph(std::string_view text) {
  return GraphFromJson(ParseJson(text));
}

std::vector<GeometricGraph> ParseGraphs(std::string_view text) {
  const json doc = ParseJson(text);
  std::vector<GeometricGraph> out;
  const json* list = nullptr;
  if (doc.is_array()) {
    list = &doc;
  } else if (doc.is_object() && doc.contains("graphs")) {
    list = &doc["graphs"];
    if (!list->is_array()) Bad("\"graphs\" must be an array");
  }
  if (list == nullptr) {
    out.push_back(GraphFromJson(doc));
    return out;
  }
  for (const auto& g : *list) out.push_back(GraphFromJson(g));
  return out;
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << text;
}

GeometricGraph LoadGraph(const std::string& path) {
  return ParseGraph(ReadTextFile(path));
}

std::vector<GeometricGraph> LoadGraphs(const std::string& path) {
  return ParseGraphs(ReadTextFile(path));
}

void SaveGraph(const std::string& path, const GeometricGraph& g) {
  WriteTextFile(path, GraphToJson(g).dump(2) + "\n");
}

}  // namespace gwl
