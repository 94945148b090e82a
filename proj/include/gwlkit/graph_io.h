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

#ifndef GWLKIT_GRAPH_IO_H_
#define GWLKIT_GRAPH_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "gwlkit/graph.h"
#include "json.hpp"

namespace gwl {

// Graph file format (JSON):
//   { "dim": 3, "numeric": "exact" | "float",
//     "nodes": [ { "s": [token...], "v": [[c...]...], "x": [c...] } ...],
//     "edges": [[i, j] ...] }
// Exact components are strings "p/q" (integers may also be plain JSON
// integers); float components are JSON numbers. A "cutoff" component may
// replace "edges", in which case edges come from the radial construction.
GeometricGraph GraphFromJson(const nlohmann::json& doc);
nlohmann::json GraphToJson(const GeometricGraph& g);

// Parses text holding one graph object. Syntax errors are reported as
// kParse with "line L, column C" in the message.
GeometricGraph ParseGraph(std::string_view text);

// A file may hold one graph, a JSON array of graphs, or {"graphs": [...]}.
std::vector<GeometricGraph> ParseGraphs(std::string_view text);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

GeometricGraph LoadGraph(const std::string& path);
std::vector<GeometricGraph> LoadGraphs(const std::string& path);
void SaveGraph(const std::string& path, const GeometricGraph& g);

}  // namespace gwl

#endif  // GWLKIT_GRAPH_IO_H_
