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

#include "gwlkit/graph.h"

#include <algorithm>
#include <deque>
#include <sstream>

#include "gwlkit/diagnostics.h"

namespace gwl {
namespace {

void CheckVector(const Vec& v, std::size_t dim, NumericMode mode,
                 const char* what, std::size_t node) {
  if (v.size() != dim) {
    std::ostringstream msg;
    msg << "node " << node << ": " << what << " has " << v.size()
        << " components, expected " << dim;
    throw Error(ErrorCode::kDimensionMismatch, msg.str());
  }
  for (const auto& x : v) {
    if (x.mode() != mode) {
      std::ostringstream msg;
      msg << "node " << node << ": " << what << " is not in "
          << NumericModeName(mode) << " mode";
      throw Error(ErrorCode::kModeMismatch, msg.str());
    }
  }
}

}  // namespace

GeometricGraph::GeometricGraph(std::size_t dim, NumericMode mode,
                               std::vector<NodeSpec> nodes,
                               const std::vector<Edge>& edges)
    : dim_(dim), mode_(mode), nodes_(std::move(nodes)) {
  if (dim_ < 1 || dim_ > 3) {
    throw Error(ErrorCode::kInvalidArgument, "dimension must be 1, 2 or 3");
  }
  const std::size_t n = nodes_.size();
  for (std::size_t i = 0; i < n; ++i) {
    CheckVector(nodes_[i].position, dim_, mode_, "position", i);
    for (const auto& v : nodes_[i].vectors) {
      CheckVector(v, dim_, mode_, "vector feature", i);
    }
    if (nodes_[i].scalars.size() != nodes_[0].scalars.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "scalar tuples must have uniform arity");
    }
  }
  adjacency_.assign(n * n, false);
  neighbours_.assign(n, {});
  for (const auto& [i, j] : edges) {
    if (i >= n || j >= n) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (i == j) throw Error(ErrorCode::kInvalidArgument, "self-loop on node " + std::to_string(i));
    if (adjacency_[i * n + j]) continue;
    adjacency_[i * n + j] = adjacency_[j * n + i] = true;
    neighbours_[i].push_back(j);
    neighbours_[j].push_back(i);
  }
  for (auto& nb : neighbours_) std::sort(nb.begin(), nb.end());
}

std::vector<Edge> GeometricGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j : neighbours_[i]) {
      if (i < j) out.emplace_back(i, j);
    }
  }
  return out;
}

GeometricGraph GeometricGraph::WithMode(NumericMode mode) const {
  if (mode == mode_) return *this;
  std::vector<NodeSpec> converted = nodes_;
  for (auto& node : converted) {
    for (auto& x : node.position) x = x.ToMode(mode);
    for (auto& v : node.vectors) {
      for (auto& x : v) x = x.ToMode(mode);
    }
  }
  return GeometricGraph(dim_, mode, std::move(converted), edges());
}

bool operator==(const GeometricGraph& a, const GeometricGraph& b) {
  if (a.dim_ != b.dim_ || a.mode_ != b.mode_ || a.size() != b.size() ||
      a.adjacency_ != b.adjacency_) {
    return false;
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    const NodeSpec& x = a.nodes_[i];
    const NodeSpec& y = b.nodes_[i];
    if (x.scalars != y.scalars || x.position != y.position ||
        x.vectors != y.vectors) {
      return false;
    }
  }
  return true;
}

GeometricGraph BuildRadialGraph(std::size_t dim, std::vector<NodeSpec> points,
                                const Scalar& cutoff) {
  if (cutoff.Sign() <= 0) {
    throw Error(ErrorCode::kInvalidArgument, "cutoff must be positive");
  }
  const NumericMode mode = cutoff.mode();
  for (std::size_t i = 0; i < points.size(); ++i) {
    CheckVector(points[i].position, dim, mode, "position", i);
  }
  const Scalar r2 = cutoff * cutoff;
  std::vector<Edge> edges;
  std::size_t coincident = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Scalar d2 = SquaredNorm(Sub(points[i].position, points[j].position));
      if (d2.IsZero()) {
        ++coincident;
        continue;
      }
      if (Compare(d2, r2) <= 0) edges.emplace_back(i, j);
    }
  }
  if (coincident > 0) {
    Warn(std::to_string(coincident) +
         " coincident point pair(s): distance 0, no edge created");
  }
  return GeometricGraph(dim, mode, std::move(points), edges);
}

std::vector<int> HopDistances(const GeometricGraph& g, std::size_t source) {
  std::vector<int> dist(g.size(), -1);
  std::deque<std::size_t> queue{source};
  dist.at(source) = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : g.neighbours(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool IsConnected(const GeometricGraph& g) {
  if (g.size() == 0) return true;
  const auto dist = HopDistances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::optional<int> Diameter(const GeometricGraph& g) {
  int diameter = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (int d : HopDistances(g, i)) {
      if (d < 0) return std::nullopt;
      diameter = std::max(diameter, d);
    }
  }
  return diameter;
}

GeometricGraph HopNeighbourhood(const GeometricGraph& g, std::size_t centre,
                                int hops) {
  const auto dist = HopDistances(g, centre);
  std::vector<std::size_t> keep{centre};
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i != centre && dist[i] >= 0 && dist[i] <= hops) keep.push_back(i);
  }
  std::vector<std::size_t> index(g.size(), g.size());
  std::vector<NodeSpec> nodes;
  for (std::size_t k = 0; k < keep.size(); ++k) {
    index[keep[k]] = k;
    NodeSpec spec = g.node(keep[k]);
    spec.scalars.push_back(k == 0 ? "@centre" : "@member");
    nodes.push_back(std::move(spec));
  }
  std::vector<Edge> edges;
  for (const auto& [i, j] : g.edges()) {
    if (index[i] < g.size() && index[j] < g.size()) {
      edges.emplace_back(index[i], index[j]);
    }
  }
  return GeometricGraph(g.dim(), g.mode(), std::move(nodes), edges);
}

}  // namespace gwl
