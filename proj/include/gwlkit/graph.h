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

#ifndef GWLKIT_GRAPH_H_
#define GWLKIT_GRAPH_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gwlkit/numeric.h"

namespace gwl {

using ScalarTuple = std::vector<std::string>;
using Edge = std::pair<std::size_t, std::size_t>;

// One node's attributes: discrete scalar tokens s_i, an ordered list of
// vector features v_i (possibly empty) and the position x_i.
struct NodeSpec {
  ScalarTuple scalars;
  std::vector<Vec> vectors;
  Vec position;
};

// An attributed graph embedded in R^d, d in {1,2,3}. Adjacency is a simple
// undirected relation; all coordinates share one numeric mode. Instances are
// immutable once built.
class GeometricGraph {
 public:
  GeometricGraph(std::size_t dim, NumericMode mode, std::vector<NodeSpec> nodes,
                 const std::vector<Edge>& edges);

  std::size_t dim() const { return dim_; }
  NumericMode mode() const { return mode_; }
  std::size_t size() const { return nodes_.size(); }

  const NodeSpec& node(std::size_t i) const { return nodes_.at(i); }
  const ScalarTuple& scalars(std::size_t i) const { return nodes_.at(i).scalars; }
  const std::vector<Vec>& vectors(std::size_t i) const {
    return nodes_.at(i).vectors;
  }
  const Vec& position(std::size_t i) const { return nodes_.at(i).position; }
  const std::vector<NodeSpec>& nodes() const { return nodes_; }

  bool adjacent(std::size_t i, std::size_t j) const {
    return adjacency_.at(i * size() + j);
  }
  // Sorted ascending.
  const std::vector<std::size_t>& neighbours(std::size_t i) const {
    return neighbours_.at(i);
  }
  std::size_t degree(std::size_t i) const { return neighbours_.at(i).size(); }
  // Each undirected edge once, as (i, j) with i < j, sorted.
  std::vector<Edge> edges() const;

  // x_ij = x_i - x_j.
  Vec RelativePosition(std::size_t i, std::size_t j) const {
    return Sub(position(i), position(j));
  }

  // Copy with every coordinate converted to `mode`.
  GeometricGraph WithMode(NumericMode mode) const;

  // Field-by-field identity (bitwise coordinates, same node order).
  friend bool operator==(const GeometricGraph& a, const GeometricGraph& b);

 private:
  std::size_t dim_;
  NumericMode mode_;
  std::vector<NodeSpec> nodes_;
  std::vector<bool> adjacency_;
  std::vector<std::vector<std::size_t>> neighbours_;
};

// Radial cutoff construction: a_ij = 1 iff 0 < |x_i - x_j| <= cutoff, decided
// on squared distances. Coincident points are kept, get no edge between them,
// and are reported on the warning channel.
GeometricGraph BuildRadialGraph(std::size_t dim, std::vector<NodeSpec> points,
                                const Scalar& cutoff);

// Hop distances from `source` (-1 for unreachable).
std::vector<int> HopDistances(const GeometricGraph& g, std::size_t source);
bool IsConnected(const GeometricGraph& g);
// Largest eccentricity; nullopt when the graph is disconnected.
std::optional<int> Diameter(const GeometricGraph& g);

// The subgraph induced on the nodes within `hops` of `centre`, with the
// centre first and tagged by an extra scalar token so that an isomorphism
// check must map centre to centre.
GeometricGraph HopNeighbourhood(const GeometricGraph& g, std::size_t centre,
                                int hops);

}  // namespace gwl

#endif  // GWLKIT_GRAPH_H_
