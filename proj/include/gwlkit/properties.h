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

#ifndef GWLKIT_PROPERTIES_H_
#define GWLKIT_PROPERTIES_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gwlkit/graph.h"
#include "json.hpp"

namespace gwl {

// Axis-aligned bounding box of the positions, in the input frame.
// d = 3: perimeter 4(a+b+c), area 2(ab+bc+ca), volume abc.
// d = 2: perimeter 2(a+b), area ab, no volume.
struct BoxMetrics {
  Vec extents;
  Scalar perimeter;
  Scalar area;
  std::optional<Scalar> volume;
};

// Throws kInvalidArgument for d = 1.
BoxMetrics BoundingBoxMetrics(const GeometricGraph& g);

Vec Centroid(const GeometricGraph& g);

// Sorted squared distances from each node to the centroid.
std::vector<Scalar> CentroidDistanceMultiset(const GeometricGraph& g);

// Cosine of the dihedral angle l-j-k-m:
//   ((x_jk x x_lj) . (x_jk x x_mk)) / (|x_jk x x_lj| |x_jk x x_mk|)
// with x_ab = x_a - x_b. In exact mode the cosine is returned as is when it
// is rational; otherwise `squared` is set and `value` holds sign * cos^2.
struct DihedralValue {
  Scalar value;
  bool squared = false;
  double Cosine() const;
};

// d = 3 only. Throws kDegenerate when l, j, k or j, k, m are collinear.
DihedralValue DihedralCos(const GeometricGraph& g, std::size_t l, std::size_t j,
                          std::size_t k, std::size_t m);

struct PropertyReport {
  std::optional<BoxMetrics> box;  // absent for d = 1
  Vec centroid;
  std::vector<Scalar> centroid_sq_distances;
  std::vector<std::pair<std::array<std::size_t, 4>, DihedralValue>> dihedrals;
};

PropertyReport ComputeProperties(
    const GeometricGraph& g,
    const std::vector<std::array<std::size_t, 4>>& quadruples = {});

nlohmann::json PropertyReportToJson(const PropertyReport& report);
std::string PropertyReportText(const PropertyReport& report);

}  // namespace gwl

#endif  // GWLKIT_PROPERTIES_H_
