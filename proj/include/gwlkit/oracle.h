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

#ifndef GWLKIT_ORACLE_H_
#define GWLKIT_ORACLE_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "gwlkit/graph.h"
#include "gwlkit/isometry.h"

namespace gwl {

struct OracleOptions {
  // Exponential search; refuse inputs larger than this.
  std::size_t max_nodes = 10;
};

struct IsomorphismResult {
  bool isomorphic = false;
  // Present whenever isomorphic: apply_isometry(g1, *witness) matches g2.
  std::optional<IsometryWitness> witness;
};

// Brute-force decision of geometric isomorphism: is there a permutation
// preserving adjacency and scalars, plus an element of the group and a
// translation, carrying g1 onto g2?
//
// Positions are centred at their centroids, then bijections compatible with
// scalar tokens, degrees and one round of colour refinement are enumerated;
// a bijection succeeds when the matched lists [centred position, vector
// features...] have equal Gram matrices (and, under SO with full rank, equal
// orientation of the first independent d-subset).
IsomorphismResult GeometricIsomorphismOracle(const GeometricGraph& g1,
                                             const GeometricGraph& g2,
                                             const GroupSpec& group,
                                             const OracleOptions& options = {});

// All permutations b (node i of g1 -> node b[i] of g2) that are attributed
// graph isomorphisms, geometry ignored. Stops after `limit` results.
std::vector<std::vector<std::size_t>> AttributedIsomorphisms(
    const GeometricGraph& g1, const GeometricGraph& g2,
    std::size_t limit = 100000);

}  // namespace gwl

#endif  // GWLKIT_ORACLE_H_
