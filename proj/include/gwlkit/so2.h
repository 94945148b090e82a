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

#ifndef GWLKIT_SO2_H_
#define GWLKIT_SO2_H_

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "gwlkit/graph.h"
#include "gwlkit/refinement.h"

namespace gwl {

using P2 = std::array<double, 2>;

// A 2-vector together with the rate at which it turns: rotating the scene by
// beta rotates this vector by rate * beta. Positions have rate 1; rate 0
// marks an invariant vector.
struct RatedVector {
  P2 v{0.0, 0.0};
  int rate = 1;
};

// Rotational stabiliser of a multiset: either all of SO(2) (`continuous`),
// or the cyclic group generated by theta = 2 pi / order.
struct StabilizerInfo {
  bool continuous = false;
  int order = 1;
  double theta = 0.0;  // 0 when continuous
};

// Throws kInvalidArgument for an empty multiset.
StabilizerInfo StabilizerOrder(const std::vector<RatedVector>& x);
StabilizerInfo StabilizerOrder(const std::vector<P2>& x);

struct So2Hash {
  P2 vec{0.0, 0.0};  // code * (cos(order * alpha), sin(order * alpha))
  int code = 0;      // orbit code, 1 + registry index
  int rate = 0;      // stabiliser order, 0 when continuous
  double alpha = 0;  // smallest rotation carrying the representative onto X
};

// Representatives of SO(2) orbits of rated multisets, issued in insertion
// order. Codes start at 1 so hash vectors are never zero.
class So2Registry {
 public:
  struct Match {
    int code = 0;
    double alpha = 0;
    StabilizerInfo stabilizer;
  };
  Match Locate(const std::vector<RatedVector>& x);
  std::size_t size() const { return reps_.size(); }

 private:
  struct Rep {
    std::vector<RatedVector> x;
    StabilizerInfo stabilizer;
  };
  std::vector<Rep> reps_;
};

// Hash_v: equivariant (the output turns at rate `rate`), and orbit-injective
// through its norm.
So2Hash HashV(const std::vector<RatedVector>& x, So2Registry& reg);
So2Hash HashV(const std::vector<P2>& x, So2Registry& reg);

// True when some rotation about the origin carries x onto y (as multisets),
// rotating each element at its own rate. Returns the smallest such angle in
// [0, 2 pi).
std::optional<double> RotationBetween(const std::vector<RatedVector>& x,
                                      const std::vector<RatedVector>& y);

// The SO(2) test on d = 2 graphs: per-edge messages from the relative
// positions, then node messages hashed from neighbour messages. The trace
// holds scalar colours at t = 0 and message norms (orbit codes) at t >= 1.
// Like GWL it runs until the histograms differ or the budget is spent.
// Throws kDimensionMismatch unless both graphs have d = 2.
RefinementResult RunSo2Gwl(const GeometricGraph& g1, const GeometricGraph& g2,
                           std::optional<int> max_iters = std::nullopt);

// The permutation-invariant, rotation-equivariant sum of the points (taken
// about the origin). Any such map must vanish on a configuration with
// rotational symmetry about the origin.
P2 EquivariantSumDemo(const std::vector<P2>& x);

// Positions of a d = 2 graph as doubles.
std::vector<P2> PositionsOf(const GeometricGraph& g);

P2 Rotate(const P2& v, double angle);

}  // namespace gwl

#endif  // GWLKIT_SO2_H_
