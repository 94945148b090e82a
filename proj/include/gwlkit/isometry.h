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

#ifndef GWLKIT_ISOMETRY_H_
#define GWLKIT_ISOMETRY_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gwlkit/graph.h"
#include "gwlkit/numeric.h"

namespace gwl {

enum class GroupVariant { kO, kSO };

// The symmetry group the tests quotient by: O(d) or SO(d), always combined
// with translations (positions only enter as relative vectors).
struct GroupSpec {
  GroupVariant variant = GroupVariant::kO;
  std::size_t dim = 3;

  bool special() const { return variant == GroupVariant::kSO; }
  std::string Name() const;  // "O(3)", "SO(2)", ...
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

GroupVariant ParseGroupVariant(std::string_view name);

// g -> (P_sigma, Q, t). Node i of the input becomes node permutation[i] of
// the output; positions map as x -> x Q + t and vector features as v -> v Q
// (row vectors multiplied on the right).
struct IsometryWitness {
  std::vector<std::size_t> permutation;
  Matrix rotation;
  Vec translation;

  std::size_t dim() const { return rotation.size(); }
  NumericMode mode() const;
  // Throws kNotOrthogonal / kInvalidArgument when the witness is malformed.
  void Validate() const;
  // +1 or -1 (after Validate).
  int Orientation() const;

  static IsometryWitness Identity(std::size_t n, std::size_t dim,
                                  NumericMode mode);
};

GeometricGraph ApplyIsometry(const GeometricGraph& g, const IsometryWitness& w);

// Orthogonal matrix built from rational Cayley parameters: for the skew
// matrix A holding `params` (1 entry for d = 2, 3 for d = 3) returns
// (I - A)(I + A)^-1, which is rational and has determinant +1.
Matrix CayleyRotation(std::size_t dim, std::span<const Rational> params);

// Diagonal reflection flipping the first axis.
Matrix AxisReflection(std::size_t dim, NumericMode mode);

// Rotation by `angle` radians in the plane of the first two axes (float).
Matrix PlaneRotation(std::size_t dim, double angle);

// Seeded random witness with rational entries: Cayley rotation with small
// rational parameters, an optional reflection (O only), a random
// permutation and a small rational translation.
IsometryWitness RandomRationalIsometry(std::size_t n, std::size_t dim,
                                       GroupVariant variant,
                                       std::uint64_t seed);

// Householder reflection I - 2 v v^T / (v^T v) (column convention).
Matrix Householder(const Vec& v);

// An orthogonal M (column convention, M b_k = c_k) sending the ordered basis
// `from` onto `to`, given that both have equal Gram matrices. When `special`
// is set the result has det +1; that is always achievable when the span is
// not full-dimensional, otherwise nullopt is returned if orientations differ.
std::optional<Matrix> IsometryBetween(std::span<const Vec> from,
                                      std::span<const Vec> to, std::size_t dim,
                                      NumericMode mode, bool special);

}  // namespace gwl

#endif  // GWLKIT_ISOMETRY_H_
