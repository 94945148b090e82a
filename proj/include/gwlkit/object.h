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

#ifndef GWLKIT_OBJECT_H_
#define GWLKIT_OBJECT_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "gwlkit/numeric.h"

namespace gwl {

class GeometricObject;
using ObjectPtr = std::shared_ptr<const GeometricObject>;

struct ObjectChild {
  int colour = 0;
  ObjectPtr object;
  Vec rel;  // x_ij, from the neighbour to the centre
};

// The nested neighbourhood object g_i^(t).
//
// A leaf (t = 0) holds the node colour and its ordered vector features. A
// branch (t >= 1) holds the centre's previous colour and object plus a
// multiset of (colour, object, relative position) children. Subtrees are
// shared between objects, so a depth-t object over n nodes is a DAG with at
// most n * (t + 1) distinct vertices.
//
// Every object carries a pre-key: a hash that is invariant under O(d) and
// under reordering of children. Equal orbits imply equal pre-keys. In exact
// mode it also covers squared norms; in float mode only the skeleton.
class GeometricObject {
 public:
  static ObjectPtr Leaf(int colour, std::vector<Vec> vectors, std::size_t dim,
                        NumericMode mode);
  static ObjectPtr Branch(int centre_colour, ObjectPtr centre,
                          std::vector<ObjectChild> children);

  bool is_leaf() const { return centre_ == nullptr; }
  int depth() const { return depth_; }
  // Leaf colour, or the centre colour of a branch.
  int colour() const { return colour_; }
  const std::vector<Vec>& vectors() const { return vectors_; }
  const ObjectPtr& centre() const { return centre_; }
  const std::vector<ObjectChild>& children() const { return children_; }
  std::size_t dim() const { return dim_; }
  NumericMode mode() const { return mode_; }
  std::uint64_t pre_key() const { return pre_key_; }

 private:
  GeometricObject() = default;

  int colour_ = 0;
  int depth_ = 0;
  std::size_t dim_ = 0;
  NumericMode mode_ = NumericMode::kExact;
  std::vector<Vec> vectors_;
  ObjectPtr centre_;
  std::vector<ObjectChild> children_;
  std::uint64_t pre_key_ = 0;
};

// Every vector of the object in a fixed traversal order: a leaf lists its
// vectors; a branch lists the centre's trace, then for each child (in stored
// order) the child's trace followed by its relative position. The length
// depends only on the object's shape.
std::vector<Vec> VectorTrace(const GeometricObject& o);

// The image of the object under v -> v Q (row vectors), applied to every
// vector at every depth. Shared subtrees stay shared.
ObjectPtr TransformObject(const ObjectPtr& o, const Matrix& q);

// Number of distinct vertices in the object's DAG.
std::size_t DistinctVertexCount(const ObjectPtr& o);

}  // namespace gwl

#endif  // GWLKIT_OBJECT_H_
