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

#ifndef GWLKIT_REGISTRY_H_
#define GWLKIT_REGISTRY_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <variant>
#include <vector>

#include "gwlkit/graph.h"
#include "gwlkit/isometry.h"
#include "gwlkit/object.h"

namespace gwl {

// The invariant summary of one ordered neighbour tuple in the k-body hash:
// the colour sequence (centre first), the Gram matrix of the stacked vectors
// (upper triangle, row-major) and, under SO with a full-rank stack, the
// orientation sign of its first independent d-subset (0 otherwise).
struct TupleDescriptor {
  std::vector<int> colours;
  Vec gram;
  int orientation = 0;
};

// A multiset of descriptors. Interning sorts it into a canonical order.
using DescriptorBag = std::vector<TupleDescriptor>;

// Issues dense colour ids, in insertion order, for everything a refinement
// run needs to colour: scalar tuples, discrete signatures (WL), geometric
// objects (up to the group) and k-body descriptor bags. All four kinds share
// one id space. A registry is bound to one group and one numeric mode and is
// meant to be owned by a single run.
class OrbitRegistry {
 public:
  OrbitRegistry(GroupSpec group, NumericMode mode);

  int InternScalars(const ScalarTuple& scalars);
  int InternSignature(const std::vector<int>& signature);
  // The colour of the first registered object in the same orbit, or a fresh
  // colour (and `o` becomes a representative).
  int InternObject(const ObjectPtr& o);
  int InternBag(DescriptorBag bag);

  const GroupSpec& group() const { return group_; }
  NumericMode mode() const { return mode_; }
  // Number of colours issued.
  std::size_t size() const { return next_; }
  // Number of orbit_equal calls made, for diagnostics.
  std::size_t comparisons() const { return comparisons_; }

 private:
  int Fresh() { return static_cast<int>(next_++); }

  GroupSpec group_;
  NumericMode mode_;
  std::size_t next_ = 0;
  std::size_t comparisons_ = 0;
  std::map<ScalarTuple, int> scalars_;
  std::map<std::vector<int>, int> signatures_;
  std::unordered_multimap<std::uint64_t, std::pair<ObjectPtr, int>> objects_;
  std::unordered_multimap<std::uint64_t, std::pair<DescriptorBag, int>> bags_;
};

// I-Hash: the colour of `o` in `reg`.
int IHash(const ObjectPtr& o, OrbitRegistry& reg);

// Canonical order on descriptors (raw values); used to sort bags.
bool DescriptorLess(const TupleDescriptor& a, const TupleDescriptor& b);
// Multiset equality of two bags under numeric-mode equality.
bool BagsEqual(const DescriptorBag& a, const DescriptorBag& b);

}  // namespace gwl

#endif  // GWLKIT_REGISTRY_H_
