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

#ifndef GWLKIT_BODY_ORDER_H_
#define GWLKIT_BODY_ORDER_H_

#include <vector>

#include "gwlkit/registry.h"

namespace gwl {

struct BodyCentre {
  int colour = 0;
  std::vector<Vec> vectors;
};

struct BodyNeighbour {
  int colour = 0;
  std::vector<Vec> vectors;
  Vec rel;  // x_ij
};

// Descriptors of every ordered (k-1)-tuple of neighbours drawn with
// repetition. For a tuple (j_1..j_{k-1}) the stack is [centre vectors,
// then per j: its vectors followed by x_ij]. With no neighbours the bag holds
// the single descriptor of the centre alone.
DescriptorBag KBodyDescriptors(const BodyCentre& centre,
                               const std::vector<BodyNeighbour>& nbrs, int k,
                               const GroupSpec& group);

// I-Hash_(k): the registry colour of the descriptor bag. Throws
// kInvalidArgument for k < 2.
int IHashK(const BodyCentre& centre, const std::vector<BodyNeighbour>& nbrs,
           int k, OrbitRegistry& reg);

}  // namespace gwl

#endif  // GWLKIT_BODY_ORDER_H_
