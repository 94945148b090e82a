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

#include "gwlkit/body_order.h"

#include "gwlkit/diagnostics.h"

namespace gwl {
namespace {

TupleDescriptor Describe(std::vector<int> colours, const std::vector<Vec>& stack,
                         const GroupSpec& group) {
  TupleDescriptor d;
  d.colours = std::move(colours);
  for (std::size_t a = 0; a < stack.size(); ++a) {
    for (std::size_t b = a; b < stack.size(); ++b) {
      d.gram.push_back(Dot(stack[a], stack[b]));
    }
  }
  if (group.special()) {
    const auto basis = GreedyIndependent(stack);
    if (basis.size() == group.dim) {
      Matrix m;
      for (std::size_t idx : basis) m.push_back(stack[idx]);
      d.orientation = Det(m).Sign();
    }
  }
  return d;
}

}  // namespace

DescriptorBag KBodyDescriptors(const BodyCentre& centre,
                               const std::vector<BodyNeighbour>& nbrs, int k,
                               const GroupSpec& group) {
  if (k < 2) {
    throw Error(ErrorCode::kInvalidArgument, "body order k must be at least 2");
  }
  DescriptorBag bag;
  if (nbrs.empty()) {
    bag.push_back(Describe({centre.colour}, centre.vectors, group));
    return bag;
  }
  const std::size_t width = static_cast<std::size_t>(k - 1);
  std::vector<std::size_t> tuple(width, 0);
  while (true) {
    std::vector<int> colours{centre.colour};
    std::vector<Vec> stack = centre.vectors;
    for (std::size_t j : tuple) {
      colours.push_back(nbrs[j].colour);
      stack.insert(stack.end(), nbrs[j].vectors.begin(), nbrs[j].vectors.end());
      stack.push_back(nbrs[j].rel);
    }
    bag.push_back(Describe(std::move(colours), stack, group));
    // Odometer increment over {0..|N|-1}^(k-1).
    std::size_t pos = width;
    while (pos > 0) {
      --pos;
      if (++tuple[pos] < nbrs.size()) break;
      tuple[pos] = 0;
      if (pos == 0) return bag;
    }
  }
}

int IHashK(const BodyCentre& centre, const std::vector<BodyNeighbour>& nbrs,
           int k, OrbitRegistry& reg) {
  return reg.InternBag(KBodyDescriptors(centre, nbrs, k, reg.group()));
}

}  // namespace gwl
