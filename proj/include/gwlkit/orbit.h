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

#ifndef GWLKIT_ORBIT_H_
#define GWLKIT_ORBIT_H_

#include "gwlkit/isometry.h"
#include "gwlkit/object.h"

namespace gwl {

// Decides whether some element of the group maps `a` onto `b`: colours and
// shapes must agree recursively, with children matched as multisets, and one
// orthogonal map (det +1 under SO) must carry every vector of `a` onto the
// corresponding vector of `b`.
//
// Throws kDimensionMismatch / kModeMismatch when the objects (or the group)
// disagree in dimension or numeric mode.
bool OrbitEqual(const GeometricObject& a, const GeometricObject& b,
                const GroupSpec& group);

}  // namespace gwl

#endif  // GWLKIT_ORBIT_H_
