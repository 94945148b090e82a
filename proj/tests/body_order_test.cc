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

#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "gwlkit/diagnostics.h"
#include "gwlkit/isometry.h"
#include "gwlkit/object.h"
#include "gwlkit/orbit.h"
#include "gwlkit/registry.h"
#include "test_support.h"

namespace gwl {
namespace {

using ::gwl::testing::V;

constexpr NumericMode kExact = NumericMode::kExact;

struct Neighbourhood {
  BodyCentre centre;
  std::vector<BodyNeighbour> nbrs;
};

Neighbourhood Plain(const std::vector<Vec>& rels) {
  Neighbourhood h;
  for (const auto& r : rels) h.nbrs.push_back({0, {}, r});
  return h;
}

Neighbourhood RandomNeighbourhood(std::mt19937_64& rng, std::size_t dim, std::size_t m) {
  auto vec = [&] {
    Vec v;
    for (std::size_t k = 0; k < dim; ++k) {
      v.push_back(Scalar::FromInt(static_cast<long>(rng() % 3) - 1, kExact));
    }
    return v;
  };
  Neighbourhood h;
  h.centre.colour = static_cast<int>(rng() % 2);
  if (rng() % 2) h.centre.vectors.push_back(vec());
  for (std::size_t i = 0; i < m; ++i) {
    BodyNeighbour n{static_cast<int>(rng() % 2), {}, vec()};
    if (rng() % 3 == 0) n.vectors.push_back(vec());
    h.nbrs.push_back(std::move(n));
  }
  return h;
}

Neighbourhood Transform(const Neighbourhood& h, const Matrix& q) {
  Neighbourhood out = h;
  for (auto& v : out.centre.vectors) v = RowTimes(v, q);
  for (auto& n : out.nbrs) {
    n.rel = RowTimes(n.rel, q);
    for (auto& v : n.vectors) v = RowTimes(v, q);
  }
  return out;
}

// The depth-one object with the same content.
ObjectPtr AsObject(const Neighbourhood& h, std::size_t dim) {
  std::vector<ObjectChild> children;
  for (const auto& n : h.nbrs) {
    children.push_back({n.colour, GeometricObject::Leaf(n.colour, n.vectors, dim, kExact), n.rel});
  }
  return GeometricObject::Branch(
      h.centre.colour, GeometricObject::Leaf(h.centre.colour, h.centre.vectors, dim, kExact),
      children);
}

bool SameK(const Neighbourhood& a, const Neighbourhood& b, int k, const GroupSpec& group) {
  OrbitRegistry reg(group, kExact);
  return IHashK(a.centre, a.nbrs, k, reg) == IHashK(b.centre, b.nbrs, k, reg);
}

TEST(KBodyTest, TwoBodyMissesAnglesThreeBodySeesThem) {
  const GroupSpec o2{GroupVariant::kO, 2};
  Neighbourhood right = Plain({V({1, 0}), V({0, 1})});
  Neighbourhood straight = Plain({V({1, 0}), V({-1, 0})});
  EXPECT_TRUE(SameK(right, straight, 2, o2));
  EXPECT_FALSE(SameK(right, straight, 3, o2));
}

TEST(KBodyTest, DescriptorCountIsPowerOfNeighbourCount) {
  const GroupSpec o3{GroupVariant::kO, 3};
  Neighbourhood h = Plain({V({1, 0, 0}), V({0, 1, 0}), V({0, 0, 1})});
  EXPECT_EQ(KBodyDescriptors(h.centre, h.nbrs, 2, o3).size(), 3u);
  EXPECT_EQ(KBodyDescriptors(h.centre, h.nbrs, 3, o3).size(), 9u);
  EXPECT_EQ(KBodyDescriptors(h.centre, h.nbrs, 4, o3).size(), 27u);
  Neighbourhood empty;
  const DescriptorBag lone = KBodyDescriptors(empty.centre, empty.nbrs, 3, o3);
  ASSERT_EQ(lone.size(), 1u);
  EXPECT_EQ(lone[0].colours, std::vector<int>{0});
}

TEST(KBodyTest, DescriptorHoldsColoursGramAndOrientation) {
  Neighbourhood h;
  h.centre.colour = 5;
  h.nbrs.push_back({7, {}, V({1, 2})});
  const DescriptorBag bag = KBodyDescriptors(h.centre, h.nbrs, 2, {GroupVariant::kO, 2});
  ASSERT_EQ(bag.size(), 1u);
  EXPECT_EQ(bag[0].colours, (std::vector<int>{5, 7}));
  EXPECT_EQ(bag[0].gram, V({5}));
  EXPECT_EQ(bag[0].orientation, 0);
}

TEST(KBodyTest, RejectsSmallK) {
  OrbitRegistry reg({GroupVariant::kO, 2}, kExact);
  Neighbourhood h = Plain({V({1, 0})});
  try {
    IHashK(h.centre, h.nbrs, 1, reg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(KBodyTest, FullBodyOrderMatchesOrbitEquality) {
  int equal = 0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t dim = 2 + seed % 2;
    const std::size_t m = 1 + seed % 3;
    Neighbourhood a = RandomNeighbourhood(rng, dim, m);
    const GroupSpec group{seed % 4 < 2 ? GroupVariant::kO : GroupVariant::kSO, dim};
    Neighbourhood b = seed % 2 ? Transform(a, RandomRationalIsometry(0, dim, group.variant, seed).rotation)
                               : RandomNeighbourhood(rng, dim, m);
    const bool orbit = OrbitEqual(*AsObject(a, dim), *AsObject(b, dim), group);
    EXPECT_EQ(SameK(a, b, static_cast<int>(m) + 1, group), orbit) << "seed " << seed;
    equal += orbit;
  }
  EXPECT_GT(equal, 150);
}

TEST(KBodyTest, SeparationIsMonotoneInK) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed);
    const std::size_t dim = 2 + seed % 2;
    const std::size_t m = 2 + seed % 3;
    Neighbourhood a = RandomNeighbourhood(rng, dim, m);
    Neighbourhood b = RandomNeighbourhood(rng, dim, m);
    const GroupSpec group{GroupVariant::kO, dim};
    for (int k = 2; k < 4; ++k) {
      if (!SameK(a, b, k, group)) {
        EXPECT_FALSE(SameK(a, b, k + 1, group)) << "seed " << seed << " k " << k;
      }
    }
  }
}

TEST(KBodyTest, InvariantUnderIsometryAndReordering) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    std::mt19937_64 rng(seed);
    Neighbourhood a = RandomNeighbourhood(rng, 3, 3);
    Neighbourhood b = Transform(a, RandomRationalIsometry(0, 3, GroupVariant::kSO, seed).rotation);
    std::swap(b.nbrs.front(), b.nbrs.back());
    EXPECT_TRUE(SameK(a, b, 3, {GroupVariant::kSO, 3}));
    EXPECT_TRUE(SameK(a, b, 4, {GroupVariant::kSO, 3}));
  }
}

TEST(KBodyTest, OrientationSeparatesMirrorImagesUnderSO) {
  Neighbourhood a = Plain({V({1, 0}), V({0, 2})});
  Neighbourhood m = Plain({V({-1, 0}), V({0, 2})});
  EXPECT_FALSE(SameK(a, m, 3, {GroupVariant::kSO, 2}));
  EXPECT_TRUE(SameK(a, m, 3, {GroupVariant::kO, 2}));
}

TEST(RegistryTest, BagsCompareAsMultisets) {
  TupleDescriptor x{{0, 1}, V({1}), 0};
  TupleDescriptor y{{0, 1}, V({2}), 0};
  EXPECT_TRUE(DescriptorLess(x, y));
  EXPECT_FALSE(DescriptorLess(y, x));
  DescriptorBag a{x, y, y};
  DescriptorBag b{y, x, y};
  DescriptorBag c{y, x, x};
  OrbitRegistry reg({GroupVariant::kO, 2}, kExact);
  EXPECT_EQ(reg.InternBag(a), reg.InternBag(b));
  EXPECT_NE(reg.InternBag(a), reg.InternBag(c));
  std::sort(a.begin(), a.end(), DescriptorLess);
  std::sort(b.begin(), b.end(), DescriptorLess);
  EXPECT_TRUE(BagsEqual(a, b));
}

TEST(RegistryTest, AllKindsShareOneIdSpace) {
  OrbitRegistry reg({GroupVariant::kO, 2}, kExact);
  EXPECT_EQ(reg.InternScalars({"C"}), 0);
  EXPECT_EQ(reg.InternSignature({0, 0}), 1);
  EXPECT_EQ(reg.InternScalars({"H"}), 2);
  EXPECT_EQ(reg.InternScalars({"C"}), 0);
  EXPECT_EQ(reg.InternObject(GeometricObject::Leaf(0, {}, 2, kExact)), 3);
  EXPECT_EQ(reg.size(), 4u);
}

}  // namespace
}  // namespace gwl
