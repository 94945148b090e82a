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

#include "gwlkit/orbit.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "gwlkit/diagnostics.h"
#include "gwlkit/isometry.h"
#include "gwlkit/object.h"
#include "gwlkit/registry.h"
#include "test_support.h"

namespace gwl {
namespace {

using ::gwl::testing::F;
using ::gwl::testing::V;

constexpr NumericMode kExact = NumericMode::kExact;

ObjectPtr Leaf(int colour, std::vector<Vec> vs, std::size_t dim = 2) {
  return GeometricObject::Leaf(colour, std::move(vs), dim, kExact);
}

ObjectPtr Star(const std::vector<Vec>& rels, std::size_t dim = 2) {
  ObjectPtr centre = Leaf(0, {}, dim);
  std::vector<ObjectChild> children;
  for (const auto& r : rels) children.push_back({0, Leaf(0, {}, dim), r});
  return GeometricObject::Branch(0, centre, children);
}

// Brute-force reference: list every way of ordering the children at every
// branch, together with the resulting shape signature and vector trace.
struct Variant {
  std::vector<long> signature;
  std::vector<Vec> trace;
};

std::vector<Variant> Variants(const GeometricObject& o) {
  if (o.is_leaf()) {
    return {{{-1, o.colour(), static_cast<long>(o.vectors().size())}, o.vectors()}};
  }
  const auto centres = Variants(*o.centre());
  std::vector<std::vector<Variant>> per_child;
  for (const auto& c : o.children()) {
    auto vs = Variants(*c.object);
    for (auto& v : vs) {
      v.signature.insert(v.signature.begin(), {-3, c.colour});
      v.trace.push_back(c.rel);
    }
    per_child.push_back(std::move(vs));
  }
  std::vector<Variant> out;
  const std::size_t m = per_child.size();
  std::vector<std::size_t> perm(m);
  for (const auto& centre : centres) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::size_t> pick(m, 0);
      while (true) {
        Variant v;
        v.signature = {-2, o.colour(), static_cast<long>(m)};
        v.signature.insert(v.signature.end(), centre.signature.begin(), centre.signature.end());
        v.trace = centre.trace;
        for (std::size_t i = 0; i < m; ++i) {
          const Variant& c = per_child[perm[i]][pick[i]];
          v.signature.insert(v.signature.end(), c.signature.begin(), c.signature.end());
          v.trace.insert(v.trace.end(), c.trace.begin(), c.trace.end());
        }
        out.push_back(std::move(v));
        std::size_t i = 0;
        while (i < m && ++pick[i] == per_child[perm[i]].size()) pick[i++] = 0;
        if (i == m) break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

// Two ordered lists are related by an orthogonal map iff their Gram matrices
// agree; under SO with full rank the orientation of corresponding
// independent subsets must agree too.
bool ReferenceOrbitEqual(const GeometricObject& a, const GeometricObject& b,
                         const GroupSpec& group) {
  const Variant va = Variants(a).front();
  const Matrix ga = Gram(va.trace);
  const auto basis = GreedyIndependent(va.trace);
  for (const auto& vb : Variants(b)) {
    if (vb.signature != va.signature || Gram(vb.trace) != ga) continue;
    if (group.special() && basis.size() == group.dim) {
      Matrix ma, mb;
      for (std::size_t i : basis) {
        ma.push_back(va.trace[i]);
        mb.push_back(vb.trace[i]);
      }
      if (Det(ma).Sign() != Det(mb).Sign()) continue;
    }
    return true;
  }
  return false;
}

class ObjectFactory {
 public:
  ObjectFactory(std::uint64_t shape_seed, std::uint64_t value_seed, std::size_t dim,
                bool planar)
      : shape_(shape_seed), value_(value_seed), dim_(dim), planar_(planar) {}

  ObjectPtr Make(int depth) {
    if (depth == 0) {
      std::vector<Vec> vs(Pick(3));
      for (auto& v : vs) v = Vector();
      return GeometricObject::Leaf(static_cast<int>(Pick(2)), vs, dim_, kExact);
    }
    ObjectPtr centre = Make(depth - 1);
    const std::size_t m = 1 + Pick(depth == 1 ? 4 : 2);
    std::vector<ObjectChild> children;
    for (std::size_t i = 0; i < m; ++i) {
      ObjectPtr child = Make(depth - 1);
      children.push_back({static_cast<int>(Pick(2)), child, Vector()});
    }
    return GeometricObject::Branch(static_cast<int>(Pick(2)), centre, children);
  }

 private:
  std::size_t Pick(std::size_t n) { return static_cast<std::size_t>(shape_() % n); }
  Vec Vector() {
    Vec v;
    for (std::size_t k = 0; k < dim_; ++k) {
      const long x = planar_ && k == 2 ? 0 : static_cast<long>(value_() % 3) - 1;
      v.push_back(Scalar::FromInt(x, kExact));
    }
    return v;
  }

  std::mt19937_64 shape_;
  std::mt19937_64 value_;
  std::size_t dim_;
  bool planar_;
};

// Rebuild with children shuffled at every branch.
ObjectPtr Shuffle(const ObjectPtr& o, std::mt19937_64& rng) {
  if (o->is_leaf()) return o;
  std::vector<ObjectChild> children = o->children();
  for (auto& c : children) c.object = Shuffle(c.object, rng);
  std::shuffle(children.begin(), children.end(), rng);
  return GeometricObject::Branch(o->colour(), Shuffle(o->centre(), rng), children);
}

// Rebuild with vector number `target` (in trace order) replaced by a
// norm-preserving variant: coordinates reversed and first sign flipped.
ObjectPtr Twist(const ObjectPtr& o, std::size_t& counter, std::size_t target) {
  auto twist = [&](const Vec& v) {
    if (counter++ != target) return v;
    Vec w(v.rbegin(), v.rend());
    w[0] = -w[0];
    return w;
  };
  if (o->is_leaf()) {
    std::vector<Vec> vs;
    for (const auto& v : o->vectors()) vs.push_back(twist(v));
    return GeometricObject::Leaf(o->colour(), vs, o->dim(), o->mode());
  }
  ObjectPtr centre = Twist(o->centre(), counter, target);
  std::vector<ObjectChild> children;
  for (const auto& c : o->children()) {
    ObjectPtr obj = Twist(c.object, counter, target);
    children.push_back({c.colour, obj, twist(c.rel)});
  }
  return GeometricObject::Branch(o->colour(), centre, children);
}

TEST(OrbitEqualTest, RotatedStarIsEqual) {
  ObjectPtr a = Star({V({1, 0}), V({0, 2})});
  ObjectPtr b = Star({V({-2, 0}), V({0, 1})});  // rotated by pi/2, reordered
  EXPECT_TRUE(OrbitEqual(*a, *b, {GroupVariant::kSO, 2}));
}

TEST(OrbitEqualTest, SmallExamples) {
  const GroupSpec o2{GroupVariant::kO, 2};
  EXPECT_FALSE(OrbitEqual(*Leaf(0, {V({1, 0})}), *Leaf(0, {V({2, 0})}), o2));
  EXPECT_FALSE(OrbitEqual(*Leaf(0, {V({1, 0})}), *Leaf(1, {V({1, 0})}), o2));
  EXPECT_FALSE(OrbitEqual(*Star({V({1, 0}), V({0, 1})}), *Star({V({1, 0}), V({-1, 0})}), o2));
  EXPECT_TRUE(OrbitEqual(*Star({V({1, 0}), V({0, 1})}), *Star({V({0, 1}), V({-1, 0})}), o2));
  EXPECT_FALSE(OrbitEqual(*Star({V({1, 0})}), *Star({V({1, 0}), V({1, 0})}), o2));
}

TEST(OrbitEqualTest, ChiralityUnderSOAndO) {
  // Distinct norms pin the correspondence, so only a reflection fits.
  const auto a = Star({V({1, 0}), V({0, 2}), V({3, 3})});
  const auto m = Star({V({-1, 0}), V({0, 2}), V({-3, 3})});
  EXPECT_TRUE(OrbitEqual(*a, *m, {GroupVariant::kO, 2}));
  EXPECT_FALSE(OrbitEqual(*a, *m, {GroupVariant::kSO, 2}));
}

TEST(OrbitEqualTest, ThrowsOnMismatchedInputs) {
  EXPECT_THROW(OrbitEqual(*Leaf(0, {}, 2), *Leaf(0, {}, 3), {GroupVariant::kO, 2}), Error);
  auto f = GeometricObject::Leaf(0, {F({1.0, 0.0})}, 2, NumericMode::kFloat);
  EXPECT_THROW(OrbitEqual(*Leaf(0, {V({1, 0})}), *f, {GroupVariant::kO, 2}), Error);
  EXPECT_THROW(OrbitEqual(*Leaf(0, {}), *Leaf(0, {}), {GroupVariant::kO, 3}), Error);
}

TEST(OrbitEqualTest, AgreesWithBruteForceReference) {
  int equal = 0;
  int unequal = 0;
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const std::size_t dim = 2 + seed % 2;
    const bool planar = dim == 3 && seed % 4 == 1;
    const int depth = 1 + static_cast<int>(seed % 5 == 0);
    ObjectFactory fa(seed, seed * 31 + 1, dim, planar);
    ObjectPtr a = fa.Make(depth);
    std::mt19937_64 rng(seed);
    ObjectPtr b;
    switch (seed % 6) {
      case 0:
      case 1: {
        const GroupVariant v = seed % 6 ? GroupVariant::kO : GroupVariant::kSO;
        b = Shuffle(TransformObject(a, RandomRationalIsometry(0, dim, v, seed).rotation), rng);
        break;
      }
      case 2:
      case 3: {
        const std::size_t len = VectorTrace(*a).size();
        if (len == 0) continue;
        std::size_t counter = 0;
        b = Shuffle(Twist(a, counter, rng() % len), rng);
        break;
      }
      default: {
        ObjectFactory fb(seed, seed * 17 + 5, dim, planar);
        b = fb.Make(depth);
        break;
      }
    }
    for (GroupVariant v : {GroupVariant::kO, GroupVariant::kSO}) {
      const GroupSpec group{v, dim};
      const bool expected = ReferenceOrbitEqual(*a, *b, group);
      EXPECT_EQ(OrbitEqual(*a, *b, group), expected) << "seed " << seed;
      EXPECT_EQ(OrbitEqual(*b, *a, group), expected) << "seed " << seed;
      (expected ? equal : unequal)++;
    }
  }
  EXPECT_GT(equal, 300);
  EXPECT_GT(unequal, 300);
}

TEST(OrbitEqualTest, SOAndOCoincideBelowFullRank) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ObjectFactory fa(seed, seed + 100, 3, true);
    ObjectFactory fb(seed, seed + 200, 3, true);
    ObjectPtr a = fa.Make(1);
    std::mt19937_64 rng(seed);
    // Mirror through the plane's normal axis swap keeps everything planar.
    ObjectPtr b = seed % 2 ? Shuffle(TransformObject(a, AxisReflection(3, kExact)), rng)
                           : fb.Make(1);
    EXPECT_EQ(OrbitEqual(*a, *b, {GroupVariant::kO, 3}),
              OrbitEqual(*a, *b, {GroupVariant::kSO, 3}))
        << "seed " << seed;
  }
}

TEST(OrbitEqualTest, IsAnEquivalenceOnRandomTriples) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    ObjectFactory fa(seed, seed, 2, false);
    ObjectPtr a = fa.Make(1);
    std::mt19937_64 rng(seed);
    const Matrix q = RandomRationalIsometry(0, 2, GroupVariant::kO, seed).rotation;
    ObjectPtr b = Shuffle(TransformObject(a, q), rng);
    ObjectPtr c = Shuffle(TransformObject(b, q), rng);
    const GroupSpec o2{GroupVariant::kO, 2};
    EXPECT_TRUE(OrbitEqual(*a, *a, o2));
    EXPECT_TRUE(OrbitEqual(*a, *b, o2));
    EXPECT_TRUE(OrbitEqual(*b, *c, o2));
    EXPECT_TRUE(OrbitEqual(*a, *c, o2));
  }
}

TEST(OrbitEqualTest, FloatNearMissIsReported) {
  auto a = GeometricObject::Leaf(0, {F({1.0, 0.0})}, 2, NumericMode::kFloat);
  auto b = GeometricObject::Leaf(0, {F({1.0 + 3e-9, 0.0})}, 2, NumericMode::kFloat);
  auto c = GeometricObject::Leaf(0, {F({0.0, 1.0 + 1e-12})}, 2, NumericMode::kFloat);
  WarningCapture capture;
  EXPECT_FALSE(OrbitEqual(*a, *b, {GroupVariant::kO, 2}));
  EXPECT_FALSE(capture.warnings().empty());
  EXPECT_TRUE(OrbitEqual(*a, *c, {GroupVariant::kSO, 2}));
}

TEST(ObjectTest, TransformKeepsSharingAndTraceShape) {
  ObjectPtr shared = Leaf(1, {V({1, 1})});
  ObjectPtr centre = Leaf(0, {V({0, 1})});
  ObjectPtr o = GeometricObject::Branch(
      0, centre, {{1, shared, V({1, 0})}, {1, shared, V({0, 1})}});
  EXPECT_EQ(o->depth(), 1);
  EXPECT_EQ(DistinctVertexCount(o), 3u);
  ObjectPtr t = TransformObject(o, AxisReflection(2, kExact));
  EXPECT_EQ(DistinctVertexCount(t), 3u);
  // centre vector, then per child: its vector and the relative position.
  EXPECT_EQ(VectorTrace(*t),
            (std::vector<Vec>{V({0, 1}), V({-1, 1}), V({-1, 0}), V({-1, 1}), V({0, 1})}));
  EXPECT_THROW(GeometricObject::Branch(0, o, {{0, shared, V({1, 0})}}), Error);
}

TEST(IHashTest, ColoursAreDenseAndOrbitInvariant) {
  OrbitRegistry reg({GroupVariant::kO, 2}, kExact);
  ObjectPtr a = Star({V({1, 0}), V({0, 1})});
  ObjectPtr b = Star({V({1, 0}), V({-1, 0})});
  EXPECT_EQ(IHash(a, reg), 0);
  EXPECT_EQ(IHash(b, reg), 1);
  EXPECT_EQ(IHash(a, reg), 0);
  EXPECT_EQ(IHash(Star({V({0, 1}), V({-1, 0})}), reg), 0);
  EXPECT_EQ(reg.size(), 2u);
}

TEST(IHashTest, InvariantUnderRandomIsometries) {
  OrbitRegistry reg({GroupVariant::kSO, 3}, kExact);
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    ObjectFactory f(seed, seed + 9, 3, false);
    ObjectPtr a = f.Make(1 + static_cast<int>(seed % 2));
    std::mt19937_64 rng(seed);
    const Matrix q = RandomRationalIsometry(0, 3, GroupVariant::kSO, seed).rotation;
    EXPECT_EQ(IHash(a, reg), IHash(Shuffle(TransformObject(a, q), rng), reg));
  }
}

}  // namespace
}  // namespace gwl
