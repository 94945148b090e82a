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
#include <map>
#include <unordered_set>

#include "gwlkit/diagnostics.h"
#include "gwlkit/matching.h"

namespace gwl {
namespace {

// Distinct vectors occurring anywhere in the object, in a deterministic
// order.
std::vector<Vec> DistinctVectors(const GeometricObject& o) {
  std::vector<Vec> all;
  std::unordered_set<const GeometricObject*> seen;
  std::vector<const GeometricObject*> stack{&o};
  while (!stack.empty()) {
    const GeometricObject* x = stack.back();
    stack.pop_back();
    if (!seen.insert(x).second) continue;
    if (x->is_leaf()) {
      all.insert(all.end(), x->vectors().begin(), x->vectors().end());
      continue;
    }
    stack.push_back(x->centre().get());
    for (const auto& c : x->children()) {
      all.push_back(c.rel);
      stack.push_back(c.object.get());
    }
  }
  std::sort(all.begin(), all.end(),
            [](const Vec& p, const Vec& q) { return RawLess(p, q); });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

std::size_t Rank(const std::vector<Vec>& vs, std::size_t dim) {
  IndependenceTracker t(dim);
  for (const auto& v : vs) {
    if (t.full()) break;
    t.TryAdd(v);
  }
  return t.rank();
}

// Compares two objects once a basis correspondence b1[k] <-> b2[k] is fixed.
// A vector is then pinned down by its inner products with the basis and its
// squared norm, so the comparison is a plain structural one.
class FixedFrameComparer {
 public:
  FixedFrameComparer(const std::vector<Vec>& b1, const std::vector<Vec>& b2)
      : b1_(b1), b2_(b2) {}

  bool Equal(const GeometricObject& x, const GeometricObject& y) {
    if (x.pre_key() != y.pre_key() || x.depth() != y.depth() ||
        x.colour() != y.colour() || x.is_leaf() != y.is_leaf()) {
      return false;
    }
    const auto key = std::make_pair(&x, &y);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool result = Compute(x, y);
    memo_.emplace(key, result);
    return result;
  }

 private:
  bool SameVector(const Vec& v, const Vec& w) const {
    if (!OrbitEntryEqual(SquaredNorm(v), SquaredNorm(w))) return false;
    for (std::size_t k = 0; k < b1_.size(); ++k) {
      if (!OrbitEntryEqual(Dot(v, b1_[k]), Dot(w, b2_[k]))) return false;
    }
    return true;
  }

  bool Compute(const GeometricObject& x, const GeometricObject& y) {
    if (x.is_leaf()) {
      if (x.vectors().size() != y.vectors().size()) return false;
      for (std::size_t i = 0; i < x.vectors().size(); ++i) {
        if (!SameVector(x.vectors()[i], y.vectors()[i])) return false;
      }
      return true;
    }
    const auto& cx = x.children();
    const auto& cy = y.children();
    if (cx.size() != cy.size() || !Equal(*x.centre(), *y.centre())) {
      return false;
    }
    return HasPerfectMatching(cx.size(), [&](std::size_t i, std::size_t j) {
      return cx[i].colour == cy[j].colour && SameVector(cx[i].rel, cy[j].rel) &&
             Equal(*cx[i].object, *cy[j].object);
    });
  }

  const std::vector<Vec>& b1_;
  const std::vector<Vec>& b2_;
  std::map<std::pair<const GeometricObject*, const GeometricObject*>, bool> memo_;
};

class OrbitSearch {
 public:
  OrbitSearch(const GeometricObject& a, const GeometricObject& b,
              const GroupSpec& group)
      : a_(a), b_(b), group_(group) {}

  bool Run() {
    const std::vector<Vec> va = DistinctVectors(a_);
    vb_ = DistinctVectors(b_);
    // Basis vectors for `a` are taken preferentially among those whose norm
    // is rare in `b`, which keeps the candidate enumeration small.
    std::vector<std::size_t> rarity(va.size(), 0);
    for (std::size_t i = 0; i < va.size(); ++i) {
      const Scalar n = SquaredNorm(va[i]);
      for (const auto& w : vb_) {
        if (ApproxEqual(n, SquaredNorm(w))) ++rarity[i];
      }
    }
    std::vector<std::size_t> order(va.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t p, std::size_t q) {
      return rarity[p] < rarity[q];
    });
    IndependenceTracker tracker(a_.dim());
    for (std::size_t i : order) {
      if (tracker.full()) break;
      if (tracker.TryAdd(va[i])) basis_a_.push_back(va[i]);
    }
    if (Rank(vb_, b_.dim()) != basis_a_.size()) return false;
    gram_a_ = Gram(basis_a_);
    return Enumerate();
  }

 private:
  bool Enumerate() {
    const std::size_t k = basis_b_.size();
    if (k == basis_a_.size()) return TryFrame();
    for (const auto& w : vb_) {
      if (!OrbitEntryEqual(SquaredNorm(w), gram_a_[k][k])) continue;
      bool ok = true;
      for (std::size_t m = 0; m < k && ok; ++m) {
        ok = OrbitEntryEqual(Dot(w, basis_b_[m]), gram_a_[k][m]);
      }
      if (!ok) continue;
      basis_b_.push_back(w);
      if (Enumerate()) return true;
      basis_b_.pop_back();
    }
    return false;
  }

  bool TryFrame() {
    if (group_.special() && basis_a_.size() == group_.dim &&
        Det(basis_a_).Sign() != Det(basis_b_).Sign()) {
      return false;
    }
    FixedFrameComparer cmp(basis_a_, basis_b_);
    return cmp.Equal(a_, b_);
  }

  const GeometricObject& a_;
  const GeometricObject& b_;
  GroupSpec group_;
  std::vector<Vec> vb_;
  std::vector<Vec> basis_a_;
  std::vector<Vec> basis_b_;
  Matrix gram_a_;
};

}  // namespace

bool OrbitEqual(const GeometricObject& a, const GeometricObject& b,
                const GroupSpec& group) {
  if (a.dim() != b.dim() || a.dim() != group.dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "objects and group disagree in dimension");
  }
  if (a.mode() != b.mode()) {
    throw Error(ErrorCode::kModeMismatch, "objects differ in numeric mode");
  }
  if (&a == &b) return true;
  if (a.pre_key() != b.pre_key() || a.depth() != b.depth() ||
      a.colour() != b.colour()) {
    return false;
  }
  OrbitSearch search(a, b, group);
  return search.Run();
}

}  // namespace gwl
