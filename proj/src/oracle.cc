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

#include "gwlkit/oracle.h"

#include <algorithm>
#include <map>
#include <numeric>

#include "gwlkit/diagnostics.h"

namespace gwl {
namespace {

// One-round refinement colours over the disjoint union of both graphs:
// (scalars, degree, sorted neighbour (scalars, degree) pairs).
std::pair<std::vector<int>, std::vector<int>> PruningColours(
    const GeometricGraph& g1, const GeometricGraph& g2) {
  using Key = std::pair<std::pair<ScalarTuple, std::size_t>,
                        std::vector<std::pair<ScalarTuple, std::size_t>>>;
  std::map<Key, int> ids;
  auto colour = [&ids](const GeometricGraph& g) {
    std::vector<int> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
      Key key{{g.scalars(i), g.degree(i)}, {}};
      for (std::size_t j : g.neighbours(i)) {
        key.second.emplace_back(g.scalars(j), g.degree(j));
      }
      std::sort(key.second.begin(), key.second.end());
      auto [it, inserted] = ids.emplace(std::move(key), static_cast<int>(ids.size()));
      out.push_back(it->second);
    }
    return out;
  };
  auto c1 = colour(g1);
  auto c2 = colour(g2);
  return {std::move(c1), std::move(c2)};
}

struct StackedGraph {
  std::vector<Vec> vectors;           // all stacked vectors, node-major
  std::vector<std::size_t> offset;    // first stacked index per node
  std::vector<std::size_t> count;     // stack length per node
  Matrix gram;
  Vec centroid;
};

StackedGraph Stack(const GeometricGraph& g) {
  StackedGraph s;
  const NumericMode mode = g.mode();
  s.centroid = ZeroVec(g.dim(), mode);
  for (std::size_t i = 0; i < g.size(); ++i) {
    s.centroid = Add(s.centroid, g.position(i));
  }
  if (g.size() > 0) {
    s.centroid = Scale(s.centroid, Scalar::FromRatio(1, static_cast<long>(g.size()), mode));
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    s.offset.push_back(s.vectors.size());
    s.vectors.push_back(Sub(g.position(i), s.centroid));
    for (const auto& v : g.vectors(i)) s.vectors.push_back(v);
    s.count.push_back(1 + g.vectors(i).size());
  }
  s.gram = Gram(s.vectors);
  return s;
}

class BijectionSearch {
 public:
  BijectionSearch(const GeometricGraph& g1, const GeometricGraph& g2,
                  const GroupSpec& group)
      : g1_(g1), g2_(g2), group_(group), s1_(Stack(g1)), s2_(Stack(g2)) {
    const std::size_t n = g1.size();
    auto [c1, c2] = PruningColours(g1, g2);
    candidates_.assign(n, {});
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (c1[i] == c2[j] && s1_.count[i] == s2_.count[j] &&
            BlockMatches(i, j, i, j)) {
          candidates_[i].push_back(j);
        }
      }
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [this](std::size_t a, std::size_t b) {
                       return candidates_[a].size() < candidates_[b].size();
                     });
    image_.assign(n, n);
    used_.assign(n, false);
  }

  bool Run() { return Extend(0); }
  const std::vector<std::size_t>& image() const { return image_; }

  // Ordered stacked lists of g1 (node order) and their images in g2.
  std::pair<std::vector<Vec>, std::vector<Vec>> MatchedLists() const {
    std::vector<Vec> a, b;
    for (std::size_t i = 0; i < g1_.size(); ++i) {
      for (std::size_t k = 0; k < s1_.count[i]; ++k) {
        a.push_back(s1_.vectors[s1_.offset[i] + k]);
        b.push_back(s2_.vectors[s2_.offset[image_[i]] + k]);
      }
    }
    return {std::move(a), std::move(b)};
  }

  const StackedGraph& first() const { return s1_; }
  const StackedGraph& second() const { return s2_; }

 private:
  // Gram entries between stacks (i, k) of g1 equal those of (j, l) in g2.
  bool BlockMatches(std::size_t i, std::size_t j, std::size_t k,
                    std::size_t l) const {
    for (std::size_t a = 0; a < s1_.count[i]; ++a) {
      for (std::size_t b = 0; b < s1_.count[k]; ++b) {
        if (!ApproxEqual(s1_.gram[s1_.offset[i] + a][s1_.offset[k] + b],
                         s2_.gram[s2_.offset[j] + a][s2_.offset[l] + b])) {
          return false;
        }
      }
    }
    return true;
  }

  bool Extend(std::size_t pos) {
    if (pos == order_.size()) return OrientationAgrees();
    const std::size_t i = order_[pos];
    for (std::size_t j : candidates_[i]) {
      if (used_[j]) continue;
      bool ok = true;
      for (std::size_t p = 0; p < pos && ok; ++p) {
        const std::size_t k = order_[p];
        ok = g1_.adjacent(i, k) == g2_.adjacent(j, image_[k]) &&
             BlockMatches(i, j, k, image_[k]);
      }
      if (!ok) continue;
      image_[i] = j;
      used_[j] = true;
      if (Extend(pos + 1)) return true;
      used_[j] = false;
      image_[i] = g1_.size();
    }
    return false;
  }

  bool OrientationAgrees() const {
    if (!group_.special()) return true;
    const auto [a, b] = MatchedLists();
    const auto basis = GreedyIndependent(a);
    if (basis.size() < group_.dim) return true;
    Matrix ma, mb;
    for (std::size_t idx : basis) {
      ma.push_back(a[idx]);
      mb.push_back(b[idx]);
    }
    return Det(ma).Sign() == Det(mb).Sign();
  }

  const GeometricGraph& g1_;
  const GeometricGraph& g2_;
  GroupSpec group_;
  StackedGraph s1_;
  StackedGraph s2_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

std::vector<ScalarTuple> SortedScalars(const GeometricGraph& g) {
  std::vector<ScalarTuple> out;
  for (std::size_t i = 0; i < g.size(); ++i) out.push_back(g.scalars(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

IsomorphismResult GeometricIsomorphismOracle(const GeometricGraph& g1,
                                             const GeometricGraph& g2,
                                             const GroupSpec& group,
                                             const OracleOptions& options) {
  if (g1.dim() != group.dim || g2.dim() != group.dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "graph dimension does not match " + group.Name());
  }
  if (g1.mode() != g2.mode()) {
    throw Error(ErrorCode::kModeMismatch, "oracle inputs differ in numeric mode");
  }
  if (g1.size() > options.max_nodes || g2.size() > options.max_nodes) {
    throw Error(ErrorCode::kCapExceeded,
                "oracle is limited to " + std::to_string(options.max_nodes) +
                    " nodes");
  }
  IsomorphismResult result;
  if (g1.size() != g2.size() || g1.edges().size() != g2.edges().size() ||
      SortedScalars(g1) != SortedScalars(g2)) {
    return result;
  }
  BijectionSearch search(g1, g2, group);
  if (!search.Run()) return result;

  const auto [a, b] = search.MatchedLists();
  const auto basis = GreedyIndependent(a);
  std::vector<Vec> from, to;
  for (std::size_t idx : basis) {
    from.push_back(a[idx]);
    to.push_back(b[idx]);
  }
  const auto m =
      IsometryBetween(from, to, group.dim, g1.mode(), group.special());
  if (!m) {
    throw Error(ErrorCode::kDegenerate,
                "matched Gram matrices but no isometry could be built");
  }
  IsometryWitness w;
  w.permutation = search.image();
  w.rotation = Transpose(*m);
  w.translation =
      Sub(search.second().centroid, RowTimes(search.first().centroid, w.rotation));
  result.isomorphic = true;
  result.witness = std::move(w);
  return result;
}

std::vector<std::vector<std::size_t>> AttributedIsomorphisms(
    const GeometricGraph& g1, const GeometricGraph& g2, std::size_t limit) {
  std::vector<std::vector<std::size_t>> found;
  const std::size_t n = g1.size();
  if (n != g2.size() || g1.edges().size() != g2.edges().size()) return found;
  auto [c1, c2] = PruningColours(g1, g2);
  std::vector<std::size_t> image(n, n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (found.size() >= limit) return;
    if (i == n) {
      found.push_back(image);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (used[j] || c1[i] != c2[j]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        ok = g1.adjacent(i, k) == g2.adjacent(j, image[k]);
      }
      if (!ok) continue;
      image[i] = j;
      used[j] = true;
      self(self, i + 1);
      used[j] = false;
    }
  };
  extend(extend, 0);
  return found;
}

}  // namespace gwl
