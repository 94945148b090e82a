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

#include "gwlkit/object.h"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "gwlkit/diagnostics.h"
#include "gwlkit/hash.h"

namespace gwl {
namespace {

void CheckVector(const Vec& v, std::size_t dim, NumericMode mode) {
  if (v.size() != dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "object vector has the wrong number of components");
  }
  for (const auto& x : v) {
    if (x.mode() != mode) {
      throw Error(ErrorCode::kModeMismatch, "object mixes numeric modes");
    }
  }
}

}  // namespace

ObjectPtr GeometricObject::Leaf(int colour, std::vector<Vec> vectors,
                                std::size_t dim, NumericMode mode) {
  for (const auto& v : vectors) CheckVector(v, dim, mode);
  auto o = std::shared_ptr<GeometricObject>(new GeometricObject());
  o->colour_ = colour;
  o->dim_ = dim;
  o->mode_ = mode;
  std::uint64_t h = HashMix(0x1eafULL, static_cast<std::uint64_t>(colour));
  h = HashMix(h, vectors.size());
  if (mode == NumericMode::kExact) {
    for (std::size_t a = 0; a < vectors.size(); ++a) {
      for (std::size_t b = a; b < vectors.size(); ++b) {
        h = HashMix(h, Dot(vectors[a], vectors[b]).Hash());
      }
    }
  }
  o->pre_key_ = h;
  o->vectors_ = std::move(vectors);
  return o;
}

ObjectPtr GeometricObject::Branch(int centre_colour, ObjectPtr centre,
                                  std::vector<ObjectChild> children) {
  if (centre == nullptr) {
    throw Error(ErrorCode::kInvalidArgument, "branch needs a centre object");
  }
  const std::size_t dim = centre->dim();
  const NumericMode mode = centre->mode();
  std::vector<std::uint64_t> child_keys;
  for (const auto& c : children) {
    if (c.object == nullptr) {
      throw Error(ErrorCode::kInvalidArgument, "child object is null");
    }
    if (c.object->depth() != centre->depth()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "child depth must equal the centre depth");
    }
    if (c.object->dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch, "child dimension differs");
    }
    if (c.object->mode() != mode) {
      throw Error(ErrorCode::kModeMismatch, "child numeric mode differs");
    }
    CheckVector(c.rel, dim, mode);
    std::uint64_t k = HashMix(static_cast<std::uint64_t>(c.colour), c.object->pre_key());
    if (mode == NumericMode::kExact) k = HashMix(k, SquaredNorm(c.rel).Hash());
    child_keys.push_back(k);
  }
  std::sort(child_keys.begin(), child_keys.end());
  auto o = std::shared_ptr<GeometricObject>(new GeometricObject());
  o->colour_ = centre_colour;
  o->depth_ = centre->depth() + 1;
  o->dim_ = dim;
  o->mode_ = mode;
  std::uint64_t h = HashMix(0xb7a9c4ULL, static_cast<std::uint64_t>(o->depth_));
  h = HashMix(h, static_cast<std::uint64_t>(centre_colour));
  h = HashMix(h, centre->pre_key());
  h = HashMix(h, child_keys.size());
  for (std::uint64_t k : child_keys) h = HashMix(h, k);
  o->pre_key_ = h;
  o->centre_ = std::move(centre);
  o->children_ = std::move(children);
  return o;
}

std::vector<Vec> VectorTrace(const GeometricObject& o) {
  std::vector<Vec> out;
  std::function<void(const GeometricObject&)> walk =
      [&](const GeometricObject& x) {
        if (x.is_leaf()) {
          out.insert(out.end(), x.vectors().begin(), x.vectors().end());
          return;
        }
        walk(*x.centre());
        for (const auto& c : x.children()) {
          walk(*c.object);
          out.push_back(c.rel);
        }
      };
  walk(o);
  return out;
}

ObjectPtr TransformObject(const ObjectPtr& o, const Matrix& q) {
  std::unordered_map<const GeometricObject*, ObjectPtr> done;
  std::function<ObjectPtr(const ObjectPtr&)> map =
      [&](const ObjectPtr& x) -> ObjectPtr {
    if (auto it = done.find(x.get()); it != done.end()) return it->second;
    ObjectPtr out;
    if (x->is_leaf()) {
      std::vector<Vec> vs;
      for (const auto& v : x->vectors()) vs.push_back(RowTimes(v, q));
      out = GeometricObject::Leaf(x->colour(), std::move(vs), x->dim(), x->mode());
    } else {
      std::vector<ObjectChild> children;
      for (const auto& c : x->children()) {
        children.push_back({c.colour, map(c.object), RowTimes(c.rel, q)});
      }
      out = GeometricObject::Branch(x->colour(), map(x->centre()),
                                    std::move(children));
    }
    done.emplace(x.get(), out);
    return out;
  };
  return map(o);
}

std::size_t DistinctVertexCount(const ObjectPtr& o) {
  std::unordered_set<const GeometricObject*> seen;
  std::vector<const GeometricObject*> stack{o.get()};
  while (!stack.empty()) {
    const GeometricObject* x = stack.back();
    stack.pop_back();
    if (!seen.insert(x).second || x->is_leaf()) continue;
    stack.push_back(x->centre().get());
    for (const auto& c : x->children()) stack.push_back(c.object.get());
  }
  return seen.size();
}

}  // namespace gwl
