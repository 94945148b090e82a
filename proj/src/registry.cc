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

#include "gwlkit/registry.h"

#include <algorithm>

#include "gwlkit/diagnostics.h"
#include "gwlkit/hash.h"
#include "gwlkit/matching.h"
#include "gwlkit/orbit.h"

namespace gwl {
namespace {

bool SameDescriptor(const TupleDescriptor& a, const TupleDescriptor& b) {
  if (a.colours != b.colours || a.orientation != b.orientation ||
      a.gram.size() != b.gram.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.gram.size(); ++i) {
    if (!OrbitEntryEqual(a.gram[i], b.gram[i])) return false;
  }
  return true;
}

// Invariant key of a sorted bag: full values in exact mode, the discrete
// part only in float mode.
std::uint64_t BagKey(const DescriptorBag& bag, NumericMode mode) {
  std::vector<std::uint64_t> parts;
  for (const auto& d : bag) {
    std::uint64_t h = HashMix(0xdecULL, static_cast<std::uint64_t>(d.orientation + 2));
    for (int c : d.colours) h = HashMix(h, static_cast<std::uint64_t>(c));
    h = HashMix(h, d.gram.size());
    if (mode == NumericMode::kExact) {
      for (const auto& x : d.gram) h = HashMix(h, x.Hash());
    }
    parts.push_back(h);
  }
  std::sort(parts.begin(), parts.end());
  std::uint64_t h = HashMix(0xba9ULL, parts.size());
  for (auto p : parts) h = HashMix(h, p);
  return h;
}

}  // namespace

bool DescriptorLess(const TupleDescriptor& a, const TupleDescriptor& b) {
  if (a.colours != b.colours) return a.colours < b.colours;
  if (a.orientation != b.orientation) return a.orientation < b.orientation;
  return RawLess(a.gram, b.gram);
}

bool BagsEqual(const DescriptorBag& a, const DescriptorBag& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  if (a[0].gram.empty() || a[0].gram[0].is_exact()) {
    DescriptorBag x = a;
    DescriptorBag y = b;
    std::sort(x.begin(), x.end(), DescriptorLess);
    std::sort(y.begin(), y.end(), DescriptorLess);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!SameDescriptor(x[i], y[i])) return false;
    }
    return true;
  }
  return HasPerfectMatching(a.size(), [&](std::size_t i, std::size_t j) {
    return SameDescriptor(a[i], b[j]);
  });
}

OrbitRegistry::OrbitRegistry(GroupSpec group, NumericMode mode)
    : group_(group), mode_(mode) {}

int OrbitRegistry::InternScalars(const ScalarTuple& scalars) {
  auto [it, inserted] = scalars_.emplace(scalars, 0);
  if (inserted) it->second = Fresh();
  return it->second;
}

int OrbitRegistry::InternSignature(const std::vector<int>& signature) {
  auto [it, inserted] = signatures_.emplace(signature, 0);
  if (inserted) it->second = Fresh();
  return it->second;
}

int OrbitRegistry::InternObject(const ObjectPtr& o) {
  if (o->dim() != group_.dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "object dimension does not match the registry group " +
                    group_.Name());
  }
  if (o->mode() != mode_) {
    throw Error(ErrorCode::kModeMismatch,
                "object numeric mode does not match the registry");
  }
  // Candidates in insertion order, so the first matching representative wins.
  auto range = objects_.equal_range(o->pre_key());
  std::vector<const std::pair<ObjectPtr, int>*> candidates;
  for (auto it = range.first; it != range.second; ++it) {
    candidates.push_back(&it->second);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto* p, const auto* q) { return p->second < q->second; });
  for (const auto* entry : candidates) {
    ++comparisons_;
    if (OrbitEqual(*o, *entry->first, group_)) return entry->second;
  }
  const int colour = Fresh();
  objects_.emplace(o->pre_key(), std::make_pair(o, colour));
  return colour;
}

int OrbitRegistry::InternBag(DescriptorBag bag) {
  for (const auto& d : bag) {
    for (const auto& x : d.gram) {
      if (x.mode() != mode_) {
        throw Error(ErrorCode::kModeMismatch,
                    "descriptor numeric mode does not match the registry");
      }
    }
  }
  std::sort(bag.begin(), bag.end(), DescriptorLess);
  const std::uint64_t key = BagKey(bag, mode_);
  auto range = bags_.equal_range(key);
  std::vector<const std::pair<DescriptorBag, int>*> candidates;
  for (auto it = range.first; it != range.second; ++it) {
    candidates.push_back(&it->second);
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const auto* p, const auto* q) { return p->second < q->second; });
  for (const auto* entry : candidates) {
    ++comparisons_;
    if (BagsEqual(bag, entry->first)) return entry->second;
  }
  const int colour = Fresh();
  bags_.emplace(key, std::make_pair(std::move(bag), colour));
  return colour;
}

int IHash(const ObjectPtr& o, OrbitRegistry& reg) { return reg.InternObject(o); }

}  // namespace gwl
