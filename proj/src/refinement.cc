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

#include "gwlkit/refinement.h"

#include <algorithm>
#include <set>

#include "gwlkit/body_order.h"
#include "gwlkit/diagnostics.h"
#include "gwlkit/object.h"
#include "gwlkit/registry.h"

namespace gwl {

const char* TestKindName(TestKind kind) {
  switch (kind) {
    case TestKind::kWl: return "wl";
    case TestKind::kGwl: return "gwl";
    case TestKind::kIgwl: return "igwl";
    case TestKind::kIgwlK: return "igwl-k";
    case TestKind::kSo2: return "so2";
  }
  return "?";
}

TestKind ParseTestKind(std::string_view name) {
  for (TestKind k : {TestKind::kWl, TestKind::kGwl, TestKind::kIgwl,
                     TestKind::kIgwlK, TestKind::kSo2}) {
    if (name == TestKindName(k)) return k;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown test '" + std::string(name) +
                  "' (expected wl, gwl, igwl, igwl-k or so2)");
}

const char* TerminationName(Termination t) {
  switch (t) {
    case Termination::kHistogramsDiffer: return "histograms_differ";
    case Termination::kPartitionStable: return "partition_stable";
    case Termination::kMaxIters: return "max_iters";
  }
  return "?";
}

int DefaultGwlIterations(const GeometricGraph& g1, const GeometricGraph& g2) {
  const auto d1 = Diameter(g1);
  const auto d2 = Diameter(g2);
  if (!d1 || !d2) return DefaultIterations(g1, g2);
  return std::max(1, std::max(*d1, *d2) + 1);
}

int DefaultIterations(const GeometricGraph& g1, const GeometricGraph& g2) {
  return std::max<int>(1, static_cast<int>(g1.size() + g2.size()));
}

bool SamePartition(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  std::map<int, int> forward;
  std::map<int, int> backward;
  for (std::size_t i = 0; i < a.size(); ++i) {
    auto [f, f_new] = forward.emplace(a[i], b[i]);
    auto [r, r_new] = backward.emplace(b[i], a[i]);
    if (f->second != b[i] || r->second != a[i]) return false;
  }
  return true;
}

RefinementResult Refine(ColourStepper& stepper, std::size_t n1, int max_iters,
                        bool stop_when_stable) {
  if (max_iters < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_iters must be at least 1");
  }
  RefinementResult result;
  std::vector<int> colours = stepper.Initial();
  auto record = [&](const std::vector<int>& c) {
    TraceStep step;
    for (std::size_t i = 0; i < c.size(); ++i) {
      ++(i < n1 ? step.hist1 : step.hist2)[c[i]];
    }
    step.class_count = std::set<int>(c.begin(), c.end()).size();
    result.trace.steps.push_back(std::move(step));
    return result.trace.steps.back().hist1 != result.trace.steps.back().hist2;
  };
  auto finish = [&](Termination why) {
    result.trace.termination = why;
    result.verdict.iterations_run = static_cast<int>(result.trace.steps.size()) - 1;
    result.colours1.assign(colours.begin(), colours.begin() + static_cast<long>(n1));
    result.colours2.assign(colours.begin() + static_cast<long>(n1), colours.end());
    return result;
  };
  if (record(colours)) {
    result.verdict.distinguished = true;
    result.verdict.iteration = 0;
    return finish(Termination::kHistogramsDiffer);
  }
  for (int t = 1; t <= max_iters; ++t) {
    std::vector<int> next = stepper.Step(colours);
    const bool same_partition = SamePartition(colours, next);
    colours = std::move(next);
    if (record(colours)) {
      result.verdict.distinguished = true;
      result.verdict.iteration = t;
      return finish(Termination::kHistogramsDiffer);
    }
    result.verdict.stable = same_partition;
    if (result.verdict.stable && stop_when_stable) {
      return finish(Termination::kPartitionStable);
    }
  }
  return finish(Termination::kMaxIters);
}

namespace {

// The two graphs laid side by side, graph 1 first.
class Union {
 public:
  Union(const GeometricGraph& g1, const GeometricGraph& g2) : g1_(g1), g2_(g2) {}
  std::size_t size() const { return g1_.size() + g2_.size(); }
  std::size_t n1() const { return g1_.size(); }
  const GeometricGraph& graph(std::size_t u) const { return u < n1() ? g1_ : g2_; }
  std::size_t local(std::size_t u) const { return u < n1() ? u : u - n1(); }
  std::size_t global(std::size_t u, std::size_t j) const {
    return u < n1() ? j : j + n1();
  }

 private:
  const GeometricGraph& g1_;
  const GeometricGraph& g2_;
};

void CheckGeometricPair(const GeometricGraph& g1, const GeometricGraph& g2,
                        const GroupSpec& group) {
  if (g1.dim() != g2.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "graphs differ in dimension");
  }
  if (g1.dim() != group.dim) {
    throw Error(ErrorCode::kDimensionMismatch,
                "graph dimension does not match " + group.Name());
  }
  if (g1.mode() != g2.mode()) {
    throw Error(ErrorCode::kModeMismatch, "graphs differ in numeric mode");
  }
}

class WlStepper : public ColourStepper {
 public:
  WlStepper(const Union& u, OrbitRegistry& reg) : u_(u), reg_(reg) {}
  std::vector<int> Initial() override {
    std::vector<int> c;
    for (std::size_t i = 0; i < u_.size(); ++i) {
      c.push_back(reg_.InternScalars(u_.graph(i).scalars(u_.local(i))));
    }
    return c;
  }
  std::vector<int> Step(const std::vector<int>& prev) override {
    std::vector<int> c;
    for (std::size_t i = 0; i < u_.size(); ++i) {
      std::vector<int> sig;
      for (std::size_t j : u_.graph(i).neighbours(u_.local(i))) {
        sig.push_back(prev[u_.global(i, j)]);
      }
      std::sort(sig.begin(), sig.end());
      sig.insert(sig.begin(), prev[i]);
      c.push_back(reg_.InternSignature(sig));
    }
    return c;
  }

 protected:
  const Union& u_;
  OrbitRegistry& reg_;
};

class GwlStepper : public WlStepper {
 public:
  GwlStepper(const Union& u, OrbitRegistry& reg) : WlStepper(u, reg) {}
  std::vector<int> Initial() override {
    std::vector<int> c = WlStepper::Initial();
    for (std::size_t i = 0; i < u_.size(); ++i) {
      const GeometricGraph& g = u_.graph(i);
      objects_.push_back(GeometricObject::Leaf(c[i], g.vectors(u_.local(i)),
                                               g.dim(), g.mode()));
    }
    return c;
  }
  std::vector<int> Step(const std::vector<int>& prev) override {
    std::vector<ObjectPtr> next;
    std::vector<int> c;
    for (std::size_t i = 0; i < u_.size(); ++i) {
      const GeometricGraph& g = u_.graph(i);
      const std::size_t li = u_.local(i);
      std::vector<ObjectChild> children;
      for (std::size_t j : g.neighbours(li)) {
        const std::size_t gj = u_.global(i, j);
        children.push_back({prev[gj], objects_[gj], g.RelativePosition(li, j)});
      }
      next.push_back(GeometricObject::Branch(prev[i], objects_[i], std::move(children)));
      c.push_back(IHash(next.back(), reg_));
    }
    objects_ = std::move(next);
    return c;
  }

 private:
  std::vector<ObjectPtr> objects_;
};

class IgwlStepper : public WlStepper {
 public:
  IgwlStepper(const Union& u, OrbitRegistry& reg) : WlStepper(u, reg) {}
  std::vector<int> Step(const std::vector<int>& prev) override {
    std::vector<int> c;
    for (std::size_t i = 0; i < u_.size(); ++i) {
      const GeometricGraph& g = u_.graph(i);
      const std::size_t li = u_.local(i);
      std::vector<ObjectChild> children;
      for (std::size_t j : g.neighbours(li)) {
        const std::size_t gj = u_.global(i, j);
        children.push_back({prev[gj],
                            GeometricObject::Leaf(prev[gj], g.vectors(j), g.dim(), g.mode()),
                            g.RelativePosition(li, j)});
      }
      auto centre = GeometricObject::Leaf(prev[i], g.vectors(li), g.dim(), g.mode());
      c.push_back(IHash(GeometricObject::Branch(prev[i], std::move(centre),
                                                std::move(children)),
                        reg_));
    }
    return c;
  }
};

class IgwlKStepper : public WlStepper {
 public:
  IgwlKStepper(const Union& u, OrbitRegistry& reg, int k)
      : WlStepper(u, reg), k_(k) {}
  std::vector<int> Step(const std::vector<int>& prev) override {
    std::vector<int> c;
    for (std::size_t i = 0; i < u_.size(); ++i) {
      const GeometricGraph& g = u_.graph(i);
      const std::size_t li = u_.local(i);
      std::vector<BodyNeighbour> nbrs;
      for (std::size_t j : g.neighbours(li)) {
        nbrs.push_back({prev[u_.global(i, j)], g.vectors(j), g.RelativePosition(li, j)});
      }
      c.push_back(IHashK({prev[i], g.vectors(li)}, nbrs, k_, reg_));
    }
    return c;
  }

 private:
  int k_;
};

}  // namespace

RefinementResult RunWl(const GeometricGraph& g1, const GeometricGraph& g2,
                       std::optional<int> max_iters) {
  OrbitRegistry reg(GroupSpec{GroupVariant::kO, g1.dim()}, g1.mode());
  Union u(g1, g2);
  WlStepper stepper(u, reg);
  return Refine(stepper, g1.size(), max_iters.value_or(DefaultIterations(g1, g2)),
                true);
}

RefinementResult RunGwl(const GeometricGraph& g1, const GeometricGraph& g2,
                        const GroupSpec& group, std::optional<int> max_iters) {
  CheckGeometricPair(g1, g2, group);
  OrbitRegistry reg(group, g1.mode());
  Union u(g1, g2);
  GwlStepper stepper(u, reg);
  return Refine(stepper, g1.size(),
                max_iters.value_or(DefaultGwlIterations(g1, g2)), false);
}

RefinementResult RunIgwl(const GeometricGraph& g1, const GeometricGraph& g2,
                         const GroupSpec& group, std::optional<int> max_iters) {
  CheckGeometricPair(g1, g2, group);
  OrbitRegistry reg(group, g1.mode());
  Union u(g1, g2);
  IgwlStepper stepper(u, reg);
  return Refine(stepper, g1.size(), max_iters.value_or(DefaultIterations(g1, g2)),
                true);
}

RefinementResult RunIgwlK(const GeometricGraph& g1, const GeometricGraph& g2,
                          const GroupSpec& group, int k,
                          std::optional<int> max_iters) {
  if (k < 2) {
    throw Error(ErrorCode::kInvalidArgument, "body order k must be at least 2");
  }
  CheckGeometricPair(g1, g2, group);
  OrbitRegistry reg(group, g1.mode());
  Union u(g1, g2);
  IgwlKStepper stepper(u, reg, k);
  return Refine(stepper, g1.size(), max_iters.value_or(DefaultIterations(g1, g2)),
                true);
}

}  // namespace gwl
