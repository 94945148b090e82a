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

#include "gwlkit/so2.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "gwlkit/diagnostics.h"
#include "gwlkit/matching.h"

namespace gwl {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool Near(double a, double b) {
  return std::fabs(a - b) <= Tolerance() * std::max({1.0, std::fabs(a), std::fabs(b)});
}

bool Near(const P2& a, const P2& b) { return Near(a[0], b[0]) && Near(a[1], b[1]); }

double Norm(const P2& v) { return std::hypot(v[0], v[1]); }

bool Turns(const RatedVector& e) { return e.rate != 0 && !Near(Norm(e.v), 0.0); }

// Angle reduced to [0, 2 pi), with values within tolerance of 2 pi folded to 0.
double Wrap(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0) a += kTwoPi;
  if (kTwoPi - a <= Tolerance() * kTwoPi) a = 0.0;
  return a;
}

std::vector<RatedVector> Act(const std::vector<RatedVector>& x, double beta) {
  std::vector<RatedVector> out = x;
  for (auto& e : out) {
    if (e.rate != 0) e.v = Rotate(e.v, e.rate * beta);
  }
  return out;
}

bool SameMultiset(const std::vector<RatedVector>& a,
                  const std::vector<RatedVector>& b) {
  if (a.size() != b.size()) return false;
  return HasPerfectMatching(a.size(), [&](std::size_t i, std::size_t j) {
    // Elements that do not turn are compared by value whatever their rate.
    const bool ta = Turns(a[i]);
    const bool tb = Turns(b[j]);
    if (ta != tb) return false;
    return (!ta || a[i].rate == b[j].rate) && Near(a[i].v, b[j].v);
  });
}

// The turning element of largest norm (first such in input order).
std::optional<std::size_t> Pivot(const std::vector<RatedVector>& x) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!Turns(x[i])) continue;
    if (!best || Norm(x[i].v) > Norm(x[*best].v) * (1.0 + Tolerance())) best = i;
  }
  return best;
}

// Angles beta in [0, 2 pi) that carry the pivot of x onto some element of y
// with the same rate and norm, ascending and de-duplicated.
std::vector<double> CandidateAngles(const std::vector<RatedVector>& x, std::size_t pivot,
                                    const std::vector<RatedVector>& y) {
  const RatedVector& p = x[pivot];
  const double np = Norm(p.v);
  const double ap = std::atan2(p.v[1], p.v[0]);
  std::vector<double> out;
  for (const auto& q : y) {
    if (!Turns(q) || q.rate != p.rate || !Near(Norm(q.v), np)) continue;
    const double base = std::atan2(q.v[1], q.v[0]) - ap;
    for (int m = 0; m < p.rate; ++m) out.push_back(Wrap((base + kTwoPi * m) / p.rate));
  }
  std::sort(out.begin(), out.end());
  std::vector<double> unique;
  for (double a : out) {
    if (unique.empty() || !Near(a, unique.back())) unique.push_back(a);
  }
  // 0 and values just below 2 pi name the same rotation.
  if (unique.size() > 1 && Near(unique.back() - kTwoPi, unique.front())) unique.pop_back();
  return unique;
}

StabilizerInfo Stabilizer(const std::vector<RatedVector>& x) {
  StabilizerInfo info;
  const auto pivot = Pivot(x);
  if (!pivot) {
    info.continuous = true;
    info.order = 0;
    return info;
  }
  int count = 0;
  for (double beta : CandidateAngles(x, *pivot, x)) {
    if (SameMultiset(Act(x, beta), x)) ++count;
  }
  info.order = std::max(count, 1);
  info.theta = kTwoPi / info.order;
  return info;
}

std::vector<RatedVector> Plain(const std::vector<P2>& x) {
  std::vector<RatedVector> out;
  for (const auto& v : x) out.push_back({v, 1});
  return out;
}

}  // namespace

P2 Rotate(const P2& v, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  return {c * v[0] - s * v[1], s * v[0] + c * v[1]};
}

StabilizerInfo StabilizerOrder(const std::vector<RatedVector>& x) {
  if (x.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "stabiliser of an empty multiset");
  }
  return Stabilizer(x);
}

StabilizerInfo StabilizerOrder(const std::vector<P2>& x) {
  return StabilizerOrder(Plain(x));
}

std::optional<double> RotationBetween(const std::vector<RatedVector>& x,
                                      const std::vector<RatedVector>& y) {
  if (x.size() != y.size()) return std::nullopt;
  const auto pivot = Pivot(x);
  if (!pivot) {
    if (SameMultiset(x, y)) return 0.0;
    return std::nullopt;
  }
  for (double beta : CandidateAngles(x, *pivot, y)) {
    if (SameMultiset(Act(x, beta), y)) return beta;
  }
  return std::nullopt;
}

So2Registry::Match So2Registry::Locate(const std::vector<RatedVector>& x) {
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    const auto beta = RotationBetween(reps_[i].x, x);
    if (!beta) continue;
    Match m;
    m.code = static_cast<int>(i) + 1;
    m.stabilizer = reps_[i].stabilizer;
    if (!m.stabilizer.continuous) {
      double alpha = std::fmod(*beta, m.stabilizer.theta);
      if (m.stabilizer.theta - alpha <= Tolerance() * kTwoPi) alpha = 0.0;
      m.alpha = alpha;
    }
    return m;
  }
  reps_.push_back({x, Stabilizer(x)});
  Match m;
  m.code = static_cast<int>(reps_.size());
  m.stabilizer = reps_.back().stabilizer;
  return m;
}

So2Hash HashV(const std::vector<RatedVector>& x, So2Registry& reg) {
  const auto m = reg.Locate(x);
  So2Hash h;
  h.code = m.code;
  h.alpha = m.alpha;
  if (m.stabilizer.continuous) {
    h.rate = 0;
    h.vec = {static_cast<double>(m.code), 0.0};
    return h;
  }
  h.rate = m.stabilizer.order;
  const double phi = h.rate * m.alpha;
  h.vec = {m.code * std::cos(phi), m.code * std::sin(phi)};
  return h;
}

So2Hash HashV(const std::vector<P2>& x, So2Registry& reg) {
  return HashV(Plain(x), reg);
}

std::vector<P2> PositionsOf(const GeometricGraph& g) {
  if (g.dim() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "SO(2) tools need d = 2");
  }
  std::vector<P2> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.push_back({g.position(i)[0].ToDouble(), g.position(i)[1].ToDouble()});
  }
  return out;
}

P2 EquivariantSumDemo(const std::vector<P2>& x) {
  P2 s{0.0, 0.0};
  for (const auto& v : x) {
    s[0] += v[0];
    s[1] += v[1];
  }
  return s;
}

namespace {

class So2Stepper : public ColourStepper {
 public:
  So2Stepper(const GeometricGraph& g1, const GeometricGraph& g2) : g1_(g1), g2_(g2) {
    for (const auto* g : {&g1_, &g2_}) {
      const auto pos = PositionsOf(*g);
      positions_.insert(positions_.end(), pos.begin(), pos.end());
    }
  }

  std::vector<int> Initial() override {
    std::vector<int> c;
    for (std::size_t u = 0; u < size(); ++u) {
      auto [it, fresh] = scalars_.emplace(graph(u).scalars(local(u)),
                                          static_cast<int>(scalars_.size()));
      c.push_back(it->second);
    }
    scalar_colours_ = c;
    return c;
  }

  std::vector<int> Step(const std::vector<int>&) override {
    std::vector<So2Hash> next;
    for (std::size_t v = 0; v < size(); ++v) {
      std::vector<RatedVector> x;
      for (std::size_t j : graph(v).neighbours(local(v))) {
        const std::size_t u = global(v, j);
        if (messages_.empty()) {
          x.push_back(EdgeMessage(v, u));
        } else {
          x.push_back({messages_[u].vec, messages_[u].rate});
        }
      }
      next.push_back(HashV(x, reg_));
    }
    messages_ = std::move(next);
    std::vector<int> c;
    for (const auto& m : messages_) c.push_back(m.code);
    return c;
  }

 private:
  // Hash(h_v, h_u, |Hash_v(x_vu)|) * Hash_v(x_vu) / |Hash_v(x_vu)|.
  RatedVector EdgeMessage(std::size_t v, std::size_t u) {
    const P2 rel{positions_[v][0] - positions_[u][0], positions_[v][1] - positions_[u][1]};
    const So2Hash h = HashV(std::vector<P2>{rel}, reg_);
    const auto key = std::make_tuple(scalar_colours_[v], scalar_colours_[u], h.code);
    auto [it, fresh] = triples_.emplace(key, static_cast<int>(triples_.size()));
    const double scale = (1.0 + it->second) / Norm(h.vec);
    return {{h.vec[0] * scale, h.vec[1] * scale}, h.rate};
  }

  std::size_t size() const { return g1_.size() + g2_.size(); }
  const GeometricGraph& graph(std::size_t u) const { return u < g1_.size() ? g1_ : g2_; }
  std::size_t local(std::size_t u) const { return u < g1_.size() ? u : u - g1_.size(); }
  std::size_t global(std::size_t v, std::size_t j) const {
    return v < g1_.size() ? j : j + g1_.size();
  }

  const GeometricGraph& g1_;
  const GeometricGraph& g2_;
  std::vector<P2> positions_;
  std::map<ScalarTuple, int> scalars_;
  std::map<std::tuple<int, int, int>, int> triples_;
  std::vector<int> scalar_colours_;
  std::vector<So2Hash> messages_;
  So2Registry reg_;
};

}  // namespace

RefinementResult RunSo2Gwl(const GeometricGraph& g1, const GeometricGraph& g2,
                           std::optional<int> max_iters) {
  if (g1.dim() != 2 || g2.dim() != 2) {
    throw Error(ErrorCode::kDimensionMismatch, "SO(2)-GWL needs d = 2 graphs");
  }
  if (g1.mode() != g2.mode()) {
    throw Error(ErrorCode::kModeMismatch, "graphs differ in numeric mode");
  }
  So2Stepper stepper(g1, g2);
  return Refine(stepper, g1.size(), max_iters.value_or(DefaultGwlIterations(g1, g2)),
                false);
}

}  // namespace gwl
