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

#include "gwlkit/isometry.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "gwlkit/diagnostics.h"

namespace gwl {

std::string GroupSpec::Name() const {
  return std::string(special() ? "SO(" : "O(") + std::to_string(dim) + ")";
}

GroupVariant ParseGroupVariant(std::string_view name) {
  if (name == "O" || name == "o") return GroupVariant::kO;
  if (name == "SO" || name == "so") return GroupVariant::kSO;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown group '" + std::string(name) + "' (expected O or SO)");
}

NumericMode IsometryWitness::mode() const {
  return rotation.empty() || rotation[0].empty() ? NumericMode::kExact
                                                 : rotation[0][0].mode();
}

void IsometryWitness::Validate() const {
  const std::size_t d = dim();
  if (translation.size() != d) {
    throw Error(ErrorCode::kDimensionMismatch,
                "translation length does not match rotation");
  }
  for (const auto& row : rotation) {
    if (row.size() != d) {
      throw Error(ErrorCode::kDimensionMismatch, "rotation is not square");
    }
  }
  std::vector<bool> hit(permutation.size(), false);
  for (std::size_t p : permutation) {
    if (p >= permutation.size() || hit[p]) {
      throw Error(ErrorCode::kInvalidArgument, "permutation is not a bijection");
    }
    hit[p] = true;
  }
  const Matrix qqt = MatMul(rotation, Transpose(rotation));
  const Matrix id = gwl::Identity(d, mode());
  for (std::size_t i = 0; i < d; ++i) {
    if (!ApproxEqual(qqt[i], id[i])) {
      throw Error(ErrorCode::kNotOrthogonal,
                  "rotation matrix is not orthogonal");
    }
  }
}

int IsometryWitness::Orientation() const {
  return Det(rotation).Sign() >= 0 ? 1 : -1;
}

IsometryWitness IsometryWitness::Identity(std::size_t n, std::size_t dim,
                                          NumericMode mode) {
  IsometryWitness w;
  w.permutation.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.permutation[i] = i;
  w.rotation = gwl::Identity(dim, mode);
  w.translation = ZeroVec(dim, mode);
  return w;
}

GeometricGraph ApplyIsometry(const GeometricGraph& g,
                             const IsometryWitness& w) {
  if (w.dim() != g.dim() || w.permutation.size() != g.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "witness does not match graph dimensions");
  }
  w.Validate();
  const GeometricGraph* source = &g;
  IsometryWitness local;
  const IsometryWitness* witness = &w;
  GeometricGraph coerced = g;
  if (g.mode() != w.mode()) {
    if (g.mode() == NumericMode::kExact) {
      Warn("isometry has non-rational entries; graph coerced to float mode");
      coerced = g.WithMode(NumericMode::kFloat);
      source = &coerced;
    } else {
      local = w;
      for (auto& row : local.rotation) {
        for (auto& x : row) x = x.ToMode(NumericMode::kFloat);
      }
      for (auto& x : local.translation) x = x.ToMode(NumericMode::kFloat);
      witness = &local;
    }
  }
  const std::size_t n = g.size();
  std::vector<NodeSpec> nodes(n);
  for (std::size_t i = 0; i < n; ++i) {
    const NodeSpec& in = source->node(i);
    NodeSpec& out = nodes[witness->permutation[i]];
    out.scalars = in.scalars;
    out.position =
        Add(RowTimes(in.position, witness->rotation), witness->translation);
    for (const auto& v : in.vectors) {
      out.vectors.push_back(RowTimes(v, witness->rotation));
    }
  }
  std::vector<Edge> edges;
  for (const auto& [i, j] : g.edges()) {
    edges.emplace_back(witness->permutation[i], witness->permutation[j]);
  }
  return GeometricGraph(g.dim(), source->mode(), std::move(nodes), edges);
}

Matrix CayleyRotation(std::size_t dim, std::span<const Rational> params) {
  const NumericMode mode = NumericMode::kExact;
  if (dim == 1) return Identity(1, mode);
  Matrix a(dim, ZeroVec(dim, mode));
  if (dim == 2) {
    if (params.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument, "d = 2 Cayley needs 1 parameter");
    }
    a[0][1] = Scalar(Rational(-params[0]));
    a[1][0] = Scalar(params[0]);
  } else {
    if (params.size() != 3) {
      throw Error(ErrorCode::kInvalidArgument, "d = 3 Cayley needs 3 parameters");
    }
    a[0][1] = Scalar(Rational(-params[2]));
    a[1][0] = Scalar(params[2]);
    a[0][2] = Scalar(params[1]);
    a[2][0] = Scalar(Rational(-params[1]));
    a[1][2] = Scalar(Rational(-params[0]));
    a[2][1] = Scalar(params[0]);
  }
  Matrix minus = Identity(dim, mode);
  Matrix plus = Identity(dim, mode);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      minus[i][j] -= a[i][j];
      plus[i][j] += a[i][j];
    }
  }
  return MatMul(minus, Inverse(plus));
}

Matrix AxisReflection(std::size_t dim, NumericMode mode) {
  Matrix m = Identity(dim, mode);
  m[0][0] = Scalar::FromInt(-1, mode);
  return m;
}

Matrix PlaneRotation(std::size_t dim, double angle) {
  Matrix m = Identity(dim, NumericMode::kFloat);
  if (dim < 2) return m;
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  m[0][0] = Scalar(c);
  m[0][1] = Scalar(-s);
  m[1][0] = Scalar(s);
  m[1][1] = Scalar(c);
  return m;
}

IsometryWitness RandomRationalIsometry(std::size_t n, std::size_t dim,
                                       GroupVariant variant,
                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
  };
  std::vector<Rational> params;
  const std::size_t count = dim == 2 ? 1 : (dim == 3 ? 3 : 0);
  for (std::size_t k = 0; k < count; ++k) {
    params.emplace_back(draw(-4, 4), draw(1, 3));
    params.back().canonicalize();
  }
  IsometryWitness w;
  w.rotation = CayleyRotation(dim, params);
  if (variant == GroupVariant::kO && draw(0, 1) == 1) {
    w.rotation = MatMul(AxisReflection(dim, NumericMode::kExact), w.rotation);
  }
  w.permutation.resize(n);
  for (std::size_t i = 0; i < n; ++i) w.permutation[i] = i;
  for (std::size_t i = n; i > 1; --i) {
    std::swap(w.permutation[i - 1],
              w.permutation[static_cast<std::size_t>(draw(0, static_cast<long>(i) - 1))]);
  }
  for (std::size_t k = 0; k < dim; ++k) {
    w.translation.push_back(Scalar(Rational(draw(-6, 6), draw(1, 4))));
  }
  return w;
}

Matrix Householder(const Vec& v) {
  const std::size_t d = v.size();
  const NumericMode mode = v.empty() ? NumericMode::kExact : v[0].mode();
  const Scalar norm2 = SquaredNorm(v);
  Matrix h = Identity(d, mode);
  if (norm2.IsZero()) return h;
  const Scalar two = Scalar::FromInt(2, mode);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) h[i][j] -= two * v[i] * v[j] / norm2;
  }
  return h;
}

namespace {

// A nonzero vector orthogonal to every vector in `span` (rank < dim).
Vec OrthogonalComplementVector(std::span<const Vec> span, std::size_t dim,
                               NumericMode mode) {
  if (span.empty()) {
    Vec e = ZeroVec(dim, mode);
    e[0] = Scalar::FromInt(1, mode);
    return e;
  }
  if (dim == 2) return {-span[0][1], span[0][0]};
  // dim == 3
  if (span.size() == 2) return Cross(span[0], span[1]);
  Vec best;
  Scalar best_norm = Scalar::Zero(mode);
  for (std::size_t axis = 0; axis < 3; ++axis) {
    Vec e = ZeroVec(3, mode);
    e[axis] = Scalar::FromInt(1, mode);
    Vec c = Cross(span[0], e);
    const Scalar nrm = SquaredNorm(c);
    if (best.empty() || RawLess(best_norm, nrm)) {
      best = std::move(c);
      best_norm = nrm;
    }
  }
  return best;
}

}  // namespace

std::optional<Matrix> IsometryBetween(std::span<const Vec> from,
                                      std::span<const Vec> to, std::size_t dim,
                                      NumericMode mode, bool special) {
  if (from.size() != to.size()) {
    throw Error(ErrorCode::kInvalidArgument, "basis sizes differ");
  }
  Matrix m = Identity(dim, mode);
  int reflections = 0;
  for (std::size_t k = 0; k < from.size(); ++k) {
    const Vec u = Apply(m, from[k]);
    if (ApproxEqual(u, to[k])) continue;
    m = MatMul(Householder(Sub(u, to[k])), m);
    ++reflections;
  }
  for (std::size_t k = 0; k < from.size(); ++k) {
    if (!ApproxEqual(Apply(m, from[k]), to[k])) return std::nullopt;
  }
  if (special && reflections % 2 == 1) {
    if (from.size() >= dim) return std::nullopt;
    m = MatMul(Householder(OrthogonalComplementVector(to, dim, mode)), m);
  }
  return m;
}

}  // namespace gwl
