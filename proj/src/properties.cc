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

#include "gwlkit/properties.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gwlkit/diagnostics.h"

namespace gwl {
namespace {

// sqrt of a non-negative rational when it is itself rational.
std::optional<Rational> RationalSqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  mpz_class num = q.get_num();
  mpz_class den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

std::string Render(const Scalar& s) {
  if (s.is_exact()) return s.ToString();
  std::ostringstream out;
  out.precision(12);
  out << s.ToDouble();
  return out.str();
}

}  // namespace

BoxMetrics BoundingBoxMetrics(const GeometricGraph& g) {
  if (g.dim() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "bounding box metrics need d = 2 or 3");
  }
  BoxMetrics box;
  const NumericMode mode = g.mode();
  for (std::size_t axis = 0; axis < g.dim(); ++axis) {
    if (g.size() == 0) {
      box.extents.push_back(Scalar::Zero(mode));
      continue;
    }
    Scalar lo = g.position(0)[axis];
    Scalar hi = lo;
    for (std::size_t i = 1; i < g.size(); ++i) {
      const Scalar& x = g.position(i)[axis];
      if (RawLess(x, lo)) lo = x;
      if (RawLess(hi, x)) hi = x;
    }
    box.extents.push_back(hi - lo);
  }
  const Scalar two = Scalar::FromInt(2, mode);
  const Scalar& a = box.extents[0];
  const Scalar& b = box.extents[1];
  if (g.dim() == 2) {
    box.perimeter = two * (a + b);
    box.area = a * b;
  } else {
    const Scalar& c = box.extents[2];
    box.perimeter = Scalar::FromInt(4, mode) * (a + b + c);
    box.area = two * (a * b + b * c + c * a);
    box.volume = a * b * c;
  }
  return box;
}

Vec Centroid(const GeometricGraph& g) {
  Vec c = ZeroVec(g.dim(), g.mode());
  if (g.size() == 0) return c;
  for (std::size_t i = 0; i < g.size(); ++i) c = Add(c, g.position(i));
  return Scale(c, Scalar::FromRatio(1, static_cast<long>(g.size()), g.mode()));
}

std::vector<Scalar> CentroidDistanceMultiset(const GeometricGraph& g) {
  const Vec c = Centroid(g);
  std::vector<Scalar> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    out.push_back(SquaredNorm(Sub(g.position(i), c)));
  }
  std::sort(out.begin(), out.end(),
            [](const Scalar& x, const Scalar& y) { return RawLess(x, y); });
  return out;
}

double DihedralValue::Cosine() const {
  const double v = value.ToDouble();
  if (!squared) return v;
  return v < 0 ? -std::sqrt(-v) : std::sqrt(v);
}

DihedralValue DihedralCos(const GeometricGraph& g, std::size_t l, std::size_t j,
                          std::size_t k, std::size_t m) {
  if (g.dim() != 3) {
    throw Error(ErrorCode::kInvalidArgument, "dihedral angles need d = 3");
  }
  for (std::size_t idx : {l, j, k, m}) {
    if (idx >= g.size()) {
      throw Error(ErrorCode::kInvalidArgument, "dihedral node index out of range");
    }
  }
  const Vec x_jk = g.RelativePosition(j, k);
  const Vec a = Cross(x_jk, g.RelativePosition(l, j));
  const Vec b = Cross(x_jk, g.RelativePosition(m, k));
  const Scalar na = SquaredNorm(a);
  const Scalar nb = SquaredNorm(b);
  if (na.IsZero() || nb.IsZero()) {
    throw Error(ErrorCode::kDegenerate, "dihedral undefined: collinear triple");
  }
  const Scalar dot = Dot(a, b);
  DihedralValue out;
  if (g.mode() == NumericMode::kFloat) {
    out.value = Scalar(dot.ToDouble() / std::sqrt(na.ToDouble() * nb.ToDouble()));
    return out;
  }
  const Rational denom2 = na.rational() * nb.rational();
  if (auto root = RationalSqrt(denom2)) {
    out.value = Scalar(Rational(dot.rational() / *root));
    return out;
  }
  Rational sq = dot.rational() * dot.rational() / denom2;
  if (dot.Sign() < 0) sq = -sq;
  out.value = Scalar(sq);
  out.squared = true;
  return out;
}

PropertyReport ComputeProperties(
    const GeometricGraph& g,
    const std::vector<std::array<std::size_t, 4>>& quadruples) {
  PropertyReport r;
  if (g.dim() >= 2) r.box = BoundingBoxMetrics(g);
  r.centroid = Centroid(g);
  r.centroid_sq_distances = CentroidDistanceMultiset(g);
  for (const auto& q : quadruples) {
    r.dihedrals.emplace_back(q, DihedralCos(g, q[0], q[1], q[2], q[3]));
  }
  return r;
}

nlohmann::json PropertyReportToJson(const PropertyReport& r) {
  auto scalar = [](const Scalar& s) -> nlohmann::json {
    if (s.is_exact()) return s.ToString();
    return s.ToDouble();
  };
  nlohmann::json j;
  if (r.box) {
    nlohmann::json box;
    box["extents"] = nlohmann::json::array();
    for (const auto& e : r.box->extents) box["extents"].push_back(scalar(e));
    box["perimeter"] = scalar(r.box->perimeter);
    box["area"] = scalar(r.box->area);
    if (r.box->volume) box["volume"] = scalar(*r.box->volume);
    j["bounding_box"] = std::move(box);
  }
  j["centroid"] = nlohmann::json::array();
  for (const auto& c : r.centroid) j["centroid"].push_back(scalar(c));
  j["centroid_sq_distances"] = nlohmann::json::array();
  for (const auto& d : r.centroid_sq_distances) {
    j["centroid_sq_distances"].push_back(scalar(d));
  }
  if (!r.centroid.empty() && !r.centroid[0].is_exact()) {
    j["centroid_distances"] = nlohmann::json::array();
    for (const auto& d : r.centroid_sq_distances) {
      j["centroid_distances"].push_back(std::sqrt(std::max(0.0, d.ToDouble())));
    }
  }
  j["dihedrals"] = nlohmann::json::array();
  for (const auto& [q, v] : r.dihedrals) {
    nlohmann::json e;
    e["nodes"] = q;
    e["value"] = scalar(v.value);
    e["squared"] = v.squared;
    e["cosine"] = v.Cosine();
    j["dihedrals"].push_back(std::move(e));
  }
  return j;
}

std::string PropertyReportText(const PropertyReport& r) {
  std::ostringstream out;
  if (r.box) {
    out << "bounding box extents:";
    for (const auto& e : r.box->extents) out << ' ' << Render(e);
    out << "\nperimeter: " << Render(r.box->perimeter)
        << "\narea: " << Render(r.box->area) << '\n';
    if (r.box->volume) out << "volume: " << Render(*r.box->volume) << '\n';
  }
  out << "centroid:";
  for (const auto& c : r.centroid) out << ' ' << Render(c);
  out << "\ncentroid squared distances:";
  for (const auto& d : r.centroid_sq_distances) out << ' ' << Render(d);
  out << '\n';
  for (const auto& [q, v] : r.dihedrals) {
    out << "dihedral " << q[0] << '-' << q[1] << '-' << q[2] << '-' << q[3]
        << ": cos = " << v.Cosine();
    if (v.squared) out << " (signed cos^2 = " << Render(v.value) << ")";
    out << '\n';
  }
  return out.str();
}

}  // namespace gwl
