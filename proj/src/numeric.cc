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

#include "gwlkit/numeric.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

#include "gwlkit/diagnostics.h"

namespace gwl {
namespace {

std::atomic<double> g_tolerance{kDefaultTolerance};

[[noreturn]] void ModeMismatch() {
  throw Error(ErrorCode::kModeMismatch,
              "arithmetic between exact and float scalars");
}

bool Near(double a, double b) {
  const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
  return std::fabs(a - b) <= Tolerance() * scale;
}

Rational ParseDecimal(std::string_view text) {
  // [sign] digits [. digits] [e[sign]digits]
  std::string s(text);
  std::size_t pos = 0;
  bool negative = false;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long exponent = 0;
  bool seen_digit = false;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    digits += s[pos++];
    seen_digit = true;
  }
  if (pos < s.size() && s[pos] == '.') {
    ++pos;
    while (pos < s.size() &&
           std::isdigit(static_cast<unsigned char>(s[pos]))) {
      digits += s[pos++];
      --exponent;
      seen_digit = true;
    }
  }
  if (!seen_digit) {
    throw Error(ErrorCode::kParse, "malformed number '" + s + "'");
  }
  if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
    ++pos;
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "malformed exponent in '" + s + "'");
    }
    pos += used;
    exponent += e;
  }
  if (pos != s.size()) {
    throw Error(ErrorCode::kParse, "trailing characters in '" + s + "'");
  }
  mpz_class num(digits.empty() ? std::string("0") : digits, 10);
  mpz_class ten_pow;
  mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10,
                static_cast<unsigned long>(std::labs(exponent)));
  Rational q = exponent >= 0 ? Rational(num * ten_pow) : Rational(num, ten_pow);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace

const char* NumericModeName(NumericMode mode) {
  return mode == NumericMode::kExact ? "exact" : "float";
}

NumericMode ParseNumericMode(std::string_view name) {
  if (name == "exact") return NumericMode::kExact;
  if (name == "float") return NumericMode::kFloat;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown numeric mode '" + std::string(name) + "'");
}

double Tolerance() { return g_tolerance.load(std::memory_order_relaxed); }

void SetTolerance(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) {
    throw Error(ErrorCode::kInvalidArgument, "tolerance must be positive");
  }
  g_tolerance.store(eps, std::memory_order_relaxed);
}

Scalar Scalar::Zero(NumericMode mode) { return FromInt(0, mode); }

Scalar Scalar::FromInt(long v, NumericMode mode) {
  return mode == NumericMode::kExact ? Scalar(Rational(v))
                                     : Scalar(static_cast<double>(v));
}

Scalar Scalar::FromRatio(long num, long den, NumericMode mode) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "zero denominator");
  return mode == NumericMode::kExact
             ? Scalar(Rational(num, den))
             : Scalar(static_cast<double>(num) / static_cast<double>(den));
}

Scalar Scalar::Parse(std::string_view text, NumericMode mode) {
  if (text.empty()) throw Error(ErrorCode::kParse, "empty number");
  if (mode == NumericMode::kFloat) {
    std::string s(text);
    char* end = nullptr;
    const double d = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0' || !std::isfinite(d)) {
      throw Error(ErrorCode::kParse, "malformed number '" + s + "'");
    }
    return Scalar(d);
  }
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(ParseDecimal(text));
  const Rational num = ParseDecimal(text.substr(0, slash));
  const Rational den = ParseDecimal(text.substr(slash + 1));
  if (den == 0) {
    throw Error(ErrorCode::kParse,
                "zero denominator in '" + std::string(text) + "'");
  }
  return Scalar(Rational(num / den));
}

void Scalar::Canon() {
  if (auto* q = std::get_if<Rational>(&value_)) q->canonicalize();
}

double Scalar::ToDouble() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_d();
  return std::get<double>(value_);
}

Scalar Scalar::ToMode(NumericMode target) const {
  if (target == mode()) return *this;
  if (target == NumericMode::kFloat) return Scalar(ToDouble());
  return Scalar(Rational(std::get<double>(value_)));
}

std::string Scalar::ToString() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return q->get_str();
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(value_));
  return buf;
}

int Scalar::Sign() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return sgn(*q);
  const double d = std::get<double>(value_);
  if (std::fabs(d) <= Tolerance()) return 0;
  return d > 0 ? 1 : -1;
}

Scalar Scalar::Abs() const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    return Scalar(Rational(abs(*q)));
  }
  return Scalar(std::fabs(std::get<double>(value_)));
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<Rational>(&value_)) return Scalar(Rational(-*q));
  return Scalar(-std::get<double>(value_));
}

#define GWL_SCALAR_OP(op)                                            \
  Scalar& Scalar::operator op(const Scalar & o) {                    \
    if (value_.index() != o.value_.index()) ModeMismatch();          \
    if (auto* q = std::get_if<Rational>(&value_)) {                  \
      *q op std::get<Rational>(o.value_);                            \
    } else {                                                         \
      std::get<double>(value_) op std::get<double>(o.value_);        \
    }                                                                \
    return *this;                                                    \
  }
GWL_SCALAR_OP(+=)
GWL_SCALAR_OP(-=)
GWL_SCALAR_OP(*=)
#undef GWL_SCALAR_OP

Scalar& Scalar::operator/=(const Scalar& o) {
  if (value_.index() != o.value_.index()) ModeMismatch();
  if (auto* q = std::get_if<Rational>(&value_)) {
    const Rational& d = std::get<Rational>(o.value_);
    if (d == 0) throw Error(ErrorCode::kDegenerate, "division by zero");
    *q /= d;
  } else {
    std::get<double>(value_) /= std::get<double>(o.value_);
  }
  return *this;
}

std::size_t Scalar::Hash() const {
  if (const auto* q = std::get_if<Rational>(&value_)) {
    auto limb_hash = [](const mpz_class& z) -> std::size_t {
      const std::size_t size = mpz_size(z.get_mpz_t());
      std::size_t h = static_cast<std::size_t>(sgn(z)) * 0x9e3779b97f4a7c15ULL;
      for (std::size_t i = 0; i < size; ++i) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) +
             0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      }
      return h;
    };
    return limb_hash(q->get_num()) * 31 + limb_hash(q->get_den());
  }
  return std::hash<double>{}(std::get<double>(value_));
}

bool ApproxEqual(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) ModeMismatch();
  if (a.is_exact()) return a.rational() == b.rational();
  return Near(a.ToDouble(), b.ToDouble());
}

int Compare(const Scalar& a, const Scalar& b) {
  if (ApproxEqual(a, b)) return 0;
  if (a.is_exact()) return cmp(a.rational(), b.rational()) < 0 ? -1 : 1;
  return a.ToDouble() < b.ToDouble() ? -1 : 1;
}

bool RawLess(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) ModeMismatch();
  if (a.is_exact()) return a.rational() < b.rational();
  return a.ToDouble() < b.ToDouble();
}

double RelativeGap(const Scalar& a, const Scalar& b) {
  if (a.is_exact()) {
    return a.rational() == b.rational()
               ? 0.0
               : std::numeric_limits<double>::infinity();
  }
  const double x = a.ToDouble();
  const double y = b.ToDouble();
  return std::fabs(x - y) / std::max({1.0, std::fabs(x), std::fabs(y)});
}

bool OrbitEntryEqual(const Scalar& a, const Scalar& b) {
  if (ApproxEqual(a, b)) return true;
  if (!a.is_exact() && RelativeGap(a, b) <= 10.0 * Tolerance()) {
    Warn("float comparison within 10*eps of the tolerance boundary; "
         "orbit separation may be fragile");
  }
  return false;
}

Vec ZeroVec(std::size_t dim, NumericMode mode) {
  return Vec(dim, Scalar::Zero(mode));
}

namespace {
void CheckSameDim(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length mismatch");
  }
}
}  // namespace

Vec Add(const Vec& a, const Vec& b) {
  CheckSameDim(a, b);
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vec Sub(const Vec& a, const Vec& b) {
  CheckSameDim(a, b);
  Vec out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vec Scale(const Vec& a, const Scalar& s) {
  Vec out(a);
  for (auto& x : out) x *= s;
  return out;
}

Scalar Dot(const Vec& a, const Vec& b) {
  CheckSameDim(a, b);
  if (a.empty()) return Scalar();
  Scalar acc = a[0] * b[0];
  for (std::size_t i = 1; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Scalar SquaredNorm(const Vec& a) { return Dot(a, a); }

Vec Cross(const Vec& a, const Vec& b) {
  if (a.size() != 3 || b.size() != 3) {
    throw Error(ErrorCode::kDimensionMismatch, "cross product needs d = 3");
  }
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

bool ApproxEqual(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!ApproxEqual(a[i], b[i])) return false;
  }
  return true;
}

bool RawLess(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Scalar& x, const Scalar& y) { return RawLess(x, y); });
}

std::vector<double> ToDoubles(const Vec& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.ToDouble());
  return out;
}

Matrix Identity(std::size_t dim, NumericMode mode) {
  Matrix m(dim, ZeroVec(dim, mode));
  for (std::size_t i = 0; i < dim; ++i) m[i][i] = Scalar::FromInt(1, mode);
  return m;
}

Matrix Transpose(const Matrix& m) {
  if (m.empty()) return m;
  Matrix t(m[0].size(), Vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

Matrix MatMul(const Matrix& a, const Matrix& b) {
  const Matrix bt = Transpose(b);
  Matrix out(a.size(), Vec(bt.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < bt.size(); ++j) out[i][j] = Dot(a[i], bt[j]);
  }
  return out;
}

Vec RowTimes(const Vec& v, const Matrix& m) { return Apply(Transpose(m), v); }

Vec Apply(const Matrix& m, const Vec& v) {
  Vec out;
  out.reserve(m.size());
  for (const auto& row : m) out.push_back(Dot(row, v));
  return out;
}

Scalar Det(const Matrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) {
      throw Error(ErrorCode::kDimensionMismatch, "determinant of non-square");
    }
  }
  if (n == 0) return Scalar(Rational(1));
  const NumericMode mode = m[0][0].mode();
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (n == 3) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }
  // Gaussian elimination with partial pivoting on raw magnitude.
  Matrix a = m;
  Scalar det = Scalar::FromInt(1, mode);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (RawLess(a[best][col].Abs(), a[r][col].Abs())) best = r;
    }
    if (a[best][col].IsZero()) return Scalar::Zero(mode);
    if (best != col) {
      std::swap(a[best], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const Scalar f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

Matrix Inverse(const Matrix& m) {
  const std::size_t n = m.size();
  if (n == 0) return m;
  const NumericMode mode = m[0][0].mode();
  Matrix a = m;
  Matrix inv = Identity(n, mode);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (RawLess(a[best][col].Abs(), a[r][col].Abs())) best = r;
    }
    if (a[best][col].IsZero()) {
      throw Error(ErrorCode::kDegenerate, "singular matrix");
    }
    std::swap(a[best], a[col]);
    std::swap(inv[best], inv[col]);
    const Scalar p = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= p;
      inv[col][c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const Scalar f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return inv;
}

Matrix Gram(std::span<const Vec> vectors) {
  Matrix g(vectors.size(), Vec(vectors.size()));
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    for (std::size_t j = i; j < vectors.size(); ++j) {
      g[i][j] = Dot(vectors[i], vectors[j]);
      g[j][i] = g[i][j];
    }
  }
  return g;
}

bool IndependenceTracker::TryAdd(const Vec& v) {
  if (v.size() != dim_) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length mismatch");
  }
  if (full()) return false;
  Vec r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (r[p].is_exact() ? r[p].rational() == 0 : r[p].ToDouble() == 0.0) {
      continue;
    }
    const Scalar f = r[p] / rows_[k][p];
    for (std::size_t c = 0; c < dim_; ++c) r[c] -= f * rows_[k][c];
  }
  double scale = 1.0;
  for (const auto& x : v) scale = std::max(scale, std::fabs(x.ToDouble()));
  std::size_t pivot = dim_;
  double best = 0.0;
  for (std::size_t c = 0; c < dim_; ++c) {
    const bool nonzero = r[c].is_exact()
                             ? r[c].rational() != 0
                             : std::fabs(r[c].ToDouble()) > Tolerance() * scale;
    if (!nonzero) continue;
    const double mag = std::fabs(r[c].ToDouble());
    if (pivot == dim_ || mag > best) {
      pivot = c;
      best = mag;
    }
  }
  if (pivot == dim_) return false;
  rows_.push_back(std::move(r));
  pivots_.push_back(pivot);
  return true;
}

std::vector<std::size_t> GreedyIndependent(std::span<const Vec> vectors) {
  std::vector<std::size_t> picked;
  if (vectors.empty()) return picked;
  IndependenceTracker tracker(vectors[0].size());
  for (std::size_t i = 0; i < vectors.size() && !tracker.full(); ++i) {
    if (tracker.TryAdd(vectors[i])) picked.push_back(i);
  }
  return picked;
}

}  // namespace gwl
