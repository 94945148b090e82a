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

#ifndef GWLKIT_NUMERIC_H_
#define GWLKIT_NUMERIC_H_

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gwl {

using Rational = mpq_class;

enum class NumericMode { kExact, kFloat };

const char* NumericModeName(NumericMode mode);
NumericMode ParseNumericMode(std::string_view name);

// Process-wide float tolerance. Two floats a, b compare equal when
// |a - b| <= eps * max(1, |a|, |b|).
inline constexpr double kDefaultTolerance = 1e-9;
double Tolerance();
void SetTolerance(double eps);

// A coordinate-level number: an exact rational in lowest terms, or a double
// compared under the global tolerance. Arithmetic between the two modes is
// an error; a graph and everything derived from it live in one mode.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  explicit Scalar(Rational q) : value_(std::move(q)) { Canon(); }
  explicit Scalar(double d) : value_(d) {}

  static Scalar Zero(NumericMode mode);
  static Scalar FromInt(long v, NumericMode mode);
  static Scalar FromRatio(long num, long den, NumericMode mode);
  // Exact mode accepts "p", "p/q" and plain decimals ("0.25" -> 1/4).
  static Scalar Parse(std::string_view text, NumericMode mode);

  NumericMode mode() const {
    return std::holds_alternative<Rational>(value_) ? NumericMode::kExact
                                                    : NumericMode::kFloat;
  }
  bool is_exact() const { return mode() == NumericMode::kExact; }
  const Rational& rational() const { return std::get<Rational>(value_); }
  double ToDouble() const;
  Scalar ToMode(NumericMode mode) const;
  std::string ToString() const;

  // -1, 0 or +1; floats within tolerance of zero report 0.
  int Sign() const;
  bool IsZero() const { return Sign() == 0; }
  Scalar Abs() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Bitwise identity (exact rationals, or identical doubles). Use
  // ApproxEqual for numeric-mode equality.
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }

  std::size_t Hash() const;

 private:
  void Canon();
  std::variant<Rational, double> value_;
};

// Numeric-mode equality: exact in rational mode, tolerance in float mode.
bool ApproxEqual(const Scalar& a, const Scalar& b);
// Three-way comparison honouring the tolerance (0 when ApproxEqual).
int Compare(const Scalar& a, const Scalar& b);
// Strict weak order on raw values; deterministic, ignores tolerance.
bool RawLess(const Scalar& a, const Scalar& b);

// Relative gap |a-b| / max(1,|a|,|b|) in float mode; 0 or +inf in exact.
double RelativeGap(const Scalar& a, const Scalar& b);

// ApproxEqual for orbit comparisons. In float mode, a pair that is unequal
// but within 10 eps is reported on the warning channel: such near-misses are
// where rounding can merge or split orbits.
bool OrbitEntryEqual(const Scalar& a, const Scalar& b);

using Vec = std::vector<Scalar>;
using Matrix = std::vector<Vec>;  // row-major

Vec ZeroVec(std::size_t dim, NumericMode mode);
Vec Add(const Vec& a, const Vec& b);
Vec Sub(const Vec& a, const Vec& b);
Vec Scale(const Vec& a, const Scalar& s);
Scalar Dot(const Vec& a, const Vec& b);
Scalar SquaredNorm(const Vec& a);
Vec Cross(const Vec& a, const Vec& b);
bool ApproxEqual(const Vec& a, const Vec& b);
bool RawLess(const Vec& a, const Vec& b);
std::vector<double> ToDoubles(const Vec& v);

Matrix Identity(std::size_t dim, NumericMode mode);
Matrix Transpose(const Matrix& m);
Matrix MatMul(const Matrix& a, const Matrix& b);
// Row vector times matrix: (v M)_j = sum_i v_i M_ij.
Vec RowTimes(const Vec& v, const Matrix& m);
// Matrix times column vector.
Vec Apply(const Matrix& m, const Vec& v);
Scalar Det(const Matrix& m);
// Inverse of a square matrix; throws kDegenerate when singular.
Matrix Inverse(const Matrix& m);

// Gram matrix of an ordered vector list.
Matrix Gram(std::span<const Vec> vectors);

// Indices of the first maximal linearly independent subset, scanning in
// order. Its size is the rank of the list.
std::vector<std::size_t> GreedyIndependent(std::span<const Vec> vectors);

// Incremental form of GreedyIndependent: feeds vectors one by one.
class IndependenceTracker {
 public:
  explicit IndependenceTracker(std::size_t dim) : dim_(dim) {}
  // Returns true (and absorbs v) when v is independent of what was absorbed.
  bool TryAdd(const Vec& v);
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == dim_; }

 private:
  std::size_t dim_;
  std::vector<Vec> rows_;            // echelon rows
  std::vector<std::size_t> pivots_;  // pivot column per row
};

}  // namespace gwl

#endif  // GWLKIT_NUMERIC_H_
