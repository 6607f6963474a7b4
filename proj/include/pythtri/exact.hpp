// Copyright 2026 The pythtri Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PYTHTRI_EXACT_HPP_
#define PYTHTRI_EXACT_HPP_

// Exact scalars: arbitrary-precision rationals and single-radical quadratic
// surds c*sqrt(r). Every value is immutable and kept in canonical form, so
// structural equality is value equality.

#include <compare>
#include <concepts>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pythtri {

using Integer = boost::multiprecision::cpp_int;

/// Signed fraction num/den with den >= 1 and gcd(|num|, den) = 1.
/// Zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Integer value) : num_(std::move(value)), den_(1) {}  // NOLINT
  template <std::integral T>
  Rational(T value) : num_(value), den_(1) {}  // NOLINT

  /// Canonical p/q. Throws InvalidInput when q == 0.
  static Rational make(Integer p, Integer q);

  /// Parses "p/q" or a bare integer "p". Throws InvalidInput on junk.
  static Rational parse(std::string_view text);

  const Integer& num() const { return num_; }
  const Integer& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_.is_zero(); }
  int sign() const { return num_.sign(); }

  Rational abs() const;
  Rational reciprocal() const;

  /// Always "p/q", including integers ("75/1").
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b);

 private:
  struct Canonical {};
  Rational(Integer num, Integer den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}

  Integer num_;
  Integer den_;
};

Rational make_rational(const Integer& p, const Integer& q);

Rational pow(const Rational& base, unsigned exponent);
Rational square(const Rational& value);

struct IntegerSqrt {
  Integer root;  // floor(sqrt(n))
  bool exact;    // root * root == n
};

/// Newton iteration on integers only. Throws InvalidInput for n < 0.
IntegerSqrt integer_sqrt(const Integer& n);

struct SquarefreeParts {
  Integer square;      // s
  Integer squarefree;  // f, with n == s*s*f
};

/// Deterministic trial division up to the cube root of the unfactored part.
/// Throws InvalidInput for n < 1.
SquarefreeParts squarefree_decompose(const Integer& n);

/// coef * sqrt(radicand), radicand squarefree and >= 1, zero is 0*sqrt(1).
class Surd {
 public:
  Surd() : coef_(), radicand_(1) {}
  explicit Surd(Rational value) : coef_(std::move(value)), radicand_(1) {}

  /// Canonicalizes an arbitrary radicand >= 1 by pulling out square factors.
  static Surd make(Rational coef, const Integer& radicand);

  const Rational& coef() const { return coef_; }
  const Integer& radicand() const { return radicand_; }

  bool is_rational() const { return radicand_ == 1; }
  int sign() const { return coef_.sign(); }

  /// The exact rational coef^2 * radicand.
  Rational square() const;

  /// "15*sqrt(73)", or "p/q" when rational.
  std::string str() const;

  friend Surd operator*(const Surd& a, const Rational& k);
  friend Surd operator*(const Rational& k, const Surd& a) { return a * k; }
  friend Surd operator*(const Surd& a, const Surd& b);
  friend Surd operator/(const Surd& a, const Rational& k);
  friend Surd operator/(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a);
  // Sums are only defined for like radicands (or a zero operand); anything
  // else would leave the single-radical domain and throws InvalidInput.
  friend Surd operator+(const Surd& a, const Surd& b);
  friend Surd operator-(const Surd& a, const Surd& b);

  friend bool operator==(const Surd& a, const Surd& b) {
    return a.coef_ == b.coef_ && a.radicand_ == b.radicand_;
  }
  friend std::strong_ordering operator<=>(const Surd& a, const Surd& b);

 private:
  Surd(Rational coef, Integer radicand)
      : coef_(std::move(coef)), radicand_(std::move(radicand)) {}

  Rational coef_;
  Integer radicand_;
};

/// sqrt(q) for q >= 0, computed as sqrt(a*b)/b for q = a/b.
Surd sqrt_of_rational(const Rational& q);

/// sqrt(a^2 + b^2). Divides out the rational content gcd(a, b) before
/// canonicalizing, which keeps the radicand small for scaled inputs.
Surd hypot(const Rational& a, const Rational& b);

/// Exact order by sign analysis and squaring.
std::strong_ordering surd_compare(const Surd& a, const Surd& b);

/// Decimal rendering with the given number of significant digits, rounded
/// half up, computed from an integer-scaled square root.
std::string decimal_approx(const Surd& value, int significant_digits = 12);
std::string decimal_approx(const Rational& value, int significant_digits = 12);

}  // namespace pythtri

#endif  // PYTHTRI_EXACT_HPP_
