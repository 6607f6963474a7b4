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

#include "pythtri/exact.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <utility>

#include "pythtri/errors.hpp"

namespace pythtri {
namespace {

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw InvalidInput("malformed integer \"" + std::string(text) + "\"");
  }
  Integer value{std::string(digits)};
  return text.front() == '-' ? Integer(-value) : value;
}

template <typename T>
T isqrt_newton(const T& n) {
  if (n < 2) return n;
  unsigned bits = 0;
  for (T probe = n; probe != 0; probe >>= 1) ++bits;
  T x = T(1) << ((bits + 1) / 2);  // x >= sqrt(n)
  while (true) {
    T y = (x + n / x) >> 1;
    if (y >= x) return x;
    x = std::move(y);
  }
}

// Trial division over 2, 3, 5, 7, ... while p^3 <= rest. Once p^3 > rest,
// every remaining prime factor exceeds the cube root, so rest is 1, a prime,
// a product of two distinct primes, or a prime square.
template <typename T>
void strip_small_factors(T& rest, T& square, T& squarefree) {
  auto cube_fits = [&rest](const T& p) { return p * p * p <= rest; };
  auto take = [&](const T& p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) square *= p;
    if (e % 2 == 1) squarefree *= p;
    return e > 0;
  };
  if (rest < 2) return;
  take(T(2));
  for (T p = 3; rest > 1 && cube_fits(p); p += 2) {
    if (take(p)) {
      T root = isqrt_newton(rest);
      if (root * root == rest) {
        square *= root;
        rest = 1;
        return;
      }
    }
  }
}

std::string place_decimal_point(std::string digits, long long shift,
                                bool negative) {
  // value = digits * 10^(-shift)
  std::string out;
  if (shift <= 0) {
    out = digits + std::string(static_cast<std::size_t>(-shift), '0');
  } else if (static_cast<std::size_t>(shift) >= digits.size()) {
    out = "0." + std::string(shift - digits.size(), '0') + digits;
  } else {
    out = digits;
    out.insert(out.size() - static_cast<std::size_t>(shift), ".");
  }
  return negative ? "-" + out : out;
}

std::size_t digit_count(const Integer& v) { return v.str().size(); }

Integer pow10(long long k) {
  return boost::multiprecision::pow(Integer(10), static_cast<unsigned>(k));
}

// floor(sqrt(radicand_num) / den * 10^k) for any integer k.
Integer scaled_floor(const Integer& radicand_num, const Integer& den,
                     long long k) {
  if (k >= 0) {
    return isqrt_newton(Integer(radicand_num * pow10(2 * k))) / den;
  }
  return isqrt_newton(radicand_num) / (den * pow10(-k));
}

// Rounds sqrt(n)/d to `digits` significant decimal digits.
std::string approx_sqrt_ratio(const Integer& n, const Integer& d, bool negative,
                              int digits) {
  if (digits < 1) throw InvalidInput("significant digits must be >= 1");
  if (n.is_zero()) return "0";
  const auto want = static_cast<std::size_t>(digits) + 1;
  long long k = static_cast<long long>(want) + 1 -
                (static_cast<long long>(digit_count(isqrt_newton(n))) -
                 static_cast<long long>(digit_count(d)));
  Integer t = scaled_floor(n, d, k);
  while (digit_count(t) < want) t = scaled_floor(n, d, ++k);
  while (digit_count(t) > want + 1) {
    Integer smaller = scaled_floor(n, d, k - 1);
    if (digit_count(smaller) < want) break;
    t = std::move(smaller);
    --k;
  }
  const auto excess = static_cast<long long>(digit_count(t)) - digits;
  Integer unit = pow10(excess);
  Integer rounded = (t + unit / 2) / unit;
  k -= excess;
  if (digit_count(rounded) > static_cast<std::size_t>(digits)) {
    rounded /= 10;
    --k;
  }
  return place_decimal_point(rounded.str(), k, negative);
}

}  // namespace

// ---------------------------------------------------------------- Rational

Rational Rational::make(Integer p, Integer q) {
  if (q.is_zero()) throw InvalidInput("zero denominator");
  if (q.sign() < 0) {
    p = -p;
    q = -q;
  }
  if (p.is_zero()) return Rational();
  Integer g = boost::multiprecision::gcd(p, q);
  if (g != 1) {
    p /= g;
    q /= g;
  }
  return Rational(std::move(p), std::move(q), Canonical{});
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  return make(parse_integer(text.substr(0, slash)),
              parse_integer(text.substr(slash + 1)));
}

Rational Rational::abs() const {
  return Rational(boost::multiprecision::abs(num_), den_, Canonical{});
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw InvalidInput("reciprocal of zero");
  return make(den_, num_);
}

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

Rational operator+(const Rational& a, const Rational& b) {
  if (a.den_ == b.den_) return Rational::make(a.num_ + b.num_, a.den_);
  return Rational::make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::make(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw InvalidInput("division by zero");
  return Rational::make(a.num_ * b.den_, a.den_ * b.num_);
}

Rational operator-(const Rational& a) {
  return Rational(Integer(-a.num_), a.den_, Rational::Canonical{});
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Integer lhs = a.num_ * b.den_;
  const Integer rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational make_rational(const Integer& p, const Integer& q) {
  return Rational::make(p, q);
}

Rational pow(const Rational& base, unsigned exponent) {
  return Rational::make(boost::multiprecision::pow(base.num(), exponent),
                        boost::multiprecision::pow(base.den(), exponent));
}

Rational square(const Rational& value) { return value * value; }

// ---------------------------------------------------------------- integers

IntegerSqrt integer_sqrt(const Integer& n) {
  if (n.sign() < 0) throw InvalidInput("integer_sqrt of a negative number");
  Integer root = isqrt_newton(n);
  const bool exact = root * root == n;
  return {std::move(root), exact};
}

SquarefreeParts squarefree_decompose(const Integer& n) {
  if (n < 1) throw InvalidInput("squarefree_decompose needs n >= 1");
  if (auto r = integer_sqrt(n); r.exact) return {std::move(r.root), 1};

  Integer square = 1;
  Integer squarefree = 1;
  Integer rest;
  if (n <= std::numeric_limits<std::uint64_t>::max() / 4) {
    // p^3 <= rest keeps p below 2^21 here, so p*p*p cannot overflow.
    auto rest64 = n.convert_to<std::uint64_t>();
    std::uint64_t sq64 = 1;
    std::uint64_t sf64 = 1;
    strip_small_factors(rest64, sq64, sf64);
    rest = rest64;
    square = sq64;
    squarefree = sf64;
  } else {
    rest = n;
    strip_small_factors(rest, square, squarefree);
  }
  if (auto r = integer_sqrt(rest); r.exact) {
    square *= r.root;
  } else {
    squarefree *= rest;
  }
  return {std::move(square), std::move(squarefree)};
}

// ---------------------------------------------------------------- Surd

Surd Surd::make(Rational coef, const Integer& radicand) {
  if (radicand < 1) throw InvalidInput("surd radicand must be >= 1");
  if (coef.is_zero()) return Surd();
  auto parts = squarefree_decompose(radicand);
  return Surd(coef * Rational(std::move(parts.square)),
              std::move(parts.squarefree));
}

Rational Surd::square() const {
  return coef_ * coef_ * Rational(radicand_);
}

std::string Surd::str() const {
  if (is_rational()) return coef_.str();
  std::string c = coef_.is_integer() ? coef_.num().str() : "(" + coef_.str() + ")";
  return c + "*sqrt(" + radicand_.str() + ")";
}

Surd operator*(const Surd& a, const Rational& k) {
  if (k.is_zero() || a.coef_.is_zero()) return Surd();
  return Surd(a.coef_ * k, a.radicand_);
}

Surd operator*(const Surd& a, const Surd& b) {
  if (a.coef_.is_zero() || b.coef_.is_zero()) return Surd();
  // Both radicands are squarefree: r1*r2 = g^2 * (r1/g)(r2/g) with the
  // cofactors coprime and squarefree, so no factoring is needed.
  Integer g = boost::multiprecision::gcd(a.radicand_, b.radicand_);
  return Surd(a.coef_ * b.coef_ * Rational(g),
              (a.radicand_ / g) * (b.radicand_ / g));
}

Surd operator/(const Surd& a, const Rational& k) {
  if (k.is_zero()) throw InvalidInput("division by zero");
  return Surd(a.coef_ / k, a.radicand_);
}

Surd operator/(const Surd& a, const Surd& b) {
  if (b.coef_.is_zero()) throw InvalidInput("division by zero");
  return (a * b) / b.square();
}

Surd operator-(const Surd& a) { return Surd(-a.coef_, a.radicand_); }

Surd operator+(const Surd& a, const Surd& b) {
  if (a.coef_.is_zero()) return b;
  if (b.coef_.is_zero()) return a;
  if (a.radicand_ != b.radicand_) {
    throw InvalidInput("sum of unlike radicals " + a.str() + " + " + b.str() +
                       " is not a single surd");
  }
  Rational c = a.coef_ + b.coef_;
  if (c.is_zero()) return Surd();
  return Surd(std::move(c), a.radicand_);
}

Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

std::strong_ordering operator<=>(const Surd& a, const Surd& b) {
  return surd_compare(a, b);
}

Surd sqrt_of_rational(const Rational& q) {
  if (q.sign() < 0) throw InvalidInput("square root of a negative rational");
  if (q.is_zero()) return Surd();
  return Surd::make(Rational::make(1, q.den()), q.num() * q.den());
}

Surd hypot(const Rational& a, const Rational& b) {
  if (a.is_zero()) return Surd(b.abs());
  if (b.is_zero()) return Surd(a.abs());
  const Rational content =
      Rational::make(boost::multiprecision::gcd(a.num(), b.num()),
                     boost::multiprecision::lcm(a.den(), b.den()));
  const Rational u = a / content;
  const Rational v = b / content;
  return sqrt_of_rational(u * u + v * v) * content;
}

std::strong_ordering surd_compare(const Surd& a, const Surd& b) {
  const int sa = a.sign();
  const int sb = b.sign();
  if (sa != sb) return sa <=> sb;
  if (sa == 0) return std::strong_ordering::equal;
  const auto magnitude = a.square() <=> b.square();
  if (sa > 0) return magnitude;
  return 0 <=> magnitude;
}

std::string decimal_approx(const Surd& value, int significant_digits) {
  const Rational& c = value.coef();
  return approx_sqrt_ratio(c.num() * c.num() * value.radicand(), c.den(),
                           c.sign() < 0, significant_digits);
}

std::string decimal_approx(const Rational& value, int significant_digits) {
  return decimal_approx(Surd(value), significant_digits);
}

}  // namespace pythtri
