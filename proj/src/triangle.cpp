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

#include "pythtri/triangle.hpp"

#include <string>

#include "pythtri/errors.hpp"

namespace pythtri {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw ConsistencyError(what);
}

}  // namespace

RightTriangle RightTriangle::from_sides(Rational alpha, Rational beta,
                                        Rational gamma) {
  if (alpha.sign() <= 0 || beta.sign() <= 0 || gamma.sign() <= 0) {
    throw InvalidInput("nonpositive side");
  }
  if (square(alpha) != square(beta) + square(gamma)) {
    throw InvalidInput("not a right triangle with hypotenuse alpha: " +
                       alpha.str() + "^2 != " + beta.str() + "^2 + " +
                       gamma.str() + "^2");
  }
  return RightTriangle(std::move(alpha), std::move(beta), std::move(gamma));
}

RightTriangle RightTriangle::from_legs(Rational beta, Rational gamma) {
  if (beta.sign() <= 0 || gamma.sign() <= 0) {
    throw InvalidInput("nonpositive side");
  }
  Surd alpha = hypot(beta, gamma);
  if (!alpha.is_rational()) {
    throw InvalidInput("irrational hypotenuse: sqrt(beta^2 + gamma^2) = " +
                       alpha.str() + ", squarefree obstruction f = " +
                       alpha.radicand().str());
  }
  return RightTriangle(alpha.coef(), std::move(beta), std::move(gamma));
}

RightTriangle RightTriangle::scaled(const Rational& k) const {
  return from_sides(alpha_ * k, beta_ * k, gamma_ * k);
}

RightTriangle RightTriangle::with_legs_swapped() const {
  return RightTriangle(alpha_, gamma_, beta_);
}

DerivedFigure derive_figure(const RightTriangle& t) {
  const Rational& a = t.alpha();
  const Rational& b = t.beta();
  const Rational& c = t.gamma();
  const Rational a2 = square(a);
  const Rational a4 = square(a2);
  const Rational bc = b * c;

  DerivedFigure f{
      .source = t,
      .area_E = bc / 2,
      .half_area = bc / 4,
      .circumradius_R = a / 2,
      .r1 = a2 / (4 * b),
      .r2 = a2 / (4 * c),
      .x = a * c / (4 * b),
      .y = a * b / (4 * c),
      .o1o2 = a2 * a / (4 * bc),
      .area_oo1o2 = a4 / (32 * bc),
      .trapezoid_base = a / 2,
      .quarter = a / 4,
      .area_trapezoid = a4 / (16 * bc),
      // Closed forms (alpha/4beta) sqrt(gamma^2 + 4beta^2) and its mirror.
      .d1 = hypot(c, 2 * b) * (a / (4 * b)),
      .d2 = hypot(b, 2 * c) * (a / (4 * c)),
      .isosceles_warning = t.isosceles(),
  };
  check_invariants(f);
  return f;
}

void check_invariants(const DerivedFigure& f) {
  const Rational& a = f.source.alpha();
  require(f.o1o2 == f.x + f.y, "o1o2 != x + y");
  require(f.r1 * f.r2 / 2 == f.area_oo1o2, "r1 r2 / 2 != area of OO1O2");
  require(f.area_trapezoid == 2 * f.area_oo1o2,
          "trapezoid area != twice the area of OO1O2");
  require(f.area_trapezoid == (f.x + f.y) * f.trapezoid_base / 2,
          "trapezoid area != (x + y) |M1M2| / 2");
  require(square(f.r1) + square(f.r2) == square(f.o1o2),
          "r1^2 + r2^2 != o1o2^2");
  require(f.trapezoid_base == a / 2 && f.quarter == a / 4,
          "midpoint lengths do not match alpha");
  // Diagonals by the legs of the right triangles O1M1M2 and O2M2M1.
  require(f.d1 == hypot(f.x, f.trapezoid_base),
          "d1 != sqrt(x^2 + (alpha/2)^2)");
  require(f.d2 == hypot(f.y, f.trapezoid_base),
          "d2 != sqrt(y^2 + (alpha/2)^2)");
  require(f.d1.square() == square(f.x) + square(f.trapezoid_base),
          "d1^2 != x^2 + (alpha/2)^2");
  require(f.d2.square() == square(f.y) + square(f.trapezoid_base),
          "d2^2 != y^2 + (alpha/2)^2");
}

Surd circumradius_general(const Rational& a, const Rational& b,
                          const Rational& c) {
  if (a.sign() <= 0 || b.sign() <= 0 || c.sign() <= 0) {
    throw InvalidInput("nonpositive side");
  }
  if (!(a < b + c && b < c + a && c < a + b)) {
    throw InvalidInput("degenerate or impossible triangle: " + a.str() + ", " +
                       b.str() + ", " + c.str());
  }
  const Rational a2 = square(a);
  const Rational b2 = square(b);
  const Rational c2 = square(c);
  const Rational sixteen_e2 = 2 * (a2 * b2 + b2 * c2 + c2 * a2) -
                              square(a2) - square(b2) - square(c2);
  require(sixteen_e2.sign() > 0, "Heron identity gave a nonpositive area");
  // R = abc / (4E) = abc / sqrt(16 E^2)
  return Surd(a * b * c) / sqrt_of_rational(sixteen_e2);
}

Rational similarity_scale(const DerivedFigure& f, const RightTriangle& t) {
  require(f.source == t, "figure was not derived from this triangle");
  const Rational k = square(t.alpha()) / (4 * t.beta() * t.gamma());
  require(f.r1 == k * t.gamma(), "r1 != k gamma");
  require(f.r2 == k * t.beta(), "r2 != k beta");
  require(f.o1o2 == k * t.alpha(), "o1o2 != k alpha");
  return k;
}

ReciprocalTriangle reciprocal_triangle(const DerivedFigure& f) {
  ReciprocalTriangle rt{f.r1.reciprocal(), f.r2.reciprocal(),
                        4 / f.source.alpha()};
  require(square(rt.leg1) + square(rt.leg2) == square(rt.hyp),
          "(1/r1)^2 + (1/r2)^2 != (4/alpha)^2");
  require(rt.leg1 / rt.leg2 == f.source.beta() / f.source.gamma(),
          "reciprocal triangle is not similar to the source");
  require(rt.hyp == f.quarter.reciprocal(), "hyp != 1/(alpha/4)");
  return rt;
}

std::string_view quantity_name(Quantity q) {
  switch (q) {
    case Quantity::kR1: return "R1";
    case Quantity::kR2: return "R2";
    case Quantity::kGamma: return "gamma";
    case Quantity::kBeta: return "beta";
  }
  return "?";
}

AngleClass classify_angles(const RightTriangle& t) {
  if (t.isosceles()) {
    throw InvalidInput(
        "isosceles right triangle excluded: the configuration assumes "
        "beta != gamma");
  }
  const bool swap = t.beta() < t.gamma();
  const Rational& beta = swap ? t.gamma() : t.beta();
  const Rational& gamma = swap ? t.beta() : t.gamma();
  const Rational rho = beta / gamma;  // tan(omega) > 1

  AngleCase kind;
  const auto vs_sqrt3 = square(rho) <=> Rational(3);
  const Rational past_two = rho - 2;
  const auto vs_two_plus_sqrt3 =
      past_two.sign() <= 0 ? std::strong_ordering::less
                           : square(past_two) <=> Rational(3);
  if (vs_sqrt3 < 0) {
    kind = AngleCase::kBelow60;
  } else if (vs_sqrt3 == 0) {
    kind = AngleCase::kAt60;
  } else if (vs_two_plus_sqrt3 < 0) {
    kind = AngleCase::k60To75;
  } else if (vs_two_plus_sqrt3 == 0) {
    kind = AngleCase::kAt75;
  } else {
    kind = AngleCase::kAbove75;
  }

  using enum Quantity;
  std::array<Quantity, 4> order{};
  switch (kind) {
    case AngleCase::kBelow60: order = {kR1, kR2, kGamma, kBeta}; break;
    case AngleCase::k60To75: order = {kR1, kGamma, kR2, kBeta}; break;
    case AngleCase::kAbove75: order = {kGamma, kR1, kBeta, kR2}; break;
    case AngleCase::kAt60:
    case AngleCase::kAt75:
      // beta/gamma would have to equal sqrt3 or 2 + sqrt3.
      throw ConsistencyError("irrational angle threshold hit by rational sides");
  }

  const Rational alpha2 = square(t.alpha());
  auto value = [&](Quantity q) -> Rational {
    switch (q) {
      case kR1: return alpha2 / (4 * beta);
      case kR2: return alpha2 / (4 * gamma);
      case kGamma: return gamma;
      case kBeta: return beta;
    }
    return {};
  };
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    require(value(order[i]) < value(order[i + 1]),
            "angle-class ordering chain does not hold");
  }
  return AngleClass{kind, beta, gamma, order};
}

}  // namespace pythtri
