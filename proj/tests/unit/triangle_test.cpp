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

#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "pythtri/errors.hpp"
#include "pythtri/pythagorean.hpp"

namespace pythtri {
namespace {

RightTriangle sides(std::int64_t a, std::int64_t b, std::int64_t c) {
  return RightTriangle::from_sides(a, b, c);
}

// Triples from the parametrization with assorted scales, legs in both orders.
std::vector<RightTriangle> sample_triangles() {
  std::vector<RightTriangle> out;
  for (const auto& [m, n] : valid_pairs(9)) {
    for (int delta : {1, 2, 5}) {
      const RightTriangle t = generate_triple(make_params(m, n, delta));
      out.push_back(t);
      out.push_back(t.with_legs_swapped());
    }
  }
  out.push_back(sides(5, 4, 3).scaled(make_rational(2, 7)));
  return out;
}

TEST(RightTriangleTest, FromSides) {
  EXPECT_NO_THROW(sides(5, 4, 3));
  EXPECT_NO_THROW(sides(240, 192, 144));
  EXPECT_NO_THROW(sides(5, 3, 4));
  try {
    sides(5, 4, 2);
    FAIL() << "accepted a non-right triangle";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("not a right triangle"), std::string::npos);
  }
  try {
    sides(5, -4, 3);
    FAIL() << "accepted a negative side";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("nonpositive side"), std::string::npos);
  }
  EXPECT_THROW(sides(0, 0, 0), InvalidInput);
  EXPECT_NO_THROW(RightTriangle::from_sides(make_rational(5, 2), 2, make_rational(3, 2)));
}

TEST(RightTriangleTest, FromLegs) {
  EXPECT_EQ(RightTriangle::from_legs(4, 3), sides(5, 4, 3));
  EXPECT_EQ(RightTriangle::from_legs(192, 144), sides(240, 192, 144));
  try {
    RightTriangle::from_legs(1, 1);
    FAIL() << "accepted an irrational hypotenuse";
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("f = 2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(RightTriangle::from_legs(0, 3), InvalidInput);
}

TEST(DeriveFigureTest, FirstTableRow) {
  const DerivedFigure f = derive_figure(sides(240, 192, 144));
  EXPECT_EQ(f.r1, Rational(75));
  EXPECT_EQ(f.r2, Rational(100));
  EXPECT_EQ(f.o1o2, Rational(125));
  EXPECT_EQ(f.area_oo1o2, Rational(3750));
  EXPECT_EQ(f.x, Rational(45));
  EXPECT_EQ(f.y, Rational(80));
  EXPECT_EQ(f.trapezoid_base, Rational(120));
  EXPECT_EQ(f.area_trapezoid, Rational(7500));
  EXPECT_EQ(f.d2, Surd::make(40, 13));
  // sqrt(45^2 + 120^2) = sqrt(16425) = 15 sqrt(73), not the printed 15 sqrt(61).
  EXPECT_EQ(f.d1, Surd::make(15, 73));
  EXPECT_NE(f.d1, Surd::make(15, 61));
  EXPECT_EQ(f.area_E, Rational(13824));
  EXPECT_EQ(f.half_area, Rational(6912));
  EXPECT_EQ(f.circumradius_R, Rational(120));
  EXPECT_EQ(f.quarter, Rational(60));
  EXPECT_FALSE(f.isosceles_warning);
}

TEST(DeriveFigureTest, ThreeFourFive) {
  const DerivedFigure f = derive_figure(sides(5, 4, 3));
  EXPECT_EQ(f.r1, make_rational(25, 16));
  EXPECT_EQ(f.r2, make_rational(25, 12));
  EXPECT_EQ(f.o1o2, make_rational(125, 48));
  EXPECT_EQ(square(f.r1) + square(f.r2), square(f.o1o2));
}

TEST(DeriveFigureTest, RationalSidesAreNeverIsosceles) {
  // beta == gamma forces alpha = beta sqrt2, so the warning path never fires
  // for a constructible triangle.
  EXPECT_THROW(RightTriangle::from_legs(7, 7), InvalidInput);
  for (const auto& t : sample_triangles()) {
    EXPECT_FALSE(derive_figure(t).isosceles_warning);
  }
}

TEST(DeriveFigureProperty, InvariantsHoldOnSamples) {
  for (const auto& t : sample_triangles()) {
    const DerivedFigure f = derive_figure(t);
    EXPECT_NO_THROW(check_invariants(f));
    EXPECT_EQ(f.o1o2, f.x + f.y);
    EXPECT_EQ(f.r1 * f.r2 / 2, f.area_oo1o2);
    EXPECT_EQ(f.area_trapezoid, 2 * f.area_oo1o2);
    EXPECT_EQ(f.d1.square(), square(f.x) + square(t.alpha() / 2));
    EXPECT_EQ(f.d2.square(), square(f.y) + square(t.alpha() / 2));
    EXPECT_EQ(square(f.r1) + square(f.r2), square(f.o1o2));
    EXPECT_EQ(square(f.r1.reciprocal()) + square(f.r2.reciprocal()),
              square(4 / t.alpha()));
  }
}

TEST(DeriveFigureProperty, ScalingCovariance) {
  oracle::Generator gen(5);
  for (const auto& t : sample_triangles()) {
    const Rational k = gen.positive_rational(50, 13);
    const DerivedFigure f = derive_figure(t);
    const DerivedFigure g = derive_figure(t.scaled(k));
    const Rational k2 = k * k;
    EXPECT_EQ(g.r1, k * f.r1);
    EXPECT_EQ(g.r2, k * f.r2);
    EXPECT_EQ(g.x, k * f.x);
    EXPECT_EQ(g.y, k * f.y);
    EXPECT_EQ(g.o1o2, k * f.o1o2);
    EXPECT_EQ(g.trapezoid_base, k * f.trapezoid_base);
    EXPECT_EQ(g.quarter, k * f.quarter);
    EXPECT_EQ(g.circumradius_R, k * f.circumradius_R);
    EXPECT_EQ(g.area_E, k2 * f.area_E);
    EXPECT_EQ(g.half_area, k2 * f.half_area);
    EXPECT_EQ(g.area_oo1o2, k2 * f.area_oo1o2);
    EXPECT_EQ(g.area_trapezoid, k2 * f.area_trapezoid);
    EXPECT_EQ(g.d1.coef(), k * f.d1.coef());
    EXPECT_EQ(g.d1.radicand(), f.d1.radicand());
    EXPECT_EQ(g.d2.coef(), k * f.d2.coef());
    EXPECT_EQ(g.d2.radicand(), f.d2.radicand());
  }
}

TEST(DeriveFigureProperty, SwappingLegsSwapsThePairs) {
  for (const auto& t : sample_triangles()) {
    const DerivedFigure f = derive_figure(t);
    const DerivedFigure g = derive_figure(t.with_legs_swapped());
    EXPECT_EQ(g.r1, f.r2);
    EXPECT_EQ(g.r2, f.r1);
    EXPECT_EQ(g.x, f.y);
    EXPECT_EQ(g.y, f.x);
    EXPECT_EQ(g.d1, f.d2);
    EXPECT_EQ(g.d2, f.d1);
    EXPECT_EQ(g.o1o2, f.o1o2);
    EXPECT_EQ(g.area_oo1o2, f.area_oo1o2);
    EXPECT_EQ(g.area_trapezoid, f.area_trapezoid);
    EXPECT_EQ(g.trapezoid_base, f.trapezoid_base);
  }
}

TEST(CircumradiusTest, Examples) {
  EXPECT_EQ(circumradius_general(5, 4, 3), Surd(make_rational(5, 2)));
  EXPECT_EQ(circumradius_general(2, 2, 2), Surd::make(make_rational(2, 3), 3));
  EXPECT_THROW(circumradius_general(1, 1, 2), InvalidInput);
  EXPECT_THROW(circumradius_general(1, 1, 3), InvalidInput);
  EXPECT_THROW(circumradius_general(0, 1, 1), InvalidInput);
}

TEST(CircumradiusTest, MatchesDecimalLawOfSines) {
  // R = a / (2 sin A) with cos A from the law of cosines, in 100-digit floats.
  using oracle::Decimal;
  oracle::Generator gen(3);
  int checked = 0;
  while (checked < 50) {
    const Rational a = gen.positive_rational(40, 5);
    const Rational b = gen.positive_rational(40, 5);
    const Rational c = gen.positive_rational(40, 5);
    if (!(a < b + c && b < a + c && c < a + b)) continue;
    const Decimal da = oracle::to_decimal(a);
    const Decimal db = oracle::to_decimal(b);
    const Decimal dc = oracle::to_decimal(c);
    const Decimal cos_a = (db * db + dc * dc - da * da) / (2 * db * dc);
    const Decimal want = da / (2 * boost::multiprecision::sqrt(1 - cos_a * cos_a));
    EXPECT_LT(oracle::relative_error(oracle::to_decimal(circumradius_general(a, b, c)), want),
              Decimal("1e-60"));
    ++checked;
  }
}

TEST(CircumradiusProperty, RightTrianglesGiveHalfTheHypotenuse) {
  for (const auto& t : sample_triangles()) {
    EXPECT_EQ(circumradius_general(t.alpha(), t.beta(), t.gamma()), Surd(t.alpha() / 2));
  }
}

TEST(SimilarityScaleTest, Examples) {
  const RightTriangle a = sides(240, 192, 144);
  EXPECT_EQ(similarity_scale(derive_figure(a), a), make_rational(25, 48));
  const RightTriangle b = sides(5, 4, 3);
  EXPECT_EQ(similarity_scale(derive_figure(b), b), make_rational(25, 48));
  const RightTriangle c = sides(13, 12, 5);
  EXPECT_EQ(similarity_scale(derive_figure(c), c), make_rational(169, 240));
  EXPECT_THROW(similarity_scale(derive_figure(a), b), ConsistencyError);
}

TEST(ReciprocalTriangleTest, Examples) {
  const auto a = reciprocal_triangle(derive_figure(sides(240, 192, 144)));
  EXPECT_EQ(a, (ReciprocalTriangle{make_rational(1, 75), make_rational(1, 100),
                                   make_rational(1, 60)}));
  const auto b = reciprocal_triangle(derive_figure(sides(5, 4, 3)));
  EXPECT_EQ(b, (ReciprocalTriangle{make_rational(16, 25), make_rational(12, 25),
                                   make_rational(4, 5)}));
  for (const auto& t : sample_triangles()) {
    const DerivedFigure f = derive_figure(t);
    EXPECT_EQ(reciprocal_triangle(f).hyp, f.quarter.reciprocal());
  }
}

TEST(ClassifyAnglesTest, WorkedExamples) {
  using enum Quantity;
  const AngleClass a = classify_angles(sides(5, 4, 3));
  EXPECT_EQ(a.kind, AngleCase::kBelow60);
  EXPECT_EQ(a.ascending, (std::array<Quantity, 4>{kR1, kR2, kGamma, kBeta}));

  const AngleClass b = classify_angles(sides(13, 12, 5));
  EXPECT_EQ(b.kind, AngleCase::k60To75);
  EXPECT_EQ(b.ascending, (std::array<Quantity, 4>{kR1, kGamma, kR2, kBeta}));

  const AngleClass c = classify_angles(sides(41, 40, 9));
  EXPECT_EQ(c.kind, AngleCase::kAbove75);
  EXPECT_EQ(c.ascending, (std::array<Quantity, 4>{kGamma, kR1, kBeta, kR2}));
}

TEST(ClassifyAnglesTest, OrientsTheLegs) {
  const AngleClass a = classify_angles(sides(5, 3, 4));
  EXPECT_EQ(a.kind, AngleCase::kBelow60);
  EXPECT_EQ(a.oriented_beta, Rational(4));
  EXPECT_EQ(a.oriented_gamma, Rational(3));
}

TEST(ClassifyAnglesTest, ThresholdNeighbours) {
  // (m, n) = (7, 4): 56/33 = 1.697 < sqrt3; (12, 7): 168/95 = 1.768 > sqrt3.
  EXPECT_EQ(classify_angles(sides(65, 56, 33)).kind, AngleCase::kBelow60);
  EXPECT_EQ(classify_angles(sides(193, 168, 95)).kind, AngleCase::k60To75);
  // (4, 3): 24/7 = 3.43 < 2 + sqrt3 = 3.732; (13, 10): 260/69 = 3.768 above.
  EXPECT_EQ(classify_angles(sides(25, 24, 7)).kind, AngleCase::k60To75);
  EXPECT_EQ(classify_angles(sides(269, 260, 69)).kind, AngleCase::kAbove75);
}

TEST(ClassifyAnglesProperty, OnlyOddCasesAndChainsHold) {
  int seen[6] = {};
  for (const auto& [m, n] : valid_pairs(40)) {
    const RightTriangle t = generate_triple(make_params(m, n, 1));
    const AngleClass ac = classify_angles(t);
    ++seen[static_cast<int>(ac.kind)];
    EXPECT_NE(ac.kind, AngleCase::kAt60);
    EXPECT_NE(ac.kind, AngleCase::kAt75);
    const Rational a2 = square(t.alpha());
    auto value = [&](Quantity q) {
      switch (q) {
        case Quantity::kR1: return a2 / (4 * ac.oriented_beta);
        case Quantity::kR2: return a2 / (4 * ac.oriented_gamma);
        case Quantity::kGamma: return ac.oriented_gamma;
        case Quantity::kBeta: return ac.oriented_beta;
      }
      return Rational();
    };
    for (int i = 0; i < 3; ++i) EXPECT_LT(value(ac.ascending[i]), value(ac.ascending[i + 1]));
  }
  EXPECT_GT(seen[1], 0);
  EXPECT_GT(seen[3], 0);
  EXPECT_GT(seen[5], 0);
}

}  // namespace
}  // namespace pythtri
