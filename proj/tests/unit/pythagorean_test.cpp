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

#include "pythtri/pythagorean.hpp"

#include <string>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "pythtri/errors.hpp"

namespace pythtri {
namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

TEST(PythParamsTest, Validation) {
  EXPECT_NO_THROW(make_params(2, 1, 48));
  EXPECT_NE(error_of([] { make_params(3, 1, 5); }).find("same parity"), std::string::npos);
  EXPECT_NE(error_of([] { make_params(2, 4, 1); }).find("m ≤ n"), std::string::npos);
  EXPECT_NE(error_of([] { make_params(2, 2, 1); }).find("m ≤ n"), std::string::npos);
  EXPECT_NE(error_of([] { make_params(4, 2, 1); }).find("gcd(m,n) ≠ 1"), std::string::npos);
  EXPECT_NE(error_of([] { make_params(2, 1, 0); }).find("delta < 1"), std::string::npos);
  EXPECT_NE(error_of([] { make_params(2, 0, 1); }).find("n < 1"), std::string::npos);
}

TEST(ValidPairsTest, EnumerationOrder) {
  const auto pairs = valid_pairs(5);
  const std::vector<std::pair<Integer, Integer>> want{{2, 1}, {3, 2}, {4, 1}, {4, 3}, {5, 2}, {5, 4}};
  EXPECT_EQ(pairs, want);
}

TEST(GenerateTripleTest, Examples) {
  EXPECT_EQ(generate_triple(make_params(2, 1, 1)), RightTriangle::from_sides(5, 4, 3));
  EXPECT_EQ(generate_triple(make_params(2, 1, 48)), RightTriangle::from_sides(240, 192, 144));
  EXPECT_EQ(generate_triple(make_params(4, 1, 480)), RightTriangle::from_sides(8160, 3840, 7200));
}

TEST(GenerateTripleProperty, GcdOfSidesIsDelta) {
  for (const auto& [m, n] : valid_pairs(25)) {
    for (std::uint64_t delta : {1u, 2u, 9u, 30u}) {
      const RightTriangle t = generate_triple(make_params(m, n, delta));
      const auto a = t.alpha().num().convert_to<std::uint64_t>();
      const auto b = t.beta().num().convert_to<std::uint64_t>();
      const auto c = t.gamma().num().convert_to<std::uint64_t>();
      EXPECT_EQ(oracle::brute_gcd(oracle::brute_gcd(a, b), c), delta);
      EXPECT_EQ(a * a, b * b + c * c);
    }
  }
}

TEST(IntegralityThresholdTest, Examples) {
  EXPECT_EQ(integrality_threshold(2, 1), 48);
  EXPECT_EQ(integrality_threshold(3, 2), 240);
  EXPECT_EQ(integrality_threshold(4, 1), 480);
  EXPECT_THROW(integrality_threshold(3, 1), InvalidInput);
}

TEST(IntegralityThresholdTest, MatchesBruteForceLcm) {
  for (const auto& [mi, ni] : valid_pairs(12)) {
    const auto m = mi.convert_to<std::uint64_t>();
    const auto n = ni.convert_to<std::uint64_t>();
    const std::uint64_t want =
        oracle::brute_lcm3(8 * m * n * (m * m - n * n), 8 * m * n, 4 * (m * m - n * n));
    EXPECT_EQ(integrality_threshold(mi, ni), want);
  }
}

TEST(ClassifyIntegralityTest, AllIntegral) {
  const auto r = classify_integrality(make_params(2, 1, 48));
  EXPECT_EQ(r.threshold_L, 48);
  EXPECT_EQ(r.r1, Rational(75));
  EXPECT_EQ(r.r2, Rational(100));
  EXPECT_EQ(r.o1o2, Rational(125));
  EXPECT_TRUE(r.all_integral);
  EXPECT_TRUE(r.delta_divisible_by_L);
  EXPECT_FALSE(r.abg_primitive);
  EXPECT_EQ(r.derived_gcd, 25);
}

TEST(ClassifyIntegralityTest, PrimitiveNoneIntegral) {
  const auto r = classify_integrality(make_params(2, 1, 1));
  EXPECT_EQ(r.r1, make_rational(25, 16));
  EXPECT_EQ(r.r2, make_rational(25, 12));
  EXPECT_EQ(r.o1o2, make_rational(125, 48));
  EXPECT_FALSE(r.r1_integral || r.r2_integral || r.o1o2_integral);
  EXPECT_TRUE(r.abg_primitive);
  EXPECT_EQ(r.derived_gcd, 0);
}

TEST(ClassifyIntegralityTest, Mixed) {
  const auto r = classify_integrality(make_params(2, 1, 24));
  EXPECT_EQ(r.r2, Rational(50));
  EXPECT_TRUE(r.r2_integral);
  EXPECT_EQ(r.r1, make_rational(75, 2));
  EXPECT_EQ(r.o1o2, make_rational(125, 2));
  EXPECT_FALSE(r.all_integral);
  EXPECT_FALSE(r.delta_divisible_by_L);
}

TEST(ClassifyIntegralityTest, AgreesWithDerivedFigure) {
  // The (m, n, delta) forms against alpha^2/(4 beta) etc. on the triple itself.
  for (const auto& [m, n] : valid_pairs(10)) {
    for (int delta : {1, 3, 16, 48}) {
      const auto p = make_params(m, n, delta);
      const auto r = classify_integrality(p);
      const DerivedFigure f = derive_figure(generate_triple(p));
      EXPECT_EQ(r.r1, f.r1);
      EXPECT_EQ(r.r2, f.r2);
      EXPECT_EQ(r.o1o2, f.o1o2);
    }
  }
}

TEST(ClosedFormsTest, TableRows) {
  const ClosedForms a = closed_forms(2, 1, 1);
  EXPECT_EQ(a.r1, Rational(75));
  EXPECT_EQ(a.r2, Rational(100));
  EXPECT_EQ(a.o1o2, Rational(125));
  EXPECT_EQ(a.x, Rational(45));
  EXPECT_EQ(a.y, Rational(80));
  EXPECT_EQ(a.area_oo1o2, Rational(3750));
  EXPECT_EQ(a.area_trapezoid, Rational(7500));
  EXPECT_EQ(a.half_alpha, Rational(120));

  const ClosedForms b = closed_forms(3, 2, 1);
  EXPECT_EQ(b.r1, Rational(845));
  EXPECT_EQ(b.r2, Rational(2028));
  EXPECT_EQ(b.o1o2, Rational(2197));
  EXPECT_EQ(b.d1, Surd::make(65, 601));

  const ClosedForms c = closed_forms(4, 1, 1);
  EXPECT_EQ(c.d2, Surd::make(272, 241));
  // Oracle: sqrt(y^2 + (alpha/2)^2) = sqrt(1088^2 + 4080^2) = sqrt(17830144).
  EXPECT_EQ(1088 * 1088 + 4080 * 4080, 17830144);
  EXPECT_EQ(sqrt_of_rational(17830144), Surd::make(272, 241));
  EXPECT_THROW(closed_forms(2, 1, 0), InvalidInput);
  EXPECT_THROW(closed_forms(5, 3, 1), InvalidInput);
}

TEST(ClosedFormsProperty, ScaleLinearlyInK) {
  for (const auto& [m, n] : valid_pairs(8)) {
    const ClosedForms one = closed_forms(m, n, 1);
    const ClosedForms three = closed_forms(m, n, 3);
    EXPECT_EQ(three.r1, 3 * one.r1);
    EXPECT_EQ(three.d1, one.d1 * Rational(3));
    EXPECT_EQ(three.area_trapezoid, 9 * one.area_trapezoid);
  }
}

TEST(CoprimalityTest, Examples) {
  EXPECT_TRUE(coprimality_check(2, 1, 2, 1));
  EXPECT_TRUE(coprimality_check(3, 2, 3, 2));
  EXPECT_TRUE(coprimality_check(2, 1, 0, 0));
  EXPECT_THROW(coprimality_check(3, 1, 1, 1), InvalidInput);
}

TEST(NonprimitivityProperty, DerivedGcdCarriesSquaredHypotenuseFactor) {
  for (const auto& [m, n] : valid_pairs(12)) {
    const Integer L = integrality_threshold(m, n);
    for (int K = 1; K <= 3; ++K) {
      const auto r = classify_integrality(make_params(m, n, L * K));
      const Integer sum = m * m + n * n;
      ASSERT_TRUE(r.all_integral);
      EXPECT_EQ(r.derived_gcd % (sum * sum), 0);
    }
  }
}

}  // namespace
}  // namespace pythtri
