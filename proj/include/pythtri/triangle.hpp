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

#ifndef PYTHTRI_TRIANGLE_HPP_
#define PYTHTRI_TRIANGLE_HPP_

// Right triangle ABG (right angle at A, hypotenuse BG) and the figure built on
// it: O is the midpoint of BG, O1 and O2 are the circumcenters of the
// isosceles triangles AOB and AOG, and M1, M2 are the midpoints of OB and OG.

#include <array>
#include <string_view>

#include "pythtri/exact.hpp"

namespace pythtri {

/// Sides alpha (hypotenuse |BG|), beta (|AG|), gamma (|AB|); all positive
/// with alpha^2 == beta^2 + gamma^2. The legs may come in either order.
class RightTriangle {
 public:
  static RightTriangle from_sides(Rational alpha, Rational beta, Rational gamma);

  /// Succeeds only when sqrt(beta^2 + gamma^2) is rational.
  static RightTriangle from_legs(Rational beta, Rational gamma);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }
  const Rational& gamma() const { return gamma_; }

  bool isosceles() const { return beta_ == gamma_; }

  RightTriangle scaled(const Rational& k) const;
  RightTriangle with_legs_swapped() const;

  friend bool operator==(const RightTriangle&, const RightTriangle&) = default;

 private:
  RightTriangle(Rational alpha, Rational beta, Rational gamma)
      : alpha_(std::move(alpha)), beta_(std::move(beta)), gamma_(std::move(gamma)) {}

  Rational alpha_;
  Rational beta_;
  Rational gamma_;
};

/// Every length and area of the configuration, exact.
struct DerivedFigure {
  RightTriangle source;
  Rational area_E;          // beta*gamma/2
  Rational half_area;       // area of AOB (= area of AOG)
  Rational circumradius_R;  // alpha/2
  Rational r1;              // |OO1| = alpha^2/(4 beta)
  Rational r2;              // |OO2| = alpha^2/(4 gamma)
  Rational x;               // |O1M1| = alpha gamma/(4 beta)
  Rational y;               // |O2M2| = alpha beta/(4 gamma)
  Rational o1o2;            // alpha^3/(4 beta gamma)
  Rational area_oo1o2;      // alpha^4/(32 beta gamma)
  Rational trapezoid_base;  // |M1M2| = alpha/2
  Rational quarter;         // alpha/4
  Rational area_trapezoid;  // alpha^4/(16 beta gamma)
  Surd d1;                  // |O1M2|
  Surd d2;                  // |O2M1|
  // The source is isosceles; the figure is well defined but O1, O2 then
  // both fall on the boundary rather than one inside and one outside.
  bool isosceles_warning = false;

  friend bool operator==(const DerivedFigure&, const DerivedFigure&) = default;
};

DerivedFigure derive_figure(const RightTriangle& t);

/// Re-checks the internal identities of a figure; throws ConsistencyError.
void check_invariants(const DerivedFigure& f);

/// R = abc/(4E) for any triangle, E from 16E^2 = 2a^2b^2 + 2b^2c^2 + 2c^2a^2
/// - a^4 - b^4 - c^4. Throws InvalidInput for degenerate or impossible sides.
Surd circumradius_general(const Rational& a, const Rational& b, const Rational& c);

/// k = alpha^2/(4 beta gamma), with r1 = k gamma, r2 = k beta, o1o2 = k alpha
/// asserted exactly.
Rational similarity_scale(const DerivedFigure& f, const RightTriangle& t);

struct ReciprocalTriangle {
  Rational leg1;  // 1/r1
  Rational leg2;  // 1/r2
  Rational hyp;   // 4/alpha

  friend bool operator==(const ReciprocalTriangle&, const ReciprocalTriangle&) = default;
};

ReciprocalTriangle reciprocal_triangle(const DerivedFigure& f);

/// Position of the larger acute angle omega (tan omega = beta/gamma with
/// beta > gamma) against the 60 and 75 degree thresholds, i.e. the ratio
/// against sqrt(3) and 2 + sqrt(3).
enum class AngleCase : int {
  kBelow60 = 1,    // 1 < beta/gamma < sqrt3
  kAt60 = 2,       // beta/gamma == sqrt3
  k60To75 = 3,     // sqrt3 < beta/gamma < 2 + sqrt3
  kAt75 = 4,       // beta/gamma == 2 + sqrt3
  kAbove75 = 5,    // beta/gamma > 2 + sqrt3
};

enum class Quantity { kR1, kR2, kGamma, kBeta };

std::string_view quantity_name(Quantity q);

struct AngleClass {
  AngleCase kind;
  Rational oriented_beta;   // the longer leg
  Rational oriented_gamma;  // the shorter leg
  // {R1, R2, gamma, beta} in strictly ascending order, R1 and R2 taken for
  // the oriented triangle. Verified by exact comparison.
  std::array<Quantity, 4> ascending;
};

/// Throws InvalidInput for isosceles triangles.
AngleClass classify_angles(const RightTriangle& t);

}  // namespace pythtri

#endif  // PYTHTRI_TRIANGLE_HPP_
