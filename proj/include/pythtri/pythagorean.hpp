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

#ifndef PYTHTRI_PYTHAGOREAN_HPP_
#define PYTHTRI_PYTHAGOREAN_HPP_

// Parametric Pythagorean triples
//   alpha = delta (m^2 + n^2), beta = delta 2mn, gamma = delta (m^2 - n^2)
// with m > n >= 1 coprime and of opposite parity, and the integrality
// analysis of the derived figure for integer sides.

#include <utility>
#include <vector>

#include "pythtri/exact.hpp"
#include "pythtri/triangle.hpp"

namespace pythtri {

class PythParams {
 public:
  /// Throws InvalidInput naming the first violated condition.
  static PythParams make(Integer m, Integer n, Integer delta);

  const Integer& m() const { return m_; }
  const Integer& n() const { return n_; }
  const Integer& delta() const { return delta_; }

  friend bool operator==(const PythParams&, const PythParams&) = default;

 private:
  PythParams(Integer m, Integer n, Integer delta)
      : m_(std::move(m)), n_(std::move(n)), delta_(std::move(delta)) {}

  Integer m_;
  Integer n_;
  Integer delta_;
};

inline PythParams make_params(Integer m, Integer n, Integer delta) {
  return PythParams::make(std::move(m), std::move(n), std::move(delta));
}

/// Checks m > n >= 1, gcd(m, n) == 1 and m + n odd.
void validate_mn(const Integer& m, const Integer& n);

/// Valid (m, n) with m <= max_m, ascending m then ascending n.
std::vector<std::pair<Integer, Integer>> valid_pairs(const Integer& max_m);

/// beta is the even leg 2mn delta.
RightTriangle generate_triple(const PythParams& p);

/// lcm(8mn, 4(m^2 - n^2), 8mn(m^2 - n^2)), checked against the closed form
/// L = 8mn(m^2 - n^2).
Integer integrality_threshold(const Integer& m, const Integer& n);

struct IntegralityReport {
  Integer threshold_L;
  Rational r1;
  Rational r2;
  Rational o1o2;
  bool r1_integral = false;
  bool r2_integral = false;
  bool o1o2_integral = false;
  bool all_integral = false;
  bool delta_divisible_by_L = false;
  bool abg_primitive = false;  // delta == 1
  Integer derived_gcd;         // gcd(R1, R2, |O1O2|) if all integral, else 0
};

/// Throws ConsistencyError if integrality and L | delta ever disagree.
IntegralityReport classify_integrality(const PythParams& p);

/// The figure at delta = K L, where every length but the diagonals is an
/// integer polynomial in K, m, n.
struct ClosedForms {
  Integer K;
  Rational r1;              // K (m^2-n^2)(m^2+n^2)^2
  Rational r2;              // 2K mn (m^2+n^2)^2
  Rational o1o2;            // K (m^2+n^2)^3
  Rational area_oo1o2;      // K^2 mn (m^2-n^2)(m^2+n^2)^4
  Rational x;               // K (m^2-n^2)^2 (m^2+n^2)
  Rational y;               // 4K (mn)^2 (m^2+n^2)
  Rational area_trapezoid;  // 2 K^2 mn (m^2-n^2)(m^2+n^2)^4
  Surd d1;                  // K (m^2-n^2)(m^2+n^2) sqrt(m^4 + 14m^2n^2 + n^4)
  Surd d2;                  // 4K mn (m^2+n^2) sqrt(m^4 - m^2n^2 + n^4)
  Rational half_alpha;      // 4K mn (m^2-n^2)(m^2+n^2)
  Rational beta;            // 16K (mn)^2 (m^2-n^2)
  Rational gamma;           // 8K mn (m^2-n^2)^2

  friend bool operator==(const ClosedForms&, const ClosedForms&) = default;
};

ClosedForms closed_forms(const Integer& m, const Integer& n, const Integer& K);

/// True when the closed forms agree field-for-field with the figure.
bool matches_figure(const ClosedForms& c, const DerivedFigure& f);

/// gcd((m^2+n^2)^t1, 8mn(m^2-n^2)^t2) == 1.
bool coprimality_check(const Integer& m, const Integer& n, unsigned t1,
                       unsigned t2);

}  // namespace pythtri

#endif  // PYTHTRI_PYTHAGOREAN_HPP_
