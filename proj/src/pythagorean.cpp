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

#include "pythtri/errors.hpp"

namespace pythtri {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

void validate_mn(const Integer& m, const Integer& n) {
  if (n < 1) throw InvalidInput("n < 1");
  if (m <= n) throw InvalidInput("m ≤ n");
  if (gcd(m, n) != 1) throw InvalidInput("gcd(m,n) ≠ 1");
  if ((m + n) % 2 == 0) throw InvalidInput("same parity: m + n is even");
}

PythParams PythParams::make(Integer m, Integer n, Integer delta) {
  validate_mn(m, n);
  if (delta < 1) throw InvalidInput("delta < 1");
  return PythParams(std::move(m), std::move(n), std::move(delta));
}

std::vector<std::pair<Integer, Integer>> valid_pairs(const Integer& max_m) {
  std::vector<std::pair<Integer, Integer>> out;
  for (Integer m = 2; m <= max_m; ++m) {
    for (Integer n = 1; n < m; ++n) {
      if (gcd(m, n) == 1 && (m + n) % 2 == 1) out.emplace_back(m, n);
    }
  }
  return out;
}

RightTriangle generate_triple(const PythParams& p) {
  const Integer& m = p.m();
  const Integer& n = p.n();
  return RightTriangle::from_sides(Rational(Integer(p.delta() * (m * m + n * n))),
                                   Rational(Integer(p.delta() * 2 * m * n)),
                                   Rational(Integer(p.delta() * (m * m - n * n))));
}

Integer integrality_threshold(const Integer& m, const Integer& n) {
  validate_mn(m, n);
  const Integer eight_mn = 8 * m * n;
  const Integer diff = m * m - n * n;
  Integer L = lcm(lcm(eight_mn, Integer(4 * diff)), Integer(eight_mn * diff));
  if (L != eight_mn * diff) {
    throw ConsistencyError("lcm(8mn, 4(m^2-n^2), 8mn(m^2-n^2)) != 8mn(m^2-n^2)");
  }
  return L;
}

IntegralityReport classify_integrality(const PythParams& p) {
  const Integer& m = p.m();
  const Integer& n = p.n();
  const Integer& delta = p.delta();
  const Integer sum = m * m + n * n;
  const Integer diff = m * m - n * n;

  IntegralityReport r;
  r.threshold_L = integrality_threshold(m, n);
  r.r1 = Rational::make(delta * sum * sum, 8 * m * n);
  r.r2 = Rational::make(delta * sum * sum, 4 * diff);
  r.o1o2 = Rational::make(delta * sum * sum * sum, 8 * m * n * diff);
  r.r1_integral = r.r1.is_integer();
  r.r2_integral = r.r2.is_integer();
  r.o1o2_integral = r.o1o2.is_integer();
  r.all_integral = r.r1_integral && r.r2_integral && r.o1o2_integral;
  r.delta_divisible_by_L = delta % r.threshold_L == 0;
  r.abg_primitive = delta == 1;
  r.derived_gcd = 0;
  if (r.all_integral) {
    r.derived_gcd = gcd(gcd(r.r1.num(), r.r2.num()), r.o1o2.num());
    if (r.derived_gcd % (sum * sum) != 0) {
      throw ConsistencyError("(m^2+n^2)^2 does not divide gcd(R1, R2, |O1O2|)");
    }
  }
  if (r.all_integral != r.delta_divisible_by_L) {
    throw ConsistencyError("integrality of R1, R2, |O1O2| disagrees with L | delta");
  }
  return r;
}

ClosedForms closed_forms(const Integer& m, const Integer& n, const Integer& K) {
  validate_mn(m, n);
  if (K < 1) throw InvalidInput("K < 1");
  const Integer mn = m * n;
  const Integer sum = m * m + n * n;
  const Integer diff = m * m - n * n;
  const Integer sum2 = sum * sum;
  const Integer sum4 = sum2 * sum2;
  const Integer m4 = m * m * m * m;
  const Integer n4 = n * n * n * n;

  ClosedForms c;
  c.K = K;
  c.r1 = Rational(Integer(K * diff * sum2));
  c.r2 = Rational(Integer(K * 2 * mn * sum2));
  c.o1o2 = Rational(Integer(K * sum2 * sum));
  c.area_oo1o2 = Rational(Integer(K * K * mn * diff * sum4));
  c.x = Rational(Integer(K * diff * diff * sum));
  c.y = Rational(Integer(K * 4 * mn * mn * sum));
  c.area_trapezoid = Rational(Integer(K * K * 2 * mn * diff * sum4));
  c.d1 = Surd::make(Rational(Integer(K * diff * sum)), m4 + 14 * mn * mn + n4);
  c.d2 = Surd::make(Rational(Integer(K * 4 * mn * sum)), m4 - mn * mn + n4);
  c.half_alpha = Rational(Integer(K * 4 * mn * diff * sum));
  c.beta = Rational(Integer(K * 16 * mn * mn * diff));
  c.gamma = Rational(Integer(K * 8 * mn * diff * diff));
  return c;
}

bool matches_figure(const ClosedForms& c, const DerivedFigure& f) {
  return c.r1 == f.r1 && c.r2 == f.r2 && c.o1o2 == f.o1o2 &&
         c.area_oo1o2 == f.area_oo1o2 && c.x == f.x && c.y == f.y &&
         c.area_trapezoid == f.area_trapezoid && c.d1 == f.d1 &&
         c.d2 == f.d2 && c.half_alpha == f.trapezoid_base &&
         c.beta == f.source.beta() && c.gamma == f.source.gamma();
}

bool coprimality_check(const Integer& m, const Integer& n, unsigned t1,
                       unsigned t2) {
  validate_mn(m, n);
  const Integer sum = m * m + n * n;
  const Integer diff = m * m - n * n;
  return gcd(Integer(boost::multiprecision::pow(sum, t1)),
             Integer(8 * m * n * boost::multiprecision::pow(diff, t2))) == 1;
}

}  // namespace pythtri
