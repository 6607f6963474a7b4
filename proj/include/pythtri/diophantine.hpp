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

#ifndef PYTHTRI_DIOPHANTINE_HPP_
#define PYTHTRI_DIOPHANTINE_HPP_

// Bounded exhaustive search of the quartics
//   euler:        x^4 + 14 x^2 y^2 + y^4 = z^2
//   pocklington:  x^4 -    x^2 y^2 + y^4 = z^2
// whose radicands decide whether the trapezoid diagonals can be rational.
// A finite scan corroborates the known classification; it proves nothing.

#include <optional>
#include <string_view>
#include <vector>

#include "pythtri/exact.hpp"

namespace pythtri {

enum class Quartic { kEuler, kPocklington };

std::string_view quartic_name(Quartic q);
std::optional<Quartic> parse_quartic(std::string_view name);

/// Left-hand side of the quartic at (x, y).
Integer quartic_value(Quartic q, const Integer& x, const Integer& y);

struct QuarticSolution {
  Integer x;  // x <= y
  Integer y;
  Integer z;
  Quartic equation;

  friend bool operator==(const QuarticSolution&, const QuarticSolution&) = default;
};

/// Every solution with 1 <= x <= y <= max, sorted by (y, x). The x range is
/// split across `threads` workers; the result does not depend on the split.
std::vector<QuarticSolution> scan_quartic(Quartic q, const Integer& max,
                                          unsigned threads = 1);

inline std::vector<QuarticSolution> scan_euler(const Integer& max,
                                               unsigned threads = 1) {
  return scan_quartic(Quartic::kEuler, max, threads);
}

inline std::vector<QuarticSolution> scan_pocklington(const Integer& max,
                                                     unsigned threads = 1) {
  return scan_quartic(Quartic::kPocklington, max, threads);
}

struct DiagonalCertificate {
  Integer rad1;  // m^4 + 14 m^2 n^2 + n^4
  Integer rad2;  // m^4 - m^2 n^2 + n^4
  bool both_irrational = false;
};

/// Radicands of the two trapezoid diagonals at delta = K L. For valid (m, n)
/// both_irrational is expected to be true. Throws InvalidInput otherwise.
DiagonalCertificate certify_diagonal_irrational(const Integer& m, const Integer& n);

}  // namespace pythtri

#endif  // PYTHTRI_DIOPHANTINE_HPP_
