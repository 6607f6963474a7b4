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

#include "pythtri/diophantine.hpp"

#include <algorithm>
#include <thread>

#include "pythtri/errors.hpp"
#include "pythtri/pythagorean.hpp"

namespace pythtri {

std::string_view quartic_name(Quartic q) {
  return q == Quartic::kEuler ? "euler" : "pocklington";
}

std::optional<Quartic> parse_quartic(std::string_view name) {
  if (name == "euler") return Quartic::kEuler;
  if (name == "pocklington") return Quartic::kPocklington;
  return std::nullopt;
}

Integer quartic_value(Quartic q, const Integer& x, const Integer& y) {
  const Integer x2 = x * x;
  const Integer y2 = y * y;
  const Integer cross = q == Quartic::kEuler ? Integer(14 * x2 * y2)
                                             : Integer(-(x2 * y2));
  return x2 * x2 + cross + y2 * y2;
}

std::vector<QuarticSolution> scan_quartic(Quartic q, const Integer& max,
                                          unsigned threads) {
  if (max < 1) throw InvalidInput("scan bound must be >= 1");
  threads = std::max(1u, threads);

  // Worker w takes x = 1 + w, 1 + w + threads, ...
  std::vector<std::vector<QuarticSolution>> found(threads);
  auto work = [&](unsigned w) {
    for (Integer x = 1 + w; x <= max; x += threads) {
      for (Integer y = x; y <= max; ++y) {
        auto root = integer_sqrt(quartic_value(q, x, y));
        if (root.exact) found[w].push_back({x, y, std::move(root.root), q});
      }
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
  }

  std::vector<QuarticSolution> out;
  for (auto& part : found) {
    std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  std::sort(out.begin(), out.end(),
            [](const QuarticSolution& a, const QuarticSolution& b) {
              return a.y != b.y ? a.y < b.y : a.x < b.x;
            });
  return out;
}

DiagonalCertificate certify_diagonal_irrational(const Integer& m,
                                                const Integer& n) {
  validate_mn(m, n);
  DiagonalCertificate c;
  c.rad1 = quartic_value(Quartic::kEuler, m, n);
  c.rad2 = quartic_value(Quartic::kPocklington, m, n);
  c.both_irrational = !integer_sqrt(c.rad1).exact && !integer_sqrt(c.rad2).exact;
  return c;
}

}  // namespace pythtri
