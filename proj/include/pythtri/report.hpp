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

#ifndef PYTHTRI_REPORT_HPP_
#define PYTHTRI_REPORT_HPP_

// Output documents for the command line front end. Every command produces
//   {schema_version, command, inputs, results, errata}
// with rationals as "p/q" strings and surds as {coef, radicand, approx}.
// The same document renders as JSON or as flattened key,value CSV.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "pythtri/diophantine.hpp"
#include "pythtri/exact.hpp"
#include "pythtri/pythagorean.hpp"
#include "pythtri/triangle.hpp"

namespace pythtri::report {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1.0";

struct Options {
  int digits = 12;  // significant digits of surd approximations
};

Json to_json(const Rational& value);
Json to_json(const Integer& value);  // number when it fits 64 bits, else string
Json to_json(const Surd& value, const Options& options);

Rational rational_from_json(const Json& j);
Integer integer_from_json(const Json& j);
Surd surd_from_json(const Json& j);

/// "a,b,c" where each entry is an integer or "p/q".
std::vector<Rational> parse_exact_list(std::string_view text);

/// "15*sqrt(61)", "sqrt(13)", "(1/3)*sqrt(3)" or a plain rational.
Surd parse_surd_text(std::string_view text);

Json document(std::string_view command, Json inputs, Json results,
              Json errata = Json::array());

Json derive_document(const RightTriangle& t, Json inputs, const Options& options);

/// With K set, delta = K L and the closed-form record is included.
Json generate_document(const Integer& m, const Integer& n,
                       const std::optional<Integer>& delta,
                       const std::optional<Integer>& K, const Options& options);

Json classify_document(const Integer& m, const Integer& n, const Integer& delta,
                       const Options& options);

Json scan_document(Quartic q, const Integer& max, unsigned threads);

/// One printed cell of the published tables, kept verbatim.
struct PublishedCell {
  std::string table;  // "1" or "2"
  Integer m;
  Integer n;
  Integer K;
  std::string column;
  std::string printed;
};

/// CSV with header table,m,n,K,column,value. Throws InvalidInput when the
/// file cannot be read or a line is malformed.
std::vector<PublishedCell> load_published_tables(const std::filesystem::path& path);

/// The parameter rows (m, n) = (2,1), (3,2), (4,1) at K = 1.
const std::vector<std::pair<int, int>>& table_rows();

/// Recomputes both tables. When `published` is given, every printed cell is
/// compared with the computed value and each disagreement becomes an erratum.
Json tables_document(const std::vector<PublishedCell>* published,
                     std::string_view published_source, const Options& options);

std::string render_json(const Json& doc);

/// Depth-first flattening: "results.table2[0].d1.coef" and so on.
std::vector<std::pair<std::string, std::string>> flatten(const Json& doc);
std::string render_csv(const Json& doc);

}  // namespace pythtri::report

#endif  // PYTHTRI_REPORT_HPP_
