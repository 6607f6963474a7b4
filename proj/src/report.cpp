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

#include "pythtri/report.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <tuple>

#include "pythtri/errors.hpp"

namespace pythtri::report {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Json triangle_json(const RightTriangle& t) {
  return Json{{"alpha", to_json(t.alpha())},
              {"beta", to_json(t.beta())},
              {"gamma", to_json(t.gamma())}};
}

Json integrality_json(const IntegralityReport& r) {
  return Json{{"threshold_L", to_json(r.threshold_L)},
              {"r1", to_json(r.r1)},
              {"r2", to_json(r.r2)},
              {"o1o2", to_json(r.o1o2)},
              {"r1_integral", r.r1_integral},
              {"r2_integral", r.r2_integral},
              {"o1o2_integral", r.o1o2_integral},
              {"all_integral", r.all_integral},
              {"delta_divisible_by_L", r.delta_divisible_by_L},
              {"abg_primitive", r.abg_primitive},
              {"derived_gcd", to_json(r.derived_gcd)}};
}

Json closed_forms_json(const ClosedForms& c, const Options& options) {
  return Json{{"K", to_json(c.K)},
              {"r1", to_json(c.r1)},
              {"r2", to_json(c.r2)},
              {"o1o2", to_json(c.o1o2)},
              {"area_oo1o2", to_json(c.area_oo1o2)},
              {"x", to_json(c.x)},
              {"y", to_json(c.y)},
              {"area_trapezoid", to_json(c.area_trapezoid)},
              {"d1", to_json(c.d1, options)},
              {"d2", to_json(c.d2, options)},
              {"half_alpha", to_json(c.half_alpha)},
              {"beta", to_json(c.beta)},
              {"gamma", to_json(c.gamma)}};
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten_into(const Json& j, const std::string& path,
                  std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      flatten_into(value, path.empty() ? key : path + "." + key, out);
    }
  } else if (j.is_array()) {
    if (j.empty()) out.emplace_back(path, "[]");
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten_into(j[i], path + "[" + std::to_string(i) + "]", out);
    }
  } else if (j.is_string()) {
    out.emplace_back(path, j.get<std::string>());
  } else if (j.is_null()) {
    out.emplace_back(path, "");
  } else {
    out.emplace_back(path, j.dump());
  }
}

// A table cell as computed, with the identity that independently confirms it.
struct ComputedCell {
  Surd value;
  std::string oracle;
  bool oracle_holds;
};

}  // namespace

Json to_json(const Rational& value) { return value.str(); }

Json to_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return value.convert_to<std::int64_t>();
  }
  return value.str();
}

Json to_json(const Surd& value, const Options& options) {
  return Json{{"coef", to_json(value.coef())},
              {"radicand", to_json(value.radicand())},
              {"approx", decimal_approx(value, options.digits)}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InvalidInput("rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>())
                                  : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    Rational r = Rational::parse(j.get<std::string>());
    if (r.is_integer()) return r.num();
  }
  throw InvalidInput("expected an integer, got " + j.dump());
}

Surd surd_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("coef") || !j.contains("radicand")) {
    throw InvalidInput("surd must be {coef, radicand}");
  }
  return Surd::make(rational_from_json(j.at("coef")),
                    integer_from_json(j.at("radicand")));
}

std::vector<Rational> parse_exact_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto part : split(text, ',')) out.push_back(Rational::parse(part));
  return out;
}

Surd parse_surd_text(std::string_view text) {
  text = trim(text);
  const auto at = text.find("sqrt(");
  if (at == std::string_view::npos) return Surd(Rational::parse(text));
  if (text.back() != ')') throw InvalidInput("malformed surd \"" + std::string(text) + "\"");
  const auto radicand = Rational::parse(text.substr(at + 5, text.size() - at - 6));
  if (!radicand.is_integer()) throw InvalidInput("surd radicand must be an integer");
  auto coef_text = trim(text.substr(0, at));
  Rational coef = 1;
  if (!coef_text.empty()) {
    if (coef_text.back() != '*') throw InvalidInput("malformed surd \"" + std::string(text) + "\"");
    coef_text = trim(coef_text.substr(0, coef_text.size() - 1));
    if (coef_text.size() >= 2 && coef_text.front() == '(' && coef_text.back() == ')') {
      coef_text = coef_text.substr(1, coef_text.size() - 2);
    }
    coef = Rational::parse(coef_text);
  }
  return Surd::make(coef, radicand.num());
}

Json document(std::string_view command, Json inputs, Json results, Json errata) {
  return Json{{"schema_version", kSchemaVersion},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"results", std::move(results)},
              {"errata", std::move(errata)}};
}

Json derive_document(const RightTriangle& t, Json inputs, const Options& options) {
  const DerivedFigure f = derive_figure(t);
  Json results = triangle_json(t);
  results["area_E"] = to_json(f.area_E);
  results["half_area"] = to_json(f.half_area);
  results["circumradius_R"] = to_json(f.circumradius_R);
  results["r1"] = to_json(f.r1);
  results["r2"] = to_json(f.r2);
  results["x"] = to_json(f.x);
  results["y"] = to_json(f.y);
  results["o1o2"] = to_json(f.o1o2);
  results["area_oo1o2"] = to_json(f.area_oo1o2);
  results["trapezoid_base"] = to_json(f.trapezoid_base);
  results["quarter"] = to_json(f.quarter);
  results["area_trapezoid"] = to_json(f.area_trapezoid);
  results["d1"] = to_json(f.d1, options);
  results["d2"] = to_json(f.d2, options);
  results["isosceles_warning"] = f.isosceles_warning;
  results["similarity_scale"] = to_json(similarity_scale(f, t));

  const ReciprocalTriangle rt = reciprocal_triangle(f);
  results["reciprocal_triangle"] = Json{{"leg1", to_json(rt.leg1)},
                                        {"leg2", to_json(rt.leg2)},
                                        {"hyp", to_json(rt.hyp)}};
  if (t.isosceles()) {
    results["angle_class"] = nullptr;
  } else {
    const AngleClass ac = classify_angles(t);
    Json ascending = Json::array();
    for (Quantity q : ac.ascending) ascending.push_back(quantity_name(q));
    results["angle_class"] = Json{{"case", static_cast<int>(ac.kind)},
                                  {"oriented_beta", to_json(ac.oriented_beta)},
                                  {"oriented_gamma", to_json(ac.oriented_gamma)},
                                  {"ascending", std::move(ascending)}};
  }
  return document("derive", std::move(inputs), std::move(results));
}

Json generate_document(const Integer& m, const Integer& n,
                       const std::optional<Integer>& delta,
                       const std::optional<Integer>& K, const Options& options) {
  if (delta.has_value() == K.has_value()) {
    throw InvalidInput("exactly one of delta and K is required");
  }
  Json inputs{{"m", to_json(m)}, {"n", to_json(n)}};
  Integer d;
  if (K) {
    if (*K < 1) throw InvalidInput("K < 1");
    inputs["K"] = to_json(*K);
    d = *K * integrality_threshold(m, n);
  } else {
    inputs["delta"] = to_json(*delta);
    d = *delta;
  }
  const PythParams p = make_params(m, n, d);
  const RightTriangle t = generate_triple(p);

  Json results{{"triangle", triangle_json(t)},
               {"delta", to_json(d)},
               {"integrality", integrality_json(classify_integrality(p))}};
  if (K) {
    const ClosedForms c = closed_forms(m, n, *K);
    const bool match = matches_figure(c, derive_figure(t));
    if (!match) throw ConsistencyError("closed forms disagree with the derived figure");
    results["closed_forms"] = closed_forms_json(c, options);
    results["closed_forms_match_figure"] = match;
  }
  return document("generate", std::move(inputs), std::move(results));
}

Json classify_document(const Integer& m, const Integer& n, const Integer& delta,
                       const Options& /*options*/) {
  const PythParams p = make_params(m, n, delta);
  const DiagonalCertificate cert = certify_diagonal_irrational(m, n);
  if (!cert.both_irrational) {
    throw ConsistencyError("a diagonal radicand is a perfect square");
  }
  bool coprime = true;
  for (unsigned t1 = 0; t1 <= 3; ++t1) {
    for (unsigned t2 = 0; t2 <= 3; ++t2) coprime = coprime && coprimality_check(m, n, t1, t2);
  }
  Json results{{"integrality", integrality_json(classify_integrality(p))},
               {"diagonal_certificate", Json{{"rad1", to_json(cert.rad1)},
                                             {"rad2", to_json(cert.rad2)},
                                             {"both_irrational", cert.both_irrational}}},
               {"coprime_for_t_up_to_3", coprime}};
  return document("classify",
                  Json{{"m", to_json(m)}, {"n", to_json(n)}, {"delta", to_json(delta)}},
                  std::move(results));
}

Json scan_document(Quartic q, const Integer& max, unsigned threads) {
  const auto solutions = scan_quartic(q, max, threads);
  Json list = Json::array();
  bool only_diagonal = true;
  for (const auto& s : solutions) {
    only_diagonal = only_diagonal && s.x == s.y;
    list.push_back(Json{{"x", to_json(s.x)}, {"y", to_json(s.y)}, {"z", to_json(s.z)}});
  }
  Json results{{"equation", quartic_name(q)},
               {"mode", "bounded corroboration, not a proof"},
               {"count", solutions.size()},
               {"only_diagonal_found", only_diagonal},
               {"solutions", std::move(list)}};
  return document("scan", Json{{"equation", quartic_name(q)}, {"max", to_json(max)}},
                  std::move(results));
}

std::vector<PublishedCell> load_published_tables(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read published tables from " + path.string());
  std::vector<PublishedCell> cells;
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (trim(line).empty() || trim(line).front() == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    const auto f = split(line, ',');
    if (f.size() != 6) throw InvalidInput("malformed published-table line: " + line);
    cells.push_back(PublishedCell{std::string(trim(f[0])),
                                  Rational::parse(f[1]).num(),
                                  Rational::parse(f[2]).num(),
                                  Rational::parse(f[3]).num(),
                                  std::string(trim(f[4])),
                                  std::string(trim(f[5]))});
  }
  return cells;
}

const std::vector<std::pair<int, int>>& table_rows() {
  static const std::vector<std::pair<int, int>> rows{{2, 1}, {3, 2}, {4, 1}};
  return rows;
}

Json tables_document(const std::vector<PublishedCell>* published,
                     std::string_view published_source, const Options& options) {
  const Integer K = 1;
  Json table1 = Json::array();
  Json table2 = Json::array();
  // (table, m, n, column) -> computed cell
  std::map<std::tuple<std::string, Integer, Integer, std::string>, ComputedCell> cells;

  for (const auto& [mi, ni] : table_rows()) {
    const Integer m = mi;
    const Integer n = ni;
    const PythParams p = make_params(m, n, K * integrality_threshold(m, n));
    const RightTriangle t = generate_triple(p);
    const DerivedFigure f = derive_figure(t);
    if (!matches_figure(closed_forms(m, n, K), f)) {
      throw ConsistencyError("closed forms disagree with the derived figure");
    }
    const std::string polynomial = "closed form at delta = K L";
    auto put = [&](const std::string& table, const std::string& column, Surd v,
                   std::string oracle, bool holds) {
      cells[{table, m, n, column}] = ComputedCell{std::move(v), std::move(oracle), holds};
    };
    put("1", "alpha", Surd(t.alpha()), "Pythagorean parametrization", true);
    put("1", "beta", Surd(t.beta()), "Pythagorean parametrization", true);
    put("1", "gamma", Surd(t.gamma()), "Pythagorean parametrization", true);
    put("2", "r1", Surd(f.r1), polynomial, true);
    put("2", "r2", Surd(f.r2), polynomial, true);
    put("2", "o1o2", Surd(f.o1o2), polynomial, true);
    put("2", "area_oo1o2", Surd(f.area_oo1o2), polynomial, true);
    put("2", "x", Surd(f.x), polynomial, true);
    put("2", "y", Surd(f.y), polynomial, true);
    put("2", "half_alpha", Surd(f.trapezoid_base), polynomial, true);
    put("2", "d1", f.d1, "d1 = sqrt(x^2 + (alpha/2)^2)",
        f.d1.square() == square(f.x) + square(f.trapezoid_base));
    put("2", "d2", f.d2, "d2 = sqrt(y^2 + (alpha/2)^2)",
        f.d2.square() == square(f.y) + square(f.trapezoid_base));
    put("2", "area_trapezoid", Surd(f.area_trapezoid), polynomial, true);

    const Json row{{"m", mi}, {"n", ni}, {"K", to_json(K)}};
    Json r1 = row;
    r1.update(triangle_json(t));
    table1.push_back(std::move(r1));
    Json r2 = row;
    r2["r1"] = to_json(f.r1);
    r2["r2"] = to_json(f.r2);
    r2["o1o2"] = to_json(f.o1o2);
    r2["area_oo1o2"] = to_json(f.area_oo1o2);
    r2["x"] = to_json(f.x);
    r2["y"] = to_json(f.y);
    r2["half_alpha"] = to_json(f.trapezoid_base);
    r2["d1"] = to_json(f.d1, options);
    r2["d2"] = to_json(f.d2, options);
    r2["area_trapezoid"] = to_json(f.area_trapezoid);
    table2.push_back(std::move(r2));
  }

  Json errata = Json::array();
  std::size_t compared = 0;
  if (published != nullptr) {
    for (const auto& cell : *published) {
      if (cell.K != K) throw InvalidInput("published tables only cover K = 1");
      auto it = cells.find({cell.table, cell.m, cell.n, cell.column});
      if (it == cells.end()) {
        throw InvalidInput("published cell has no computed counterpart: table " +
                           cell.table + ", column " + cell.column);
      }
      ++compared;
      const ComputedCell& computed = it->second;
      if (parse_surd_text(cell.printed) == computed.value) continue;
      errata.push_back(Json{{"table", cell.table},
                            {"m", to_json(cell.m)},
                            {"n", to_json(cell.n)},
                            {"K", to_json(cell.K)},
                            {"column", cell.column},
                            {"published", cell.printed},
                            {"computed", to_json(computed.value, options)},
                            {"oracle", computed.oracle},
                            {"oracle_holds", computed.oracle_holds}});
    }
  }

  Json inputs{{"published", published != nullptr ? Json(published_source) : Json(nullptr)}};
  Json results{{"table1", std::move(table1)},
               {"table2", std::move(table2)},
               {"published_cells_compared", compared}};
  return document("tables", std::move(inputs), std::move(results), std::move(errata));
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::vector<std::pair<std::string, std::string>> flatten(const Json& doc) {
  std::vector<std::pair<std::string, std::string>> out;
  flatten_into(doc, "", out);
  return out;
}

std::string render_csv(const Json& doc) {
  std::ostringstream os;
  os << "key,value\n";
  for (const auto& [key, value] : flatten(doc)) {
    os << csv_field(key) << ',' << csv_field(value) << '\n';
  }
  return os.str();
}

}  // namespace pythtri::report
