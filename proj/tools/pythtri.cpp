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

// pythtri: exact derived quantities of the midpoint-circumcenter figure of a
// right triangle, Pythagorean parametrization, integrality classification,
// table reproduction and bounded quartic scans.
//
// Exit codes: 0 success, 2 invalid input, 3 internal consistency violation.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "pythtri/errors.hpp"
#include "pythtri/report.hpp"

namespace {

using pythtri::Integer;
using pythtri::InvalidInput;
namespace report = pythtri::report;

constexpr int kExitInvalid = 2;
constexpr int kExitInconsistent = 3;

Integer parse_integer_flag(const std::string& text, const char* name) {
  const pythtri::Rational r = pythtri::Rational::parse(text);
  if (!r.is_integer()) throw InvalidInput(std::string("--") + name + " must be an integer");
  return r.num();
}

std::optional<Integer> optional_integer(const std::string& text, const char* name) {
  if (text.empty()) return std::nullopt;
  return parse_integer_flag(text, name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact geometry and number theory of the right triangle OO1O2"};
  app.require_subcommand(1);

  std::string format = "json";
  int digits = 12;
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--digits", digits, "Significant digits of surd approximations")
      ->check(CLI::Range(1, 10000));

  auto* derive = app.add_subcommand("derive", "All derived lengths and areas of a right triangle");
  std::string sides, legs;
  auto* sides_opt = derive->add_option("--sides", sides, "alpha,beta,gamma (integers or p/q)");
  auto* legs_opt = derive->add_option("--legs", legs, "beta,gamma (integers or p/q)");
  sides_opt->excludes(legs_opt);
  derive->require_option(1);

  auto* generate = app.add_subcommand("generate", "Triple from (m, n) and delta or K");
  std::string gm, gn, gdelta, gk;
  generate->add_option("--m", gm)->required();
  generate->add_option("--n", gn)->required();
  auto* gdelta_opt = generate->add_option("--delta", gdelta, "Scale factor delta");
  auto* gk_opt = generate->add_option("--K", gk, "Use delta = K * 8mn(m^2 - n^2)");
  gdelta_opt->excludes(gk_opt);

  auto* classify = app.add_subcommand("classify", "Integrality report and diagonal certificate");
  std::string cm, cn, cdelta;
  classify->add_option("--m", cm)->required();
  classify->add_option("--n", cn)->required();
  classify->add_option("--delta", cdelta)->required();

  auto* tables = app.add_subcommand("tables", "Recompute the published tables and list errata");
  std::string published = PYTHTRI_PUBLISHED_TABLES;
  bool no_published = false;
  tables->add_option("--published", published, "CSV of the printed table cells");
  tables->add_flag("--no-published", no_published, "Skip the comparison with printed cells");

  auto* scan = app.add_subcommand("scan", "Bounded search of a quartic Diophantine equation");
  std::string equation, smax;
  unsigned threads = 1;
  bool allow_large = false;
  scan->add_option("--equation", equation, "euler or pocklington")->required();
  scan->add_option("--max", smax, "Search bound for x and y")->required();
  scan->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  scan->add_flag("--allow-large", allow_large, "Permit --max above 10000");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  const report::Options options{digits};
  try {
    report::Json doc;
    if (derive->parsed()) {
      if (!sides.empty()) {
        const auto v = report::parse_exact_list(sides);
        if (v.size() != 3) throw InvalidInput("--sides needs exactly three values");
        doc = report::derive_document(pythtri::RightTriangle::from_sides(v[0], v[1], v[2]),
                                      report::Json{{"sides", sides}}, options);
      } else {
        const auto v = report::parse_exact_list(legs);
        if (v.size() != 2) throw InvalidInput("--legs needs exactly two values");
        doc = report::derive_document(pythtri::RightTriangle::from_legs(v[0], v[1]),
                                      report::Json{{"legs", legs}}, options);
      }
    } else if (generate->parsed()) {
      if (gdelta.empty() == gk.empty()) {
        throw InvalidInput("exactly one of --delta and --K is required");
      }
      doc = report::generate_document(parse_integer_flag(gm, "m"), parse_integer_flag(gn, "n"),
                                      optional_integer(gdelta, "delta"),
                                      optional_integer(gk, "K"), options);
    } else if (classify->parsed()) {
      doc = report::classify_document(parse_integer_flag(cm, "m"), parse_integer_flag(cn, "n"),
                                      parse_integer_flag(cdelta, "delta"), options);
    } else if (tables->parsed()) {
      if (no_published) {
        doc = report::tables_document(nullptr, "", options);
      } else {
        const auto cells = report::load_published_tables(published);
        doc = report::tables_document(&cells, published, options);
      }
    } else if (scan->parsed()) {
      const auto q = pythtri::parse_quartic(equation);
      if (!q) throw InvalidInput("unknown equation \"" + equation + "\" (euler|pocklington)");
      const Integer max = parse_integer_flag(smax, "max");
      if (max < 1) throw InvalidInput("--max must be >= 1");
      if (max > 10000 && !allow_large) {
        throw InvalidInput("--max above 10000 needs --allow-large");
      }
      doc = report::scan_document(*q, max, threads);
    }
    std::cout << (format == "csv" ? report::render_csv(doc) : report::render_json(doc));
    return 0;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const pythtri::ConsistencyError& e) {
    std::cerr << "internal consistency violation: " << e.what() << '\n';
    return kExitInconsistent;
  }
}
