#pragma once

// JSON formats of the command-line tool. Schemas live in docs/*.schema.json.
// Rationals are always strings ("p" or "p/q"); floating-point literals are
// rejected. Key order is fixed so that output is byte-stable.

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "zardec/bounds.hpp"
#include "zardec/lattice.hpp"
#include "zardec/zariski.hpp"

namespace zardec::cli {

using Json = nlohmann::ordered_json;

struct Problem {
  IntersectionForm form;
  DivisorVec divisor;
  bool verify_oracle = false;
  std::size_t oracle_limit = kDefaultOracleLimit;
};

/// Parses and validates a problem document. ParseError messages carry the
/// line/column of a syntax error or the JSON path of an invalid field.
Problem parse_problem(const std::string& text);
Json to_json(const Problem& problem);

struct ResultFile {
  std::vector<std::string> labels;
  std::vector<Rational> positive;
  std::vector<Rational> negative;
  std::vector<std::string> negative_support;
  std::vector<CheckResult> checks;
  Rational gram_s_det = 1;
  std::size_t rounds = 0;
  std::string oracle = "skipped";  // "agree", "disagree" or "skipped"

  bool ok() const;
};

ResultFile make_result(const IntersectionForm& form, const Decomposition& dec, const std::vector<CheckResult>& checks);
Json to_json(const ResultFile& result);
ResultFile parse_result(const std::string& text);

Json to_json(const IntegralLattice& lattice);
IntegralLattice parse_lattice(const std::string& text);

Json to_json(const SignatureTriple& sig);
Json to_json(const DiscriminantData& disc);
Json to_json(const GuardedInteger& value);
Json to_json(const GuardedRational& value);
Json to_json(const BoundReport& report);
Json to_json(const FullReport& report);

/// Rational from a JSON integer or string; `path` names the field in errors.
Rational rational_from_json(const Json& value, const std::string& path);

}  // namespace zardec::cli
