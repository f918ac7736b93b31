#include "zardec/cli/json_io.hpp"

#include <algorithm>
#include <set>

namespace zardec::cli {

namespace {

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": malformed JSON (" + e.what() + ")");
  }
}

void require(bool condition, const std::string& path, const std::string& message) {
  if (!condition) throw ParseError(path + ": " + message);
}

void reject_unknown_keys(const Json& object, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& item : object.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(), [&](const char* k) { return item.key() == k; });
    require(known, path + "." + item.key(), "unknown field");
  }
}

Integer integer_from_json(const Json& value, const std::string& path) {
  if (value.is_number_unsigned()) return Integer(value.get<unsigned long>());
  if (value.is_number_integer()) return Integer(value.get<long>());
  require(!value.is_number_float(), path, "floating-point literal not allowed");
  require(value.is_string(), path, "expected an integer");
  const Rational r = rational_from_json(value, path);
  require(is_integral(r), path, "expected an integer, got " + to_string(r));
  return r.get_num();
}

Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(to_string(v));
}

Json rationals_to_json(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& value, const std::string& path) {
  require(value.is_array(), path, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < value.size(); ++i) out.push_back(rational_from_json(value[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::string> strings_from_json(const Json& value, const std::string& path) {
  require(value.is_array(), path, "expected an array");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    require(value[i].is_string(), path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(value[i].get<std::string>());
  }
  return out;
}

std::string big(const Integer& v) { return to_string(v); }

}  // namespace

Rational rational_from_json(const Json& value, const std::string& path) {
  if (value.is_number_unsigned()) return Rational(Integer(value.get<unsigned long>()));
  if (value.is_number_integer()) return Rational(Integer(value.get<long>()));
  require(!value.is_number_float(), path, "floating-point literal not allowed; write an integer or \"p/q\"");
  require(value.is_string(), path, "expected an integer or a \"p/q\" string");
  try {
    return parse_rational(value.get<std::string>());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Problem parse_problem(const std::string& text) {
  const Json doc = parse_document(text);
  require(doc.is_object(), "$", "expected an object");
  reject_unknown_keys(doc, "$", {"labels", "gram", "divisor", "options"});
  require(doc.contains("gram"), "$.gram", "missing required field");
  require(doc.contains("divisor"), "$.divisor", "missing required field");

  const Json& g = doc["gram"];
  require(g.is_array() && !g.empty(), "$.gram", "expected a non-empty array of rows");
  const std::size_t m = g.size();
  RationalMatrix gram(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const std::string row_path = "$.gram[" + std::to_string(i) + "]";
    require(g[i].is_array(), row_path, "expected an array");
    require(g[i].size() == m, row_path, "expected " + std::to_string(m) + " entries, got " + std::to_string(g[i].size()));
    for (std::size_t j = 0; j < m; ++j) gram(i, j) = rational_from_json(g[i][j], row_path + "[" + std::to_string(j) + "]");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      require(gram(i, j) == gram(j, i), "$.gram",
              "not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");

  const std::vector<Rational> coefficients = rationals_from_json(doc["divisor"], "$.divisor");
  require(coefficients.size() == m, "$.divisor", "expected " + std::to_string(m) + " coefficients");
  for (std::size_t i = 0; i < m; ++i)
    require(coefficients[i] >= 0, "$.divisor[" + std::to_string(i) + "]", "coefficient must be nonnegative");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    labels = strings_from_json(doc["labels"], "$.labels");
    require(labels.size() == m, "$.labels", "expected " + std::to_string(m) + " labels");
    require(std::set<std::string>(labels.begin(), labels.end()).size() == m, "$.labels", "labels must be distinct");
    for (std::size_t i = 0; i < m; ++i) require(!labels[i].empty(), "$.labels[" + std::to_string(i) + "]", "empty label");
  } else {
    for (std::size_t i = 0; i < m; ++i) labels.push_back("D" + std::to_string(i + 1));
  }

  bool verify = false;
  std::size_t limit = kDefaultOracleLimit;
  if (doc.contains("options")) {
    const Json& o = doc["options"];
    require(o.is_object(), "$.options", "expected an object");
    reject_unknown_keys(o, "$.options", {"verify_oracle", "oracle_limit"});
    if (o.contains("verify_oracle")) {
      require(o["verify_oracle"].is_boolean(), "$.options.verify_oracle", "expected a boolean");
      verify = o["verify_oracle"].get<bool>();
    }
    if (o.contains("oracle_limit")) {
      require(o["oracle_limit"].is_number_unsigned(), "$.options.oracle_limit", "expected a nonnegative integer");
      limit = o["oracle_limit"].get<std::size_t>();
    }
  }
  return Problem{IntersectionForm(std::move(labels), std::move(gram)), DivisorVec(coefficients), verify, limit};
}

Json to_json(const Problem& problem) {
  Json out;
  out["labels"] = problem.form.labels();
  Json gram = Json::array();
  for (std::size_t i = 0; i < problem.form.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < problem.form.size(); ++j) row.push_back(to_string(problem.form.gram()(i, j)));
    gram.push_back(std::move(row));
  }
  out["gram"] = std::move(gram);
  out["divisor"] = rationals_to_json(problem.divisor.coefficients());
  out["options"] = {{"verify_oracle", problem.verify_oracle}, {"oracle_limit", problem.oracle_limit}};
  return out;
}

bool ResultFile::ok() const {
  return oracle != "disagree" && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ResultFile make_result(const IntersectionForm& form, const Decomposition& dec, const std::vector<CheckResult>& checks) {
  ResultFile r;
  r.labels = form.labels();
  r.positive = dec.positive.coefficients();
  r.negative = dec.negative.coefficients();
  for (std::size_t i : dec.negative_support) r.negative_support.push_back(form.labels()[i]);
  r.checks = checks;
  r.gram_s_det = dec.gram_s_det;
  r.rounds = dec.rounds;
  return r;
}

Json to_json(const ResultFile& result) {
  Json out;
  out["status"] = result.ok() ? "ok" : "fail";
  out["labels"] = result.labels;
  out["positive"] = rationals_to_json(result.positive);
  out["negative"] = rationals_to_json(result.negative);
  out["negative_support"] = result.negative_support;
  out["gram_s_det"] = to_string(result.gram_s_det);
  out["rounds"] = result.rounds;
  out["oracle"] = result.oracle;
  Json checks = Json::object();
  for (const auto& c : result.checks) checks[c.name] = c.passed ? "pass" : "fail";
  out["checks"] = std::move(checks);
  return out;
}

ResultFile parse_result(const std::string& text) {
  const Json doc = parse_document(text);
  require(doc.is_object(), "$", "expected an object");
  reject_unknown_keys(doc, "$",
                      {"status", "labels", "positive", "negative", "negative_support", "gram_s_det", "rounds",
                       "oracle", "checks"});
  for (const char* key : {"labels", "positive", "negative", "negative_support", "gram_s_det", "rounds", "oracle", "checks"})
    require(doc.contains(key), std::string("$.") + key, "missing required field");
  ResultFile r;
  r.labels = strings_from_json(doc["labels"], "$.labels");
  r.positive = rationals_from_json(doc["positive"], "$.positive");
  r.negative = rationals_from_json(doc["negative"], "$.negative");
  r.negative_support = strings_from_json(doc["negative_support"], "$.negative_support");
  r.gram_s_det = rational_from_json(doc["gram_s_det"], "$.gram_s_det");
  require(doc["rounds"].is_number_unsigned(), "$.rounds", "expected a nonnegative integer");
  r.rounds = doc["rounds"].get<std::size_t>();
  require(doc["oracle"].is_string(), "$.oracle", "expected a string");
  r.oracle = doc["oracle"].get<std::string>();
  require(doc["checks"].is_object(), "$.checks", "expected an object");
  for (const auto& item : doc["checks"].items()) {
    const std::string path = "$.checks." + item.key();
    require(item.value() == "pass" || item.value() == "fail", path, "expected \"pass\" or \"fail\"");
    r.checks.push_back({item.key(), item.value() == "pass"});
  }
  return r;
}

Json to_json(const IntegralLattice& lattice) {
  Json out;
  out["name"] = lattice.name();
  out["rank"] = lattice.rank();
  Json gram = Json::array();
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < lattice.rank(); ++j) row.push_back(integer_to_json(lattice.gram()(i, j)));
    gram.push_back(std::move(row));
  }
  out["gram"] = std::move(gram);
  return out;
}

IntegralLattice parse_lattice(const std::string& text) {
  const Json doc = parse_document(text);
  require(doc.is_object(), "$", "expected an object");
  reject_unknown_keys(doc, "$", {"name", "rank", "gram"});
  require(doc.contains("gram"), "$.gram", "missing required field");
  const Json& g = doc["gram"];
  require(g.is_array() && !g.empty(), "$.gram", "expected a non-empty array of rows");
  const std::size_t n = g.size();
  if (doc.contains("rank")) {
    require(doc["rank"].is_number_unsigned() && doc["rank"].get<std::size_t>() == n, "$.rank",
            "must equal the number of Gram rows");
  }
  IntegerMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::string row_path = "$.gram[" + std::to_string(i) + "]";
    require(g[i].is_array() && g[i].size() == n, row_path, "expected " + std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) gram(i, j) = integer_from_json(g[i][j], row_path + "[" + std::to_string(j) + "]");
  }
  require(gram.is_symmetric(), "$.gram", "not symmetric");
  std::string name = "lattice";
  if (doc.contains("name")) {
    require(doc["name"].is_string(), "$.name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  return IntegralLattice(std::move(name), std::move(gram));
}

Json to_json(const SignatureTriple& sig) {
  return Json{{"n_plus", sig.n_plus}, {"n_minus", sig.n_minus}, {"n_zero", sig.n_zero}};
}

Json to_json(const DiscriminantData& disc) {
  Json divisors = Json::array();
  for (const auto& d : disc.elementary_divisors) divisors.push_back(big(d));
  Json out;
  out["group"] = disc.describe();
  out["elementary_divisors"] = std::move(divisors);
  out["cardinality"] = big(disc.cardinality);
  out["exponent"] = big(disc.exponent);
  return out;
}

Json to_json(const GuardedInteger& value) {
  if (const auto* v = std::get_if<Integer>(&value)) return big(*v);
  const auto& t = std::get<FactorialTerm>(value);
  Json out;
  out["factorial_of"] = big(t.factorial_of);
  out["times"] = big(t.times);
  out["display"] = t.display();
  return out;
}

Json to_json(const GuardedRational& value) {
  if (const auto* v = std::get_if<Rational>(&value)) return to_string(*v);
  const auto& p = std::get<FactorialPower>(value);
  Json out;
  out["factorial_of"] = big(p.base.factorial_of);
  out["times"] = big(p.base.times);
  out["power"] = p.exponent;
  out["scale"] = to_string(p.scale);
  out["display"] = p.display();
  return out;
}

Json to_json(const BoundReport& r) {
  Json out;
  out["rho"] = r.rho;
  out["n"] = r.n;
  out["volume_C"] = to_string(r.volume_C);
  out["card_A"] = big(r.card_A);
  out["exponent_A"] = big(r.exponent_A);
  out["negativity_bound"] = big(r.negativity_bound);
  out["refined_negativity_bound"] = big(r.refined_negativity_bound);
  out["denominator_bound"] = to_json(r.denominator_bound);
  out["reverse_bn_bound"] = r.reverse_bn_bound ? to_json(*r.reverse_bn_bound) : Json(nullptr);
  out["birationality_m0"] = to_json(r.birationality_m0);
  out["chow_degree"] = to_json(r.chow_degree);
  return out;
}

Json to_json(const FullReport& r) {
  Json out;
  out["preset"] = r.preset;
  out["b2"] = r.b2;
  out["h11"] = r.h11;
  out["published_max_negative_square"] = r.published_max_negative_square;
  out["at_rho"] = to_json(r.at_rho);
  out["uniform"] = to_json(r.uniform);
  return out;
}

}  // namespace zardec::cli
