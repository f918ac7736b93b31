#include "zardec/cli/commands.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "zardec/bounds.hpp"
#include "zardec/cli/json_io.hpp"

namespace zardec::cli {

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  buffer << in.rdbuf();
  return buffer.str();
}

void emit(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

long parse_long(const std::string& text, const std::string& context) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw ParseError(context + ": \"" + text + "\" is not an integer");
  return v;
}

bool group_matches(const DiscriminantData& disc, const std::string& published) {
  return disc.elementary_divisors == parse_group_descriptor(published);
}

Json preset_json(const DeformationPreset& p) {
  const DiscriminantData disc = discriminant_group(p.lattice);
  Json out;
  out["type"] = to_string(p.type);
  out["n"] = p.n ? Json(*p.n) : Json(nullptr);
  out["label"] = p.label();
  out["half_dimension"] = p.half_dimension;
  out["b2"] = p.b2;
  out["h11"] = p.h11;
  out["published_A"] = p.published_A;
  out["published_d"] = p.published_d;
  out["published_max_negative_square"] = p.published_max_negative_square;
  out["group_matches_published"] = group_matches(disc, p.published_A);
  out["order_matches_published"] = disc.exponent == p.published_d;
  return out;
}

struct TableRow {
  DeformationPreset preset;
  DiscriminantData disc;
  bool group_ok;
  bool order_ok;
  std::string square_rule;  // which recomputed bound is compared with the table
  std::optional<bool> square_ok;
};

TableRow make_row(DeformationPreset p) {
  DiscriminantData disc = discriminant_group(p.lattice);
  TableRow row{std::move(p), disc, false, false, "stored", std::nullopt};
  row.group_ok = group_matches(row.disc, row.preset.published_A);
  row.order_ok = row.disc.exponent == row.preset.published_d;
  switch (row.preset.type) {
    case DeformationType::K3n:
    case DeformationType::KummerN:
      row.square_rule = "4*Card";
      row.square_ok = 4 * row.disc.cardinality == row.preset.published_max_negative_square;
      break;
    case DeformationType::OG6:
      row.square_rule = "4*exponent";
      row.square_ok = 4 * row.disc.exponent == row.preset.published_max_negative_square;
      break;
    case DeformationType::OG10:
      break;
  }
  return row;
}

}  // namespace

namespace {

int run_problem(const std::string& problem_json, const DecomposeOptions& options, std::ostream& out,
                std::ostream& err) {
  Problem problem = parse_problem(problem_json);
  if (options.verify_oracle) problem.verify_oracle = *options.verify_oracle;
  if (options.oracle_limit) problem.oracle_limit = *options.oracle_limit;
  const IntersectionForm& form = problem.form;

  if (const auto bad = validate_intersection_product(form); !bad.empty()) {
    err << "error: not an intersection product; negative pairings of distinct primes:\n";
    for (const auto& v : bad)
      err << "  (" << form.labels()[v.i] << "," << form.labels()[v.j] << ") = " << to_string(v.value) << '\n';
    return kAxiomViolation;
  }

  Decomposition dec;
  try {
    dec = zariski_decompose(form, problem.divisor);
  } catch (const InconsistencyError& e) {
    err << "error: inconsistent input at " << form.labels()[e.index()] << ": " << e.what() << '\n';
    return kCheckFailed;
  }
  ResultFile result = make_result(form, dec, check_decomposition(form, problem.divisor, dec));

  if (problem.verify_oracle && form.size() <= problem.oracle_limit) {
    try {
      result.oracle = decompose_oracle(form, problem.divisor, problem.oracle_limit) == dec ? "agree" : "disagree";
    } catch (const OracleInconsistencyError& e) {
      err << "error: " << e.what() << '\n';
      result.oracle = "disagree";
    }
  }
  emit(out, to_json(result));
  if (result.oracle == "disagree") {
    err << "error: decomposition and brute-force oracle disagree\n";
    return kOracleMismatch;
  }
  return result.ok() ? kOk : kCheckFailed;
}

int guarded_run(const std::string& source, const std::function<std::string()>& read, const DecomposeOptions& options,
                std::ostream& out, std::ostream& err) {
  try {
    return run_problem(read(), options, out, err);
  } catch (const ParseError& e) {
    err << "error: " << source << ": " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

int decompose_text(const std::string& problem_json, const DecomposeOptions& options, std::ostream& out,
                   std::ostream& err) {
  return guarded_run("input", [&] { return problem_json; }, options, out, err);
}

int cmd_decompose(const std::string& path, const DecomposeOptions& options, std::ostream& out, std::ostream& err) {
  return guarded_run(path, [&] { return read_input(path); }, options, out, err);
}

LatticeExpression parse_lattice_expression(const std::string& expression, bool allow_odd) {
  std::vector<std::string> terms;
  std::string current;
  for (char c : expression) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '+') {
      terms.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  terms.push_back(current);

  std::vector<IntegralLattice> parts;
  std::optional<DeformationPreset> single;
  for (const auto& term : terms) {
    if (term.empty()) throw ParseError("lattice expression \"" + expression + "\": empty term");
    const auto colon = term.find(':');
    const std::string name = term.substr(0, colon);
    std::optional<long> param;
    if (colon != std::string::npos) param = parse_long(term.substr(colon + 1), "lattice expression");

    if (const auto type = parse_deformation_type(name)) {
      try {
        single = preset(*type, param);
      } catch (const DomainError& e) {
        throw ParseError("lattice expression \"" + expression + "\": " + e.what());
      }
      parts.push_back(single->lattice);
      continue;
    }
    try {
      const Block block = parse_block(name);
      if (block != Block::Rank1 && param) throw ParseError("block " + name + " takes no parameter");
      parts.push_back(catalog_block(block, param, allow_odd));
    } catch (const DomainError& e) {
      throw ParseError("lattice expression \"" + expression + "\": " + e.what());
    }
  }
  if (terms.size() == 1 && single) return LatticeExpression{single->lattice, single};
  return LatticeExpression{parts.size() == 1 ? parts.front() : direct_sum(parts), std::nullopt};
}

namespace {

Json lattice_report(const IntegralLattice& lattice) {
  const DiscriminantData disc = discriminant_group(lattice);
  Json out;
  out["lattice"] = to_json(lattice);
  out["even"] = lattice.is_even();
  out["determinant"] = to_string(lattice.determinant());
  out["signature"] = to_json(signature(lattice.gram()));
  out["discriminant"] = to_json(disc);
  out["bn_bound_general"] = to_string(Integer(4 * disc.cardinality));
  out["bn_bound_refined"] = to_string(Integer(4 * disc.exponent));
  return out;
}

}  // namespace

int cmd_lattice(const std::string& expression, bool allow_odd, std::ostream& out, std::ostream& err) {
  try {
    const LatticeExpression parsed = parse_lattice_expression(expression, allow_odd);
    Json doc;
    doc["expression"] = expression;
    const Json report = lattice_report(parsed.lattice);
    for (const auto& item : report.items()) doc[item.key()] = item.value();
    if (parsed.preset) doc["preset"] = preset_json(*parsed.preset);
    emit(out, doc);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int cmd_lattice_file(const std::string& path, std::ostream& out, std::ostream& err) {
  try {
    const IntegralLattice lattice = parse_lattice(read_input(path));
    Json doc;
    doc["expression"] = nullptr;
    const Json report = lattice_report(lattice);
    for (const auto& item : report.items()) doc[item.key()] = item.value();
    emit(out, doc);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return kUsage;
  }
}

int cmd_table(long n, bool json, std::ostream& out, std::ostream& err) {
  if (n < 2) {
    err << "error: --n must be >= 2\n";
    return kUsage;
  }
  std::vector<TableRow> rows;
  rows.push_back(make_row(preset(DeformationType::K3n, n)));
  rows.push_back(make_row(preset(DeformationType::KummerN, n)));
  rows.push_back(make_row(preset(DeformationType::OG6)));
  rows.push_back(make_row(preset(DeformationType::OG10)));

  bool all_ok = true;
  for (const auto& r : rows) all_ok = all_ok && r.group_ok && r.order_ok && r.square_ok.value_or(true);

  if (json) {
    Json doc;
    doc["n"] = n;
    Json list = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["type"] = to_string(r.preset.type);
      row["label"] = r.preset.label();
      row["recomputed_A"] = r.disc.describe();
      row["elementary_divisors"] = to_json(r.disc)["elementary_divisors"];
      row["card"] = to_string(r.disc.cardinality);
      row["exponent"] = to_string(r.disc.exponent);
      row["published_A"] = r.preset.published_A;
      row["published_d"] = r.preset.published_d;
      row["published_max_negative_square"] = r.preset.published_max_negative_square;
      row["four_card"] = to_string(Integer(4 * r.disc.cardinality));
      row["four_exponent"] = to_string(Integer(4 * r.disc.exponent));
      row["group_matches"] = r.group_ok;
      row["order_matches"] = r.order_ok;
      row["square_rule"] = r.square_rule;
      row["square_matches"] = r.square_ok ? Json(*r.square_ok) : Json(nullptr);
      list.push_back(std::move(row));
    }
    doc["rows"] = std::move(list);
    doc["all_checks_pass"] = all_ok;
    emit(out, doc);
  } else {
    const std::vector<std::string> header = {"Deformation type", "A_X (computed)", "A_X (published)", "d",
                                             "4*Card", "4*exp", "published |q(E)|", "check"};
    std::vector<std::vector<std::string>> cells;
    for (const auto& r : rows) {
      std::string check = r.group_ok && r.order_ok ? "group ok" : "GROUP MISMATCH";
      if (r.square_ok) check += *r.square_ok ? ", " + r.square_rule + " = table" : ", " + r.square_rule + " != table";
      else check += ", table value stored";
      cells.push_back({r.preset.label(), r.disc.describe(), r.preset.published_A, to_string(r.disc.exponent),
                       to_string(Integer(4 * r.disc.cardinality)), to_string(Integer(4 * r.disc.exponent)),
                       std::to_string(r.preset.published_max_negative_square), check});
    }
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) {
      width[c] = header[c].size();
      for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
    }
    auto print_row = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c == 0 ? "" : " | ");
        if (c + 1 == row.size()) out << row[c];
        else out << std::left << std::setw(static_cast<int>(width[c])) << row[c];
      }
      out << '\n';
    };
    print_row(header);
    std::size_t total = 3 * (header.size() - 1);
    for (auto w : width) total += w;
    out << std::string(total, '-') << '\n';
    for (const auto& row : cells) print_row(row);
  }
  if (!all_ok) err << "error: recomputed discriminant data disagrees with the published table\n";
  return all_ok ? kOk : kCheckFailed;
}

int cmd_bounds(const std::string& preset_expression, unsigned long rho, const std::string& volume,
               unsigned long guard, std::ostream& out, std::ostream& err) {
  try {
    const LatticeExpression parsed = parse_lattice_expression(preset_expression);
    if (!parsed.preset) throw ParseError("bounds needs a preset (K3n:n, Kummer:n, OG6, OG10), got \"" +
                                         preset_expression + "\"");
    const Rational c = parse_rational(volume);
    const FullReport report = full_report(*parsed.preset, rho, c, guard);
    emit(out, to_json(report));
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

FuzzSummary run_fuzz(const FuzzOptions& options, const Decomposer& decompose) {
  FuzzSummary summary;
  PropertyOptions props;
  props.oracle_limit = options.oracle_limit;
  for (std::size_t i = 0; i < options.count; ++i) {
    const std::uint64_t seed = options.seed + i;
    InstanceSpec spec;
    spec.seed = seed;
    spec.m = options.m;
    spec.max_denominator = options.max_denominator;
    const Instance instance = generate_instance(spec);
    Rng sampler(seed ^ 0x9e3779b97f4a7c15ULL);
    const auto failures = verify_instance(instance, props, decompose, sampler);
    if (failures.empty()) {
      ++summary.passed;
      continue;
    }
    ++summary.failed;
    if (!summary.first_failing_seed) {
      summary.first_failing_seed = seed;
      summary.first_failure = failures.front();
    }
  }
  return summary;
}

int cmd_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err, const Decomposer& decompose) {
  if (options.m == 0) {
    err << "error: --m must be >= 1\n";
    return kUsage;
  }
  const FuzzSummary s = run_fuzz(options, decompose);
  out << "fuzz: seed=" << options.seed << " count=" << options.count << " m=" << options.m << ": " << s.passed
      << " passed, " << s.failed << " failed\n";
  if (s.failed == 0) return kOk;
  out << "first failing seed: " << *s.first_failing_seed << " (" << s.first_failure << ")\n";
  out << "reproduce: zardec fuzz --seed " << *s.first_failing_seed << " --count 1 --m " << options.m << '\n';
  return kFuzzFailure;
}

}  // namespace zardec::cli
