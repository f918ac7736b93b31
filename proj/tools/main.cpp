#include <iostream>

#include "CLI11.hpp"
#include "zardec/bounds.hpp"
#include "zardec/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace zardec::cli;

  CLI::App app{"zardec: exact Zariski decompositions and lattice bounds"};
  app.require_subcommand(1);

  std::string problem_path;
  bool verify_oracle = false;
  bool no_oracle = false;
  std::size_t oracle_limit = 0;
  auto* decompose = app.add_subcommand("decompose", "Decompose the divisor of a JSON problem file");
  decompose->add_option("problem", problem_path, "Problem file ('-' for stdin)")->required();
  decompose->add_flag("--verify-oracle", verify_oracle, "Cross-check with the brute-force oracle");
  decompose->add_flag("--no-oracle", no_oracle, "Skip the oracle even if the problem requests it");
  auto* limit_opt = decompose->add_option("--oracle-limit", oracle_limit, "Largest size handed to the oracle");

  std::string expression;
  std::string lattice_file;
  bool allow_odd = false;
  auto* lattice = app.add_subcommand("lattice", "Report on a preset or a block sum, e.g. K3n:3, OG10, U+U+rank1:-6");
  auto* expr_opt = lattice->add_option("expression", expression, "Preset or block expression");
  auto* file_opt = lattice->add_option("--from-json", lattice_file, "Read a lattice JSON document instead");
  expr_opt->excludes(file_opt);
  lattice->add_flag("--allow-odd", allow_odd, "Accept odd rank-1 blocks");

  long table_n = 2;
  bool table_json = false;
  auto* table = app.add_subcommand("table", "Recompute the deformation-type table");
  table->add_option("--n", table_n, "Parameter n of the K3^[n] and Kummer rows")->capture_default_str();
  table->add_flag("--json", table_json, "Machine-readable output");

  std::string bounds_preset;
  unsigned long rho = 1;
  std::string volume = "1";
  auto* bounds = app.add_subcommand("bounds", "Denominator and birationality bounds for a preset");
  bounds->add_option("preset", bounds_preset, "K3n:n, Kummer:n, OG6 or OG10")->required();
  bounds->add_option("--rho", rho, "Picard number, 1 <= rho <= h11")->required();
  bounds->add_option("--volume", volume, "Volume bound C (integer or p/q)")->capture_default_str();

  FuzzOptions fuzz_options;
  auto* fuzz = app.add_subcommand("fuzz", "Check decomposition invariants on seeded random instances");
  fuzz->add_option("--seed", fuzz_options.seed)->capture_default_str();
  fuzz->add_option("--count", fuzz_options.count)->capture_default_str();
  fuzz->add_option("--m", fuzz_options.m, "Number of prime components")->capture_default_str();
  fuzz->add_option("--oracle-limit", fuzz_options.oracle_limit)->capture_default_str();
  fuzz->add_option("--max-denominator", fuzz_options.max_denominator)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (decompose->parsed()) {
    DecomposeOptions options;
    if (verify_oracle) options.verify_oracle = true;
    if (no_oracle) options.verify_oracle = false;
    if (limit_opt->count() > 0) options.oracle_limit = oracle_limit;
    return cmd_decompose(problem_path, options, std::cout, std::cerr);
  }
  if (lattice->parsed()) {
    if (file_opt->count() > 0) return cmd_lattice_file(lattice_file, std::cout, std::cerr);
    if (expr_opt->count() == 0) {
      std::cerr << "error: lattice needs an expression or --from-json\n";
      return kUsage;
    }
    return cmd_lattice(expression, allow_odd, std::cout, std::cerr);
  }
  if (table->parsed()) return cmd_table(table_n, table_json, std::cout, std::cerr);
  if (bounds->parsed()) {
    return cmd_bounds(bounds_preset, rho, volume, zardec::factorial_guard_from_env(), std::cout, std::cerr);
  }
  if (fuzz->parsed()) return cmd_fuzz(fuzz_options, std::cout, std::cerr);
  return kUsage;
}
