#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "zardec/lattice.hpp"
#include "zardec/properties.hpp"

namespace zardec::cli {

/// Process exit codes of the `zardec` tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,           // bad arguments, parse or grammar errors
  kAxiomViolation = 2,  // the form is not an intersection product
  kOracleMismatch = 3,  // engine and brute-force oracle disagree
  kFuzzFailure = 4,     // a property failed during `fuzz`
  kCheckFailed = 5,     // an invariant or table check failed
};

struct DecomposeOptions {
  std::optional<bool> verify_oracle;       // overrides the problem's options
  std::optional<std::size_t> oracle_limit;
};

/// `path` may be "-" for stdin.
int cmd_decompose(const std::string& path, const DecomposeOptions& options, std::ostream& out, std::ostream& err);
int decompose_text(const std::string& problem_json, const DecomposeOptions& options, std::ostream& out,
                   std::ostream& err);

/// A preset "Name" / "Name:n" (K3n, Kummer, OG6, OG10) or a "+"-separated sum
/// of blocks U, E8_minus, A2_minus, rank1:k and presets.
struct LatticeExpression {
  IntegralLattice lattice;
  std::optional<DeformationPreset> preset;  // set when the expression is a single preset
};
LatticeExpression parse_lattice_expression(const std::string& expression, bool allow_odd = false);

int cmd_lattice(const std::string& expression, bool allow_odd, std::ostream& out, std::ostream& err);
int cmd_lattice_file(const std::string& path, std::ostream& out, std::ostream& err);

int cmd_table(long n, bool json, std::ostream& out, std::ostream& err);

int cmd_bounds(const std::string& preset_expression, unsigned long rho, const std::string& volume,
               unsigned long guard, std::ostream& out, std::ostream& err);

struct FuzzOptions {
  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t m = 4;
  std::size_t oracle_limit = kDefaultOracleLimit;
  std::int64_t max_denominator = 4;
};

struct FuzzSummary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<std::uint64_t> first_failing_seed;
  std::string first_failure;
};

/// Instance i uses seed + i. Each instance also seeds its own sampler, so a
/// failing seed reproduces with `--seed <s> --count 1`.
FuzzSummary run_fuzz(const FuzzOptions& options, const Decomposer& decompose = zariski_decompose);
int cmd_fuzz(const FuzzOptions& options, std::ostream& out, std::ostream& err,
             const Decomposer& decompose = zariski_decompose);

}  // namespace zardec::cli
