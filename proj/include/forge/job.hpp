#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "forge/report.hpp"

namespace forge {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr std::uint64_t kDefaultSeed = 20240611;

// Job file, one directive per line, '#' starts a comment:
//   ring Z[x,y,z]                       (may be redeclared; later lines use it)
//   let f = x*y - z                     (polynomial)
//   let I = ideal(x, y^2)               (ideal)
//   let X = scheme(f) point (0,0,0)     (pointed or plain affine scheme)
//   task <name> <op> [args]
// Ops and arguments:
//   seeds
//   suspend <seed|scheme> [times=n]
//   verify <seed|scheme> [times=n] [primes=2,3]
//   family I=(..)|I=<ideal> roots=(..) [verify] [primes=..] [z=..] [prefix=..]
//   quasi-affine <family args> j=<index> [primes=..]
//   count <seed|scheme|(gens)> p=<prime> | primes=..
struct Task {
  std::string name;
  std::string op;
  std::size_t line = 0;
  std::string source_label;
  std::optional<AffinePresentation> source;
  std::optional<FamilySpec> family;
  unsigned times = 1;
  std::size_t j = 0;
  bool verify = false;
  std::optional<std::vector<std::uint64_t>> primes;
};

struct Job {
  std::string source_name;
  std::vector<std::string> echo;  // directive lines, comments and blanks dropped
  std::vector<Task> tasks;
  std::map<std::string, AffinePresentation> schemes;
};

// Throws ParseError with the 1-based line and column of the offending text.
Job parse_job(const std::string& text, const std::string& source_name = "job");
// Reads the file; the report only records its base name.
Job load_job(const std::string& path);

// "S0" style seed names, or "file.job:X" for a scheme defined in a job file.
AffinePresentation resolve_reference(const std::string& ref);

struct RunOptions {
  std::optional<std::vector<std::uint64_t>> primes;  // default 2,3,5
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = kDefaultSeed;
};

struct RunResult {
  Json document;
  bool passed = true;
  bool budget_exceeded = false;
  // 0 pass, 1 some task failed, 3 budget exceeded (2 is reserved for parse errors)
  int exit_code = 0;
};

RunResult run_job(const Job& job, const RunOptions& options = {});
std::string render_report(const Json& document, Format format);

std::vector<std::uint64_t> parse_prime_list(const std::string& text);

}  // namespace forge
