#include <iostream>

#include "CLI11.hpp"

#include "forge/error.hpp"
#include "forge/job.hpp"

using namespace forge;

namespace {

int parse_failure(const ParseError& e, const std::string& where) {
  std::cerr << where;
  if (e.line()) std::cerr << ":" << e.line() << ":" << e.column();
  std::cerr << ": parse error: " << e.what() << "\n";
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"forge: explicit suspension models and their checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string job_path;
  std::string primes_text;
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = kDefaultSeed;
  std::string format_name = "text";

  auto* run = app.add_subcommand("run", "run a job file and print its report");
  run->add_option("job", job_path, "job file")->required();
  run->add_option("--primes", primes_text, "comma separated primes (default 2,3,5)");
  run->add_option("--budget", budget, "maximum points enumerated per count");
  run->add_option("--format", format_name, "text or json")->check(CLI::IsMember({"text", "json"}));
  run->add_option("--seed", seed, "seed recorded in the report");

  auto* seeds = app.add_subcommand("seeds", "print the built-in seed presentations");
  seeds->add_option("--format", format_name, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string ref;
  unsigned times = 1;
  auto* suspend = app.add_subcommand("suspend", "iterate the suspension model on a seed or job scheme");
  suspend->add_option("ref", ref, "seed name or file.job:scheme")->required();
  suspend->add_option("--times", times, "number of suspension steps");
  suspend->add_option("--format", format_name, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  const Format format = parse_format(format_name);

  try {
    if (*run) {
      Job job;
      try {
        job = load_job(job_path);
      } catch (const ParseError& e) {
        return parse_failure(e, job_path);
      }
      RunOptions opts;
      if (!primes_text.empty()) {
        try {
          opts.primes = parse_prime_list(primes_text);
        } catch (const DomainError& e) {
          std::cerr << "--primes: " << e.what() << "\n";
          return 2;
        }
      }
      opts.budget = budget;
      opts.seed = seed;
      auto result = run_job(job, opts);
      std::cout << render_report(result.document, format);
      return result.exit_code;
    }
    if (*seeds) {
      Json out = Json::object();
      std::string text;
      for (const auto& [name, x] : builtin_seeds()) {
        out[name] = to_json(x);
        text += name + ": " + to_text(x) + "\n";
      }
      std::cout << (format == Format::Json ? out.dump(2) + "\n" : text);
      return 0;
    }
    if (*suspend) {
      AffinePresentation x = [&] {
        try {
          return resolve_reference(ref);
        } catch (const ParseError& e) {
          std::exit(parse_failure(e, ref));
        }
      }();
      auto d = iterated_suspension(x, times);
      std::cout << print_presentation(d.space, format) << "\n";
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
