// adasat command line driver.
//
// Subcommands:
//   solve   -- classify a single DIMACS CNF file; exit 10 = SAT, 20 = UNSAT,
//              1 = error (parse failure, timeout, bad arguments).
//   bench   -- run a directory of .cnf instances under one or more search
//              strategies and emit a CSV table on stdout.
//   verify  -- cross-check the four search strategies against two reference
//              solvers on seeded random 3-CNF formulas.

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "adasat/bench.hpp"
#include "adasat/cnf.hpp"
#include "adasat/oracle.hpp"
#include "adasat/search.hpp"
#include "adasat/store.hpp"

namespace {

int run_solve(const std::string& path, const std::string& strategy_name,
              double timeout_secs, bool quiet) {
  adasat::CnfInstance cnf;
  try {
    cnf = adasat::parse_dimacs_file(path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  for (const auto& w : cnf.warnings) {
    std::cerr << "warning: " << w << "\n";
  }

  std::optional<adasat::Strategy> strategy =
      adasat::strategy_from_name(strategy_name);
  if (!strategy) {
    std::cerr << "error: unknown strategy '" << strategy_name << "'\n";
    return 1;
  }

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (timeout_secs > 0)
    deadline = std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(timeout_secs));

  adasat::ConstraintStore cs;
  adasat::Encoding enc = adasat::encode_cnf(cnf, cs);
  adasat::SolveOutcome out =
      adasat::solve(cs, enc.problem_vars, *strategy, deadline);

  if (out.result == adasat::SolveResult::Timeout) {
    std::cerr << "error: timed out after " << timeout_secs << "s\n";
    return 1;
  }
  const bool sat = out.result == adasat::SolveResult::Sat;
  bool verified;
  if (sat) {
    verified = adasat::check_model(cnf, out.model);
  } else {
    verified = adasat::dpll(cnf).verdict == adasat::Verdict::Unsat;
  }
  if (!quiet) {
    std::cout << (sat ? "s SATISFIABLE" : "s UNSATISFIABLE") << "\n";
    if (sat) {
      std::cout << "v";
      for (std::size_t i = 0; i < out.model.size(); ++i) {
        std::cout << " " << (out.model[i] == 1 ? 1 : -1) * (int)(i + 1);
      }
      std::cout << " 0\n";
    }
    std::cout << "c steps=" << out.counters.unlabel_calls
              << " label_calls=" << out.counters.label_calls
              << " value_attempts=" << out.counters.value_attempts
              << " deleted_assignments=" << out.counters.deleted_assignments
              << " millis=" << out.millis
              << " verified=" << (verified ? "yes" : "no") << "\n";
  }
  return sat ? 10 : 20;
}

int run_bench(const std::string& dir, const std::string& strategies_csv,
              double timeout_secs, int jobs, const std::string& out_path) {
  std::vector<adasat::Strategy> strategies;
  std::stringstream ss(strategies_csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::optional<adasat::Strategy> s = adasat::strategy_from_name(tok);
    if (!s) {
      std::cerr << "error: unknown strategy '" << tok << "'\n";
      return 1;
    }
    strategies.push_back(*s);
  }
  if (strategies.empty()) {
    std::cerr << "error: no strategies selected\n";
    return 1;
  }
  if (!std::filesystem::is_directory(dir)) {
    std::cerr << "error: not a directory: " << dir << "\n";
    return 1;
  }

  std::optional<double> timeout;
  if (timeout_secs > 0) timeout = timeout_secs;
  std::vector<adasat::BenchRecord> records;
  try {
    records = adasat::run_bench_dir(dir, strategies, timeout, jobs, &std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (out_path.empty()) {
    adasat::write_csv(std::cout, records);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return 1;
    }
    adasat::write_csv(out, records);
  }
  return 0;
}

int run_verify(int trials, int n_vars, unsigned long long seed) {
  adasat::VerifyReport report = adasat::run_verify(trials, n_vars, seed);
  for (const auto& msg : report.messages) {
    std::cerr << "mismatch: " << msg << "\n";
  }
  std::cout << "verify: " << report.trials << " trials, " << report.failures
            << " failures\n";
  return report.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"adasat -- justification-based boolean constraint solver"};
  app.require_subcommand(1);

  // solve
  std::string solve_path;
  std::string solve_strategy = "cbj";
  double solve_timeout = 0;
  bool solve_quiet = false;
  CLI::App* solve = app.add_subcommand("solve", "classify one DIMACS CNF file");
  solve->add_option("file", solve_path, "path to a DIMACS .cnf file")
      ->required();
  solve->add_option("--strategy", solve_strategy,
                    "search strategy: cbt, cbj, dbt or fbt");
  solve->add_option("--timeout", solve_timeout,
                    "wall-clock limit in seconds (0 = none)");
  solve->add_flag("--quiet", solve_quiet, "suppress the result banner");

  // bench
  std::string bench_dir;
  std::string bench_strategies = "cbt,cbj,dbt,fbt";
  double bench_timeout = 600;
  int bench_jobs = 1;
  std::string bench_out;
  CLI::App* bench =
      app.add_subcommand("bench", "run every .cnf file in a directory");
  bench->add_option("dir", bench_dir, "directory containing .cnf files")
      ->required();
  bench->add_option("--strategies", bench_strategies,
                    "comma separated strategy list");
  bench->add_option("--timeout", bench_timeout,
                    "per-run wall-clock limit in seconds (0 = none)");
  bench->add_option("--jobs", bench_jobs, "number of parallel workers");
  bench->add_option("--out", bench_out, "write the CSV here instead of stdout");

  // verify
  int verify_trials = 500;
  int verify_vars = 10;
  unsigned long long verify_seed = 1;
  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check strategies against reference solvers");
  verify->add_option("--trials", verify_trials, "number of random formulas");
  verify->add_option("--vars", verify_vars, "variables per formula");
  verify->add_option("--seed", verify_seed, "base RNG seed");

  CLI11_PARSE(app, argc, argv);

  if (solve->parsed()) {
    return run_solve(solve_path, solve_strategy, solve_timeout, solve_quiet);
  }
  if (bench->parsed()) {
    return run_bench(bench_dir, bench_strategies, bench_timeout, bench_jobs,
                     bench_out);
  }
  if (verify->parsed()) {
    return run_verify(verify_trials, verify_vars, verify_seed);
  }
  return 1;
}
