#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "adasat/cnf.hpp"
#include "adasat/oracle.hpp"
#include "adasat/search.hpp"

namespace adasat {

struct BenchRecord {
  std::string instance;
  Strategy strategy = Strategy::Cbt;
  SolveResult result = SolveResult::Timeout;
  int64_t steps = 0;  // unlabel calls
  int64_t label_calls = 0;
  int64_t value_attempts = 0;
  int64_t deleted_assignments = 0;
  double millis = 0.0;
  bool verified = false;
};

// Encode, solve with a per-run wall clock budget, and verify the answer
// against independent evidence: a satisfying assignment is checked clause by
// clause, an unsat verdict against the reference decider.
BenchRecord run_instance(const std::string& name, const CnfInstance& cnf,
                         Strategy strategy,
                         std::optional<double> timeout_secs = {});

// All (instance, strategy) cells in order, instances sorted by name.
std::vector<BenchRecord> run_bench_dir(const std::string& dir,
                                       const std::vector<Strategy>& strategies,
                                       std::optional<double> timeout_secs,
                                       int jobs, std::ostream* progress);

// CSV with one row per record plus, per strategy, total rows over the
// completed satisfiable and unsatisfiable instances.
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

// Deterministic random 3-CNF; clause count scales with the variable count.
CnfInstance random_3cnf(uint64_t seed, int n_vars);

struct VerifyReport {
  int trials = 0;
  int failures = 0;
  std::vector<std::string> messages;  // one per failure, capped
};

// Cross-checks the four strategies and both reference deciders on seeded
// random instances; models are clause-checked.
VerifyReport run_verify(int trials, int n_vars, uint64_t seed);

}  // namespace adasat
