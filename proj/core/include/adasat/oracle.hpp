#pragma once

#include <vector>

#include "adasat/cnf.hpp"

namespace adasat {

// Reference deciders, deliberately sharing nothing with the constraint
// engine beyond the parsed clause representation.

enum class Verdict { Sat, Unsat };

struct OracleResult {
  Verdict verdict = Verdict::Unsat;
  std::vector<int> model;  // one 0/1 per variable, meaningful when Sat
};

// Exhaustive enumeration; throws std::invalid_argument above 20 variables.
OracleResult brute_force(const CnfInstance& cnf);

// Unit-propagating depth-first decider, value 0 tried first.
OracleResult dpll(const CnfInstance& cnf);

// True iff model has one 0/1 entry per variable and satisfies every clause.
bool check_model(const CnfInstance& cnf, const std::vector<int>& model);

}  // namespace adasat
