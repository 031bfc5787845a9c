#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "adasat/store.hpp"

namespace adasat {

struct CnfParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CnfInstance {
  int n_vars = 0;
  std::vector<std::vector<int>> clauses;  // DIMACS literals, no zeros
  std::vector<std::string> warnings;      // tolerated irregularities
};

// Parse DIMACS CNF. Tolerates comment lines, blank lines, clauses spanning
// lines, and a '%' trailer (rest of the file ignored). A clause-count
// mismatch against the header is a warning; a missing/duplicate header,
// unreadable token or out-of-range literal is a CnfParseError naming the
// line.
CnfInstance parse_dimacs(std::istream& in);
CnfInstance parse_dimacs_file(const std::string& path);

// How one CNF formula lives inside a store. Positive literals map to the
// problem variable itself, negative ones to a shared companion linked by a
// neg constraint; clauses wider than two become or-chains over fresh
// auxiliary variables. Every constraint is added with an empty label so the
// encoding survives any search-layer deletion.
struct Encoding {
  std::vector<int32_t> problem_vars;    // index v-1 holds DIMACS variable v
  std::vector<int32_t> companion_vars;  // parallel; -1 when never negated
  std::vector<int32_t> chain_vars;      // all auxiliaries, in creation order
};

Encoding encode_cnf(const CnfInstance& cnf, ConstraintStore& cs);

// Read the problem variables back out of the store. Throws std::logic_error
// if any is not bound to a constant.
std::vector<int> decode_model(const ConstraintStore& cs, const Encoding& enc);

}  // namespace adasat
