#include "adasat/oracle.hpp"

#include <stdexcept>

namespace adasat {

namespace {

bool clause_true(const std::vector<int>& clause, const std::vector<int>& m) {
  for (int lit : clause) {
    int v = lit < 0 ? -lit : lit;
    int want = lit < 0 ? 0 : 1;
    if (m[static_cast<std::size_t>(v - 1)] == want) return true;
  }
  return false;
}

// -1 = unassigned. Returns false on conflict; true with units applied.
bool propagate_units(const CnfInstance& cnf, std::vector<int>& a) {
  bool again = true;
  while (again) {
    again = false;
    for (const auto& clause : cnf.clauses) {
      int unassigned = 0;
      int unit_lit = 0;
      bool satisfied = false;
      for (int lit : clause) {
        int v = lit < 0 ? -lit : lit;
        int val = a[static_cast<std::size_t>(v - 1)];
        if (val < 0) {
          ++unassigned;
          unit_lit = lit;
        } else if (val == (lit < 0 ? 0 : 1)) {
          satisfied = true;
          break;
        }
      }
      if (satisfied) continue;
      if (unassigned == 0) return false;  // all literals false
      if (unassigned == 1) {
        int v = unit_lit < 0 ? -unit_lit : unit_lit;
        a[static_cast<std::size_t>(v - 1)] = unit_lit < 0 ? 0 : 1;
        again = true;
      }
    }
  }
  return true;
}

bool dpll_rec(const CnfInstance& cnf, std::vector<int>& a) {
  std::vector<int> saved = a;
  if (!propagate_units(cnf, a)) {
    a = saved;
    return false;
  }
  int pick = -1;
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (a[v] < 0) {
      pick = static_cast<int>(v);
      break;
    }
  }
  if (pick < 0) return true;  // no conflict, everything assigned
  for (int val = 0; val <= 1; ++val) {
    a[static_cast<std::size_t>(pick)] = val;
    if (dpll_rec(cnf, a)) return true;
  }
  a = saved;
  return false;
}

}  // namespace

OracleResult brute_force(const CnfInstance& cnf) {
  if (cnf.n_vars > 20)
    throw std::invalid_argument("brute_force limited to 20 variables");
  OracleResult out;
  std::vector<int> m(static_cast<std::size_t>(cnf.n_vars), 0);
  for (uint64_t bits = 0; bits < (uint64_t{1} << cnf.n_vars); ++bits) {
    for (int v = 0; v < cnf.n_vars; ++v)
      m[static_cast<std::size_t>(v)] = static_cast<int>((bits >> v) & 1);
    bool ok = true;
    for (const auto& clause : cnf.clauses) {
      if (!clause_true(clause, m)) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.verdict = Verdict::Sat;
      out.model = m;
      return out;
    }
  }
  out.verdict = Verdict::Unsat;
  return out;
}

OracleResult dpll(const CnfInstance& cnf) {
  OracleResult out;
  for (const auto& clause : cnf.clauses) {
    if (clause.empty()) {
      out.verdict = Verdict::Unsat;
      return out;
    }
  }
  std::vector<int> a(static_cast<std::size_t>(cnf.n_vars), -1);
  if (dpll_rec(cnf, a)) {
    out.verdict = Verdict::Sat;
    for (int& v : a)
      if (v < 0) v = 0;  // don't-care variables
    out.model = std::move(a);
  } else {
    out.verdict = Verdict::Unsat;
  }
  return out;
}

bool check_model(const CnfInstance& cnf, const std::vector<int>& model) {
  if (model.size() != static_cast<std::size_t>(cnf.n_vars)) return false;
  for (int v : model)
    if (v != 0 && v != 1) return false;
  for (const auto& clause : cnf.clauses)
    if (!clause_true(clause, model)) return false;
  return true;
}

}  // namespace adasat
