#include "adasat/cnf.hpp"

#include <fstream>
#include <sstream>

namespace adasat {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw CnfParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace

CnfInstance parse_dimacs(std::istream& in) {
  CnfInstance cnf;
  bool have_header = false;
  long declared_clauses = 0;
  std::vector<int> clause;
  bool done = false;
  std::string line;
  int line_no = 0;
  while (!done && std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      if (tok[0] == 'c') {
        break;  // comment: skip the rest of the line
      }
      if (tok[0] == '%') {
        done = true;  // SATLIB trailer: ignore the rest of the file
        break;
      }
      if (tok == "p") {
        if (have_header) parse_fail(line_no, "duplicate header");
        std::string fmt;
        long nv = -1, nc = -1;
        if (!(ls >> fmt >> nv >> nc) || fmt != "cnf" || nv < 0 || nc < 0)
          parse_fail(line_no, "malformed header");
        cnf.n_vars = static_cast<int>(nv);
        declared_clauses = nc;
        have_header = true;
        break;
      }
      int lit = 0;
      std::size_t used = 0;
      try {
        lit = std::stoi(tok, &used);
      } catch (const std::exception&) {
        parse_fail(line_no, "unreadable token '" + tok + "'");
      }
      if (used != tok.size()) parse_fail(line_no, "unreadable token '" + tok + "'");
      if (!have_header) parse_fail(line_no, "literal before header");
      if (lit == 0) {
        cnf.clauses.push_back(clause);
        clause.clear();
        continue;
      }
      int v = lit < 0 ? -lit : lit;
      if (v > cnf.n_vars)
        parse_fail(line_no, "literal out of range: " + tok);
      clause.push_back(lit);
    }
  }
  if (!have_header) throw CnfParseError("missing 'p cnf' header");
  if (!clause.empty()) {
    cnf.warnings.push_back("unterminated final clause kept");
    cnf.clauses.push_back(clause);
  }
  if (static_cast<long>(cnf.clauses.size()) != declared_clauses) {
    cnf.warnings.push_back("header declares " +
                           std::to_string(declared_clauses) + " clauses, found " +
                           std::to_string(cnf.clauses.size()));
  }
  return cnf;
}

CnfInstance parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CnfParseError("cannot open " + path);
  return parse_dimacs(in);
}

Encoding encode_cnf(const CnfInstance& cnf, ConstraintStore& cs) {
  Encoding enc;
  enc.problem_vars.reserve(static_cast<std::size_t>(cnf.n_vars));
  for (int v = 0; v < cnf.n_vars; ++v) enc.problem_vars.push_back(cs.new_var());
  enc.companion_vars.assign(static_cast<std::size_t>(cnf.n_vars), -1);
  const LabelSet none;
  auto literal_term = [&](int lit) {
    std::size_t idx = static_cast<std::size_t>(lit < 0 ? -lit : lit) - 1;
    if (lit > 0) return Term::var(enc.problem_vars[idx]);
    if (enc.companion_vars[idx] < 0) {
      enc.companion_vars[idx] = cs.new_var();
      cs.add_neg(Term::var(enc.problem_vars[idx]),
                 Term::var(enc.companion_vars[idx]), none);
    }
    return Term::var(enc.companion_vars[idx]);
  };
  const Term one = Term::constant(1);
  for (const auto& clause : cnf.clauses) {
    std::size_t k = clause.size();
    if (k == 0) {
      // An explicitly empty clause is unsatisfiable on its own.
      cs.add_or(Term::constant(0), Term::constant(0), one, none);
      continue;
    }
    if (k == 1) {
      Term t = literal_term(clause[0]);
      cs.add_or(t, t, one, none);
      continue;
    }
    if (k == 2) {
      cs.add_or(literal_term(clause[0]), literal_term(clause[1]), one, none);
      continue;
    }
    Term acc = Term::var(cs.new_var());
    enc.chain_vars.push_back(acc.var_id());
    cs.add_or(literal_term(clause[0]), literal_term(clause[1]), acc, none);
    for (std::size_t m = 2; m + 1 < k; ++m) {
      Term next = Term::var(cs.new_var());
      enc.chain_vars.push_back(next.var_id());
      cs.add_or(acc, literal_term(clause[m]), next, none);
      acc = next;
    }
    cs.add_or(acc, literal_term(clause[k - 1]), one, none);
  }
  return enc;
}

std::vector<int> decode_model(const ConstraintStore& cs, const Encoding& enc) {
  std::vector<int> model;
  model.reserve(enc.problem_vars.size());
  for (int32_t v : enc.problem_vars) {
    Deref d = cs.deref(Term::var(v));
    if (!d.term.is_const())
      throw std::logic_error("unbound problem variable in model decode");
    model.push_back(d.term.const_value());
  }
  return model;
}

}  // namespace adasat
