#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adasat/store.hpp"

namespace adasat {

enum class Strategy { Cbt, Cbj, Dbt, Fbt };

const char* strategy_name(Strategy s);   // lowercase, for command lines
const char* strategy_label(Strategy s);  // uppercase, for reports
std::optional<Strategy> strategy_from_name(const std::string& name);

struct SearchCounters {
  int64_t label_calls = 0;
  int64_t value_attempts = 0;        // equal() probes issued by label
  int64_t unlabel_calls = 0;         // the headline step count
  int64_t deleted_assignments = 0;   // source items removed by unlabel deletes
};

enum class SolveResult { Sat, Unsat, Timeout };

const char* result_name(SolveResult r);

struct SolveOutcome {
  SolveResult result = SolveResult::Unsat;
  std::vector<int> model;  // value per search variable, only when Sat
  SearchCounters counters;
  double millis = 0.0;
};

// Per-variable search bookkeeping. num is the next value to try (CBT) or the
// justification counter of the current assignment (DBT/FBT); CBJ ignores it.
// value_info[k] is the conflict set (CBJ) or elimination explanation
// (DBT/FBT) of value k; disengaged means undefined, which is distinct from a
// defined empty set (a permanent no-good).
struct SearchVar {
  int32_t engine_var = -1;
  int32_t num = 0;
  std::optional<LabelSet> value_info[2];
};

// One search run over a store. The label/unlabel pairs are public so their
// individual contracts stay directly testable; run() drives them through the
// shared labelling loop.
class SearchState {
public:
  SearchState(ConstraintStore& cs, const std::vector<int32_t>& vars,
              Strategy strategy);

  SolveOutcome run(
      std::optional<std::chrono::steady_clock::time_point> deadline = {});

  int cbt_label(int i);
  int cbt_unlabel(int i);
  int cbj_label(int i);
  int cbj_unlabel(int i);
  int dbt_label(int i);   // also FBT's label
  int dbt_unlabel(int i);
  int fbt_unlabel(int i);

  SearchVar& var(int i) { return vars_[static_cast<std::size_t>(i)]; }
  int n_vars() const { return n_; }
  SearchCounters& counters() { return counters_; }
  std::vector<int>& labelled_vars() { return labelled_; }
  std::vector<int>& unlabelled_vars() { return unlabelled_; }
  int32_t& cntr() { return cntr_; }

private:
  int label(int i);
  int unlabel(int i);
  bool bound(int i) const;
  int bound_value(int i) const;  // throws std::logic_error when unbound

  ConstraintStore& cs_;
  Strategy strategy_;
  int n_;
  std::vector<SearchVar> vars_;  // 1-based; vars_[0] unused
  std::vector<int> labelled_;    // DBT/FBT: indices into vars_
  std::vector<int> unlabelled_;  // DBT/FBT: stack, top at the back
  int32_t cntr_;
  SearchCounters counters_;
};

// Encode-and-run convenience used by the harness and tools.
SolveOutcome solve(ConstraintStore& cs, const std::vector<int32_t>& vars,
                   Strategy strategy,
                   std::optional<std::chrono::steady_clock::time_point>
                       deadline = {});

}  // namespace adasat
