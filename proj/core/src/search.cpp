#include "adasat/search.hpp"

#include <stdexcept>

namespace adasat {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::Cbt: return "cbt";
    case Strategy::Cbj: return "cbj";
    case Strategy::Dbt: return "dbt";
    case Strategy::Fbt: return "fbt";
  }
  return "?";
}

const char* strategy_label(Strategy s) {
  switch (s) {
    case Strategy::Cbt: return "CBT";
    case Strategy::Cbj: return "CBJ";
    case Strategy::Dbt: return "DBT";
    case Strategy::Fbt: return "FBT";
  }
  return "?";
}

const char* result_name(SolveResult r) {
  switch (r) {
    case SolveResult::Sat: return "SAT";
    case SolveResult::Unsat: return "UNSAT";
    case SolveResult::Timeout: return "TIMEOUT";
  }
  return "?";
}

std::optional<Strategy> strategy_from_name(const std::string& name) {
  if (name == "cbt") return Strategy::Cbt;
  if (name == "cbj") return Strategy::Cbj;
  if (name == "dbt") return Strategy::Dbt;
  if (name == "fbt") return Strategy::Fbt;
  return std::nullopt;
}

SearchState::SearchState(ConstraintStore& cs, const std::vector<int32_t>& vars,
                         Strategy strategy)
    : cs_(cs), strategy_(strategy), n_(static_cast<int>(vars.size())) {
  vars_.resize(static_cast<std::size_t>(n_) + 1);
  for (int i = 1; i <= n_; ++i)
    vars_[static_cast<std::size_t>(i)].engine_var =
        vars[static_cast<std::size_t>(i - 1)];
  if (strategy_ == Strategy::Dbt || strategy_ == Strategy::Fbt) {
    // Stack with the top at the back; the first pop must yield variable 1.
    unlabelled_.reserve(static_cast<std::size_t>(n_));
    for (int i = n_; i >= 1; --i) unlabelled_.push_back(i);
  }
  cntr_ = n_ + 1;
}

bool SearchState::bound(int i) const {
  return cs_.bound_to_const(
      Term::var(vars_[static_cast<std::size_t>(i)].engine_var));
}

int SearchState::bound_value(int i) const {
  Deref d = cs_.deref(Term::var(vars_[static_cast<std::size_t>(i)].engine_var));
  if (!d.term.is_const())
    throw std::logic_error("search variable expected to be bound");
  return d.term.const_value();
}

int SearchState::label(int i) {
  switch (strategy_) {
    case Strategy::Cbt: return cbt_label(i);
    case Strategy::Cbj: return cbj_label(i);
    case Strategy::Dbt:
    case Strategy::Fbt: return dbt_label(i);
  }
  return i;
}

int SearchState::unlabel(int i) {
  switch (strategy_) {
    case Strategy::Cbt: return cbt_unlabel(i);
    case Strategy::Cbj: return cbj_unlabel(i);
    case Strategy::Dbt: return dbt_unlabel(i);
    case Strategy::Fbt: return fbt_unlabel(i);
  }
  return 0;
}

SolveOutcome SearchState::run(
    std::optional<std::chrono::steady_clock::time_point> deadline) {
  auto t0 = std::chrono::steady_clock::now();
  SolveOutcome out;
  auto finish = [&](SolveResult r) {
    out.result = r;
    out.counters = counters_;
    out.millis = std::chrono::duration<double, std::milli>(
                     std::chrono::steady_clock::now() - t0)
                     .count();
    return out;
  };
  // A store that is already inconsistent cannot be repaired by labelling:
  // the failure depends on no search assignment.
  if (!cs_.is_consistent()) return finish(SolveResult::Unsat);
  int i = 1;
  unsigned tick = 0;
  while (1 <= i && i <= n_) {
    if (deadline && (++tick & 63) == 0 &&
        std::chrono::steady_clock::now() >= *deadline)
      return finish(SolveResult::Timeout);
    int j = label(i);
    if (i == j)
      i = unlabel(i);
    else
      i = j;
  }
  if (i <= 0) return finish(SolveResult::Unsat);
  out.model.resize(static_cast<std::size_t>(n_));
  for (int v = 1; v <= n_; ++v)
    out.model[static_cast<std::size_t>(v - 1)] = bound_value(v);
  return finish(SolveResult::Sat);
}

int SearchState::cbt_label(int i) {
  ++counters_.label_calls;
  SearchVar& v = vars_[static_cast<std::size_t>(i)];
  if (bound(i)) return i + 1;
  while (v.num <= 1) {
    int value = v.num++;
    ++counters_.value_attempts;
    cs_.equal(Term::var(v.engine_var), Term::constant(value), LabelSet{i});
    if (cs_.is_consistent()) return i + 1;
    cs_.delete_labels(LabelSet{i});
  }
  return i;
}

// Chronological backtracking: undo the most recent value assignment below i
// and resume there. Levels whose variable was bound by propagation alone
// (num still 0) hold no assignment of their own and are skipped, since the
// search has no choice to revise at them. A level can also carry a stale
// num: its probe was deleted on an earlier pass and propagation re-derived
// the binding (necessarily to the same value, as the store stayed
// consistent while the probe was live). Such a level is equally
// choice-free — the delete removes nothing and the variable stays bound —
// so it is zeroed and skipped too.
int SearchState::cbt_unlabel(int i) {
  ++counters_.unlabel_calls;
  counters_.deleted_assignments +=
      static_cast<int64_t>(cs_.delete_labels(LabelSet{i}));
  vars_[static_cast<std::size_t>(i)].num = 0;
  for (int h = i - 1; h >= 1; --h) {
    if (vars_[static_cast<std::size_t>(h)].num == 0) continue;
    counters_.deleted_assignments +=
        static_cast<int64_t>(cs_.delete_labels(LabelSet{h}));
    if (!bound(h)) return h;
    vars_[static_cast<std::size_t>(h)].num = 0;
  }
  return 0;
}

int SearchState::cbj_label(int i) {
  ++counters_.label_calls;
  SearchVar& v = vars_[static_cast<std::size_t>(i)];
  if (bound(i)) return i + 1;
  for (int k = 0; k <= 1; ++k) {
    if (v.value_info[k]) continue;  // defined conflict set: value ruled out
    ++counters_.value_attempts;
    cs_.equal(Term::var(v.engine_var), Term::constant(k), LabelSet{i});
    if (cs_.is_consistent()) return i + 1;
    v.value_info[k] = cs_.get_explanation().minus(LabelSet{i});
    cs_.delete_labels(LabelSet{i});
  }
  return i;
}

int SearchState::cbj_unlabel(int i) {
  ++counters_.unlabel_calls;
  SearchVar& v = vars_[static_cast<std::size_t>(i)];
  if (!v.value_info[0] || !v.value_info[1])
    throw std::logic_error("cbj_unlabel with an undefined conflict set");
  if (v.value_info[0]->empty() && v.value_info[1]->empty()) return 0;
  LabelSet u = v.value_info[0]->unioned(*v.value_info[1]);
  int h = static_cast<int>(u.max_label());
  // Charge the culprit value of var[h] with the remaining conflict, then
  // remove the assignments from h up to just below the dead end.
  vars_[static_cast<std::size_t>(h)].value_info[bound_value(h)] =
      u.minus(LabelSet{h});
  counters_.deleted_assignments += static_cast<int64_t>(
      cs_.delete_labels(LabelSet::range(h, i - 1)));
  for (int j = h; j <= n_; ++j) {
    for (int k = 0; k <= 1; ++k) {
      auto& cs_k = vars_[static_cast<std::size_t>(j)].value_info[k];
      if (cs_k && !cs_k->empty() && cs_k->max_label() >= h) cs_k.reset();
    }
  }
  return h;
}

// Shared by DBT and FBT.
int SearchState::dbt_label(int i) {
  ++counters_.label_calls;
  if (unlabelled_.empty())
    throw std::logic_error("dbt_label with no unlabelled variables");
  int vi = unlabelled_.back();
  unlabelled_.pop_back();
  SearchVar& v = vars_[static_cast<std::size_t>(vi)];
  if (bound(vi)) {
    labelled_.push_back(vi);
    return i + 1;
  }
  for (int k = 0; k <= 1; ++k) {
    if (v.value_info[k]) continue;  // defined elimination explanation
    ++counters_.value_attempts;
    int32_t just = cntr_;
    cs_.equal(Term::var(v.engine_var), Term::constant(k), LabelSet{just});
    if (cs_.is_consistent()) {
      v.num = just;
      ++cntr_;
      labelled_.push_back(vi);
      return i + 1;
    }
    v.value_info[k] = cs_.get_explanation().minus(LabelSet{just});
    cs_.delete_labels(LabelSet{just});
  }
  unlabelled_.push_back(vi);
  return i;
}

int SearchState::dbt_unlabel(int i) {
  (void)i;
  ++counters_.unlabel_calls;
  if (unlabelled_.empty())
    throw std::logic_error("dbt_unlabel with no dead-end variable");
  // The dead-end variable stays in unlabelledVars (below bt), so it is
  // relabelled after bt and swept by the reset loop below.
  int vi = unlabelled_.back();
  SearchVar& v = vars_[static_cast<std::size_t>(vi)];
  if (!v.value_info[0] || !v.value_info[1])
    throw std::logic_error("dbt_unlabel with an undefined elimination explanation");
  if (v.value_info[0]->empty() && v.value_info[1]->empty()) return 0;
  LabelSet u = v.value_info[0]->unioned(*v.value_info[1]);
  int32_t h = u.max_label();
  int bt = -1;
  for (std::size_t j = labelled_.size(); j-- > 0;) {
    if (vars_[static_cast<std::size_t>(labelled_[j])].num == h) {
      bt = labelled_[j];
      labelled_.erase(labelled_.begin() + static_cast<std::ptrdiff_t>(j));
      break;
    }
  }
  if (bt < 0) throw std::logic_error("dbt_unlabel found no owner of the culprit justification");
  vars_[static_cast<std::size_t>(bt)].value_info[bound_value(bt)] =
      u.minus(LabelSet{h});
  counters_.deleted_assignments +=
      static_cast<int64_t>(cs_.delete_labels(LabelSet{h}));
  unlabelled_.push_back(bt);
  for (int uv : unlabelled_) {
    for (int k = 0; k <= 1; ++k) {
      auto& e = vars_[static_cast<std::size_t>(uv)].value_info[k];
      if (e && e->contains(h)) e.reset();
    }
  }
  for (std::size_t j = labelled_.size(); j-- > 0;) {
    int lv = labelled_[j];
    for (int k = 0; k <= 1; ++k) {
      auto& e = vars_[static_cast<std::size_t>(lv)].value_info[k];
      if (e && e->contains(h)) e.reset();
    }
    if (!bound(lv)) {
      labelled_.erase(labelled_.begin() + static_cast<std::ptrdiff_t>(j));
      unlabelled_.push_back(lv);
    }
  }
  return static_cast<int>(labelled_.size()) + 1;
}

int SearchState::fbt_unlabel(int i) {
  (void)i;
  ++counters_.unlabel_calls;
  if (unlabelled_.empty())
    throw std::logic_error("fbt_unlabel with no dead-end variable");
  int vi = unlabelled_.back();  // stays below bt, as in dbt_unlabel
  SearchVar& v = vars_[static_cast<std::size_t>(vi)];
  if (!v.value_info[0] || !v.value_info[1])
    throw std::logic_error("fbt_unlabel with an undefined elimination explanation");
  if (v.value_info[0]->empty() && v.value_info[1]->empty()) return 0;
  LabelSet u = v.value_info[0]->unioned(*v.value_info[1]);
  int32_t h = u.max_label();
  int bt = -1;
  for (std::size_t j = labelled_.size(); j-- > 0;) {
    if (vars_[static_cast<std::size_t>(labelled_[j])].num == h) {
      bt = labelled_[j];
      labelled_.erase(labelled_.begin() + static_cast<std::ptrdiff_t>(j));
      break;
    }
  }
  if (bt < 0) throw std::logic_error("fbt_unlabel found no owner of the culprit justification");
  vars_[static_cast<std::size_t>(bt)].value_info[bound_value(bt)] =
      u.minus(LabelSet{h});
  unlabelled_.push_back(bt);
  // Cascade: collect the justifications of every assignment directly or
  // indirectly determined by the one being revised, unlabelling as we go.
  LabelSet label{static_cast<int32_t>(h)};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < labelled_.size() && !changed; ++j) {
      int lv = labelled_[j];
      SearchVar& w = vars_[static_cast<std::size_t>(lv)];
      bool hit = false;
      for (int k = 0; k <= 1; ++k) {
        if (w.value_info[k] && label.intersects(*w.value_info[k])) {
          w.value_info[k].reset();
          hit = true;
        }
      }
      if (hit) {
        label.insert(w.num);
        labelled_.erase(labelled_.begin() + static_cast<std::ptrdiff_t>(j));
        unlabelled_.push_back(lv);
        changed = true;
      }
    }
  }
  counters_.deleted_assignments +=
      static_cast<int64_t>(cs_.delete_labels(label));
  for (std::size_t j = labelled_.size(); j-- > 0;) {
    int lv = labelled_[j];
    if (!bound(lv)) {
      labelled_.erase(labelled_.begin() + static_cast<std::ptrdiff_t>(j));
      unlabelled_.push_back(lv);
    }
  }
  for (int uv : unlabelled_) {
    for (int k = 0; k <= 1; ++k) {
      auto& e = vars_[static_cast<std::size_t>(uv)].value_info[k];
      if (e && e->intersects(label)) e.reset();
    }
  }
  return static_cast<int>(labelled_.size()) + 1;
}

SolveOutcome solve(ConstraintStore& cs, const std::vector<int32_t>& vars,
                   Strategy strategy,
                   std::optional<std::chrono::steady_clock::time_point>
                       deadline) {
  SearchState st(cs, vars, strategy);
  return st.run(deadline);
}

}  // namespace adasat
