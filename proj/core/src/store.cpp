#include "adasat/store.hpp"

#include <algorithm>
#include <stdexcept>

namespace adasat {

namespace {

// Terms are equal modulo bindings when their dereferenced ends coincide.
bool same_term(const Deref& x, const Deref& y) {
  if (x.term.is_const() && y.term.is_const())
    return x.term.const_value() == y.term.const_value();
  if (x.term.is_var() && y.term.is_var())
    return x.term.var_id() == y.term.var_id();
  return false;
}

bool is_c(const Deref& d, int v) {
  return d.term.is_const() && d.term.const_value() == v;
}

}  // namespace

int32_t ConstraintStore::new_var() { return binds_.new_var(); }

const LabelSet& ConstraintStore::get_explanation() const {
  if (!status_.failed)
    throw std::logic_error("get_explanation on a consistent store");
  return status_.explanation;
}

std::size_t ConstraintStore::live_constraint_count() const {
  std::size_t n = 0;
  for (const auto& c : arena_)
    if (c.alive) ++n;
  return n;
}

std::vector<BoolConstraint> ConstraintStore::live_constraints() const {
  std::vector<BoolConstraint> out;
  for (const auto& c : arena_)
    if (c.alive) out.push_back(c);
  return out;
}

ConstraintStore::RestorePoint ConstraintStore::snapshot() const {
  return RestorePoint{static_cast<uint32_t>(arena_.size()),
                      static_cast<uint32_t>(bound_trail_.size()),
                      static_cast<uint32_t>(removal_trail_.size()),
                      static_cast<uint32_t>(index_trail_.size()), status_};
}

void ConstraintStore::add_or(Term a, Term b, Term c, const LabelSet& just) {
  log_and_apply(SourceItem{SourceKind::Or, {a, b, c}, just});
}

void ConstraintStore::add_neg(Term a, Term b, const LabelSet& just) {
  log_and_apply(SourceItem{SourceKind::Neg, {a, b, Term::constant(0)}, just});
}

void ConstraintStore::equal(Term a, Term b, const LabelSet& just) {
  log_and_apply(SourceItem{SourceKind::Eq, {a, b, Term::constant(0)}, just});
}

void ConstraintStore::log_and_apply(SourceItem item) {
  for (const Term& t : item.args) {
    if (t.is_var() && static_cast<std::size_t>(t.var_id()) >= var_count())
      throw std::invalid_argument("unknown variable id in constraint");
  }
  points_.push_back(snapshot());
  log_.push_back(std::move(item));
  apply(log_.back());
}

// Apply one source item to the live state. While the store is failed new
// items stay log-only; a later deletion that removes the failure cause
// replays them.
void ConstraintStore::apply(const SourceItem& item) {
  if (status_.failed) return;
  if (item.kind == SourceKind::Eq) {
    run_eq(item.args[0], item.args[1], item.label);
  } else {
    instantiate(item);
  }
  drain_agenda();
}

void ConstraintStore::instantiate(const SourceItem& item) {
  int32_t cid = static_cast<int32_t>(arena_.size());
  BoolConstraint c;
  c.id = cid;
  c.kind = item.kind == SourceKind::Or ? ConsKind::Or : ConsKind::Neg;
  c.args[0] = item.args[0];
  c.args[1] = item.args[1];
  c.args[2] = item.args[2];
  c.label = item.label;
  c.alive = true;
  arena_.push_back(std::move(c));
  int n_args = item.kind == SourceKind::Or ? 3 : 2;
  int32_t seen[3] = {-1, -1, -1};
  for (int i = 0; i < n_args; ++i) {
    Deref d = binds_.deref(item.args[i]);
    if (!d.term.is_var()) continue;
    int32_t v = d.term.var_id();
    if (v == seen[0] || v == seen[1] || v == seen[2]) continue;
    seen[i] = v;
    index_under(v, cid);
  }
  agenda_.push_back(cid);
}

void ConstraintStore::index_under(int32_t var, int32_t cid) {
  index_.resize(std::max(index_.size(), var_count()));
  index_[static_cast<std::size_t>(var)].push_back(cid);
  index_trail_.push_back(var);
}

void ConstraintStore::fail(LabelSet explanation) {
  status_.failed = true;
  status_.explanation = std::move(explanation);
  agenda_.clear();
  agenda_head_ = 0;
}

// Assert a = b justified by just. On a new binding, constraints watching the
// bound variable are reactivated, and its watch list is folded into the list
// of the variable it now dereferences to, so future bindings of that
// representative reactivate them as well.
void ConstraintStore::run_eq(Term a, Term b, const LabelSet& just) {
  if (status_.failed) return;
  BindOutcome r = binds_.eq(a, b, just);
  if (!r.ok) {
    fail(std::move(r.explanation));
    return;
  }
  if (!r.changed) return;
  bound_trail_.push_back(r.bound_var);
  Deref nd = binds_.deref(Term::var(r.bound_var));
  if (nd.term.is_var()) {
    int32_t w = nd.term.var_id();
    std::size_t n = index_.size() > static_cast<std::size_t>(r.bound_var)
                        ? index_[static_cast<std::size_t>(r.bound_var)].size()
                        : 0;
    for (std::size_t i = 0; i < n; ++i) {
      int32_t cid = index_[static_cast<std::size_t>(r.bound_var)][i];
      if (arena_[static_cast<std::size_t>(cid)].alive) index_under(w, cid);
    }
  }
  reactivate_watchers(r.bound_var);
}

void ConstraintStore::reactivate_watchers(int32_t var) {
  if (static_cast<std::size_t>(var) >= index_.size()) return;
  for (int32_t cid : index_[static_cast<std::size_t>(var)])
    if (arena_[static_cast<std::size_t>(cid)].alive) agenda_.push_back(cid);
}

void ConstraintStore::drain_agenda() {
  while (agenda_head_ < agenda_.size() && !status_.failed) {
    int32_t cid = agenda_[agenda_head_++];
    if (!arena_[static_cast<std::size_t>(cid)].alive) continue;
    scan_rules(cid);
  }
  agenda_.clear();
  agenda_head_ = 0;
}

void ConstraintStore::kill(BoolConstraint& c) {
  c.alive = false;
  removal_trail_.push_back(c.id);
}

// Try the rules on one active constraint, in listing order, until none
// matches or the constraint is removed. A firing that keeps the active
// constraint restarts the scan, since its arguments may now dereference
// differently.
void ConstraintStore::scan_rules(int32_t cid) {
  while (true) {
    if (status_.failed) return;
    BoolConstraint& c = arena_[static_cast<std::size_t>(cid)];
    if (!c.alive) return;
    if (c.kind == ConsKind::Or) {
      Deref d[3] = {binds_.deref(c.args[0]), binds_.deref(c.args[1]),
                    binds_.deref(c.args[2])};
      if (is_c(d[0], 0)) {  // or(0,X,Y) <=> Y=X
        LabelSet base = c.label.unioned(d[0].label);
        kill(c);
        run_eq(c.args[2], c.args[1], base);
        return;
      }
      if (is_c(d[1], 0)) {  // or(X,0,Y) <=> Y=X
        LabelSet base = c.label.unioned(d[1].label);
        kill(c);
        run_eq(c.args[2], c.args[0], base);
        return;
      }
      if (is_c(d[2], 0)) {  // or(X,Y,0) <=> X=0, Y=0
        LabelSet base = c.label.unioned(d[2].label);
        kill(c);
        run_eq(c.args[0], Term::constant(0), base);
        if (status_.failed) return;
        run_eq(c.args[1], Term::constant(0), base);
        return;
      }
      if (is_c(d[0], 1)) {  // or(1,X,Y) <=> Y=1
        LabelSet base = c.label.unioned(d[0].label);
        kill(c);
        run_eq(c.args[2], Term::constant(1), base);
        return;
      }
      if (is_c(d[1], 1)) {  // or(X,1,Y) <=> Y=1
        LabelSet base = c.label.unioned(d[1].label);
        kill(c);
        run_eq(c.args[2], Term::constant(1), base);
        return;
      }
      if (same_term(d[0], d[1])) {  // or(X,X,Z) <=> X=Z
        LabelSet base = c.label.unioned(d[0].label).unioned(d[1].label);
        kill(c);
        run_eq(c.args[0], c.args[2], base);
        return;
      }
      if (!try_or_pairs(c, d)) return;
      continue;
    }
    // Neg
    Deref d[2] = {binds_.deref(c.args[0]), binds_.deref(c.args[1])};
    if (is_c(d[0], 0)) {  // neg(0,X) <=> X=1
      LabelSet base = c.label.unioned(d[0].label);
      kill(c);
      run_eq(c.args[1], Term::constant(1), base);
      return;
    }
    if (is_c(d[1], 0)) {  // neg(X,0) <=> X=1
      LabelSet base = c.label.unioned(d[1].label);
      kill(c);
      run_eq(c.args[0], Term::constant(1), base);
      return;
    }
    if (is_c(d[0], 1)) {  // neg(1,X) <=> X=0
      LabelSet base = c.label.unioned(d[0].label);
      kill(c);
      run_eq(c.args[1], Term::constant(0), base);
      return;
    }
    if (is_c(d[1], 1)) {  // neg(X,1) <=> X=0
      LabelSet base = c.label.unioned(d[1].label);
      kill(c);
      run_eq(c.args[0], Term::constant(0), base);
      return;
    }
    if (same_term(d[0], d[1])) {  // neg(X,X) <=> fail
      fail(c.label.unioned(d[0].label).unioned(d[1].label));
      return;
    }
    if (!try_neg_pairs(c, d)) return;
  }
}

// Gather live partner candidates sharing a dereferenced variable with the
// active constraint, in ascending id order.
void ConstraintStore::collect_candidates(const Deref* d, int n_args,
                                         int32_t self) {
  candidates_.clear();
  for (int i = 0; i < n_args; ++i) {
    if (!d[i].term.is_var()) continue;
    std::size_t v = static_cast<std::size_t>(d[i].term.var_id());
    if (v >= index_.size()) continue;
    for (int32_t cid : index_[v]) {
      if (cid != self && arena_[static_cast<std::size_t>(cid)].alive)
        candidates_.push_back(cid);
    }
  }
  std::sort(candidates_.begin(), candidates_.end());
  candidates_.erase(std::unique(candidates_.begin(), candidates_.end()),
                    candidates_.end());
}

// Double-headed rules with the active constraint being the or. Returns true
// if a rule fired. Partner order is ascending id; rule order follows the
// listing.
bool ConstraintStore::try_or_pairs(BoolConstraint& c, const Deref d[3]) {
  collect_candidates(d, 3, c.id);
  if (candidates_.empty()) return false;
  auto pj = [&](const BoolConstraint& p, const Deref* e, int n) {
    LabelSet base = c.label.unioned(p.label);
    for (int i = 0; i < n; ++i) base.unite_with(e[i].label);
    return base;
  };
  // or(X,Y,A) \ or(X,Y,B) <=> A=B
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Or) continue;
    Deref e[2] = {binds_.deref(p.args[0]), binds_.deref(p.args[1])};
    if (same_term(d[0], e[0]) && same_term(d[1], e[1])) {
      Deref used[4] = {d[0], d[1], e[0], e[1]};
      LabelSet base = pj(p, used, 4);
      kill(p);
      run_eq(c.args[2], p.args[2], base);
      return true;
    }
  }
  // or(X,Y,A) \ or(Y,X,B) <=> A=B
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Or) continue;
    Deref e[2] = {binds_.deref(p.args[0]), binds_.deref(p.args[1])};
    if (same_term(d[0], e[1]) && same_term(d[1], e[0])) {
      Deref used[4] = {d[0], d[1], e[0], e[1]};
      LabelSet base = pj(p, used, 4);
      kill(p);
      run_eq(c.args[2], p.args[2], base);
      return true;
    }
  }
  // neg(X,Y) \ or(X,Y,Z) <=> Z=1   (active or is the removed head)
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Neg) continue;
    Deref f[2] = {binds_.deref(p.args[0]), binds_.deref(p.args[1])};
    if (same_term(f[0], d[0]) && same_term(f[1], d[1])) {
      Deref used[4] = {f[0], f[1], d[0], d[1]};
      LabelSet base = pj(p, used, 4);
      kill(c);
      run_eq(c.args[2], Term::constant(1), base);
      return true;
    }
  }
  // neg(Y,X) \ or(X,Y,Z) <=> Z=1
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Neg) continue;
    Deref f[2] = {binds_.deref(p.args[0]), binds_.deref(p.args[1])};
    if (same_term(f[0], d[1]) && same_term(f[1], d[0])) {
      Deref used[4] = {f[0], f[1], d[0], d[1]};
      LabelSet base = pj(p, used, 4);
      kill(c);
      run_eq(c.args[2], Term::constant(1), base);
      return true;
    }
  }
  // neg(X,Z), or(X,Y,Z) <=> X=0, Y=1, Z=1
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Neg) continue;
    Deref f[2] = {binds_.deref(p.args[0]), binds_.deref(p.args[1])};
    if (same_term(f[0], d[0]) && same_term(f[1], d[2])) {
      Deref used[4] = {f[0], f[1], d[0], d[2]};
      LabelSet base = pj(p, used, 4);
      kill(c);
      kill(p);
      run_eq(c.args[0], Term::constant(0), base);
      if (status_.failed) return true;
      run_eq(c.args[1], Term::constant(1), base);
      if (status_.failed) return true;
      run_eq(c.args[2], Term::constant(1), base);
      return true;
    }
  }
  // neg(Z,X), or(X,Y,Z) <=> X=0, Y=1, Z=1
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Neg) continue;
    Deref f[2] = {binds_.deref(p.args[0]), binds_.deref(p.args[1])};
    if (same_term(f[1], d[0]) && same_term(f[0], d[2])) {
      Deref used[4] = {f[0], f[1], d[0], d[2]};
      LabelSet base = pj(p, used, 4);
      kill(c);
      kill(p);
      run_eq(c.args[0], Term::constant(0), base);
      if (status_.failed) return true;
      run_eq(c.args[1], Term::constant(1), base);
      if (status_.failed) return true;
      run_eq(c.args[2], Term::constant(1), base);
      return true;
    }
  }
  // neg(Y,Z), or(X,Y,Z) <=> X=1, Y=0, Z=1
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Neg) continue;
    Deref f[2] = {binds_.deref(p.args[0]), binds_.deref(p.args[1])};
    if (same_term(f[0], d[1]) && same_term(f[1], d[2])) {
      Deref used[4] = {f[0], f[1], d[1], d[2]};
      LabelSet base = pj(p, used, 4);
      kill(c);
      kill(p);
      run_eq(c.args[0], Term::constant(1), base);
      if (status_.failed) return true;
      run_eq(c.args[1], Term::constant(0), base);
      if (status_.failed) return true;
      run_eq(c.args[2], Term::constant(1), base);
      return true;
    }
  }
  // neg(Z,Y), or(X,Y,Z) <=> X=1, Y=0, Z=1
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Neg) continue;
    Deref f[2] = {binds_.deref(p.args[0]), binds_.deref(p.args[1])};
    if (same_term(f[1], d[1]) && same_term(f[0], d[2])) {
      Deref used[4] = {f[0], f[1], d[1], d[2]};
      LabelSet base = pj(p, used, 4);
      kill(c);
      kill(p);
      run_eq(c.args[0], Term::constant(1), base);
      if (status_.failed) return true;
      run_eq(c.args[1], Term::constant(0), base);
      if (status_.failed) return true;
      run_eq(c.args[2], Term::constant(1), base);
      return true;
    }
  }
  return false;
}

// Double-headed rules with the active constraint being a neg.
bool ConstraintStore::try_neg_pairs(BoolConstraint& c, const Deref d[2]) {
  collect_candidates(d, 2, c.id);
  if (candidates_.empty()) return false;
  auto pj = [&](const BoolConstraint& p, const Deref* e, int n) {
    LabelSet base = c.label.unioned(p.label);
    for (int i = 0; i < n; ++i) base.unite_with(e[i].label);
    return base;
  };
  // neg(X,Y) \ neg(Y,Z) <=> X=Z, active as the kept head
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Neg) continue;
    Deref e0 = binds_.deref(p.args[0]);
    if (same_term(d[1], e0)) {
      Deref used[2] = {d[1], e0};
      LabelSet base = pj(p, used, 2);
      kill(p);
      run_eq(c.args[0], p.args[1], base);
      return true;
    }
  }
  // neg(X,Y) \ neg(Y,Z) <=> X=Z, active as the removed head
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Neg) continue;
    Deref e1 = binds_.deref(p.args[1]);
    if (same_term(e1, d[0])) {
      Deref used[2] = {e1, d[0]};
      LabelSet base = pj(p, used, 2);
      kill(c);
      run_eq(p.args[0], c.args[1], base);
      return true;
    }
  }
  // neg(X,Y) \ neg(Z,Y) <=> X=Z   (symmetric: active kept)
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Neg) continue;
    Deref e1 = binds_.deref(p.args[1]);
    if (same_term(d[1], e1)) {
      Deref used[2] = {d[1], e1};
      LabelSet base = pj(p, used, 2);
      kill(p);
      run_eq(c.args[0], p.args[0], base);
      return true;
    }
  }
  // neg(Y,X) \ neg(Y,Z) <=> X=Z   (symmetric: active kept)
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Neg) continue;
    Deref e0 = binds_.deref(p.args[0]);
    if (same_term(d[0], e0)) {
      Deref used[2] = {d[0], e0};
      LabelSet base = pj(p, used, 2);
      kill(p);
      run_eq(c.args[1], p.args[1], base);
      return true;
    }
  }
  // neg(X,Y) \ or(X,Y,Z) <=> Z=1   (active neg is the kept head)
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Or) continue;
    Deref e[2] = {binds_.deref(p.args[0]), binds_.deref(p.args[1])};
    if (same_term(d[0], e[0]) && same_term(d[1], e[1])) {
      Deref used[4] = {d[0], d[1], e[0], e[1]};
      LabelSet base = pj(p, used, 4);
      kill(p);
      run_eq(p.args[2], Term::constant(1), base);
      return true;
    }
  }
  // neg(Y,X) \ or(X,Y,Z) <=> Z=1
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Or) continue;
    Deref e[2] = {binds_.deref(p.args[0]), binds_.deref(p.args[1])};
    if (same_term(d[0], e[1]) && same_term(d[1], e[0])) {
      Deref used[4] = {d[0], d[1], e[0], e[1]};
      LabelSet base = pj(p, used, 4);
      kill(p);
      run_eq(p.args[2], Term::constant(1), base);
      return true;
    }
  }
  // neg(X,Z), or(X,Y,Z) <=> X=0, Y=1, Z=1
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Or) continue;
    Deref e[3] = {binds_.deref(p.args[0]), binds_.deref(p.args[1]),
                  binds_.deref(p.args[2])};
    if (same_term(d[0], e[0]) && same_term(d[1], e[2])) {
      Deref used[4] = {d[0], d[1], e[0], e[2]};
      LabelSet base = pj(p, used, 4);
      kill(c);
      kill(p);
      run_eq(p.args[0], Term::constant(0), base);
      if (status_.failed) return true;
      run_eq(p.args[1], Term::constant(1), base);
      if (status_.failed) return true;
      run_eq(p.args[2], Term::constant(1), base);
      return true;
    }
  }
  // neg(Z,X), or(X,Y,Z) <=> X=0, Y=1, Z=1
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Or) continue;
    Deref e[3] = {binds_.deref(p.args[0]), binds_.deref(p.args[1]),
                  binds_.deref(p.args[2])};
    if (same_term(d[1], e[0]) && same_term(d[0], e[2])) {
      Deref used[4] = {d[0], d[1], e[0], e[2]};
      LabelSet base = pj(p, used, 4);
      kill(c);
      kill(p);
      run_eq(p.args[0], Term::constant(0), base);
      if (status_.failed) return true;
      run_eq(p.args[1], Term::constant(1), base);
      if (status_.failed) return true;
      run_eq(p.args[2], Term::constant(1), base);
      return true;
    }
  }
  // neg(Y,Z), or(X,Y,Z) <=> X=1, Y=0, Z=1
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Or) continue;
    Deref e[3] = {binds_.deref(p.args[0]), binds_.deref(p.args[1]),
                  binds_.deref(p.args[2])};
    if (same_term(d[0], e[1]) && same_term(d[1], e[2])) {
      Deref used[4] = {d[0], d[1], e[1], e[2]};
      LabelSet base = pj(p, used, 4);
      kill(c);
      kill(p);
      run_eq(p.args[0], Term::constant(1), base);
      if (status_.failed) return true;
      run_eq(p.args[1], Term::constant(0), base);
      if (status_.failed) return true;
      run_eq(p.args[2], Term::constant(1), base);
      return true;
    }
  }
  // neg(Z,Y), or(X,Y,Z) <=> X=1, Y=0, Z=1
  for (int32_t pid : candidates_) {
    BoolConstraint& p = arena_[static_cast<std::size_t>(pid)];
    if (p.kind != ConsKind::Or) continue;
    Deref e[3] = {binds_.deref(p.args[0]), binds_.deref(p.args[1]),
                  binds_.deref(p.args[2])};
    if (same_term(d[1], e[1]) && same_term(d[0], e[2])) {
      Deref used[4] = {d[0], d[1], e[1], e[2]};
      LabelSet base = pj(p, used, 4);
      kill(c);
      kill(p);
      run_eq(p.args[0], Term::constant(1), base);
      if (status_.failed) return true;
      run_eq(p.args[1], Term::constant(0), base);
      if (status_.failed) return true;
      run_eq(p.args[2], Term::constant(1), base);
      return true;
    }
  }
  return false;
}

std::size_t ConstraintStore::delete_labels(const LabelSet& s) {
  std::size_t n_dead = 0;
  std::size_t k0 = log_.size();
  for (std::size_t k = 0; k < log_.size(); ++k) {
    if (log_[k].label.intersects(s)) {
      if (n_dead == 0) k0 = k;
      ++n_dead;
    }
  }
  if (n_dead == 0) return 0;

  // Unwind the trails to the state just before the earliest dying item.
  const RestorePoint rp = points_[k0];
  while (bound_trail_.size() > rp.bound_trail_len) {
    binds_.unbind(bound_trail_.back());
    bound_trail_.pop_back();
  }
  while (removal_trail_.size() > rp.removal_trail_len) {
    int32_t cid = removal_trail_.back();
    removal_trail_.pop_back();
    if (static_cast<uint32_t>(cid) < rp.arena_len)
      arena_[static_cast<std::size_t>(cid)].alive = true;
  }
  while (index_trail_.size() > rp.index_trail_len) {
    index_[static_cast<std::size_t>(index_trail_.back())].pop_back();
    index_trail_.pop_back();
  }
  arena_.resize(rp.arena_len);
  status_ = rp.status;
  agenda_.clear();
  agenda_head_ = 0;

  // Expunge the dying items and replay the surviving later ones in their
  // original order, refreshing restore points as they re-apply. Keeping the
  // log free of dead entries bounds every scan by the live store size.
  std::vector<SourceItem> tail;
  tail.reserve(log_.size() - k0 - n_dead);
  for (std::size_t k = k0; k < log_.size(); ++k) {
    if (!log_[k].label.intersects(s)) tail.push_back(std::move(log_[k]));
  }
  log_.resize(k0);
  points_.resize(k0);
  for (SourceItem& item : tail) {
    points_.push_back(snapshot());
    log_.push_back(std::move(item));
    apply(log_.back());
  }
  return n_dead;
}

}  // namespace adasat
