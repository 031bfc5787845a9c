#include "adasat/bindings.hpp"

#include <stdexcept>

namespace adasat {

int32_t Bindings::new_var() {
  edges_.emplace_back(std::nullopt);
  return static_cast<int32_t>(edges_.size()) - 1;
}

Deref Bindings::deref(Term t) const {
  Deref out;
  out.term = t;
  while (out.term.is_var()) {
    const auto& e = edges_.at(static_cast<std::size_t>(out.term.var_id()));
    if (!e) break;
    out.label.unite_with(e->label);
    out.term = e->target;
  }
  return out;
}

BindOutcome Bindings::eq(Term a, Term b, const LabelSet& just) {
  Deref da = deref(a);
  Deref db = deref(b);
  BindOutcome out;
  if (da.term.is_const() && db.term.is_const()) {
    if (da.term.const_value() == db.term.const_value()) return out;  // no-op
    out.ok = false;
    out.explanation = just.unioned(da.label).unioned(db.label);
    return out;
  }
  if (da.term.is_var() && db.term.is_var() &&
      da.term.var_id() == db.term.var_id()) {
    return out;  // already the same variable: no-op
  }
  // Bind a variable end; prefer the left one so direction is deterministic.
  Term from = da.term.is_var() ? da.term : db.term;
  Term to = da.term.is_var() ? db.term : da.term;
  Edge e;
  e.target = to;
  e.label = just.unioned(da.label).unioned(db.label);
  edges_[static_cast<std::size_t>(from.var_id())] = std::move(e);
  out.changed = true;
  out.bound_var = from.var_id();
  return out;
}

bool Bindings::is_bound(int32_t var) const {
  return edges_.at(static_cast<std::size_t>(var)).has_value();
}

void Bindings::unbind(int32_t var) {
  auto& e = edges_.at(static_cast<std::size_t>(var));
  if (!e) throw std::logic_error("unbind of an unbound variable");
  e.reset();
}

}  // namespace adasat
