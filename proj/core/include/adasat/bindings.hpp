#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adasat/label_set.hpp"
#include "adasat/term.hpp"

namespace adasat {

// Result of following a binding chain to its end.
struct Deref {
  Term term;       // terminal: a constant or an unbound variable
  LabelSet label;  // union of the labels of every edge on the chain
};

// Result of asserting an equation between two terms.
struct BindOutcome {
  bool ok = true;            // false: the sides dereference to distinct constants
  bool changed = false;      // true: a new binding edge was recorded
  int32_t bound_var = -1;    // variable that received the edge, when changed
  LabelSet explanation;      // clash explanation, when !ok
};

// Justified binding substrate: a growable pool of variables, each either
// unbound or bound to a term through a labelled edge. Chains are followed
// lazily and never path-compressed, so every edge stays individually
// removable.
class Bindings {
public:
  int32_t new_var();
  std::size_t var_count() const { return edges_.size(); }

  Deref deref(Term t) const;

  // Assert a = b under the given justification. At most one new edge is
  // recorded, always on an unbound variable. The edge label is the union of
  // the justification with the labels met dereferencing both sides, so a
  // later deref reproduces the full support of the equation.
  BindOutcome eq(Term a, Term b, const LabelSet& just);

  bool is_bound(int32_t var) const;
  void unbind(int32_t var);  // throws std::logic_error if var has no edge

private:
  struct Edge {
    Term target;
    LabelSet label;
  };
  std::vector<std::optional<Edge>> edges_;
};

}  // namespace adasat
