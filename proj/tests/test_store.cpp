#include <doctest.h>

#include <stdexcept>

#include "adasat/store.hpp"
#include "fuzz_support.hpp"

using adasat::ConstraintStore;
using adasat::Deref;
using adasat::LabelSet;
using adasat::Term;

namespace {

Term v(ConstraintStore& cs) { return Term::var(cs.new_var()); }

bool bound_to(const ConstraintStore& cs, Term t, int value) {
  Deref d = cs.deref(t);
  return d.term.is_const() && d.term.const_value() == value;
}

}  // namespace

TEST_CASE("or simplification rules") {
  SUBCASE("or(1,X,Y) binds Y to 1") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs);
    cs.add_or(Term::constant(1), x, y, LabelSet{});
    CHECK(cs.is_consistent());
    CHECK(bound_to(cs, y, 1));
    CHECK(cs.deref(y).label.empty());
    CHECK_FALSE(cs.bound_to_const(x));
    CHECK(cs.live_constraint_count() == 0);
  }
  SUBCASE("or(X,1,Y) binds Y to 1") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs);
    cs.add_or(x, Term::constant(1), y, LabelSet{});
    CHECK(bound_to(cs, y, 1));
  }
  SUBCASE("or(0,X,Y) equates Y and X") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs);
    cs.add_or(Term::constant(0), x, y, LabelSet{});
    CHECK(cs.is_consistent());
    CHECK(cs.deref(x).term == cs.deref(y).term);
    CHECK(cs.live_constraint_count() == 0);
  }
  SUBCASE("or(X,Y,0) forces both disjuncts to 0") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs);
    cs.add_or(x, y, Term::constant(0), LabelSet{});
    CHECK(bound_to(cs, x, 0));
    CHECK(bound_to(cs, y, 0));
  }
  SUBCASE("or(X,X,Z) equates X and Z") {
    ConstraintStore cs;
    Term x = v(cs), z = v(cs);
    cs.add_or(x, x, z, LabelSet{});
    CHECK(cs.deref(x).term == cs.deref(z).term);
    CHECK(cs.live_constraint_count() == 0);
  }
  SUBCASE("or over unbound distinct variables is inert") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs), z = v(cs);
    cs.add_or(x, y, z, LabelSet{});
    CHECK(cs.is_consistent());
    CHECK(cs.live_constraint_count() == 1);
    CHECK_FALSE(cs.bound_to_const(x));
    CHECK_FALSE(cs.bound_to_const(y));
    CHECK_FALSE(cs.bound_to_const(z));
  }
}

TEST_CASE("neg simplification rules") {
  ConstraintStore cs;
  SUBCASE("neg(0,X) gives X=1") {
    Term x = v(cs);
    cs.add_neg(Term::constant(0), x, LabelSet{});
    CHECK(bound_to(cs, x, 1));
  }
  SUBCASE("neg(X,0) gives X=1") {
    Term x = v(cs);
    cs.add_neg(x, Term::constant(0), LabelSet{});
    CHECK(bound_to(cs, x, 1));
  }
  SUBCASE("neg(1,X) gives X=0") {
    Term x = v(cs);
    cs.add_neg(Term::constant(1), x, LabelSet{});
    CHECK(bound_to(cs, x, 0));
  }
  SUBCASE("neg(X,1) gives X=0") {
    Term x = v(cs);
    cs.add_neg(x, Term::constant(1), LabelSet{});
    CHECK(bound_to(cs, x, 0));
  }
  SUBCASE("neg(X,X) fails with the constraint's own label") {
    Term x = v(cs);
    cs.add_neg(x, x, LabelSet{});
    CHECK_FALSE(cs.is_consistent());
    CHECK(cs.get_explanation() == LabelSet{});
  }
  SUBCASE("neg(X,X) reached through an equation blames the equation") {
    Term x = v(cs), y = v(cs);
    cs.add_neg(x, y, LabelSet{});
    CHECK(cs.is_consistent());
    cs.equal(x, y, LabelSet{3});
    CHECK_FALSE(cs.is_consistent());
    CHECK(cs.get_explanation() == LabelSet{3});
  }
}

TEST_CASE("pair rules") {
  SUBCASE("duplicate or constraints merge their results") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs), a = v(cs), b = v(cs);
    cs.add_or(x, y, a, LabelSet{});
    cs.add_or(x, y, b, LabelSet{4});
    CHECK(cs.is_consistent());
    CHECK(cs.deref(a).term == cs.deref(b).term);
    CHECK(cs.live_constraint_count() == 1);
  }
  SUBCASE("commuted duplicate or constraints merge too") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs), a = v(cs), b = v(cs);
    cs.add_or(x, y, a, LabelSet{});
    cs.add_or(y, x, b, LabelSet{});
    CHECK(cs.deref(a).term == cs.deref(b).term);
    CHECK(cs.live_constraint_count() == 1);
  }
  SUBCASE("neg(X,Y), neg(Y,Z) gives X=Z") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs), z = v(cs);
    cs.add_neg(x, y, LabelSet{});
    cs.add_neg(y, z, LabelSet{});
    CHECK(cs.deref(x).term == cs.deref(z).term);
    CHECK(cs.live_constraint_count() == 1);
  }
  SUBCASE("neg(X,Y), neg(Z,Y) gives X=Z") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs), z = v(cs);
    cs.add_neg(x, y, LabelSet{});
    cs.add_neg(z, y, LabelSet{});
    CHECK(cs.deref(x).term == cs.deref(z).term);
  }
  SUBCASE("neg(Y,X), neg(Y,Z) gives X=Z") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs), z = v(cs);
    cs.add_neg(y, x, LabelSet{});
    cs.add_neg(y, z, LabelSet{});
    CHECK(cs.deref(x).term == cs.deref(z).term);
  }
  SUBCASE("neg(X,Y) with or(X,Y,Z) forces Z=1 and keeps the neg") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs), z = v(cs);
    cs.add_neg(x, y, LabelSet{});
    cs.add_or(x, y, z, LabelSet{});
    CHECK(bound_to(cs, z, 1));
    CHECK(cs.live_constraint_count() == 1);
    CHECK_FALSE(cs.bound_to_const(x));
  }
  SUBCASE("neg(Y,X) with or(X,Y,Z) forces Z=1") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs), z = v(cs);
    cs.add_neg(y, x, LabelSet{});
    cs.add_or(x, y, z, LabelSet{});
    CHECK(bound_to(cs, z, 1));
  }
  SUBCASE("neg(X,Z) with or(X,Y,Z) solves all three variables") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs), z = v(cs);
    cs.add_neg(x, z, LabelSet{});
    cs.add_or(x, y, z, LabelSet{});
    CHECK(bound_to(cs, x, 0));
    CHECK(bound_to(cs, y, 1));
    CHECK(bound_to(cs, z, 1));
    CHECK(cs.live_constraint_count() == 0);
  }
  SUBCASE("neg(Z,X) with or(X,Y,Z) solves all three variables") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs), z = v(cs);
    cs.add_neg(z, x, LabelSet{});
    cs.add_or(x, y, z, LabelSet{});
    CHECK(bound_to(cs, x, 0));
    CHECK(bound_to(cs, y, 1));
    CHECK(bound_to(cs, z, 1));
  }
  SUBCASE("neg(Y,Z) with or(X,Y,Z) solves all three variables") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs), z = v(cs);
    cs.add_neg(y, z, LabelSet{});
    cs.add_or(x, y, z, LabelSet{});
    CHECK(bound_to(cs, x, 1));
    CHECK(bound_to(cs, y, 0));
    CHECK(bound_to(cs, z, 1));
  }
  SUBCASE("neg(Z,Y) with or(X,Y,Z) solves all three variables") {
    ConstraintStore cs;
    Term x = v(cs), y = v(cs), z = v(cs);
    cs.add_neg(z, y, LabelSet{});
    cs.add_or(x, y, z, LabelSet{});
    CHECK(bound_to(cs, x, 1));
    CHECK(bound_to(cs, y, 0));
    CHECK(bound_to(cs, z, 1));
  }
}

TEST_CASE("unit clause chain derives the remaining literal") {
  ConstraintStore cs;
  Term x0 = v(cs), x1 = v(cs), x2 = v(cs), x3 = v(cs);
  Term r1 = v(cs), r2 = v(cs);
  cs.add_or(x0, x1, r1, LabelSet{});
  cs.add_or(r1, x2, r2, LabelSet{});
  cs.add_or(r2, x3, Term::constant(1), LabelSet{});
  CHECK(cs.is_consistent());
  cs.equal(x0, Term::constant(0), LabelSet{});
  cs.equal(x1, Term::constant(0), LabelSet{});
  cs.equal(x3, Term::constant(0), LabelSet{});
  CHECK(cs.is_consistent());
  CHECK(bound_to(cs, x2, 1));
  CHECK(cs.live_constraint_count() == 0);
}

TEST_CASE("plain equation bookkeeping") {
  ConstraintStore cs;
  Term x = v(cs);
  SUBCASE("assignment on an empty store just binds") {
    cs.equal(x, Term::constant(0), LabelSet{6});
    CHECK(cs.is_consistent());
    CHECK(bound_to(cs, x, 0));
    CHECK(cs.deref(x).label == LabelSet{6});
  }
  SUBCASE("conflicting assignments fail with the union") {
    cs.equal(x, Term::constant(0), LabelSet{2});
    cs.equal(x, Term::constant(1), LabelSet{7});
    CHECK_FALSE(cs.is_consistent());
    CHECK(cs.get_explanation() == LabelSet{2, 7});
  }
  SUBCASE("assignment against a propagated binding") {
    Term y = v(cs);
    cs.add_or(x, y, Term::constant(0), LabelSet{});
    cs.equal(x, Term::constant(1), LabelSet{4});
    CHECK_FALSE(cs.is_consistent());
    CHECK(cs.get_explanation() == LabelSet{4});
  }
  SUBCASE("get_explanation on a consistent store is a contract violation") {
    CHECK_THROWS_AS((void)cs.get_explanation(), std::logic_error);
  }
}

TEST_CASE("inconsistency scenario with retraction") {
  // neg(X,Y), or(X,Y,Z), neg(Z,U): propagation forces Z=1, then U=0, all
  // unconditionally. The assignment U=1 is then inconsistent on its own.
  ConstraintStore cs;
  Term x = v(cs), y = v(cs), z = v(cs), u = v(cs);
  cs.add_neg(x, y, LabelSet{});
  cs.add_or(x, y, z, LabelSet{});
  cs.add_neg(z, u, LabelSet{});
  CHECK(cs.is_consistent());
  CHECK(bound_to(cs, z, 1));
  CHECK(bound_to(cs, u, 0));
  cs.equal(u, Term::constant(1), LabelSet{5});
  CHECK_FALSE(cs.is_consistent());
  CHECK(cs.get_explanation() == LabelSet{5});
  CHECK(cs.delete_labels(LabelSet{5}) == 1);
  CHECK(cs.is_consistent());
  CHECK(bound_to(cs, u, 0));
}

TEST_CASE("single assignment can break a future-variable constraint net") {
  // With or(X,U,V), neg(Y,U), or(X,Y,V) nothing propagates until X=0
  // collapses U, V and Y into one variable negated with itself.
  ConstraintStore cs;
  Term x = v(cs), u = v(cs), vv = v(cs), y = v(cs);
  cs.add_or(x, u, vv, LabelSet{});
  cs.add_neg(y, u, LabelSet{});
  cs.add_or(x, y, vv, LabelSet{});
  CHECK(cs.is_consistent());
  CHECK(cs.live_constraint_count() == 3);
  cs.equal(x, Term::constant(0), LabelSet{1});
  CHECK_FALSE(cs.is_consistent());
  CHECK(cs.get_explanation() == LabelSet{1});
}

TEST_CASE("deletion re-derives what the survivors imply") {
  ConstraintStore cs;
  Term a = v(cs), b = v(cs);
  cs.equal(a, Term::constant(1), LabelSet{1});
  cs.equal(b, Term::constant(1), LabelSet{3});
  cs.add_neg(a, b, LabelSet{});
  CHECK_FALSE(cs.is_consistent());
  CHECK(cs.get_explanation() == LabelSet{1, 3});
  CHECK(cs.delete_labels(LabelSet{1}) == 1);
  CHECK(cs.is_consistent());
  CHECK(bound_to(cs, b, 1));
  CHECK(cs.deref(b).label == LabelSet{3});
  // a is no longer assigned 1; the neg re-derives a=0 from b's binding.
  CHECK(bound_to(cs, a, 0));
  CHECK(cs.deref(a).label == LabelSet{3});
}

TEST_CASE("deleting the empty label set changes nothing") {
  ConstraintStore cs;
  Term x = v(cs), y = v(cs), z = v(cs);
  cs.add_or(x, y, z, LabelSet{2});
  cs.equal(x, Term::constant(1), LabelSet{3});
  fuzz::StoreView before = fuzz::observe(cs);
  CHECK(cs.delete_labels(LabelSet{}) == 0);
  CHECK(fuzz::observe(cs) == before);
}

TEST_CASE("range deletion removes exactly the addressed assignments") {
  ConstraintStore cs;
  std::vector<Term> vars;
  for (int i = 0; i < 6; ++i) vars.push_back(v(cs));
  for (int i = 1; i <= 6; ++i)
    cs.equal(vars[static_cast<std::size_t>(i - 1)], Term::constant(0),
             LabelSet{i});
  CHECK(cs.delete_labels(LabelSet::range(4, 6)) == 3);
  for (int i = 1; i <= 3; ++i)
    CHECK(bound_to(cs, vars[static_cast<std::size_t>(i - 1)], 0));
  for (int i = 4; i <= 6; ++i)
    CHECK_FALSE(cs.bound_to_const(vars[static_cast<std::size_t>(i - 1)]));
}

TEST_CASE("a two-clause formula encodes to an inert constraint net") {
  // (A or not B or C) and (not A or B or D) as
  // neg(A,F), neg(B,E), or(A,E,X), or(X,C,1), or(F,B,Y), or(Y,D,1).
  ConstraintStore cs;
  Term a = v(cs), b = v(cs), c = v(cs), d = v(cs);
  Term e = v(cs), f = v(cs), x = v(cs), y = v(cs);
  cs.add_neg(a, f, LabelSet{});
  cs.add_neg(b, e, LabelSet{});
  cs.add_or(a, e, x, LabelSet{});
  cs.add_or(x, c, Term::constant(1), LabelSet{});
  cs.add_or(f, b, y, LabelSet{});
  cs.add_or(y, d, Term::constant(1), LabelSet{});
  CHECK(cs.is_consistent());
  CHECK(cs.live_constraint_count() == 6);
  for (Term t : {a, b, c, d, e, f, x, y}) CHECK_FALSE(cs.bound_to_const(t));
}

TEST_CASE("additions while failed take effect only after repair") {
  ConstraintStore cs;
  Term x = v(cs), y = v(cs);
  cs.equal(x, Term::constant(0), LabelSet{1});
  cs.equal(x, Term::constant(1), LabelSet{2});
  CHECK_FALSE(cs.is_consistent());
  // Logged but not propagated yet:
  cs.equal(y, Term::constant(1), LabelSet{3});
  CHECK_FALSE(cs.is_consistent());
  CHECK_FALSE(cs.bound_to_const(y));
  CHECK(cs.delete_labels(LabelSet{2}) == 1);
  CHECK(cs.is_consistent());
  CHECK(bound_to(cs, x, 0));
  CHECK(bound_to(cs, y, 1));
}

TEST_CASE("randomized interleavings match from-scratch replays") {
  for (uint64_t seed = 1; seed <= 300; ++seed) {
    int n_vars = 4 + static_cast<int>(seed % 7);  // 4..10
    std::string diag = fuzz::run_trial(seed, n_vars, 30);
    if (!diag.empty()) FAIL(diag);
  }
}
