#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <string>

#include "bindkit/enumerate.hpp"
#include "bindkit/parse.hpp"
#include "bindkit/term.hpp"
#include "oracles.hpp"

using namespace bindkit;

namespace {

Term T(const std::string& src) { return parse_term(src); }

const VarSet kAbc{vid(0), vid(1), vid(2)};

}  // namespace

TEST_CASE("variable sets and freshness") {
  VarSet s{vid(2), vid(0), vid(2)};
  CHECK(s.size() == 2);
  CHECK(s.contains(vid(0)));
  CHECK(!s.contains(vid(1)));
  CHECK(fresh_var(s) == vid(1));
  s.insert(vid(1));
  CHECK(fresh_var(s) == vid(3));
  CHECK(fresh_var(VarSet{}) == vid(0));
  CHECK(s.unioned(VarSet{vid(7)}).contains(vid(7)));
  CHECK(s.minus(VarSet{vid(0)}) == VarSet{vid(1), vid(2)});
}

TEST_CASE("interner maps canonical names to their index") {
  Interner i;
  CHECK(i.intern("x5") == vid(5));
  CHECK(i.intern("y") == vid(0));   // smallest untaken
  CHECK(i.intern("z") == vid(1));
  CHECK(i.intern("y") == vid(0));   // stable
  CHECK(i.intern("x0") == vid(0));  // canonical wins the index outright
  CHECK(i.name(vid(0)) == "y");
  CHECK(i.name(vid(5)) == "x5");
  CHECK(i.intern("x007") != vid(7));  // leading zero: plain identifier
}

TEST_CASE("parser grammar and errors") {
  CHECK(print_term(T("\\x0. x0")) == "\\x0. x0");
  CHECK(print_term(T("λx0. x0 x1")) == "\\x0. x0 x1");
  // Application is left-associative and binds tighter than the body.
  CHECK(alpha_eq(T("x0 x1 x2"), T("(x0 x1) x2")));
  CHECK(alpha_eq(T("\\x0. x0 x1"), T("\\x0. (x0 x1)")));
  CHECK_THROWS_AS(T("(x0"), ParseError);
  CHECK_THROWS_AS(T(""), ParseError);
  CHECK_THROWS_AS(T("\\. x0"), ParseError);
  CHECK_THROWS_AS(T("x0 )"), ParseError);
  CHECK_THROWS_AS(T("\\x0 x1"), ParseError);
  try {
    T("\\x0.\n $");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() == 2);
  }
}

TEST_CASE("print/parse round trip on enumerated terms") {
  Interner session;
  for (const Term& t : enum_terms(4, kAbc)) {
    Term back = parse_term(print_term(t), session);
    CHECK(alpha_eq(back, t));
  }
}

TEST_CASE("enumeration counts match the closed-form recurrence") {
  // T(1)=v, T(n) = sum_{i+j=n-1} T(i)T(j) + v*T(n-1), v = 3.
  const std::size_t expected[] = {3, 9, 36, 162, 783};
  std::vector<std::size_t> got(5, 0);
  for (const Term& t : enum_terms(5, kAbc)) got[t.size() - 1]++;
  for (int i = 0; i < 5; ++i) CHECK(got[i] == expected[i]);
}

TEST_CASE("free variables agree with the scope-list oracle") {
  CHECK(free_vars(T("\\x0. x0 x1")) == VarSet{vid(1)});
  CHECK(free_vars(T("\\x0. \\x1. x0 x1")) == VarSet{});
  CHECK(free_vars(T("x0 (\\x0. x0)")) == VarSet{vid(0)});
  for (const Term& t : enum_terms(5, kAbc))
    CHECK(free_vars(t) == testor::free_vars_oracle(t));
  CHECK(is_fresh(vid(0), T("\\x0. x0")));
  CHECK(!is_fresh(vid(1), T("\\x0. x0 x1")));
}

TEST_CASE("alpha equivalence: canonical key vs bijection oracle") {
  CHECK(alpha_eq(T("\\x0. x0"), T("\\x1. x1")));
  CHECK(!alpha_eq(T("\\x0. x0 x1"), T("\\x1. x1 x1")));
  CHECK(!alpha_eq(T("\\x0. \\x1. x0"), T("\\x0. \\x1. x1")));
  CHECK(db_key(T("\\x0. x0")) == db_key(T("\\x2. x2")));

  auto all = enum_terms(4, VarSet{vid(0), vid(1)});
  for (const Term& a : all)
    for (const Term& b : all)
      CHECK(alpha_eq(a, b) == testor::alpha_eq_oracle(a, b));
}

TEST_CASE("nameless conversion round trips") {
  for (const Term& t : enum_terms(5, kAbc)) {
    DbTerm d = to_debruijn(t);
    CHECK(alpha_eq(from_debruijn(d), t));
    CHECK(to_debruijn(from_debruijn(d)) == d);
  }
  CHECK(to_debruijn(T("\\x0. x0")) == to_debruijn(T("\\x1. x1")));
}

TEST_CASE("renaming: shadowing, capture avoidance, worked example") {
  // (\x. x y)[x/y] = \x'. x' x: binder equal to the incoming name moves.
  CHECK(alpha_eq(rename(T("\\x0. x0 x1"), vid(0), vid(1)),
                 T("\\x2. x2 x0")));
  // Binder equal to the outgoing name shadows: nothing to rename below.
  CHECK(alpha_eq(rename(T("\\x0. x0"), vid(1), vid(0)), T("\\x0. x0")));
  CHECK(alpha_eq(rename(T("\\x0. x0 (x0 x1)"), vid(2), vid(1)),
                 T("\\x0. x0 (x0 x2)")));
  // No occurrence: identity.
  CHECK(alpha_eq(rename(T("\\x0. x0"), vid(5), vid(3)), T("\\x0. x0")));
  // Identity rename is always the identity.
  for (const Term& t : enum_terms(4, kAbc))
    for (VarId x : kAbc) CHECK(alpha_eq(rename(t, x, x), t));
}

TEST_CASE("swapping moves binders and free occurrences alike") {
  CHECK(alpha_eq(swap(T("\\x0. x0 x1"), vid(0), vid(1)), T("\\x1. x1 x0")));
  CHECK(alpha_eq(swap(T("x0 x1"), vid(0), vid(1)), T("x1 x0")));
  CHECK(alpha_eq(swap(T("\\x2. x2"), vid(0), vid(1)), T("\\x2. x2")));
  for (const Term& t : enum_terms(4, kAbc)) {
    CHECK(alpha_eq(swap(swap(t, vid(0), vid(1)), vid(0), vid(1)), t));
    CHECK(alpha_eq(swap(t, vid(0), vid(0)), t));
  }
}

TEST_CASE("substitution avoids capture and matches the nameless oracle") {
  // Payload with a variable the binder would capture.
  CHECK(alpha_eq(subst(T("\\x1. x0"), T("x1 x2"), vid(0)),
                 T("\\x3. x1 x2")));
  CHECK(alpha_eq(subst(T("x0"), T("\\x0. x0"), vid(0)), T("\\x0. x0")));
  // Shadowed: no substitution below the binder.
  CHECK(alpha_eq(subst(T("\\x0. x0"), T("x1"), vid(0)), T("\\x0. x0")));

  Rng rng(404);
  auto all = enum_terms(4, kAbc);
  auto check_one = [](const Term& t, const Term& s, VarId x) {
    Term got = subst(t, s, x);
    DbTerm want = testor::db_subst(to_debruijn(t), x, to_debruijn(s));
    CHECK(to_debruijn(got) == want);
  };
  for (const Term& t : all) {
    check_one(t, T("x1 x2"), vid(0));
    check_one(t, T("\\x0. x0 x1"), vid(2));
  }
  for (int i = 0; i < 500; ++i) {
    Term t = random_term(rng, kAbc, 12);
    Term s = random_term(rng, kAbc, 8);
    check_one(t, s, kAbc.items()[rng.below(3)]);
  }
}

TEST_CASE("simultaneous substitution differs from sequential") {
  FinTermEnv rho;
  rho.bind(vid(0), T("x1"));
  rho.bind(vid(1), T("x0"));
  CHECK(alpha_eq(psubst(T("x0 x1"), rho), T("x1 x0")));
  // Sequential application gives x0 x0 instead.
  CHECK(alpha_eq(subst(subst(T("x0 x1"), T("x1"), vid(0)), T("x0"), vid(1)),
                 T("x0 x0")));

  FinTermEnv identity;
  identity.bind(vid(0), T("x0"));  // normalizes away
  CHECK(identity.support().empty());
  for (const Term& t : enum_terms(4, kAbc))
    CHECK(alpha_eq(psubst(t, identity), t));

  // Capture check through a binder.
  FinTermEnv cap;
  cap.bind(vid(0), T("x1"));
  CHECK(alpha_eq(psubst(T("\\x1. x0"), cap), T("\\x2. x1")));
}

TEST_CASE("psubst agrees with iterated oracle substitution on fresh images") {
  // When images share no variables with later bindings, sequential
  // nameless substitution is simultaneous; use disjoint target names.
  Rng rng(907);
  for (int i = 0; i < 300; ++i) {
    Term t = random_term(rng, kAbc, 10);
    Term s0 = random_term(rng, VarSet{vid(4), vid(5)}, 6);
    Term s1 = random_term(rng, VarSet{vid(4), vid(5)}, 6);
    FinTermEnv rho;
    rho.bind(vid(0), s0);
    rho.bind(vid(1), s1);
    DbTerm want = testor::db_subst(
        testor::db_subst(to_debruijn(t), vid(0), to_debruijn(s0)), vid(1),
        to_debruijn(s1));
    CHECK(to_debruijn(psubst(t, rho)) == want);
  }
}

TEST_CASE("term equality is alpha equivalence") {
  CHECK(Term(T("\\x0. x0")) == T("\\x1. x1"));
  CHECK(T("x0") != T("x1"));
  CHECK(T("\\x0. x0").repr().identical(T("\\x0. x0").repr()));
  CHECK(!T("\\x0. x0").repr().identical(T("\\x1. x1").repr()));
}
