// Independent reference routes used only by the tests. Nothing here calls
// the recursion engines or the de Bruijn conversion helpers under test,
// except where a comment says which side of a cross-check it feeds.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bindkit/parse.hpp"
#include "bindkit/term.hpp"

namespace testor {

using namespace bindkit;

// Alpha-equivalence by binder correspondence: innermost bindings must pair
// up, free occurrences must match by name. Independent of the nameless
// conversion that the library uses for its own alpha_eq.
inline bool alpha_bij_rec(const PreTerm& a, const PreTerm& b,
                          std::vector<std::pair<VarId, VarId>>& scope) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case PreTerm::Kind::Var: {
      for (auto it = scope.rbegin(); it != scope.rend(); ++it)
        if (it->first == a.var() || it->second == b.var())
          return it->first == a.var() && it->second == b.var();
      return a.var() == b.var();
    }
    case PreTerm::Kind::App:
      return alpha_bij_rec(a.fun(), b.fun(), scope) &&
             alpha_bij_rec(a.arg(), b.arg(), scope);
    case PreTerm::Kind::Lam: {
      scope.push_back({a.var(), b.var()});
      bool ok = alpha_bij_rec(a.body(), b.body(), scope);
      scope.pop_back();
      return ok;
    }
  }
  return false;
}

inline bool alpha_eq_oracle(const Term& a, const Term& b) {
  std::vector<std::pair<VarId, VarId>> scope;
  return alpha_bij_rec(a.repr(), b.repr(), scope);
}

// Free variables with an explicit enclosing-binder list.
inline void fv_rec(const PreTerm& t, std::vector<VarId>& binders,
                   VarSet& out) {
  switch (t.kind()) {
    case PreTerm::Kind::Var: {
      for (VarId b : binders)
        if (b == t.var()) return;
      out.insert(t.var());
      return;
    }
    case PreTerm::Kind::App:
      fv_rec(t.fun(), binders, out);
      fv_rec(t.arg(), binders, out);
      return;
    case PreTerm::Kind::Lam:
      binders.push_back(t.var());
      fv_rec(t.body(), binders, out);
      binders.pop_back();
      return;
  }
}

inline VarSet free_vars_oracle(const Term& t) {
  VarSet out;
  std::vector<VarId> binders;
  fv_rec(t.repr(), binders, out);
  return out;
}

// Substitution in the nameless form: free names never get captured, and
// the payload's bound indices are all internal, so replacing Free(x) by
// the payload verbatim is exactly capture-avoiding substitution.
inline DbTerm db_subst(const DbTerm& d, VarId x, const DbTerm& payload) {
  switch (d.kind()) {
    case DbTerm::Kind::Bound:
      return d;
    case DbTerm::Kind::Free:
      return d.free_var() == x ? payload : d;
    case DbTerm::Kind::App:
      return DbTerm::app(db_subst(d.fun(), x, payload),
                         db_subst(d.arg(), x, payload));
    case DbTerm::Kind::Lam:
      return DbTerm::lam(db_subst(d.body(), x, payload));
  }
  return d;
}

// One leftmost-outermost beta step, reducing under binders; uses the
// library's capture-avoiding subst, so it is independent of normalization
// by evaluation but not of substitution itself.
inline std::optional<PreTerm> beta_step_rec(const PreTerm& p) {
  switch (p.kind()) {
    case PreTerm::Kind::Var:
      return std::nullopt;
    case PreTerm::Kind::App: {
      if (p.fun().kind() == PreTerm::Kind::Lam)
        return subst(Term(p.fun().body()), Term(p.arg()), p.fun().var())
            .repr();
      if (auto f2 = beta_step_rec(p.fun())) return PreTerm::app(*f2, p.arg());
      if (auto a2 = beta_step_rec(p.arg())) return PreTerm::app(p.fun(), *a2);
      return std::nullopt;
    }
    case PreTerm::Kind::Lam: {
      if (auto b2 = beta_step_rec(p.body()))
        return PreTerm::lam(p.var(), *b2);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline std::optional<Term> beta_step(const Term& t) {
  if (auto p = beta_step_rec(t.repr())) return Term(*p);
  return std::nullopt;
}

// Full normalization by iterated stepping; nullopt when the budget runs
// out (the term is treated as non-terminating at this budget).
inline std::optional<Term> beta_normalize(Term t, int max_steps) {
  for (int i = 0; i < max_steps; ++i) {
    auto next = beta_step(t);
    if (!next) return t;
    t = *next;
  }
  return std::nullopt;
}

// Beta-redex count on the nameless form.
inline unsigned long long redexes_db(const DbTerm& d) {
  switch (d.kind()) {
    case DbTerm::Kind::Bound:
    case DbTerm::Kind::Free:
      return 0;
    case DbTerm::Kind::App:
      return redexes_db(d.fun()) + redexes_db(d.arg()) +
             (d.fun().kind() == DbTerm::Kind::Lam ? 1 : 0);
    case DbTerm::Kind::Lam:
      return redexes_db(d.body());
  }
  return 0;
}

// Church numerals and arithmetic combinators; binder indices sit above the
// small test alphabets on purpose.
inline Term church(unsigned n) {
  VarId f = vid(20), x = vid(21);
  Term body = Term::var(x);
  for (unsigned i = 0; i < n; ++i) body = Term::app(Term::var(f), body);
  return Term::lam(f, Term::lam(x, body));
}

inline Term church_plus() {
  return parse_term("\\m. \\n. \\f. \\u. m f (n f u)");
}

inline Term church_times() { return parse_term("\\m. \\n. \\f. m (n f)"); }

inline Term church_exp() { return parse_term("\\m. \\n. n m"); }

inline Term omega() { return parse_term("(\\x. x x) (\\x. x x)"); }

}  // namespace testor
