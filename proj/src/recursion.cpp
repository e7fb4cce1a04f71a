#include "bindkit/recursion.hpp"

#include "bindkit/parse.hpp"

namespace bindkit {

std::string print_term_ref(const Term& t) { return print_term(t); }

namespace {

PreTerm variant_rec(const PreTerm& t, Rng& rng) {
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      return t;
    case PreTerm::Kind::App:
      return PreTerm::app(variant_rec(t.fun(), rng), variant_rec(t.arg(), rng));
    case PreTerm::Kind::Lam: {
      PreTerm body = variant_rec(t.body(), rng);
      VarId x = t.var();
      if (rng.chance(1, 2)) {
        // Retarget the binder to a variable that cannot capture: either a
        // fresh one or, occasionally, the binder itself.
        VarSet avoid = free_vars(body);
        avoid.insert(x);
        VarId z = rng.chance(1, 4) ? x : fresh_var(avoid);
        return PreTerm::lam(z, rename(Term(body), z, x).repr());
      }
      return PreTerm::lam(x, body);
    }
  }
  return t;  // unreachable
}

}  // namespace

Term alpha_variant(const Term& t, Rng& rng) {
  return Term(variant_rec(t.repr(), rng));
}

CERensetSpec<Term> term_ce_spec() {
  CERensetSpec<Term> s;
  s.name = "term";
  s.base = term_renset();
  s.vr = [](VarId x) { return Term::var(x); };
  s.ap = [](const Term& f, const Term& a) { return Term::app(f, a); };
  s.lm = [](VarId x, const Term& b) { return Term::lam(x, b); };
  return s;
}

CERensetSpec<Term> term_ce_spec_broken_fixed_binder() {
  CERensetSpec<Term> s = term_ce_spec();
  s.name = "term/broken-fixed-binder";
  s.lm = [](VarId, const Term& b) { return Term::lam(vid(0), b); };
  return s;
}

CESubstSpec<Term> term_subst_spec() {
  CESubstSpec<Term> s;
  s.name = "term";
  s.subst = [](const Term& a, const Term& b, VarId x) {
    return subst(a, b, x);
  };
  s.vr = [](VarId x) { return Term::var(x); };
  s.ap = [](const Term& f, const Term& a) { return Term::app(f, a); };
  s.lm = [](VarId x, const Term& b) { return Term::lam(x, b); };
  s.equal = alpha_eq;
  s.support_bound = [](const Term& t) { return free_vars(t); };
  s.sample = [](Rng& rng) { return random_term(rng, default_alphabet(), 10); };
  s.show = [](const Term& t) { return print_term(t); };
  return s;
}

FRCESpec<unsigned long long> redex_counter_spec() {
  using N = unsigned long long;
  FRCESpec<N> s;
  s.name = "redex-counter";
  s.base.name = "nat";
  s.base.rename = [](const N& n, VarId, VarId) { return n; };
  s.base.equal = [](const N& a, const N& b) { return a == b; };
  s.base.support_bound = [](const N&) { return VarSet{}; };
  s.base.sample = [](Rng& rng) { return static_cast<N>(rng.below(32)); };
  s.base.show = [](const N& n) { return std::to_string(n); };
  s.vr = [](VarId) -> N { return 0; };
  s.ap = [](const Term& t1, const N& n1, const Term&, const N& n2) -> N {
    return n1 + n2 + (t1.repr().kind() == PreTerm::Kind::Lam ? 1 : 0);
  };
  s.lm = [](VarId, const Term&, const N& n) { return n; };
  return s;
}

unsigned long long redex_count(const Term& t) {
  return prim_recurse(redex_counter_spec(), AvoidSet{}, t);
}

}  // namespace bindkit
