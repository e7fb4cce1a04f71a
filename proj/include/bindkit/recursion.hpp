#pragma once

#include <functional>
#include <string>
#include <vector>

#include "bindkit/enumerate.hpp"
#include "bindkit/instances.hpp"
#include "bindkit/renset.hpp"
#include "bindkit/term.hpp"

namespace bindkit {

using AvoidSet = VarSet;

std::string print_term_ref(const Term& t);

// Produces an alpha-variant by randomly retargeting binders.
Term alpha_variant(const Term& t, Rng& rng);

// Target structure for recursion by renaming: a renset carrier plus
// constructor images. A lawful spec satisfies, for x, y, z off the avoid
// set (S1..S3, S5 sampled there; S4 for any x off the set):
//   S1  vr(x)[y/z] = vr(x[y/z])
//   S2  ap(a1, a2)[y/z] = ap(a1[y/z], a2[y/z])
//   S3  x not in {y, z}  =>  lm(x, a)[y/z] = lm(x, a[y/z])
//   S4  lm(x, a)[y/x] = lm(x, a)
//   S5  z != y  =>  lm(x, a[z/y]) = lm(y, a[z/y][y/x])
template <class A>
struct CERensetSpec {
  std::string name;
  RensetInstance<A> base;
  std::function<A(VarId)> vr;
  std::function<A(const A&, const A&)> ap;
  std::function<A(VarId, const A&)> lm;
};

// Full-recursion variant: constructor images also see the subterms.
template <class A>
struct FRCESpec {
  std::string name;
  RensetInstance<A> base;
  std::function<A(VarId)> vr;
  std::function<A(const Term&, const A&, const Term&, const A&)> ap;
  std::function<A(VarId, const Term&, const A&)> lm;
};

// Target structure for recursion by substitution. subst(a, b, x) stands
// for a with b substituted for x.
template <class A>
struct CESubstSpec {
  std::string name;
  std::function<A(const A&, const A&, VarId)> subst;
  std::function<A(VarId)> vr;
  std::function<A(const A&, const A&)> ap;
  std::function<A(VarId, const A&)> lm;
  std::function<bool(const A&, const A&)> equal;
  std::function<VarSet(const A&)> support_bound;
  std::function<A(Rng&)> sample;
  std::function<std::string(const A&)> show;
};

// Minimal picks the smallest index outside the avoid set; Shifted skips
// one further. Lawful specs cannot observe the difference, which the
// clause checker verifies.
enum class FreshPolicy { Minimal, Shifted };

inline VarId pick_fresh(const VarSet& avoid, FreshPolicy fp) {
  VarId z = fresh_var(avoid);
  if (fp == FreshPolicy::Shifted) {
    VarSet bumped = avoid;
    bumped.insert(z);
    z = fresh_var(bumped);
  }
  return z;
}

namespace detail {

template <class A>
A recurse_rec(const CERensetSpec<A>& spec, const AvoidSet& avoid,
              const PreTerm& t, FreshPolicy fp) {
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      return spec.vr(t.var());
    case PreTerm::Kind::App: {
      A f = recurse_rec(spec, avoid, t.fun(), fp);
      A a = recurse_rec(spec, avoid, t.arg(), fp);
      return spec.ap(f, a);
    }
    case PreTerm::Kind::Lam: {
      VarId x = t.var();
      if (!avoid.contains(x))
        return spec.lm(x, recurse_rec(spec, avoid, t.body(), fp));
      VarSet block = avoid.unioned(free_vars(t.body()));
      block.insert(x);
      VarId z = pick_fresh(block, fp);
      Term renamed = rename(Term(t.body()), z, x);
      return spec.lm(z, recurse_rec(spec, avoid, renamed.repr(), fp));
    }
  }
  return spec.vr(vid(0));
}

template <class A>
A prim_recurse_rec(const FRCESpec<A>& spec, const AvoidSet& avoid,
                   const PreTerm& t, FreshPolicy fp) {
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      return spec.vr(t.var());
    case PreTerm::Kind::App: {
      A f = prim_recurse_rec(spec, avoid, t.fun(), fp);
      A a = prim_recurse_rec(spec, avoid, t.arg(), fp);
      return spec.ap(Term(t.fun()), f, Term(t.arg()), a);
    }
    case PreTerm::Kind::Lam: {
      VarId x = t.var();
      if (!avoid.contains(x)) {
        A b = prim_recurse_rec(spec, avoid, t.body(), fp);
        return spec.lm(x, Term(t.body()), b);
      }
      VarSet block = avoid.unioned(free_vars(t.body()));
      block.insert(x);
      VarId z = pick_fresh(block, fp);
      Term renamed = rename(Term(t.body()), z, x);
      A b = prim_recurse_rec(spec, avoid, renamed.repr(), fp);
      return spec.lm(z, renamed, b);
    }
  }
  return spec.vr(vid(0));
}

}  // namespace detail

// Structural recursion with binder hygiene: binders inside the avoid set
// are renamed to a fresh variable first. Lawfulness of the spec (not
// checked here) makes the result representative-independent; the engines
// never verify laws at run time.
template <class A>
A recurse(const CERensetSpec<A>& spec, const AvoidSet& avoid, const Term& t,
          FreshPolicy fp = FreshPolicy::Minimal) {
  return detail::recurse_rec(spec, avoid, t.repr(), fp);
}

template <class A>
A prim_recurse(const FRCESpec<A>& spec, const AvoidSet& avoid, const Term& t,
               FreshPolicy fp = FreshPolicy::Minimal) {
  return detail::prim_recurse_rec(spec, avoid, t.repr(), fp);
}

// Renaming induced by a substitution structure: a[y/z] := subst(a, vr(y), z).
template <class A>
RensetInstance<A> induced_renset(const CESubstSpec<A>& spec) {
  RensetInstance<A> r;
  r.name = spec.name + "/induced-rename";
  r.rename = [spec](const A& a, VarId to, VarId from) {
    return spec.subst(a, spec.vr(to), from);
  };
  r.equal = spec.equal;
  r.support_bound = spec.support_bound;
  r.sample = spec.sample;
  r.show = spec.show;
  return r;
}

template <class A>
CERensetSpec<A> induced_ce_spec(const CESubstSpec<A>& spec) {
  CERensetSpec<A> ce;
  ce.name = spec.name + "/induced";
  ce.base = induced_renset(spec);
  ce.vr = spec.vr;
  ce.ap = spec.ap;
  ce.lm = spec.lm;
  return ce;
}

// Recursion by substitution: delegates to the renaming engine over the
// induced renset, with an empty avoid set.
template <class A>
A subst_recurse(const CESubstSpec<A>& spec, const Term& t) {
  return recurse(induced_ce_spec(spec), AvoidSet{}, t);
}

// Forgets the subterm arguments: prim_recurse over the result agrees with
// recurse over the original spec.
template <class A>
FRCESpec<A> frce_from_ce(const CERensetSpec<A>& spec) {
  FRCESpec<A> f;
  f.name = spec.name + "/term-ignoring";
  f.base = spec.base;
  f.vr = spec.vr;
  f.ap = [ap = spec.ap](const Term&, const A& a1, const Term&, const A& a2) {
    return ap(a1, a2);
  };
  f.lm = [lm = spec.lm](VarId x, const Term&, const A& a) { return lm(x, a); };
  return f;
}

// prim_recurse over the term-ignoring lift agrees with recurse on the
// original spec.
template <class A>
LawReport check_frce_term_ignoring(const CERensetSpec<A>& spec,
                                   const AvoidSet& avoid, std::uint64_t seed,
                                   int trials, std::size_t term_size = 10) {
  LawReport r{.law = spec.name + ":frce-term-ignoring-agrees",
              .seed = mix_seed(seed, "frce-term-ignoring")};
  Rng rng(r.seed);
  FRCESpec<A> lifted = frce_from_ce(spec);
  for (int i = 0; i < trials; ++i) {
    Term t = random_term(rng, default_alphabet(), term_size);
    A lhs = prim_recurse(lifted, avoid, t);
    A rhs = recurse(spec, avoid, t);
    ++r.trials;
    if (!spec.base.equal(lhs, rhs))
      r.record("t=" + print_term_ref(t), spec.base.show(lhs),
               spec.base.show(rhs));
  }
  return r;
}

// Terms as a target of their own recursion: recurse over this spec is the
// identity up to alpha-equivalence.
CERensetSpec<Term> term_ce_spec();

// Deliberately unlawful: lm ignores the binder name and always binds x0.
// Violates the binder laws (S4/S5) with concrete witnesses.
CERensetSpec<Term> term_ce_spec_broken_fixed_binder();

// Terms as a substitution structure; subst_recurse over it is the identity
// and its induced renaming is term renaming.
CESubstSpec<Term> term_subst_spec();

// Counts beta redexes: needs the application's left subterm, so it lives
// in the full-recursion shape. The carrier renaming is the identity.
FRCESpec<unsigned long long> redex_counter_spec();
unsigned long long redex_count(const Term& t);

namespace detail {

template <class A>
VarId off_avoid(const VarPool& pool, Rng& rng, const AvoidSet& avoid) {
  for (;;) {
    VarId v = pool.any(rng);
    if (!avoid.contains(v)) return v;
  }
}

}  // namespace detail

// ---- law suites ----

// S1..S5 plus the renaming laws of the base carrier.
template <class A>
std::vector<LawReport> check_ce_laws(const CERensetSpec<A>& spec,
                                     const AvoidSet& avoid,
                                     std::uint64_t seed, int trials,
                                     const VarPool& pool = {}) {
  const RensetInstance<A>& b = spec.base;
  std::vector<LawReport> out = check_renset_laws(b, seed, trials, pool);
  auto off = [&](Rng& rng) { return detail::off_avoid<A>(pool, rng, avoid); };

  {
    LawReport r{.law = spec.name + ":ce-S1-var",
                .seed = mix_seed(seed, "ce-s1")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      VarId x = off(rng), y = off(rng), z = off(rng);
      A lhs = b.rename(spec.vr(x), y, z);
      A rhs = spec.vr(x == z ? y : x);
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("x=" + var_name(x) + " y=" + var_name(y) +
                     " z=" + var_name(z),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":ce-S2-app",
                .seed = mix_seed(seed, "ce-s2")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a1 = b.sample(rng), a2 = b.sample(rng);
      VarId y = off(rng), z = off(rng);
      A lhs = b.rename(spec.ap(a1, a2), y, z);
      A rhs = spec.ap(b.rename(a1, y, z), b.rename(a2, y, z));
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("a1=" + b.show(a1) + " a2=" + b.show(a2) +
                     " y=" + var_name(y) + " z=" + var_name(z),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":ce-S3-lam",
                .seed = mix_seed(seed, "ce-s3")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = b.sample(rng);
      VarId y = off(rng), z = off(rng);
      VarId x = off(rng);
      while (x == y || x == z) x = off(rng);
      A lhs = b.rename(spec.lm(x, a), y, z);
      A rhs = spec.lm(x, b.rename(a, y, z));
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("a=" + b.show(a) + " x=" + var_name(x) +
                     " y=" + var_name(y) + " z=" + var_name(z),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":ce-S4-lam-shadow",
                .seed = mix_seed(seed, "ce-s4")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = b.sample(rng);
      VarId x = off(rng), y = off(rng);
      A lhs = b.rename(spec.lm(x, a), y, x);
      A rhs = spec.lm(x, a);
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("a=" + b.show(a) + " x=" + var_name(x) + " y=" + var_name(y),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":ce-S5-lam-alpha",
                .seed = mix_seed(seed, "ce-s5")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = b.sample(rng);
      VarId x = off(rng), y = off(rng);
      VarId z = off(rng);
      while (z == y) z = off(rng);
      A az = b.rename(a, z, y);
      A lhs = spec.lm(x, az);
      A rhs = spec.lm(y, b.rename(az, y, x));
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("a=" + b.show(a) + " x=" + var_name(x) +
                     " y=" + var_name(y) + " z=" + var_name(z),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  return out;
}

// Recursor conformance: the constructor clauses, the renaming clause,
// representative independence, and fresh-policy independence.
template <class A>
std::vector<LawReport> check_recursor_clauses(const CERensetSpec<A>& spec,
                                              const AvoidSet& avoid,
                                              std::uint64_t seed, int trials,
                                              const VarPool& pool = {},
                                              std::size_t term_size = 9) {
  const RensetInstance<A>& b = spec.base;
  std::vector<LawReport> out;
  VarSet term_alphabet = default_alphabet();
  auto sample_term = [&](Rng& rng) {
    return random_term(rng, term_alphabet, term_size);
  };
  auto off = [&](Rng& rng) { return detail::off_avoid<A>(pool, rng, avoid); };

  {
    LawReport r{.law = spec.name + ":recursor-var-clause",
                .seed = mix_seed(seed, "rc-i")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      VarId x = pool.any(rng);
      A lhs = recurse(spec, avoid, Term::var(x));
      A rhs = spec.vr(x);
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("x=" + var_name(x), b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":recursor-app-clause",
                .seed = mix_seed(seed, "rc-ii")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term t1 = sample_term(rng), t2 = sample_term(rng);
      A lhs = recurse(spec, avoid, Term::app(t1, t2));
      A rhs = spec.ap(recurse(spec, avoid, t1), recurse(spec, avoid, t2));
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("t1=" + print_term_ref(t1) + " t2=" + print_term_ref(t2),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":recursor-lam-clause",
                .seed = mix_seed(seed, "rc-iii")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term t = sample_term(rng);
      VarId x = off(rng);
      A lhs = recurse(spec, avoid, Term::lam(x, t));
      A rhs = spec.lm(x, recurse(spec, avoid, t));
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("x=" + var_name(x) + " t=" + print_term_ref(t), b.show(lhs),
                 b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":recursor-rename-clause",
                .seed = mix_seed(seed, "rc-iv")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term t = sample_term(rng);
      VarId y = off(rng), z = off(rng);
      A lhs = recurse(spec, avoid, rename(t, y, z));
      A rhs = b.rename(recurse(spec, avoid, t), y, z);
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("t=" + print_term_ref(t) + " y=" + var_name(y) +
                     " z=" + var_name(z),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":recursor-alpha-invariance",
                .seed = mix_seed(seed, "rc-alpha")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term t = sample_term(rng);
      Term u = alpha_variant(t, rng);
      A lhs = recurse(spec, avoid, t);
      A rhs = recurse(spec, avoid, u);
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("t=" + print_term_ref(t) + " u=" + print_term_ref(u),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":recursor-fresh-policy",
                .seed = mix_seed(seed, "rc-fresh")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term t = sample_term(rng);
      A lhs = recurse(spec, avoid, t, FreshPolicy::Minimal);
      A rhs = recurse(spec, avoid, t, FreshPolicy::Shifted);
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("t=" + print_term_ref(t), b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  return out;
}

// RS1..RS5: the S laws with the Term components carried along.
template <class A>
std::vector<LawReport> check_frce_laws(const FRCESpec<A>& spec,
                                       const AvoidSet& avoid,
                                       std::uint64_t seed, int trials,
                                       const VarPool& pool = {},
                                       std::size_t term_size = 9) {
  const RensetInstance<A>& b = spec.base;
  std::vector<LawReport> out;
  VarSet term_alphabet = default_alphabet();
  auto sample_term = [&](Rng& rng) {
    return random_term(rng, term_alphabet, term_size);
  };
  auto off = [&](Rng& rng) { return detail::off_avoid<A>(pool, rng, avoid); };

  {
    LawReport r{.law = spec.name + ":frce-RS1-var",
                .seed = mix_seed(seed, "frce-rs1")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      VarId x = off(rng), y = off(rng), z = off(rng);
      A lhs = b.rename(spec.vr(x), y, z);
      A rhs = spec.vr(x == z ? y : x);
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("x=" + var_name(x) + " y=" + var_name(y) +
                     " z=" + var_name(z),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":frce-RS2-app",
                .seed = mix_seed(seed, "frce-rs2")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term t1 = sample_term(rng), t2 = sample_term(rng);
      A a1 = b.sample(rng), a2 = b.sample(rng);
      VarId y = off(rng), z = off(rng);
      A lhs = b.rename(spec.ap(t1, a1, t2, a2), y, z);
      A rhs = spec.ap(rename(t1, y, z), b.rename(a1, y, z),
                      rename(t2, y, z), b.rename(a2, y, z));
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("t1=" + print_term_ref(t1) + " t2=" + print_term_ref(t2) +
                     " a1=" + b.show(a1) + " a2=" + b.show(a2) +
                     " y=" + var_name(y) + " z=" + var_name(z),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":frce-RS3-lam",
                .seed = mix_seed(seed, "frce-rs3")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term t = sample_term(rng);
      A a = b.sample(rng);
      VarId y = off(rng), z = off(rng);
      VarId x = off(rng);
      while (x == y || x == z) x = off(rng);
      A lhs = b.rename(spec.lm(x, t, a), y, z);
      A rhs = spec.lm(x, rename(t, y, z), b.rename(a, y, z));
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("t=" + print_term_ref(t) + " a=" + b.show(a) +
                     " x=" + var_name(x) + " y=" + var_name(y) +
                     " z=" + var_name(z),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":frce-RS4-lam-shadow",
                .seed = mix_seed(seed, "frce-rs4")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term t = sample_term(rng);
      A a = b.sample(rng);
      VarId x = off(rng), y = off(rng);
      A lhs = b.rename(spec.lm(x, t, a), y, x);
      A rhs = spec.lm(x, t, a);
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("t=" + print_term_ref(t) + " a=" + b.show(a) +
                     " x=" + var_name(x) + " y=" + var_name(y),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":frce-RS5-lam-alpha",
                .seed = mix_seed(seed, "frce-rs5")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term t = sample_term(rng);
      A a = b.sample(rng);
      VarId x = off(rng), y = off(rng);
      VarId z = off(rng);
      while (z == y) z = off(rng);
      Term tz = rename(t, z, y);
      A az = b.rename(a, z, y);
      A lhs = spec.lm(x, tz, az);
      A rhs = spec.lm(y, rename(tz, y, x), b.rename(az, y, x));
      ++r.trials;
      if (!b.equal(lhs, rhs))
        r.record("t=" + print_term_ref(t) + " a=" + b.show(a) +
                     " x=" + var_name(x) + " y=" + var_name(y) +
                     " z=" + var_name(z),
                 b.show(lhs), b.show(rhs));
    }
    out.push_back(std::move(r));
  }

  return out;
}

// Substitution-set laws, the constructor compatibility laws, and the
// freshness facts of the induced renaming. Freshness side conditions are
// decided through the induced renaming (substitution of a fresh-pivot
// variable), never assumed.
template <class A>
std::vector<LawReport> check_subst_laws(const CESubstSpec<A>& spec,
                                        std::uint64_t seed, int trials,
                                        const VarPool& pool = {}) {
  std::vector<LawReport> out;
  RensetInstance<A> ind = induced_renset(spec);
  auto vsub = [&](const A& a, VarId x, VarId y) {  // a[[vr(x)/y]]
    return spec.subst(a, spec.vr(x), y);
  };
  auto fresh_for = [&](VarId x, const A& a) {
    return derived_fresh(ind, x, a);
  };

  {
    LawReport r{.law = spec.name + ":subst-identity",
                .seed = mix_seed(seed, "ss-identity")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = spec.sample(rng);
      VarId x = pool.any(rng);
      ++r.trials;
      if (!spec.equal(vsub(a, x, x), a))
        r.record("a=" + spec.show(a) + " x=" + var_name(x),
                 spec.show(vsub(a, x, x)), spec.show(a));
    }
    out.push_back(std::move(r));
  }

  {
    // After substituting a y-free payload for y, substituting at y again
    // has no effect.
    LawReport r{.law = spec.name + ":subst-idempotence",
                .seed = mix_seed(seed, "ss-idempotence")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = spec.sample(rng), b = spec.sample(rng);
      VarId y = pool.any(rng);
      VarId z = pool.other_than(rng, {y});
      VarId x = pool.other_than(rng, {y});
      A cleaned = spec.subst(a, vsub(b, z, y), y);
      A lhs = vsub(cleaned, x, y);
      ++r.trials;
      if (!spec.equal(lhs, cleaned))
        r.record("a=" + spec.show(a) + " b=" + spec.show(b) +
                     " x=" + var_name(x) + " y=" + var_name(y) +
                     " z=" + var_name(z),
                 spec.show(lhs), spec.show(cleaned));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":subst-chaining",
                .seed = mix_seed(seed, "ss-chaining")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = spec.sample(rng), b = spec.sample(rng);
      VarId x2 = pool.any(rng);
      VarId y = pool.other_than(rng, {x2});
      VarId x1 = pool.any(rng);
      A base = vsub(a, y, x2);
      A lhs = spec.subst(vsub(base, x2, x1), b, x2);
      A rhs = spec.subst(base, b, x1);
      ++r.trials;
      if (!spec.equal(lhs, rhs))
        r.record("a=" + spec.show(a) + " b=" + spec.show(b) +
                     " y=" + var_name(y) + " x1=" + var_name(x1) +
                     " x2=" + var_name(x2),
                 spec.show(lhs), spec.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":subst-commutativity",
                .seed = mix_seed(seed, "ss-commutativity")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = spec.sample(rng), b = spec.sample(rng), c = spec.sample(rng);
      VarId y1 = pool.any(rng);
      VarId y2 = pool.other_than(rng, {y1});
      VarId x1 = pool.other_than(rng, {y1});
      VarId x2 = pool.other_than(rng, {x1});
      A bp = vsub(b, y2, y1);
      A cp = vsub(c, x2, x1);
      A lhs = spec.subst(spec.subst(a, bp, x1), cp, y1);
      A rhs = spec.subst(spec.subst(a, cp, y1), bp, x1);
      ++r.trials;
      if (!spec.equal(lhs, rhs))
        r.record("a=" + spec.show(a) + " b=" + spec.show(b) +
                     " c=" + spec.show(c) + " x1=" + var_name(x1) +
                     " x2=" + var_name(x2) + " y1=" + var_name(y1) +
                     " y2=" + var_name(y2),
                 spec.show(lhs), spec.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":subst-S1-var",
                .seed = mix_seed(seed, "ss-s1")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A b = spec.sample(rng);
      VarId x = pool.any(rng), y = pool.any(rng);
      A lhs = spec.subst(spec.vr(x), b, y);
      A rhs = x == y ? b : spec.vr(x);
      ++r.trials;
      if (!spec.equal(lhs, rhs))
        r.record("b=" + spec.show(b) + " x=" + var_name(x) +
                     " y=" + var_name(y),
                 spec.show(lhs), spec.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":subst-S2-app",
                .seed = mix_seed(seed, "ss-s2")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a1 = spec.sample(rng), a2 = spec.sample(rng), b = spec.sample(rng);
      VarId y = pool.any(rng);
      A lhs = spec.subst(spec.ap(a1, a2), b, y);
      A rhs = spec.ap(spec.subst(a1, b, y), spec.subst(a2, b, y));
      ++r.trials;
      if (!spec.equal(lhs, rhs))
        r.record("a1=" + spec.show(a1) + " a2=" + spec.show(a2) +
                     " b=" + spec.show(b) + " y=" + var_name(y),
                 spec.show(lhs), spec.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    // Substitution pushes under a binder once the payload is cleansed of
    // the bound variable: with x != z, payload b[[z/x]] is x-free, so
    //   lm(x, a)[[ b[[z/x]] / y ]] = lm(x, a[[ b[[z/x]] / y ]])   (x != y)
    // and shadowing applies when x = y.
    LawReport r{.law = spec.name + ":subst-S3-lam",
                .seed = mix_seed(seed, "ss-s3")};
    r.meta =
        "payload read as b[[z/x]] on both sides; z sampled off x, half the "
        "time fresh for b";
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = spec.sample(rng), b = spec.sample(rng);
      VarId x = pool.any(rng);
      VarId y = rng.chance(1, 4) ? x : pool.any(rng);
      VarId z;
      if (rng.chance(1, 2)) {
        VarSet avoid = spec.support_bound(b);
        avoid.insert(x);
        avoid.insert(y);
        z = fresh_var(avoid);
      } else {
        z = pool.other_than(rng, {x});
      }
      A payload = vsub(b, z, x);
      A lhs = spec.subst(spec.lm(x, a), payload, y);
      A rhs = x == y ? spec.lm(x, a) : spec.lm(x, spec.subst(a, payload, y));
      ++r.trials;
      if (!spec.equal(lhs, rhs))
        r.record("a=" + spec.show(a) + " b=" + spec.show(b) +
                     " x=" + var_name(x) + " y=" + var_name(y) +
                     " z=" + var_name(z),
                 spec.show(lhs), spec.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = spec.name + ":subst-S4-lam-alpha",
                .seed = mix_seed(seed, "ss-s4")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = spec.sample(rng);
      VarId x = pool.any(rng), y = pool.any(rng);
      VarId z = pool.other_than(rng, {y});
      A az = vsub(a, z, y);
      A lhs = spec.lm(x, az);
      A rhs = spec.lm(y, vsub(az, y, x));
      ++r.trials;
      if (!spec.equal(lhs, rhs))
        r.record("a=" + spec.show(a) + " x=" + var_name(x) +
                     " y=" + var_name(y) + " z=" + var_name(z),
                 spec.show(lhs), spec.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    // Substituting at a variable fresh for the target has no effect.
    LawReport r{.law = spec.name + ":subst-fresh-noop",
                .seed = mix_seed(seed, "ss-p14-1")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = spec.sample(rng), b = spec.sample(rng);
      VarId y = pool.any(rng);
      VarId x = pool.other_than(rng, {y});
      if (!fresh_for(y, b)) continue;
      A stage = spec.subst(a, b, y);
      A lhs = vsub(stage, x, y);
      ++r.trials;
      if (!spec.equal(lhs, stage))
        r.record("a=" + spec.show(a) + " b=" + spec.show(b) +
                     " x=" + var_name(x) + " y=" + var_name(y),
                 spec.show(lhs), spec.show(stage));
    }
    out.push_back(std::move(r));
  }

  {
    // Routing a substitution through a variable fresh for the target.
    LawReport r{.law = spec.name + ":subst-fresh-chaining",
                .seed = mix_seed(seed, "ss-p14-2")};
    r.meta = "freshness premise taken on the substitution target";
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = spec.sample(rng), b = spec.sample(rng);
      VarId x2 = rng.chance(1, 2) ? fresh_var(spec.support_bound(a))
                                  : pool.any(rng);
      if (!fresh_for(x2, a)) continue;
      VarId x1 = pool.any(rng);
      A lhs = spec.subst(vsub(a, x2, x1), b, x2);
      A rhs = spec.subst(a, b, x1);
      ++r.trials;
      if (!spec.equal(lhs, rhs))
        r.record("a=" + spec.show(a) + " b=" + spec.show(b) +
                     " x1=" + var_name(x1) + " x2=" + var_name(x2),
                 spec.show(lhs), spec.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    // Independent substitutions commute when neither target variable is
    // free in the other payload.
    LawReport r{.law = spec.name + ":subst-fresh-commutativity",
                .seed = mix_seed(seed, "ss-p14-3")};
    r.meta = "premises: x != y, x fresh for c, y fresh for b";
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = spec.sample(rng), b = spec.sample(rng), c = spec.sample(rng);
      VarId x = pool.any(rng);
      VarId y = pool.other_than(rng, {x});
      if (!fresh_for(x, c) || !fresh_for(y, b)) continue;
      A lhs = spec.subst(spec.subst(a, b, x), c, y);
      A rhs = spec.subst(spec.subst(a, c, y), b, x);
      ++r.trials;
      if (!spec.equal(lhs, rhs))
        r.record("a=" + spec.show(a) + " b=" + spec.show(b) +
                     " c=" + spec.show(c) + " x=" + var_name(x) +
                     " y=" + var_name(y),
                 spec.show(lhs), spec.show(rhs));
    }
    out.push_back(std::move(r));
  }

  return out;
}

}  // namespace bindkit
