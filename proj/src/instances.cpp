#include "bindkit/instances.hpp"

#include "bindkit/enumerate.hpp"
#include "bindkit/parse.hpp"

namespace bindkit {

VarSet default_alphabet() {
  return VarSet{vid(0), vid(1), vid(2), vid(3), vid(4), vid(5)};
}

RensetInstance<Term> term_renset(std::size_t sampler_max_size,
                                 const VarSet& alphabet) {
  RensetInstance<Term> r;
  r.name = "term";
  r.rename = [](const Term& t, VarId to, VarId from) {
    return rename(t, to, from);
  };
  r.equal = alpha_eq;
  r.support_bound = [](const Term& t) { return free_vars(t); };
  r.sample = [alphabet, sampler_max_size](Rng& rng) {
    return random_term(rng, alphabet, sampler_max_size);
  };
  r.show = [](const Term& t) { return print_term(t); };
  return r;
}

RensetInstance<VarId> var_renset(const VarSet& alphabet) {
  RensetInstance<VarId> r;
  r.name = "var";
  r.rename = [](const VarId& v, VarId to, VarId from) {
    return v == from ? to : v;
  };
  r.equal = [](const VarId& a, const VarId& b) { return a == b; };
  r.support_bound = [](const VarId& v) { return VarSet{v}; };
  r.sample = [alphabet](Rng& rng) {
    return alphabet.items()[rng.below(alphabet.size())];
  };
  r.show = [](const VarId& v) { return var_name(v); };
  return r;
}

NominalInstance<Term> term_nominal_direct(std::size_t sampler_max_size,
                                          const VarSet& alphabet) {
  NominalInstance<Term> n;
  n.name = "term/direct-swap";
  n.swap = [](const Term& t, VarId x1, VarId x2) { return swap(t, x1, x2); };
  n.equal = alpha_eq;
  n.support_bound = [](const Term& t) { return free_vars(t); };
  n.sample = [alphabet, sampler_max_size](Rng& rng) {
    return random_term(rng, alphabet, sampler_max_size);
  };
  n.show = [](const Term& t) { return print_term(t); };
  return n;
}

namespace {

PreTerm naive_rename_rec(const PreTerm& t, VarId to, VarId from) {
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      return t.var() == from ? PreTerm::var(to) : t;
    case PreTerm::Kind::App:
      return PreTerm::app(naive_rename_rec(t.fun(), to, from),
                          naive_rename_rec(t.arg(), to, from));
    case PreTerm::Kind::Lam:
      // Classic textbook bug: shadowing is respected, but a binder named
      // `to` silently captures the renamed occurrences. The chaining law
      // tells the two apart: one route loses a free variable to capture,
      // the other keeps it.
      if (t.var() == from) return t;
      return PreTerm::lam(t.var(), naive_rename_rec(t.body(), to, from));
  }
  return t;
}

PreTerm occurrence_swap_rec(const PreTerm& t, VarId x1, VarId x2) {
  auto tr = [&](VarId v) { return v == x1 ? x2 : (v == x2 ? x1 : v); };
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      return PreTerm::var(tr(t.var()));
    case PreTerm::Kind::App:
      return PreTerm::app(occurrence_swap_rec(t.fun(), x1, x2),
                          occurrence_swap_rec(t.arg(), x1, x2));
    case PreTerm::Kind::Lam:
      // Binding position left alone.
      return PreTerm::lam(t.var(), occurrence_swap_rec(t.body(), x1, x2));
  }
  return t;
}

}  // namespace

RensetInstance<Term> term_renset_broken_naive(std::size_t sampler_max_size,
                                              const VarSet& alphabet) {
  RensetInstance<Term> r = term_renset(sampler_max_size, alphabet);
  r.name = "term/broken-naive-rename";
  r.rename = [](const Term& t, VarId to, VarId from) {
    return Term(naive_rename_rec(t.repr(), to, from));
  };
  return r;
}

NominalInstance<Term> term_nominal_broken_binders(
    std::size_t sampler_max_size, const VarSet& alphabet) {
  NominalInstance<Term> n = term_nominal_direct(sampler_max_size, alphabet);
  n.name = "term/broken-occurrence-swap";
  n.swap = [](const Term& t, VarId x1, VarId x2) {
    return Term(occurrence_swap_rec(t.repr(), x1, x2));
  };
  return n;
}

std::vector<LawReport> check_derived_swap_agreement(std::uint64_t seed,
                                                    int trials) {
  std::vector<LawReport> out;
  RensetInstance<Term> inst = term_renset();
  VarPool pool;

  {
    LawReport r{.law = "term:derived-vs-direct-swap",
                .seed = mix_seed(seed, "dswap-agree")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term a = inst.sample(rng);
      VarId x1 = pool.any(rng), x2 = pool.any(rng);
      Term lhs = derived_swap(inst, a, x1, x2);
      Term rhs = swap(a, x1, x2);
      ++r.trials;
      if (!alpha_eq(lhs, rhs))
        r.record("a=" + print_term(a) + " x1=" + var_name(x1) +
                     " x2=" + var_name(x2),
                 print_term(lhs), print_term(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = "term:derived-swap-pivot-independence",
                .seed = mix_seed(seed, "dswap-pivot")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term a = inst.sample(rng);
      VarId x1 = pool.any(rng), x2 = pool.any(rng);
      VarSet bound = free_vars(a).unioned(VarSet{x1, x2});
      VarId y1 = fresh_var(bound);
      VarSet bound2 = bound;
      bound2.insert(y1);
      VarId y2 = rng.chance(1, 2) ? fresh_var(bound2)
                                  : vid(64 + static_cast<std::uint32_t>(
                                                 rng.below(16)));
      if (bound.contains(y2)) y2 = fresh_var(bound2);
      Term lhs = derived_swap_with_pivot(inst, a, x1, x2, y1);
      Term rhs = derived_swap_with_pivot(inst, a, x1, x2, y2);
      ++r.trials;
      if (!alpha_eq(lhs, rhs))
        r.record("a=" + print_term(a) + " x1=" + var_name(x1) + " x2=" +
                     var_name(x2) + " y1=" + var_name(y1) +
                     " y2=" + var_name(y2),
                 print_term(lhs), print_term(rhs));
    }
    out.push_back(std::move(r));
  }

  return out;
}

std::vector<LawReport> check_term_swap_constructor_laws(std::uint64_t seed,
                                                        int trials) {
  std::vector<LawReport> out;
  VarPool pool;
  VarSet alphabet = default_alphabet();
  auto sample = [&](Rng& rng) { return random_term(rng, alphabet, 10); };
  auto tr = [](VarId v, VarId y, VarId z) {
    return v == y ? z : (v == z ? y : v);
  };

  {
    LawReport r{.law = "term:swap-vr", .seed = mix_seed(seed, "cn-vr")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      VarId x = pool.any(rng), y = pool.any(rng), z = pool.any(rng);
      Term lhs = swap(Term::var(x), y, z);
      Term rhs = Term::var(tr(x, y, z));
      ++r.trials;
      if (!alpha_eq(lhs, rhs))
        r.record("x=" + var_name(x) + " y=" + var_name(y) +
                     " z=" + var_name(z),
                 print_term(lhs), print_term(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = "term:swap-ap", .seed = mix_seed(seed, "cn-ap")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term a1 = sample(rng), a2 = sample(rng);
      VarId y = pool.any(rng), z = pool.any(rng);
      Term lhs = swap(Term::app(a1, a2), y, z);
      Term rhs = Term::app(swap(a1, y, z), swap(a2, y, z));
      ++r.trials;
      if (!alpha_eq(lhs, rhs))
        r.record("a1=" + print_term(a1) + " a2=" + print_term(a2) +
                     " y=" + var_name(y) + " z=" + var_name(z),
                 print_term(lhs), print_term(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = "term:swap-lm", .seed = mix_seed(seed, "cn-lm")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term a = sample(rng);
      VarId x = pool.any(rng), y = pool.any(rng), z = pool.any(rng);
      Term lhs = swap(Term::lam(x, a), y, z);
      Term rhs = Term::lam(tr(x, y, z), swap(a, y, z));
      ++r.trials;
      if (!alpha_eq(lhs, rhs))
        r.record("a=" + print_term(a) + " x=" + var_name(x) +
                     " y=" + var_name(y) + " z=" + var_name(z),
                 print_term(lhs), print_term(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    // Swapping the binder with a variable the abstraction cannot see
    // fixes the abstraction; checked at two independent outside picks.
    LawReport r{.law = "term:swap-binder-fresh",
                .seed = mix_seed(seed, "cn-fcb")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      Term a = sample(rng);
      VarId x = pool.any(rng);
      Term lam = Term::lam(x, a);
      VarSet outside = free_vars(lam);
      outside.insert(x);
      VarId y1 = fresh_var(outside);
      outside.insert(y1);
      VarId y2 = fresh_var(outside);
      ++r.trials;
      bool ok1 = alpha_eq(swap(lam, y1, x), lam);
      bool ok2 = alpha_eq(swap(lam, y2, x), lam);
      if (!ok1 || !ok2)
        r.record("a=" + print_term(a) + " x=" + var_name(x) +
                     " y1=" + var_name(y1) + " y2=" + var_name(y2),
                 print_term(swap(lam, ok1 ? y2 : y1, x)), print_term(lam));
    }
    out.push_back(std::move(r));
  }

  return out;
}

namespace {

struct SupportedFn {
  std::string label;
  VarSet support;
  std::function<Term(const Term&)> apply;
};

std::vector<SupportedFn> supported_fn_family(Rng& rng, const VarSet& alphabet) {
  auto pick = [&](VarSet minus) {
    for (;;) {
      VarId v = alphabet.items()[rng.below(alphabet.size())];
      if (!minus.contains(v)) return v;
    }
  };
  VarId x0 = pick({});
  VarId y0 = pick(VarSet{x0});
  Term b0 = random_term(rng, alphabet, 6);
  VarSet subst_support = free_vars(b0);
  subst_support.insert(x0);
  return {
      {"rename[" + var_name(y0) + "/" + var_name(x0) + "]", VarSet{x0, y0},
       [x0, y0](const Term& t) { return rename(t, y0, x0); }},
      {"swap[" + var_name(x0) + "^" + var_name(y0) + "]", VarSet{x0, y0},
       [x0, y0](const Term& t) { return swap(t, x0, y0); }},
      {"subst[" + print_term(b0) + "/" + var_name(x0) + "]", subst_support,
       [x0, b0](const Term& t) { return subst(t, b0, x0); }},
      {"lam[" + var_name(x0) + "]", VarSet{x0},
       [x0](const Term& t) { return Term::lam(x0, t); }},
  };
}

}  // namespace

std::vector<LawReport> check_term_function_support(std::uint64_t seed,
                                                   int trials) {
  std::vector<LawReport> out;
  VarPool pool;
  VarSet alphabet = default_alphabet();
  auto sample = [&](Rng& rng) { return random_term(rng, alphabet, 10); };

  {
    // Outside the declared support, the function commutes with swapping;
    // equivalently the swap action on functions fixes it.
    LawReport r{.law = "term:fn-supported-outside",
                .seed = mix_seed(seed, "l9-out")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      auto family = supported_fn_family(rng, alphabet);
      const SupportedFn& f = family[rng.below(family.size())];
      Term a = sample(rng);
      auto off_support = [&](Rng& r2) {
        if (r2.chance(1, 3)) {
          VarSet blocked = f.support.unioned(free_vars(a));
          return fresh_var(blocked);
        }
        for (;;) {
          VarId v = pool.any(r2);
          if (!f.support.contains(v)) return v;
        }
      };
      VarId x = off_support(rng);
      VarId y = off_support(rng);
      Term commuted = f.apply(swap(a, x, y));
      Term acted = swap(f.apply(a), x, y);
      Term fixedpt = swap(f.apply(swap(a, x, y)), x, y);
      ++r.trials;
      if (!alpha_eq(commuted, acted) || !alpha_eq(fixedpt, f.apply(a)))
        r.record("f=" + f.label + " a=" + print_term(a) + " x=" + var_name(x) +
                     " y=" + var_name(y),
                 print_term(commuted), print_term(acted));
    }
    out.push_back(std::move(r));
  }

  {
    // For arbitrary swap pairs (inside the support or not), the two
    // formulations hold or fail together: f(a[x^y])[x^y] = f a iff
    // f(a[x^y]) = (f a)[x^y].
    LawReport r{.law = "term:fn-support-two-readings",
                .seed = mix_seed(seed, "l9-iff")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      auto family = supported_fn_family(rng, alphabet);
      const SupportedFn& f = family[rng.below(family.size())];
      Term a = sample(rng);
      VarId x = pool.any(rng), y = pool.any(rng);
      Term moved = f.apply(swap(a, x, y));
      bool fix = alpha_eq(swap(moved, x, y), f.apply(a));
      bool comm = alpha_eq(moved, swap(f.apply(a), x, y));
      ++r.trials;
      if (fix != comm)
        r.record("f=" + f.label + " a=" + print_term(a) + " x=" + var_name(x) +
                     " y=" + var_name(y),
                 fix ? "fixed-point reading holds" : "fixed-point reading fails",
                 comm ? "commutation reading holds" : "commutation reading fails");
    }
    out.push_back(std::move(r));
  }

  return out;
}

}  // namespace bindkit
