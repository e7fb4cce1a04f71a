#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "bindkit/recursion.hpp"

namespace bindkit {

// Total environment: a fallback function plus finitely many overrides.
// update returns a copy; environments are values.
template <class D>
struct Env {
  std::function<D(VarId)> base;
  std::map<VarId, D> overrides;

  D at(VarId v) const {
    auto it = overrides.find(v);
    return it != overrides.end() ? it->second : base(v);
  }

  Env update(VarId x, D d) const {
    Env e = *this;
    e.overrides.insert_or_assign(x, std::move(d));
    return e;
  }
};

// An interpretation: a function from environments to domain values.
// bound over-approximates the variables run may consult, so equality can
// probe environments that differ on everything relevant; label is a
// human-readable trace of how the interpretation was built.
template <class D>
struct Interp {
  std::function<D(const Env<D>&)> run;
  VarSet bound;
  std::string label;
};

// Semantic domain: application, abstraction over D -> D, and a finite
// probe set driving extensional comparison of interpretations.
template <class D>
struct SemDomain {
  std::string name;
  std::function<D(const D&, const D&)> ap;
  std::function<D(const std::function<D(const D&)>&)> lm;
  std::vector<D> equal_probe;
  std::function<bool(const D&, const D&)> equal;
  std::function<std::string(const D&)> show;
};

// Deterministic environment family for extensional comparison: one
// constant environment per probe value, then affine mixes over variable
// indices, half of them with explicit overrides on the variables in play.
// At least 50 environments whenever the probe set is nonempty.
template <class D>
std::vector<Env<D>> probe_envs(const SemDomain<D>& dom, const VarSet& vars) {
  std::vector<Env<D>> out;
  const std::vector<D> probes = dom.equal_probe;
  if (probes.empty()) return out;
  const std::size_t n = probes.size();
  for (std::size_t k = 0; k < n; ++k)
    out.push_back(Env<D>{[probes, k](VarId) { return probes[k]; }, {}});
  std::vector<VarId> play = vars.items();
  for (std::size_t k = 0; k < 52; ++k) {
    std::size_t a = 1 + (k % 7), b = (3 * k + 1) % n;
    Env<D> e{[probes, a, b, n](VarId v) {
               return probes[(a * (v.index + 1) + b) % n];
             },
             {}};
    if (k % 2 == 1)
      for (std::size_t j = 0; j < play.size(); ++j)
        e.overrides.insert_or_assign(play[j], probes[(k + j) % n]);
    out.push_back(std::move(e));
  }
  return out;
}

// Extensional equality over the union of both support bounds plus a fixed
// window, so disagreement on any consulted variable is reachable.
template <class D>
bool interp_equal(const SemDomain<D>& dom, const Interp<D>& i,
                  const Interp<D>& j) {
  VarSet vars = i.bound.unioned(j.bound).unioned(default_alphabet());
  for (const auto& e : probe_envs(dom, vars))
    if (!dom.equal(i.run(e), j.run(e))) return false;
  return true;
}

namespace seminterp {

template <class D>
Interp<D> vr(VarId x) {
  return {[x](const Env<D>& e) { return e.at(x); }, VarSet{x}, var_name(x)};
}

template <class D>
Interp<D> ap(const SemDomain<D>& dom, const Interp<D>& i1,
             const Interp<D>& i2) {
  return {[apf = dom.ap, r1 = i1.run, r2 = i2.run](const Env<D>& e) {
            return apf(r1(e), r2(e));
          },
          i1.bound.unioned(i2.bound), "(" + i1.label + " " + i2.label + ")"};
}

template <class D>
Interp<D> lm(const SemDomain<D>& dom, VarId x, const Interp<D>& i) {
  return {[lmf = dom.lm, r = i.run, x](const Env<D>& e) {
            return lmf([r, x, e](const D& d) { return r(e.update(x, d)); });
          },
          i.bound.minus(VarSet{x}), "\\" + var_name(x) + ". " + i.label};
}

// Renaming on interpretations: read the new variable, write it over the
// old one, then run.
template <class D>
Interp<D> rename_i(const Interp<D>& i, VarId to, VarId from) {
  return {[r = i.run, to, from](const Env<D>& e) {
            return r(e.update(from, e.at(to)));
          },
          i.bound.minus(VarSet{from}).unioned(VarSet{to}),
          i.label + "[" + var_name(to) + "/" + var_name(from) + "]"};
}

// Swapping on interpretations, for the binder-freshness contrast only.
template <class D>
Interp<D> swap_i(const Interp<D>& i, VarId x, VarId y) {
  return {[r = i.run, x, y](const Env<D>& e) {
            D dx = e.at(x), dy = e.at(y);
            return r(e.update(x, std::move(dy)).update(y, std::move(dx)));
          },
          i.bound.unioned(VarSet{x, y}),
          i.label + "[" + var_name(x) + "^" + var_name(y) + "]"};
}

template <class D>
Interp<D> of_preterm(const SemDomain<D>& dom, const PreTerm& t) {
  switch (t.kind()) {
    case PreTerm::Kind::Var:
      return vr<D>(t.var());
    case PreTerm::Kind::App:
      return ap(dom, of_preterm(dom, t.fun()), of_preterm(dom, t.arg()));
    case PreTerm::Kind::Lam:
      return lm(dom, t.var(), of_preterm(dom, t.body()));
  }
  return vr<D>(vid(0));
}

}  // namespace seminterp

// The constructor-and-renaming structure on interpretations. Samples are
// interpretations folded from random terms, occasionally pre-renamed or
// replaced by a bare variable reader with a wide index.
template <class D>
CERensetSpec<Interp<D>> interp_ce_spec(const SemDomain<D>& dom,
                                       std::size_t sampler_max_size = 8) {
  using I = Interp<D>;
  CERensetSpec<I> s;
  s.name = "interp-" + dom.name;
  s.vr = [](VarId x) { return seminterp::vr<D>(x); };
  s.ap = [dom](const I& i1, const I& i2) { return seminterp::ap(dom, i1, i2); };
  s.lm = [dom](VarId x, const I& i) { return seminterp::lm(dom, x, i); };
  s.base.name = s.name;
  s.base.rename = [](const I& i, VarId to, VarId from) {
    return seminterp::rename_i(i, to, from);
  };
  s.base.equal = [dom](const I& i, const I& j) {
    return interp_equal(dom, i, j);
  };
  s.base.support_bound = [](const I& i) { return i.bound; };
  s.base.sample = [dom, sampler_max_size](Rng& rng) {
    if (rng.chance(1, 8))
      return seminterp::vr<D>(vid(40 + static_cast<std::uint32_t>(rng.below(8))));
    Term t = random_term(rng, default_alphabet(), sampler_max_size);
    I i = seminterp::of_preterm(dom, t.repr());
    if (rng.chance(1, 4)) {
      VarPool pool;
      i = seminterp::rename_i(i, pool.any(rng), pool.any(rng));
    }
    return i;
  };
  s.base.show = [](const I& i) {
    return i.label + " |bound " + i.bound.show();
  };
  return s;
}

// Interpretation of a term under an environment, built through the
// recursion engine over the interpretation structure.
template <class D>
D sem(const SemDomain<D>& dom, const Term& t, const Env<D>& xi) {
  return recurse(interp_ce_spec<D>(dom), AvoidSet{}, t).run(xi);
}

// Binder-freshness contrast on interpretations. Two reports:
//  (a) renaming-derived freshness of the bound variable always holds,
//      since overriding x before overriding it again is a no-op;
//  (b) the swapping-based analogue fails: for any candidate finite
//      exception set there is an interpretation reading a variable
//      outside it that the swap moves. Recorded violations in (b) are the
//      constructed counterexamples; on a one-point domain both pass.
template <class D>
std::vector<LawReport> fcb_contrast_report(const SemDomain<D>& dom,
                                           std::uint64_t seed, int trials) {
  using I = Interp<D>;
  std::vector<LawReport> out;
  CERensetSpec<I> spec = interp_ce_spec<D>(dom);
  VarPool pool;

  {
    LawReport r{.law = "interp-" + dom.name + ":fcb-renaming-fresh",
                .seed = mix_seed(seed, "fcb-ren")};
    Rng rng(r.seed);
    for (int k = 0; k < trials; ++k) {
      I i = spec.base.sample(rng);
      VarId x = pool.any(rng);
      VarId y = rng.chance(1, 3)
                    ? vid(100 + static_cast<std::uint32_t>(rng.below(64)))
                    : pool.any(rng);
      I body = spec.lm(x, i);
      I lhs = spec.base.rename(body, y, x);
      ++r.trials;
      if (!spec.base.equal(lhs, body))
        r.record("i=" + spec.base.show(i) + " x=" + var_name(x) +
                     " y=" + var_name(y),
                 lhs.label, body.label);
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = "interp-" + dom.name + ":fcb-swapping-analogue",
                .seed = mix_seed(seed, "fcb-swap")};
    r.meta =
        "violations are the constructed counterexamples: a variable reader "
        "outside any finite exception set that the swap moves";
    Rng rng(r.seed);
    for (int k = 0; k < trials; ++k) {
      VarId x = pool.any(rng);
      VarId y0 = rng.chance(1, 2)
                     ? vid(200 + static_cast<std::uint32_t>(rng.below(1000)))
                     : pool.other_than(rng, {x});
      I probe = seminterp::vr<D>(y0);
      I body = spec.lm(x, probe);
      I lhs = seminterp::swap_i(body, x, y0);
      ++r.trials;
      if (!spec.base.equal(lhs, body))
        r.record("i=reader-of-" + var_name(y0) + " x=" + var_name(x) +
                     " y0=" + var_name(y0),
                 lhs.label, body.label);
    }
    out.push_back(std::move(r));
  }

  return out;
}

// ---- normalization by evaluation ----

struct FuelExhausted : std::runtime_error {
  explicit FuelExhausted(long long budget)
      : std::runtime_error("fuel exhausted after " + std::to_string(budget) +
                           " beta steps") {}
};

// Value domain for normalization: a stuck application spine headed by a
// variable, or a function awaiting an argument.
class SemVal {
 public:
  static SemVal neutral(VarId head, std::vector<SemVal> spine);
  static SemVal closure(std::function<SemVal(const SemVal&)> fn);

  bool is_closure() const { return n_->closure; }
  VarId head() const { return n_->head; }
  const std::vector<SemVal>& spine() const { return n_->spine; }
  SemVal apply_closure(const SemVal& arg) const { return n_->fn(arg); }

 private:
  struct Node {
    bool closure = false;
    VarId head;
    std::vector<SemVal> spine;
    std::function<SemVal(const SemVal&)> fn;
  };
  std::shared_ptr<const Node> n_;
  explicit SemVal(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
};

// Beta-normal form computed by evaluating into SemVal and reading back.
// fuel bounds the number of closure applications; exceeding it raises
// FuelExhausted. fuel must be at least 1.
Term normalize(const Term& t, long long fuel);

// ---- example functions: engines ----

CERensetSpec<unsigned long long> length_spec();
CERensetSpec<unsigned long long> clam_spec();

// Finitely supported variable-occurrence counts; the renaming action
// merges counts into the new variable and zeroes the old one.
struct VarCount {
  std::map<VarId, unsigned long long> at;  // absent means zero

  unsigned long long value(VarId v) const;
  void set(VarId v, unsigned long long n);
  bool operator==(const VarCount&) const = default;
  std::string show() const;
};

CERensetSpec<VarCount> cfv_spec();

// Flat domains driving the environment-based examples: numeric with
// binders valued 1, and boolean-conjunction with binders valued true.
SemDomain<long long> flat_sum_domain();
SemDomain<long long> flat_and_domain();

// Fixture domain parameters: arithmetic mod a prime, with documented
// default coefficients. Files are key=value lines; '#' starts a comment.
struct FixtureConfig {
  long long modulus = 101;
  long long ap_a = 3, ap_b = 5, ap_c = 7, ap_k = 1;
  long long lm_a = 3, lm_b = 5, lm_k = 11;
  long long lm_probe = 11;

  static FixtureConfig defaults() { return {}; }
  static FixtureConfig load(const std::string& path);
  std::string describe() const;
};

SemDomain<long long> arith_domain(const FixtureConfig& cfg = {});
SemDomain<long long> one_point_domain();

unsigned long long length_of(const Term& t);
unsigned long long clam(const Term& t);
unsigned long long cfv(const Term& t, VarId x);
unsigned long long cbv(const Term& t);
bool can_eta(const Term& t);

Term subst_via_recursor(const Term& t, const Term& s, VarId x);
Term psubst_via_recursor(const Term& t, const FinTermEnv& rho);

// ---- example functions: structural oracles ----
// Independent route: plain recursion over the nameless form (or, for the
// substitution pair, the direct capture-avoiding walkers), sharing no code
// with the engines above.

unsigned long long length_structural(const Term& t);
unsigned long long clam_structural(const Term& t);
unsigned long long cfv_structural(const Term& t, VarId x);
unsigned long long cbv_structural(const Term& t);
bool can_eta_structural(const Term& t);

// Engine-vs-oracle agreement: exhaustive over enum_terms(max_size, vars),
// then random_trials seeded random terms of size <= 25. Known names:
// length, clam, cfv, subst, psubst, cbv, caneta. Unknown names throw
// std::invalid_argument.
LawReport cross_check(const std::string& function_name, std::size_t max_size,
                      const VarSet& vars, std::uint64_t seed,
                      int random_trials);

std::vector<std::string> cross_check_names();

}  // namespace bindkit
