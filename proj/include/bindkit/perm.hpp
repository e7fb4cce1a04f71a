#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bindkit/instances.hpp"
#include "bindkit/renset.hpp"
#include "bindkit/term.hpp"

namespace bindkit {

// Finitely supported bijection on variables. Only moved points are
// stored; domain and image coincide by construction.
class FinPerm {
 public:
  FinPerm() = default;

  static FinPerm identity() { return {}; }
  static FinPerm transposition(VarId a, VarId b);

  // Built from an explicit mapping; throws std::invalid_argument unless
  // it is a bijection with image equal to its domain.
  static FinPerm from_map(const std::map<VarId, VarId>& m);

  VarId operator()(VarId v) const;

  // compose(sigma, tau)(x) = sigma(tau(x)): the right argument acts first.
  FinPerm compose(const FinPerm& tau) const;
  FinPerm inverse() const;

  VarSet moved() const;
  bool is_identity() const { return fwd_.empty(); }

  // Canonical decomposition into transpositions: cycles visited from
  // their smallest moved index upward, each cycle (c0 c1 ... ck) emitted
  // as (c0 c1), (c0 c2), ..., (c0 ck). Applying the list left to right
  // (first element first) as swaps realizes the permutation.
  std::vector<std::pair<VarId, VarId>> transpositions() const;

  friend bool operator==(const FinPerm&, const FinPerm&) = default;

  nlohmann::ordered_json to_json() const;
  static FinPerm from_json(const nlohmann::json& j);
  std::string show() const;

 private:
  std::map<VarId, VarId> fwd_;  // no fixed points stored
};

// Applies the permutation to every occurrence, free and bound, by folding
// its transposition decomposition through term swapping. Agrees with the
// direct simultaneous relabeling because the permutation is injective.
Term perm_action_term(const Term& t, const FinPerm& p);

// Uniform random permutation of the given window (other points fixed).
FinPerm random_perm(Rng& rng, const std::vector<VarId>& window);

// A carrier with a permutation action satisfying
//   Identity          act(a, id) = a
//   Compositionality  act(act(a, sigma), tau) = act(a, compose(tau, sigma))
// (the permutation applied first sits on the right of the composite).
template <class A>
struct PermNominalInstance {
  std::string name;
  std::function<A(const A&, const FinPerm&)> act;
  std::function<bool(const A&, const A&)> equal;
  std::function<VarSet(const A&)> support_bound;
  std::function<A(Rng&)> sample;
  std::function<std::string(const A&)> show;
};

// Restriction of a permutation action to transpositions.
template <class A>
NominalInstance<A> to_swap_action(const PermNominalInstance<A>& p) {
  NominalInstance<A> n;
  n.name = p.name + "/as-swaps";
  n.swap = [p](const A& a, VarId x1, VarId x2) {
    return p.act(a, FinPerm::transposition(x1, x2));
  };
  n.equal = p.equal;
  n.support_bound = p.support_bound;
  n.sample = p.sample;
  n.show = p.show;
  return n;
}

// Extension of a swapping action to permutations by folding the canonical
// transposition decomposition. Well-definedness (independence of the
// decomposition) is a checked property, not an assumption.
template <class A>
PermNominalInstance<A> to_perm_action(const NominalInstance<A>& n) {
  PermNominalInstance<A> p;
  p.name = n.name + "/as-perms";
  p.act = [n](const A& a, const FinPerm& perm) {
    A acc = a;
    for (const auto& [u, v] : perm.transpositions()) acc = n.swap(acc, u, v);
    return acc;
  };
  p.equal = n.equal;
  p.support_bound = n.support_bound;
  p.sample = n.sample;
  p.show = n.show;
  return p;
}

Term direct_relabel_term(const Term& t, const FinPerm& p);  // oracle route

// Group laws of FinPerm itself plus the two action laws of an instance.
std::vector<LawReport> check_perm_group_laws(std::uint64_t seed, int trials);

template <class A>
std::vector<LawReport> check_perm_action_laws(
    const PermNominalInstance<A>& inst, std::uint64_t seed, int trials,
    const std::vector<VarId>& window = {vid(0), vid(1), vid(2), vid(3)}) {
  std::vector<LawReport> out;

  {
    LawReport r{.law = inst.name + ":perm-identity",
                .seed = mix_seed(seed, "perm-identity")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      ++r.trials;
      if (!inst.equal(inst.act(a, FinPerm::identity()), a))
        r.record("a=" + inst.show(a),
                 inst.show(inst.act(a, FinPerm::identity())), inst.show(a));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = inst.name + ":perm-compositionality",
                .seed = mix_seed(seed, "perm-compositionality")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      FinPerm sigma = random_perm(rng, window);
      FinPerm tau = random_perm(rng, window);
      A lhs = inst.act(inst.act(a, sigma), tau);
      A rhs = inst.act(a, tau.compose(sigma));
      ++r.trials;
      if (!inst.equal(lhs, rhs))
        r.record("a=" + inst.show(a) + " sigma=" + sigma.show() +
                     " tau=" + tau.show(),
                 inst.show(lhs), inst.show(rhs));
    }
    out.push_back(std::move(r));
  }

  return out;
}

// Round-trip checks between the two presentations on a given instance
// pair: to_perm_action(to_swap_action(p)) against p, and
// to_swap_action(to_perm_action(n)) against n.
template <class A>
std::vector<LawReport> check_perm_roundtrip(
    const PermNominalInstance<A>& p, const NominalInstance<A>& n,
    std::uint64_t seed, int trials,
    const std::vector<VarId>& window = {vid(0), vid(1), vid(2), vid(3)}) {
  std::vector<LawReport> out;

  {
    LawReport r{.law = p.name + ":roundtrip-perm-swap-perm",
                .seed = mix_seed(seed, "roundtrip-psp")};
    Rng rng(r.seed);
    PermNominalInstance<A> back = to_perm_action(to_swap_action(p));
    for (int i = 0; i < trials; ++i) {
      A a = p.sample(rng);
      FinPerm sigma = random_perm(rng, window);
      A lhs = back.act(a, sigma);
      A rhs = p.act(a, sigma);
      ++r.trials;
      if (!p.equal(lhs, rhs))
        r.record("a=" + p.show(a) + " sigma=" + sigma.show(), p.show(lhs),
                 p.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = n.name + ":roundtrip-swap-perm-swap",
                .seed = mix_seed(seed, "roundtrip-sps")};
    Rng rng(r.seed);
    NominalInstance<A> back = to_swap_action(to_perm_action(n));
    VarPool pool;
    for (int i = 0; i < trials; ++i) {
      A a = n.sample(rng);
      VarId x1 = pool.any(rng);
      VarId x2 = pool.any(rng);
      A lhs = back.swap(a, x1, x2);
      A rhs = n.swap(a, x1, x2);
      ++r.trials;
      if (!n.equal(lhs, rhs))
        r.record("a=" + n.show(a) + " x1=" + var_name(x1) +
                     " x2=" + var_name(x2),
                 n.show(lhs), n.show(rhs));
    }
    out.push_back(std::move(r));
  }

  {
    // Well-definedness of the fold: the canonical decomposition and a
    // reversed-order alternative must produce the same action.
    LawReport r{.law = n.name + ":decomposition-independence",
                .seed = mix_seed(seed, "decomp-indep")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = n.sample(rng);
      FinPerm sigma = random_perm(rng, window);
      A lhs = a;
      for (const auto& [u, v] : sigma.transpositions()) lhs = n.swap(lhs, u, v);
      // sigma = (sigma^-1)^-1: folding the inverse decomposition of the
      // inverse, reversed, is a second decomposition of sigma.
      auto alt = sigma.inverse().transpositions();
      A rhs = a;
      for (auto it = alt.rbegin(); it != alt.rend(); ++it)
        rhs = n.swap(rhs, it->first, it->second);
      ++r.trials;
      if (!n.equal(lhs, rhs))
        r.record("a=" + n.show(a) + " sigma=" + sigma.show(), n.show(lhs),
                 n.show(rhs));
    }
    out.push_back(std::move(r));
  }

  return out;
}

// Terms under the permutation action.
PermNominalInstance<Term> term_perm_nominal(
    std::size_t sampler_max_size = 12,
    const VarSet& alphabet = default_alphabet());

}  // namespace bindkit
