#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bindkit/report.hpp"
#include "bindkit/rng.hpp"
#include "bindkit/var.hpp"

namespace bindkit {

// A carrier with a renaming action. rename(a, to, from) substitutes the
// variable `from` by `to`. The four laws a lawful instance satisfies:
//   Identity       rename(a, x, x) = a
//   Idempotence    x1 != y  =>  a[x1/y][x2/y] = a[x1/y]
//   Chaining       y != x2  =>  a[y/x2][x2/x1][x3/x2] = a[y/x2][x3/x1]
//   Commutativity  x2 != y1, y1 != x1, x1 != y2  =>
//                  a[x2/x1][y2/y1] = a[y2/y1][x2/x1]
// support_bound(a) is any finite superset of the non-fresh variables; the
// checkers validate that claim rather than assume it.
template <class A>
struct RensetInstance {
  std::string name;
  std::function<A(const A&, VarId, VarId)> rename;  // (a, to, from)
  std::function<bool(const A&, const A&)> equal;
  std::function<VarSet(const A&)> support_bound;
  std::function<A(Rng&)> sample;
  std::function<std::string(const A&)> show;
};

// A carrier with a swapping action; same support_bound discipline.
template <class A>
struct NominalInstance {
  std::string name;
  std::function<A(const A&, VarId, VarId)> swap;
  std::function<bool(const A&, const A&)> equal;
  std::function<VarSet(const A&)> support_bound;
  std::function<A(Rng&)> sample;
  std::function<std::string(const A&)> show;
};

// Variable source for the law checkers: a small alphabet plus occasional
// large indices so "outside any finite set" cases get exercised.
struct VarPool {
  std::vector<VarId> alphabet = {vid(0), vid(1), vid(2),
                                 vid(3), vid(4), vid(5)};

  VarId any(Rng& rng) const {
    if (rng.chance(1, 8)) return vid(32 + static_cast<std::uint32_t>(rng.below(8)));
    return alphabet[rng.below(alphabet.size())];
  }

  VarId other_than(Rng& rng, std::initializer_list<VarId> not_these) const {
    for (;;) {
      VarId v = any(rng);
      bool ok = true;
      for (VarId w : not_these)
        if (w == v) ok = false;
      if (ok) return v;
    }
  }
};

// Freshness derived from renaming alone: rename by a canonical pivot
// outside the support bound and compare.
template <class A>
bool derived_fresh(const RensetInstance<A>& inst, VarId x, const A& a) {
  VarSet avoid = inst.support_bound(a);
  avoid.insert(x);
  VarId y = fresh_var(avoid);
  return inst.equal(inst.rename(a, y, x), a);
}

// Swapping derived from renaming through a fresh pivot:
//   a[x1 ~ x2] = a[y/x1][x1/x2][x2/y],  y fresh for a and off {x1, x2}.
// The pivot choice is immaterial for lawful instances; the checkers
// confirm that on samples.
template <class A>
A derived_swap(const RensetInstance<A>& inst, const A& a, VarId x1,
               VarId x2) {
  VarSet avoid = inst.support_bound(a);
  avoid.insert(x1);
  avoid.insert(x2);
  VarId y = fresh_var(avoid);
  A s1 = inst.rename(a, y, x1);
  A s2 = inst.rename(s1, x1, x2);
  return inst.rename(s2, x2, y);
}

// Same construction with an explicit pivot, for pivot-independence checks.
template <class A>
A derived_swap_with_pivot(const RensetInstance<A>& inst, const A& a,
                          VarId x1, VarId x2, VarId y) {
  A s1 = inst.rename(a, y, x1);
  A s2 = inst.rename(s1, x1, x2);
  return inst.rename(s2, x2, y);
}

template <class A>
NominalInstance<A> derive_nominal(const RensetInstance<A>& inst) {
  NominalInstance<A> n;
  n.name = inst.name + "/derived-swap";
  n.swap = [inst](const A& a, VarId x1, VarId x2) {
    return derived_swap(inst, a, x1, x2);
  };
  n.equal = inst.equal;
  n.support_bound = inst.support_bound;
  n.sample = inst.sample;
  n.show = inst.show;
  return n;
}

namespace detail {

template <class A>
std::string show_item(const RensetInstance<A>& inst, const A& a) {
  return inst.show ? inst.show(a) : std::string("<item>");
}

template <class A>
std::string show_item(const NominalInstance<A>& inst, const A& a) {
  return inst.show ? inst.show(a) : std::string("<item>");
}

}  // namespace detail

// ---- renaming laws ----

template <class A>
std::vector<LawReport> check_renset_laws(const RensetInstance<A>& inst,
                                         std::uint64_t seed, int trials,
                                         const VarPool& pool = {}) {
  std::vector<LawReport> out;

  {
    LawReport r{.law = inst.name + ":renset-identity",
                .seed = mix_seed(seed, "identity")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      VarId x = pool.any(rng);
      ++r.trials;
      if (!inst.equal(inst.rename(a, x, x), a))
        r.record("a=" + detail::show_item(inst, a) + " x=" + var_name(x),
                 detail::show_item(inst, inst.rename(a, x, x)),
                 detail::show_item(inst, a));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = inst.name + ":renset-idempotence",
                .seed = mix_seed(seed, "idempotence")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      VarId y = pool.any(rng);
      VarId x1 = pool.other_than(rng, {y});
      VarId x2 = pool.any(rng);
      A once = inst.rename(a, x1, y);
      A lhs = inst.rename(once, x2, y);
      ++r.trials;
      if (!inst.equal(lhs, once))
        r.record("a=" + detail::show_item(inst, a) + " y=" + var_name(y) +
                     " x1=" + var_name(x1) + " x2=" + var_name(x2),
                 detail::show_item(inst, lhs), detail::show_item(inst, once));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = inst.name + ":renset-chaining",
                .seed = mix_seed(seed, "chaining")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      VarId x2 = pool.any(rng);
      VarId y = pool.other_than(rng, {x2});
      VarId x1 = pool.any(rng);
      VarId x3 = pool.any(rng);
      A base = inst.rename(a, y, x2);
      A lhs = inst.rename(inst.rename(base, x2, x1), x3, x2);
      A rhs = inst.rename(base, x3, x1);
      ++r.trials;
      if (!inst.equal(lhs, rhs))
        r.record("a=" + detail::show_item(inst, a) + " y=" + var_name(y) +
                     " x1=" + var_name(x1) + " x2=" + var_name(x2) +
                     " x3=" + var_name(x3),
                 detail::show_item(inst, lhs), detail::show_item(inst, rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = inst.name + ":renset-commutativity",
                .seed = mix_seed(seed, "commutativity")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      VarId x1 = pool.any(rng);
      VarId y1 = pool.other_than(rng, {x1});
      VarId x2 = pool.other_than(rng, {y1});
      VarId y2 = pool.other_than(rng, {x1});
      A lhs = inst.rename(inst.rename(a, x2, x1), y2, y1);
      A rhs = inst.rename(inst.rename(a, y2, y1), x2, x1);
      ++r.trials;
      if (!inst.equal(lhs, rhs))
        r.record("a=" + detail::show_item(inst, a) + " x1=" + var_name(x1) +
                     " x2=" + var_name(x2) + " y1=" + var_name(y1) +
                     " y2=" + var_name(y2),
                 detail::show_item(inst, lhs), detail::show_item(inst, rhs));
    }
    out.push_back(std::move(r));
  }

  return out;
}

// Exhaustive mode over explicit carrier items and a variable alphabet.
template <class A>
std::vector<LawReport> check_renset_laws_exhaustive(
    const RensetInstance<A>& inst, const std::vector<A>& items,
    const std::vector<VarId>& vars) {
  std::vector<LawReport> out;

  LawReport identity{.law = inst.name + ":renset-identity/exhaustive"};
  for (const A& a : items)
    for (VarId x : vars) {
      ++identity.trials;
      if (!inst.equal(inst.rename(a, x, x), a))
        identity.record("a=" + detail::show_item(inst, a) + " x=" + var_name(x),
                        detail::show_item(inst, inst.rename(a, x, x)),
                        detail::show_item(inst, a));
    }
  out.push_back(std::move(identity));

  LawReport idem{.law = inst.name + ":renset-idempotence/exhaustive"};
  for (const A& a : items)
    for (VarId y : vars)
      for (VarId x1 : vars) {
        if (x1 == y) continue;
        A once = inst.rename(a, x1, y);
        for (VarId x2 : vars) {
          A lhs = inst.rename(once, x2, y);
          ++idem.trials;
          if (!inst.equal(lhs, once))
            idem.record("a=" + detail::show_item(inst, a) + " y=" +
                            var_name(y) + " x1=" + var_name(x1) + " x2=" +
                            var_name(x2),
                        detail::show_item(inst, lhs),
                        detail::show_item(inst, once));
        }
      }
  out.push_back(std::move(idem));

  LawReport chain{.law = inst.name + ":renset-chaining/exhaustive"};
  for (const A& a : items)
    for (VarId x2 : vars)
      for (VarId y : vars) {
        if (y == x2) continue;
        A base = inst.rename(a, y, x2);
        for (VarId x1 : vars)
          for (VarId x3 : vars) {
            A lhs = inst.rename(inst.rename(base, x2, x1), x3, x2);
            A rhs = inst.rename(base, x3, x1);
            ++chain.trials;
            if (!inst.equal(lhs, rhs))
              chain.record("a=" + detail::show_item(inst, a) + " y=" +
                               var_name(y) + " x1=" + var_name(x1) + " x2=" +
                               var_name(x2) + " x3=" + var_name(x3),
                           detail::show_item(inst, lhs),
                           detail::show_item(inst, rhs));
          }
      }
  out.push_back(std::move(chain));

  LawReport comm{.law = inst.name + ":renset-commutativity/exhaustive"};
  for (const A& a : items)
    for (VarId x1 : vars)
      for (VarId y1 : vars) {
        if (y1 == x1) continue;
        for (VarId x2 : vars) {
          if (x2 == y1) continue;
          for (VarId y2 : vars) {
            if (y2 == x1) continue;
            A lhs = inst.rename(inst.rename(a, x2, x1), y2, y1);
            A rhs = inst.rename(inst.rename(a, y2, y1), x2, x1);
            ++comm.trials;
            if (!inst.equal(lhs, rhs))
              comm.record("a=" + detail::show_item(inst, a) + " x1=" +
                              var_name(x1) + " x2=" + var_name(x2) + " y1=" +
                              var_name(y1) + " y2=" + var_name(y2),
                          detail::show_item(inst, lhs),
                          detail::show_item(inst, rhs));
          }
        }
      }
  out.push_back(std::move(comm));

  return out;
}

// Validates the support_bound contract: every variable outside the bound
// behaves fresh under renaming.
template <class A>
LawReport check_support_bound(const RensetInstance<A>& inst,
                              std::uint64_t seed, int trials,
                              const VarPool& pool = {}) {
  LawReport r{.law = inst.name + ":support-bound",
              .seed = mix_seed(seed, "support-bound")};
  Rng rng(r.seed);
  for (int i = 0; i < trials; ++i) {
    A a = inst.sample(rng);
    VarSet bound = inst.support_bound(a);
    VarId w1 = fresh_var(bound);
    VarSet bumped = bound;
    bumped.insert(w1);
    VarId w2 = fresh_var(bumped);
    for (VarId x : {w1, w2}) {
      VarId y = pool.any(rng);
      ++r.trials;
      if (!inst.equal(inst.rename(a, y, x), a))
        r.record("a=" + detail::show_item(inst, a) + " x=" + var_name(x) +
                     " y=" + var_name(y),
                 detail::show_item(inst, inst.rename(a, y, x)),
                 detail::show_item(inst, a));
    }
  }
  return r;
}

// ---- swapping laws ----

template <class A>
std::vector<LawReport> check_nominal_laws(const NominalInstance<A>& inst,
                                          std::uint64_t seed, int trials,
                                          const VarPool& pool = {}) {
  std::vector<LawReport> out;
  auto transpose = [](VarId v, VarId a, VarId b) {
    return v == a ? b : (v == b ? a : v);
  };

  {
    LawReport r{.law = inst.name + ":swap-identity",
                .seed = mix_seed(seed, "swap-identity")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      VarId x = pool.any(rng);
      ++r.trials;
      if (!inst.equal(inst.swap(a, x, x), a))
        r.record("a=" + detail::show_item(inst, a) + " x=" + var_name(x),
                 detail::show_item(inst, inst.swap(a, x, x)),
                 detail::show_item(inst, a));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = inst.name + ":swap-involution",
                .seed = mix_seed(seed, "swap-involution")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      VarId x1 = pool.any(rng);
      VarId x2 = pool.any(rng);
      A lhs = inst.swap(inst.swap(a, x1, x2), x1, x2);
      ++r.trials;
      if (!inst.equal(lhs, a))
        r.record("a=" + detail::show_item(inst, a) + " x1=" + var_name(x1) +
                     " x2=" + var_name(x2),
                 detail::show_item(inst, lhs), detail::show_item(inst, a));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = inst.name + ":swap-compositionality",
                .seed = mix_seed(seed, "swap-compositionality")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      VarId x1 = pool.any(rng);
      VarId x2 = pool.any(rng);
      VarId y1 = pool.any(rng);
      VarId y2 = pool.any(rng);
      A lhs = inst.swap(inst.swap(a, x1, x2), y1, y2);
      A rhs = inst.swap(inst.swap(a, y1, y2), transpose(x1, y1, y2),
                        transpose(x2, y1, y2));
      ++r.trials;
      if (!inst.equal(lhs, rhs))
        r.record("a=" + detail::show_item(inst, a) + " x1=" + var_name(x1) +
                     " x2=" + var_name(x2) + " y1=" + var_name(y1) + " y2=" +
                     var_name(y2),
                 detail::show_item(inst, lhs), detail::show_item(inst, rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = inst.name + ":swap-support",
                .seed = mix_seed(seed, "swap-support")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      VarSet bound = inst.support_bound(a);
      VarId w1 = fresh_var(bound);
      VarSet bumped = bound;
      bumped.insert(w1);
      VarId w2 = fresh_var(bumped);
      A lhs = inst.swap(a, w1, w2);
      ++r.trials;
      if (!inst.equal(lhs, a))
        r.record("a=" + detail::show_item(inst, a) + " x1=" + var_name(w1) +
                     " x2=" + var_name(w2),
                 detail::show_item(inst, lhs), detail::show_item(inst, a));
    }
    out.push_back(std::move(r));
  }

  return out;
}

// ---- freshness characterizations ----

// Three formulations of "x is fresh for a", checked to agree:
//   (1) no renaming of x moves a (approximated over the tested pivots),
//   (2) renaming a at x by anything in support_bound(a) plus two outside
//       witnesses fixes a,
//   (3) renaming by the canonical pivot fixes a.
template <class A>
LawReport check_prop3_equivalence(const RensetInstance<A>& inst,
                                  std::uint64_t seed, int trials,
                                  const VarPool& pool = {}) {
  LawReport r{.law = inst.name + ":freshness-equivalence",
              .seed = mix_seed(seed, "prop3")};
  Rng rng(r.seed);
  for (int i = 0; i < trials; ++i) {
    A a = inst.sample(rng);
    VarSet bound = inst.support_bound(a);
    VarId x = rng.chance(1, 3) ? fresh_var(bound) : pool.any(rng);

    std::vector<VarId> pivots(bound.begin(), bound.end());
    VarSet avoid = bound;
    avoid.insert(x);
    VarId out1 = fresh_var(avoid);
    avoid.insert(out1);
    VarId out2 = fresh_var(avoid);
    pivots.push_back(out1);
    pivots.push_back(out2);

    bool f1 = true, f2 = true;
    for (VarId y : pivots) {
      if (!inst.equal(inst.rename(a, y, x), a)) {
        f2 = false;
        if (y != x) f1 = false;
      }
    }
    bool f3 = inst.equal(inst.rename(a, out1, x), a);

    ++r.trials;
    if (f1 != f2 || f2 != f3)
      r.record("a=" + detail::show_item(inst, a) + " x=" + var_name(x),
               "(1)=" + std::to_string(f1) + " (2)=" + std::to_string(f2),
               "(3)=" + std::to_string(f3));
  }
  return r;
}

// Freshness-based renaming facts:
//   (1) x fresh for a         =>  a[y/x] = a
//   (2) x2 fresh for a        =>  a[x2/x1][x3/x2] = a[x3/x1]
//   (3) (z fresh for a or z = x) and (x fresh for a or z != y)
//                             =>  z fresh for a[y/x]
template <class A>
std::vector<LawReport> check_prop4(const RensetInstance<A>& inst,
                                   std::uint64_t seed, int trials,
                                   const VarPool& pool = {}) {
  std::vector<LawReport> out;

  {
    LawReport r{.law = inst.name + ":fresh-rename-id",
                .seed = mix_seed(seed, "prop4-1")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      VarId x = rng.chance(1, 2) ? fresh_var(inst.support_bound(a))
                                 : pool.any(rng);
      if (!derived_fresh(inst, x, a)) continue;
      VarId y = pool.any(rng);
      ++r.trials;
      if (!inst.equal(inst.rename(a, y, x), a))
        r.record("a=" + detail::show_item(inst, a) + " x=" + var_name(x) +
                     " y=" + var_name(y),
                 detail::show_item(inst, inst.rename(a, y, x)),
                 detail::show_item(inst, a));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = inst.name + ":fresh-chaining",
                .seed = mix_seed(seed, "prop4-2")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      VarId x2 = rng.chance(1, 2) ? fresh_var(inst.support_bound(a))
                                  : pool.any(rng);
      if (!derived_fresh(inst, x2, a)) continue;
      VarId x1 = pool.any(rng);
      VarId x3 = pool.any(rng);
      A lhs = inst.rename(inst.rename(a, x2, x1), x3, x2);
      A rhs = inst.rename(a, x3, x1);
      ++r.trials;
      if (!inst.equal(lhs, rhs))
        r.record("a=" + detail::show_item(inst, a) + " x1=" + var_name(x1) +
                     " x2=" + var_name(x2) + " x3=" + var_name(x3),
                 detail::show_item(inst, lhs), detail::show_item(inst, rhs));
    }
    out.push_back(std::move(r));
  }

  {
    LawReport r{.law = inst.name + ":fresh-propagation",
                .seed = mix_seed(seed, "prop4-3")};
    Rng rng(r.seed);
    for (int i = 0; i < trials; ++i) {
      A a = inst.sample(rng);
      VarId x = pool.any(rng);
      VarId y = pool.any(rng);
      VarId z = rng.chance(1, 3) ? x
               : rng.chance(1, 2) ? fresh_var(inst.support_bound(a))
                                  : pool.any(rng);
      bool premise = (derived_fresh(inst, z, a) || z == x) &&
                     (derived_fresh(inst, x, a) || z != y);
      if (!premise) continue;
      A b = inst.rename(a, y, x);
      ++r.trials;
      if (!derived_fresh(inst, z, b))
        r.record("a=" + detail::show_item(inst, a) + " x=" + var_name(x) +
                     " y=" + var_name(y) + " z=" + var_name(z),
                 "fresh(z, a[y/x])=false", "expected true");
    }
    out.push_back(std::move(r));
  }

  return out;
}

// ---- lifted instances ----

template <class A>
RensetInstance<std::vector<A>> lift_renset_list(RensetInstance<A> inst) {
  RensetInstance<std::vector<A>> r;
  r.name = "list<" + inst.name + ">";
  r.rename = [inst](const std::vector<A>& xs, VarId to, VarId from) {
    std::vector<A> out;
    out.reserve(xs.size());
    for (const A& x : xs) out.push_back(inst.rename(x, to, from));
    return out;
  };
  r.equal = [inst](const std::vector<A>& a, const std::vector<A>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!inst.equal(a[i], b[i])) return false;
    return true;
  };
  r.support_bound = [inst](const std::vector<A>& xs) {
    VarSet s;
    for (const A& x : xs) s = s.unioned(inst.support_bound(x));
    return s;
  };
  r.sample = [inst](Rng& rng) {
    std::vector<A> out;
    std::size_t n = rng.below(4);
    for (std::size_t i = 0; i < n; ++i) out.push_back(inst.sample(rng));
    return out;
  };
  r.show = [inst](const std::vector<A>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ", ";
      s += inst.show(xs[i]);
    }
    return s + "]";
  };
  return r;
}

template <class A, class B>
RensetInstance<std::pair<A, B>> lift_renset_pair(RensetInstance<A> ia,
                                                 RensetInstance<B> ib) {
  RensetInstance<std::pair<A, B>> r;
  r.name = "pair<" + ia.name + ", " + ib.name + ">";
  r.rename = [ia, ib](const std::pair<A, B>& p, VarId to, VarId from) {
    return std::make_pair(ia.rename(p.first, to, from),
                          ib.rename(p.second, to, from));
  };
  r.equal = [ia, ib](const std::pair<A, B>& p, const std::pair<A, B>& q) {
    return ia.equal(p.first, q.first) && ib.equal(p.second, q.second);
  };
  r.support_bound = [ia, ib](const std::pair<A, B>& p) {
    return ia.support_bound(p.first).unioned(ib.support_bound(p.second));
  };
  r.sample = [ia, ib](Rng& rng) {
    return std::make_pair(ia.sample(rng), ib.sample(rng));
  };
  r.show = [ia, ib](const std::pair<A, B>& p) {
    return "(" + ia.show(p.first) + ", " + ib.show(p.second) + ")";
  };
  return r;
}

template <class A>
RensetInstance<std::optional<A>> lift_renset_option(RensetInstance<A> inst) {
  RensetInstance<std::optional<A>> r;
  r.name = "option<" + inst.name + ">";
  r.rename = [inst](const std::optional<A>& o, VarId to, VarId from) {
    if (!o) return std::optional<A>();
    return std::optional<A>(inst.rename(*o, to, from));
  };
  r.equal = [inst](const std::optional<A>& a, const std::optional<A>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || inst.equal(*a, *b);
  };
  r.support_bound = [inst](const std::optional<A>& o) {
    return o ? inst.support_bound(*o) : VarSet{};
  };
  r.sample = [inst](Rng& rng) {
    if (rng.chance(1, 4)) return std::optional<A>();
    return std::optional<A>(inst.sample(rng));
  };
  r.show = [inst](const std::optional<A>& o) {
    return o ? "some " + inst.show(*o) : std::string("none");
  };
  return r;
}

}  // namespace bindkit
