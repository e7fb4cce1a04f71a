#include "bindkit/enumerate.hpp"

namespace bindkit {

std::vector<Term> enum_terms(std::size_t max_size, const VarSet& vars) {
  // by_size[n] holds all pre-terms of exactly n nodes, already in
  // constructor-then-children order.
  std::vector<std::vector<PreTerm>> by_size(max_size + 1);
  for (std::size_t n = 1; n <= max_size; ++n) {
    auto& out = by_size[n];
    if (n == 1) {
      for (VarId v : vars) out.push_back(PreTerm::var(v));
      continue;
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      for (const PreTerm& f : by_size[i])
        for (const PreTerm& a : by_size[n - 1 - i])
          out.push_back(PreTerm::app(f, a));
    }
    for (VarId v : vars)
      for (const PreTerm& b : by_size[n - 1])
        out.push_back(PreTerm::lam(v, b));
  }
  std::vector<Term> all;
  for (std::size_t n = 1; n <= max_size; ++n)
    for (const PreTerm& t : by_size[n]) all.push_back(Term(t));
  return all;
}

namespace {

PreTerm random_rec(Rng& rng, const std::vector<VarId>& vars,
                   std::size_t budget) {
  // Weights: Var 3, Lam 4, App 4; App needs room for two children.
  std::uint64_t roll = rng.below(budget >= 3 ? 11 : (budget >= 2 ? 7 : 3));
  if (roll < 3) return PreTerm::var(vars[rng.below(vars.size())]);
  if (roll < 7) {
    VarId b = vars[rng.below(vars.size())];
    return PreTerm::lam(b, random_rec(rng, vars, budget - 1));
  }
  std::size_t left = 1 + rng.below(budget - 2);
  return PreTerm::app(random_rec(rng, vars, left),
                      random_rec(rng, vars, budget - 1 - left));
}

}  // namespace

Term random_term(Rng& rng, const VarSet& vars, std::size_t max_size) {
  std::size_t budget = 1 + rng.below(max_size);
  return Term(random_rec(rng, vars.items(), budget));
}

}  // namespace bindkit
