#pragma once

#include "bindkit/renset.hpp"
#include "bindkit/term.hpp"

namespace bindkit {

VarSet default_alphabet();

// Terms modulo alpha with capture-avoiding renaming.
RensetInstance<Term> term_renset(std::size_t sampler_max_size = 12,
                                 const VarSet& alphabet = default_alphabet());

// Variables with rename(v, to, from) = (v == from ? to : v).
RensetInstance<VarId> var_renset(const VarSet& alphabet = default_alphabet());

// Terms with direct swapping of all occurrences including binders.
NominalInstance<Term> term_nominal_direct(
    std::size_t sampler_max_size = 12,
    const VarSet& alphabet = default_alphabet());

// Broken on purpose: renames free occurrences under shadowing but lets a
// binder capture them. The chaining law exposes it: a captured occurrence
// drops out of one renaming route but survives the other.
RensetInstance<Term> term_renset_broken_naive(
    std::size_t sampler_max_size = 12,
    const VarSet& alphabet = default_alphabet());

// Broken on purpose: swaps occurrences but leaves binding positions
// untouched. The swapping law suite must expose it.
NominalInstance<Term> term_nominal_broken_binders(
    std::size_t sampler_max_size = 12,
    const VarSet& alphabet = default_alphabet());

// Pivot-based swapping derived from renaming agrees with direct swapping
// of all occurrences, and is independent of the pivot choice.
std::vector<LawReport> check_derived_swap_agreement(std::uint64_t seed,
                                                    int trials);

// Constructor compatibility with direct swapping on terms, plus the
// bound-variable freshness condition:
//   swap-vr    (Vr x)[y^z] = Vr(x[y^z])
//   swap-ap    (Ap a1 a2)[y^z] = Ap(a1[y^z])(a2[y^z])
//   swap-lm    (Lm x a)[y^z] = Lm(x[y^z])(a[y^z])
//   binder-fresh   (Lm x a)[y^x] = Lm x a for y outside FV(Lm x a) u {x}
std::vector<LawReport> check_term_swap_constructor_laws(std::uint64_t seed,
                                                        int trials);

// Two readings of "f is supported by X" for term-to-term functions with a
// known support set: commutation with swapping outside X, and the swap
// action on functions fixing f. The two are checked to hold outside X and
// to agree with each other for arbitrary swap pairs.
std::vector<LawReport> check_term_function_support(std::uint64_t seed,
                                                   int trials);

}  // namespace bindkit
