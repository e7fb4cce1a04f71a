#pragma once

#include <vector>

#include "bindkit/rng.hpp"
#include "bindkit/term.hpp"

namespace bindkit {

// Every pre-term of node count <= max_size whose variables (free and
// binding) come from `vars`, ordered by (size, constructor Var < App <
// Lam, then children left to right). Pre-terms, not alpha classes: both
// \x0. x0 and \x1. x1 appear.
std::vector<Term> enum_terms(std::size_t max_size, const VarSet& vars);

// Seeded random pre-term with node count <= max_size over `vars`.
Term random_term(Rng& rng, const VarSet& vars, std::size_t max_size);

}  // namespace bindkit
