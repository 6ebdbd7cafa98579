#pragma once

#include <array>
#include <vector>

#include "ind4/construction.hpp"
#include "ind4/rational.hpp"

namespace ind4 {

/// Joint distribution of the labeled pattern induced by k i.i.d. points of
/// the limit object, k in {2,3,4}; indexed by the base-3 code over the pairs
/// in lexicographic order. Iterated parts enter through the fixpoint
/// M_k = base_k / (1 - sum of w_i^k).
template <class T>
std::vector<T> limit_marginal(const ConstructionSpec& spec, int k);

/// All 42 class densities of the limit object, exact rationals.
/// Throws for circular parts and for arbitrary-tournament parts of specs not
/// flagged tournament_invariant.
std::array<Rat, 42> limit_class_densities(const ConstructionSpec& spec);

std::array<double, 42> limit_class_densities_f(const ConstructionSpec& spec);

/// Exact limit density of one class. Single-circular specs are delegated to
/// circular_density by the caller; this entry point rejects them.
Rat limit_density(const ConstructionSpec& spec, int class_id);

bool is_single_circular(const ConstructionSpec& spec);

}  // namespace ind4
