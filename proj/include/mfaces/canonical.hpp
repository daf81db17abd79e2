// Isomorphism testing for small complexes.

#ifndef MFACES_CANONICAL_HPP
#define MFACES_CANONICAL_HPP

#include <vector>

#include "mfaces/complex.hpp"

namespace mfaces {

/// Lexicographically smallest facet list over all relabelings onto 1..n
/// reachable by colour refinement plus individualization. Two complexes
/// are isomorphic iff their canonical forms are equal.
std::vector<std::vector<int>> canonical_form(const SimplicialComplex& k);

bool is_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b);

}  // namespace mfaces

#endif  // MFACES_CANONICAL_HPP
