#ifndef BRACE_FORGE_ISOMORPHISM_HPP_
#define BRACE_FORGE_ISOMORPHISM_HPP_

#include <optional>
#include <vector>

#include "brace_forge/subgroup.hpp"

namespace brace_forge {

/// An isomorphism G -> H, or nullopt. Backtracks over images of G's
/// generators, pruned by element orders and conjugacy-class sizes.
std::optional<GroupHom> find_isomorphism(FiniteGroup const& g, FiniteGroup const& h,
                                         Limits const& limits = default_limits());

bool are_isomorphic(FiniteGroup const& g, FiniteGroup const& h,
                    Limits const& limits = default_limits());

/// Every automorphism of G as an image table, identity first, then in
/// lexicographic order of generator images.
std::vector<std::vector<Index>> all_automorphisms(FiniteGroup const& g,
                                                  Limits const& limits = default_limits());

/// Aut(G) as a permutation group on G's element indices.
FiniteGroup automorphism_group(FiniteGroup const& g, Limits const& limits = default_limits());

}  // namespace brace_forge

#endif  // BRACE_FORGE_ISOMORPHISM_HPP_
