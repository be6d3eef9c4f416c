#ifndef BRACE_FORGE_STRUCTURE_HPP_
#define BRACE_FORGE_STRUCTURE_HPP_

#include <string_view>
#include <vector>

#include "brace_forge/subgroup.hpp"

namespace brace_forge {

/// Group-theoretic type, mutually exclusive:
///   ab      abelian
///   nil     nilpotent, non-abelian
///   ssolv   supersolvable, non-nilpotent
///   solv    solvable, non-supersolvable
///   simp    non-abelian simple
///   chsimp  non-abelian characteristically simple, not simple
///   perfect perfect, not characteristically simple
///   mixed   everything else
enum class ClassificationLabel { ab, nil, ssolv, solv, simp, chsimp, perfect, mixed };

std::string_view to_string(ClassificationLabel label);
ClassificationLabel label_from_string(std::string_view s);

/// [H, H] as a subgroup of H's parent.
Subgroup derived_subgroup(Subgroup const& h);

/// G = G^(0) > G^(1) > ... until two consecutive terms agree; the last
/// term is repeated once when the series stabilizes above {0}.
std::vector<Subgroup> derived_series(FiniteGroup const& g);
/// G = gamma_1 > gamma_2 = [G,G] > ... with the same stopping rule.
std::vector<Subgroup> lower_central_series(FiniteGroup const& g);

bool is_solvable(FiniteGroup const& g);
bool is_nilpotent(FiniteGroup const& g);
bool is_perfect(FiniteGroup const& g);

/// True iff G has a normal series with cyclic factors. Builds a chain of
/// normal subgroups 1 = K_0 < K_1 < ... with every K_{i+1}/K_i of prime
/// order, i.e. repeatedly picks a prime-order normal subgroup of G/K_i.
bool is_supersolvable(FiniteGroup const& g, Limits const& limits = default_limits());

/// Minimal non-trivial normal subgroups, sorted by member list.
std::vector<Subgroup> minimal_normal_subgroups(FiniteGroup const& g,
                                               Limits const& limits = default_limits());

bool is_elementary_abelian(FiniteGroup const& g);
bool is_simple(FiniteGroup const& g, Limits const& limits = default_limits());
bool is_characteristically_simple(FiniteGroup const& g,
                                  Limits const& limits = default_limits());

struct Quotient {
  FiniteGroup group;
  GroupHom projection;
  std::vector<Index> representatives;  // coset index -> element of G
};

/// G/N; the identity coset is index 0 and cosets are numbered by their
/// smallest element.
Quotient quotient_group(FiniteGroup const& g, Subgroup const& n,
                        Limits const& limits = default_limits());

/// (a, b) has index a * |H| + b.
FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h,
                           Limits const& limits = default_limits());
FiniteGroup direct_product(std::vector<FiniteGroup> const& factors,
                           Limits const& limits = default_limits());

struct ProductProjections {
  GroupHom left;
  GroupHom right;
};
ProductProjections product_projections(FiniteGroup const& g, FiniteGroup const& h,
                                       FiniteGroup const& product);

/// Every subgroup, by repeated joins with cyclic subgroups until a
/// fixpoint. Sorted by (order, members).
std::vector<Subgroup> all_subgroups(FiniteGroup const& g,
                                    Limits const& limits = default_limits());

/// A Sylow p-subgroup ({0} when p does not divide |G|).
Subgroup sylow_subgroup(FiniteGroup const& g, unsigned p);

ClassificationLabel classify(FiniteGroup const& g, Limits const& limits = default_limits());

}  // namespace brace_forge

#endif  // BRACE_FORGE_STRUCTURE_HPP_
