#ifndef BRACE_FORGE_FACTORIZATION_HPP_
#define BRACE_FORGE_FACTORIZATION_HPP_

#include <vector>

#include "brace_forge/brace.hpp"

namespace brace_forge {

/// G = AB with A cap B = 1; every x is uniquely a * b.
struct ExactFactorization {
  FiniteGroup group;
  Subgroup left;                   // A
  Subgroup right;                  // B
  std::vector<Index> left_part;    // x -> a
  std::vector<Index> right_part;   // x -> b
};

/// Throws InvalidArgument when A cap B != 1, |A||B| != |G|, or two
/// products coincide.
ExactFactorization make_factorization(FiniteGroup const& g, Subgroup const& a,
                                      Subgroup const& b);

/// Additive group G itself, circle x o y = a y b for x = ab.
SkewBrace brace_from_factorization(ExactFactorization const& f,
                                   Limits const& limits = default_limits());

/// S x S = {(x,x)} . {(1,x)}, with (a,b) = (a,a)(1,a^-1 b).
ExactFactorization diagonal_factorization(FiniteGroup const& s,
                                          Limits const& limits = default_limits());

/// The brace of diagonal_factorization(S) from the closed form
/// (a,b) o (c,d) = (ac, a d a^-1 b).
SkewBrace diagonal_brace(FiniteGroup const& s, Limits const& limits = default_limits());

/// All (A, B) among the subgroups of G with |A| = order_a and A cap B = 1,
/// |A||B| = |G|, in subgroup enumeration order.
std::vector<ExactFactorization> find_exact_factorizations(
    FiniteGroup const& g, Index order_a, Limits const& limits = default_limits());

}  // namespace brace_forge

#endif  // BRACE_FORGE_FACTORIZATION_HPP_
