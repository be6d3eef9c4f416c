#ifndef BRACE_FORGE_CATALOG_HPP_
#define BRACE_FORGE_CATALOG_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "brace_forge/structure.hpp"

namespace brace_forge {

namespace catalog {

FiniteGroup cyclic(Index n);
/// (C_p)^k; element index = base-p digit vector, least significant first.
FiniteGroup elementary_abelian(unsigned p, unsigned k, Limits const& limits = default_limits());
FiniteGroup symmetric(unsigned n, Limits const& limits = default_limits());
FiniteGroup alternating(unsigned n, Limits const& limits = default_limits());
/// Dihedral group of the given (even) order; r^a s^b has index a + b * order/2.
FiniteGroup dihedral(Index order);
/// C_7 x| C_3 with the generator of C_3 acting as x -> x^2; (a, b) has
/// index a + 7b.
FiniteGroup frobenius21();
/// SL_2(q) / {+-1} acting on the q + 1 points of the projective line.
FiniteGroup psl2(unsigned q, Limits const& limits = default_limits());
FiniteGroup sl2(unsigned q, Limits const& limits = default_limits());
FiniteGroup gl2(unsigned q, Limits const& limits = default_limits());
inline FiniteGroup gl2_3() { return gl2(3); }
inline FiniteGroup sl2_3() { return sl2(3); }
/// <x, y, z | x^3 = y^3 = z^3 = 1, [x,z] = [y,z] = 1, [x,y] = z> on normal
/// forms x^a y^b z^c, index a + 3b + 9c.
FiniteGroup heisenberg3();

}  // namespace catalog

/// Builds a named family member:
///   cyclic [n], elementary_abelian [p, k], symmetric [n], alternating [n],
///   dihedral [order], frobenius21, psl2 [q], sl2 [q], gl2 [q], gl2_3,
///   sl2_3, heisenberg3.
FiniteGroup make_group(std::string_view name, std::vector<long> const& params = {},
                       Limits const& limits = default_limits());
/// Direct product of groups given as parse_group() expressions.
FiniteGroup direct_product_of(std::vector<std::string> const& factors,
                              Limits const& limits = default_limits());

/// Parses expressions such as "A4xC5xA5", "C3^3", "PSL2(7)^2", "D8xF21",
/// "M3", "GL2(3)", "1". Atoms: Cn, Sn, An, Dn (order n), F21, M3, Q8,
/// PSL2(q), SL2(q), GL2(q), 1.
FiniteGroup parse_group(std::string_view expr, Limits const& limits = default_limits());

struct CatalogEntry {
  std::string name;
  std::string expr;             // parse_group() expression; empty when metadata-only
  std::string expected_order;   // decimal, or a formula for parametric rows
  std::optional<ClassificationLabel> expected_label;
  bool metadata_only = false;
  std::string factorization;    // "A . B" for exact-factorization rows
  std::string left_order;       // |A| and |B| when numeric
  std::string right_order;
  std::string note;
};

/// Every entry, buildable ones first, in a fixed order.
std::vector<CatalogEntry> const& catalog_entries();
CatalogEntry const& catalog_metadata(std::string_view name);
/// Builds a buildable entry; throws InvalidArgument for metadata-only ones.
FiniteGroup build_entry(CatalogEntry const& entry, Limits const& limits = default_limits());

}  // namespace brace_forge

#endif  // BRACE_FORGE_CATALOG_HPP_
