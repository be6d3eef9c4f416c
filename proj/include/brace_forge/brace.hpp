#ifndef BRACE_FORGE_BRACE_HPP_
#define BRACE_FORGE_BRACE_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "brace_forge/subgroup.hpp"

namespace brace_forge {

/// A skew brace: two group structures on the indices 0..n-1 sharing the
/// identity 0, with a(b + c) = ab - a + ac.
class SkewBrace {
 public:
  FiniteGroup const& add_group() const noexcept { return add_; }
  FiniteGroup const& mul_group() const noexcept { return mul_; }
  Index order() const noexcept { return add_.order(); }

  Index add(Index a, Index b) const { return add_.mul(a, b); }
  Index neg(Index a) const { return add_.inv(a); }
  /// a - b
  Index sub(Index a, Index b) const { return add_.mul(a, add_.inv(b)); }
  Index mul(Index a, Index b) const { return mul_.mul(a, b); }
  Index mul_inv(Index a) const { return mul_.inv(a); }

  /// lambda_b(a) = -b + ba
  Index lambda(Index b, Index a) const { return add_.mul(add_.inv(b), mul_.mul(b, a)); }
  /// lambda^opp_b(a) = ba - b
  Index lambda_opp(Index b, Index a) const { return add_.mul(mul_.mul(b, a), add_.inv(b)); }
  /// a * b = -a + ab - b
  Index star(Index a, Index b) const {
    return add_.mul(add_.mul(add_.inv(a), mul_.mul(a, b)), add_.inv(b));
  }
  /// a *opp b = -b + ab - a
  Index star_opp(Index a, Index b) const {
    return add_.mul(add_.mul(add_.inv(b), mul_.mul(a, b)), add_.inv(a));
  }

  std::vector<Index> lambda_map(Index b) const;
  std::vector<Index> lambda_opp_map(Index b) const;

  /// How the left brace law was verified at construction.
  LawReport const& validation() const noexcept { return validation_; }
  std::string const& provenance() const noexcept { return provenance_; }

 private:
  friend SkewBrace make_brace(FiniteGroup, FiniteGroup, Limits const&, std::string);
  SkewBrace(FiniteGroup add, FiniteGroup mul, LawReport validation, std::string provenance)
      : add_(std::move(add)),
        mul_(std::move(mul)),
        validation_(std::move(validation)),
        provenance_(std::move(provenance)) {}

  FiniteGroup add_;
  FiniteGroup mul_;
  LawReport validation_;
  std::string provenance_;
};

/// Checks the left brace law (exhaustive up to full_check_cap, seeded
/// samples above) and throws LawViolation with the witness triple.
SkewBrace make_brace(FiniteGroup add, FiniteGroup mul, Limits const& limits = default_limits(),
                     std::string provenance = {});

/// Builds both groups from Cayley tables; the identity of each table must be
/// the element 0.
SkewBrace make_brace_from_tables(std::vector<std::vector<Index>> const& add_rows,
                                 std::vector<std::vector<Index>> const& mul_rows,
                                 Limits const& limits = default_limits(),
                                 std::string provenance = {});

LawReport verify_left_brace_law(FiniteGroup const& add, FiniteGroup const& mul,
                                Limits const& limits = default_limits());

/// Same multiplication, additive group replaced by its opposite.
SkewBrace opposite(SkewBrace const& b, Limits const& limits = default_limits());
/// ab = a + b.
SkewBrace triv(FiniteGroup const& g, Limits const& limits = default_limits());
/// Multiplicative group G, additive group the opposite of G, so ab = b + a.
SkewBrace a_triv(FiniteGroup const& g, Limits const& limits = default_limits());
/// Componentwise structure on the direct products; (x, y) has index
/// x * |C| + y.
SkewBrace brace_product(SkewBrace const& b, SkewBrace const& c,
                        Limits const& limits = default_limits());

/// Additive subgroup generated by all x * y.
Subgroup star_span(SkewBrace const& b, std::span<Index const> xs, std::span<Index const> ys);
/// Additive subgroup generated by all x *opp y.
Subgroup star_opp_span(SkewBrace const& b, std::span<Index const> xs,
                       std::span<Index const> ys);

struct IdealVerdict {
  bool ok = false;           // lambda-invariant and normal in both groups
  bool star_ok = false;      // B*I, I*B inside I and normal in (B,+)
  std::string reason;        // first failed condition, empty when ok
  CheckMode star_mode;
  bool agree() const { return ok == star_ok; }
};

IdealVerdict is_ideal(SkewBrace const& b, std::span<Index const> members,
                      Limits const& limits = default_limits());

/// An ideal, held as a subgroup of the additive group.
struct BraceIdeal {
  Subgroup members;
  bool closure_fallback = false;  // span alone was not an ideal
};

enum class Side { plain, opp };

/// B^2 = B * B (plain) or (B^opp)^2 (opp).
BraceIdeal b_squared(SkewBrace const& b, Side side, Limits const& limits = default_limits());

struct QuotientBrace {
  SkewBrace brace;
  std::vector<Index> projection;       // element of B -> coset index
  std::vector<Index> representatives;  // coset index -> smallest element
  bool star_compatible = false;        // (a+I)*(b+I) = a*b + I on all cosets
};

/// B/I with cosets numbered by their smallest element.
QuotientBrace quotient_brace(SkewBrace const& b, Subgroup const& ideal,
                             Limits const& limits = default_limits());

struct BraceFlags {
  bool is_trivial = false;
  bool is_almost_trivial = false;
  bool is_two_sided = false;
  CheckMode pair_mode;    // trivial and almost trivial
  CheckMode triple_mode;  // two-sided
  std::vector<Index> not_trivial_witness;
  std::vector<Index> not_almost_trivial_witness;
  std::vector<Index> not_two_sided_witness;
};

BraceFlags classify_brace(SkewBrace const& b, Limits const& limits = default_limits());

struct LambdaKernel {
  Subgroup members;            // as a subgroup of (B,+)
  bool additive_subgroup = false;
  bool multiplicative_subgroup = false;
  bool normal_in_mul = false;
};

/// {b : lambda_b = id}.
LambdaKernel kernel_lambda(SkewBrace const& b);

struct ProductFormReport {
  bool ok = false;
  bool intersection_trivial = false;  // B^2 cap (B^opp)^2 = 0
  bool sum_is_whole = false;          // B = B^2 + (B^opp)^2
  bool square_almost_trivial = false;
  bool opp_square_trivial = false;
  bool add_mul_isomorphic = false;
  Index square_order = 0;      // |B^2|, the almost trivial factor
  Index opp_square_order = 0;  // |(B^opp)^2|, the trivial factor
};

/// For a two-sided brace with non-abelian simple or characteristically
/// simple multiplicative group, checks the splitting into an almost
/// trivial and a trivial factor. Throws InvalidArgument when the
/// precondition fails.
ProductFormReport check_two_sided_product_form(SkewBrace const& b,
                                               Limits const& limits = default_limits());

}  // namespace brace_forge

#endif  // BRACE_FORGE_BRACE_HPP_
