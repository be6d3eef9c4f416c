#ifndef BRACE_FORGE_GROUP_HPP_
#define BRACE_FORGE_GROUP_HPP_

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brace_forge/core.hpp"

namespace brace_forge {

/// Storage behind a FiniteGroup. The semantics never depend on it.
///   cayley_table: flat n*n multiplication table.
///   permutation:  elements stored as permutations, product = composition.
///   composite:    product computed from other groups (direct products,
///                 quotients, brace circle operations, holomorphs).
enum class Backend { cayley_table, permutation, composite };

std::string_view to_string(Backend b);

namespace detail {
struct GroupState;
}

/// A finite group on the indices 0..order-1, identity at 0.
///
/// Cheap to copy; copies share the same immutable state. Derived data
/// (generators, element orders, conjugacy classes) is computed lazily once
/// and is safe to request from several threads.
class FiniteGroup {
 public:
  using MulFn = std::function<Index(Index, Index)>;
  using InvFn = std::function<Index(Index)>;
  using NameFn = std::function<std::string(Index)>;

  /// The trivial group.
  FiniteGroup();

  /// Multiplication table, row-major: table[a * order + b] = a*b.
  /// Validates closure, identity at 0, inverses, and associativity
  /// (exhaustive up to full_check_cap, sampled above).
  static FiniteGroup from_table(std::vector<Index> table, Index order,
                                std::vector<std::string> names = {},
                                Limits const& limits = default_limits());

  static FiniteGroup from_rows(std::vector<std::vector<Index>> const& rows,
                               std::vector<std::string> names = {},
                               Limits const& limits = default_limits());

  /// Closure of permutation generators of the given degree, each given as
  /// its image list. The product is composition: (g*h)(x) = g(h(x)).
  /// Elements are enumerated breadth-first, identity first.
  static FiniteGroup from_permutations(
      std::size_t degree, std::vector<std::vector<Index>> const& generators,
      Limits const& limits = default_limits());

  /// A group given by a multiplication oracle that the caller guarantees
  /// to be a group law with identity 0. Materialized into a Cayley table
  /// when order <= limits.table_cap. `generators`, when non-empty, must
  /// generate the group.
  static FiniteGroup from_oracle(Index order, MulFn mul, InvFn inv,
                                 std::vector<Index> generators = {},
                                 NameFn names = {},
                                 Limits const& limits = default_limits());

  Index order() const noexcept { return order_; }

  Index mul(Index a, Index b) const {
    return table_ ? table_[static_cast<std::size_t>(a) * order_ + b]
                  : slow_mul(a, b);
  }
  Index inv(Index a) const { return inverse_[a]; }

  /// g^-1 x g
  Index conj(Index x, Index g) const { return mul(mul(inv(g), x), g); }
  /// a^-1 b^-1 a b
  Index commutator(Index a, Index b) const {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }
  Index power(Index x, std::uint64_t k) const;

  Backend backend() const noexcept;
  std::string element_name(Index a) const;

  void check_index(Index a) const;

  /// A small generating set (empty for the trivial group).
  std::vector<Index> const& generators() const;

  Index element_order(Index a) const;
  std::vector<Index> const& element_orders() const;

  /// Conjugacy class id per element, ids assigned in order of first
  /// appearance (class of the identity is 0).
  std::vector<Index> const& class_of() const;
  std::vector<Index> const& class_representatives() const;
  std::vector<Index> const& class_sizes() const;

  bool is_abelian() const;

  /// Same carrier with a*b replaced by b*a.
  FiniteGroup opposite() const;

  /// Permutation data when built from permutations (also kept after the
  /// table is materialized). Empty span otherwise.
  std::size_t permutation_degree() const noexcept;
  std::span<Index const> permutation(Index a) const;
  /// The element whose permutation is `perm`, or order() if none.
  Index find_permutation(std::span<Index const> perm) const;

  /// True when both handles share the same underlying state.
  bool same_as(FiniteGroup const& other) const noexcept {
    return state_ == other.state_;
  }

  /// Element-wise equality of the multiplication law.
  bool equal_law(FiniteGroup const& other) const;

 private:
  explicit FiniteGroup(std::shared_ptr<detail::GroupState const> state);
  Index slow_mul(Index a, Index b) const;

  std::shared_ptr<detail::GroupState const> state_;
  Index const* table_ = nullptr;
  Index const* inverse_ = nullptr;
  Index order_ = 1;
};

/// Result of a group-law verification.
struct LawReport {
  bool ok = true;
  CheckMode mode;
  std::string law;
  std::vector<Index> witness;
};

/// Re-verifies identity, inverse and associativity laws.
LawReport verify_group_laws(FiniteGroup const& g,
                            Limits const& limits = default_limits());

}  // namespace brace_forge

#endif  // BRACE_FORGE_GROUP_HPP_
