#ifndef BRACE_FORGE_SUBGROUP_HPP_
#define BRACE_FORGE_SUBGROUP_HPP_

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "brace_forge/group.hpp"

namespace brace_forge {

/// A subgroup of `parent`, stored as a sorted member list.
class Subgroup {
 public:
  /// Members must be a subgroup; use generate_subgroup() for untrusted input.
  Subgroup(FiniteGroup parent, std::vector<Index> members,
           std::vector<Index> generators = {});

  static Subgroup trivial(FiniteGroup const& g);
  static Subgroup whole(FiniteGroup const& g);

  FiniteGroup const& parent() const noexcept { return parent_; }
  std::vector<Index> const& members() const noexcept { return members_; }
  std::vector<Index> const& generators() const noexcept { return gens_; }
  Index order() const noexcept { return static_cast<Index>(members_.size()); }
  Index index_in_parent() const noexcept { return parent_.order() / order(); }
  bool contains(Index x) const;
  bool is_trivial() const noexcept { return members_.size() == 1; }
  bool is_whole() const noexcept { return members_.size() == parent_.order(); }

  /// Checks 0 in members, closure under mul and inv.
  bool satisfies_invariants() const;

  bool operator==(Subgroup const& o) const {
    return parent_.same_as(o.parent_) && members_ == o.members_;
  }

 private:
  FiniteGroup parent_;
  std::vector<Index> members_;
  std::vector<Index> gens_;
};

/// Incremental subgroup closure over a fixed parent group.
class Closure {
 public:
  /// Called for every newly reached element; returning true aborts.
  using Hook = std::function<bool(Index)>;

  explicit Closure(FiniteGroup const& g);
  Closure(FiniteGroup const& g, Subgroup const& start);

  bool contains(Index x) const { return mark_[x] != 0; }
  std::size_t size() const { return elems_.size(); }
  bool aborted() const { return aborted_; }

  /// Extends the closure by x. Returns false (and the closure becomes
  /// unusable) when the size would exceed `size_limit` or `hook` fires.
  bool add_generator(Index x, std::size_t size_limit = SIZE_MAX,
                     Hook const* hook = nullptr);

  std::vector<Index> const& elements() const { return elems_; }
  std::vector<Index> const& generators() const { return gens_; }
  Subgroup to_subgroup() const;

 private:
  FiniteGroup g_;
  std::vector<char> mark_;
  std::vector<Index> elems_;
  std::vector<Index> gens_;
  bool aborted_ = false;
};

/// Smallest subgroup containing gens.
Subgroup generate_subgroup(FiniteGroup const& g, std::span<Index const> gens);

/// Smallest normal subgroup of g containing s.
Subgroup normal_closure(FiniteGroup const& g, std::span<Index const> s);

/// Normal closure of s inside the subgroup `within` (conjugating by its
/// generators). Returns nullopt when the size limit or hook aborts.
std::optional<Subgroup> normal_closure_in(Subgroup const& within,
                                          std::span<Index const> s,
                                          std::size_t size_limit = SIZE_MAX,
                                          Closure::Hook const* hook = nullptr);

Subgroup centralizer(FiniteGroup const& g, std::span<Index const> x);
Subgroup center(FiniteGroup const& g);
Subgroup normalizer(FiniteGroup const& g, Subgroup const& h);
bool is_normal(Subgroup const& h);
Subgroup intersection(Subgroup const& a, Subgroup const& b);
/// Subgroup generated by a and b.
Subgroup join(Subgroup const& a, Subgroup const& b);

/// A group homomorphism given by its full image table.
class GroupHom {
 public:
  GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Index> image);

  FiniteGroup const& domain() const noexcept { return domain_; }
  FiniteGroup const& codomain() const noexcept { return codomain_; }
  std::vector<Index> const& image() const noexcept { return image_; }
  Index operator()(Index x) const { return image_[x]; }

  /// image(0) = 0 and the homomorphism law (exhaustive up to
  /// pair_check_cap, sampled above).
  LawReport verify(Limits const& limits = default_limits()) const;
  bool is_bijective() const;
  Subgroup kernel() const;

 private:
  FiniteGroup domain_;
  FiniteGroup codomain_;
  std::vector<Index> image_;
};

/// A subgroup as a group in its own right; element i of the result is
/// members()[i] of the subgroup.
struct SubgroupGroup {
  FiniteGroup group;
  std::vector<Index> embedding;  // result index -> parent index
};

SubgroupGroup subgroup_as_group(Subgroup const& h,
                                Limits const& limits = default_limits());

}  // namespace brace_forge

#endif  // BRACE_FORGE_SUBGROUP_HPP_
