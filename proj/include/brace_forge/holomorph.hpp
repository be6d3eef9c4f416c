#ifndef BRACE_FORGE_HOLOMORPH_HPP_
#define BRACE_FORGE_HOLOMORPH_HPP_

#include <chrono>
#include <memory>
#include <optional>
#include <vector>

#include "brace_forge/brace.hpp"

namespace brace_forge {

/// Hol(A) = A x| Aut(A); (t, phi) has index t * |Aut(A)| + phi, acts by
/// x -> t + phi(x), and (t,phi)(s,psi) = (t + phi(s), phi psi).
struct HolomorphGroup {
  FiniteGroup base;    // A
  FiniteGroup aut;     // Aut(A) acting on A's indices
  FiniteGroup group;   // Hol(A)

  Index translation(Index h) const { return h / aut.order(); }
  Index automorphism(Index h) const { return h % aut.order(); }
  Index element(Index t, Index phi) const { return t * aut.order() + phi; }
  Index act(Index h, Index x) const {
    return base.mul(translation(h), aut.permutation(automorphism(h))[x]);
  }
};

HolomorphGroup holomorph(FiniteGroup const& a, Limits const& limits = default_limits());

/// A regular subgroup of Hol(A); by_point[x] is the member sending 0 to x.
struct RegularSubgroup {
  std::vector<Index> members;   // sorted
  std::vector<Index> by_point;
};

bool is_regular(HolomorphGroup const& h, std::vector<Index> const& members);

struct RegularSearchOptions {
  std::optional<FiniteGroup> iso_filter;
  std::chrono::duration<double> budget = std::chrono::seconds(120);
  std::size_t max_results = SIZE_MAX;
};

struct RegularSearchResult {
  std::vector<RegularSubgroup> found;
  bool budget_exhausted = false;
  bool complete = false;      // the whole search space was visited
  std::size_t nodes = 0;      // candidate elements examined
  std::size_t rejected_by_filter = 0;
};

/// Depth-first search for regular subgroups of Hol(A). Each step takes the
/// smallest point not yet reached from 0 and tries every element sending 0
/// there, keeping the partial subgroup closed and semiregular.
class RegularSubgroupSearch {
 public:
  RegularSubgroupSearch(HolomorphGroup h, RegularSearchOptions options,
                        Limits const& limits = default_limits());
  ~RegularSubgroupSearch();

  /// Continues the search for at most `budget`; results accumulate.
  RegularSearchResult const& run(std::chrono::duration<double> budget);
  RegularSearchResult const& result() const;

 private:
  struct State;
  std::unique_ptr<State> state_;
};

/// One-shot search with options.budget. target_order must equal |A|.
RegularSearchResult find_regular_subgroups(HolomorphGroup const& h, Index target_order,
                                           RegularSearchOptions const& options = {},
                                           Limits const& limits = default_limits());

/// Additive group A and x . y = r_x(y).
SkewBrace brace_from_regular_subgroup(HolomorphGroup const& h, RegularSubgroup const& r,
                                      Limits const& limits = default_limits());

/// The translations {(t, id)}.
RegularSubgroup translation_subgroup(HolomorphGroup const& h);

}  // namespace brace_forge

#endif  // BRACE_FORGE_HOLOMORPH_HPP_
