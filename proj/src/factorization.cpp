#include "brace_forge/factorization.hpp"

#include "brace_forge/structure.hpp"

namespace brace_forge {

ExactFactorization make_factorization(FiniteGroup const& g, Subgroup const& a,
                                      Subgroup const& b) {
  if (!a.parent().same_as(g) || !b.parent().same_as(g))
    throw InvalidArgument("factors must be subgroups of the group");
  if (!intersection(a, b).is_trivial()) throw InvalidArgument("A cap B is not trivial");
  if (static_cast<std::size_t>(a.order()) * b.order() != g.order())
    throw InvalidArgument("|A||B| = " + std::to_string(std::size_t(a.order()) * b.order()) +
                          " differs from |G| = " + std::to_string(g.order()));
  Index const none = g.order();
  std::vector<Index> left(g.order(), none), right(g.order(), none);
  for (Index x : a.members())
    for (Index y : b.members()) {
      Index p = g.mul(x, y);
      if (left[p] != none)
        throw InvalidArgument("products coincide at element " + std::to_string(p));
      left[p] = x;
      right[p] = y;
    }
  return {g, a, b, std::move(left), std::move(right)};
}

SkewBrace brace_from_factorization(ExactFactorization const& f, Limits const& limits) {
  FiniteGroup const& g = f.group;
  auto left = std::make_shared<std::vector<Index>>(f.left_part);
  auto right = std::make_shared<std::vector<Index>>(f.right_part);
  auto circle = [g, left, right](Index x, Index y) {
    return g.mul(g.mul((*left)[x], y), (*right)[x]);
  };
  // (ab)^-1 in the circle group is a^-1 b^-1.
  auto inverse = [g, left, right](Index x) {
    return g.mul(g.inv((*left)[x]), g.inv((*right)[x]));
  };
  std::vector<Index> gens = f.left.generators();
  gens.insert(gens.end(), f.right.generators().begin(), f.right.generators().end());
  FiniteGroup mul = FiniteGroup::from_oracle(g.order(), circle, inverse, gens, {}, limits);
  return make_brace(g, std::move(mul), limits, "factorization");
}

ExactFactorization diagonal_factorization(FiniteGroup const& s, Limits const& limits) {
  FiniteGroup g = direct_product(s, s, limits);
  Index n = s.order();
  std::vector<Index> diag, second, diag_gens, second_gens;
  for (Index x = 0; x < n; ++x) {
    diag.push_back(x * n + x);
    second.push_back(x);
  }
  for (Index x : s.generators()) {
    diag_gens.push_back(x * n + x);
    second_gens.push_back(x);
  }
  Subgroup g1(g, diag, diag_gens), g2(g, second, second_gens);
  std::vector<Index> left(g.order()), right(g.order());
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) {
      left[a * n + b] = a * n + a;
      right[a * n + b] = s.mul(s.inv(a), b);
    }
  return {std::move(g), std::move(g1), std::move(g2), std::move(left), std::move(right)};
}

SkewBrace diagonal_brace(FiniteGroup const& s, Limits const& limits) {
  FiniteGroup g = direct_product(s, s, limits);
  Index n = s.order();
  auto circle = [s, n](Index x, Index y) {
    Index a = x / n, b = x % n, c = y / n, d = y % n;
    return s.mul(a, c) * n + s.mul(s.mul(s.mul(a, d), s.inv(a)), b);
  };
  auto inverse = [s, n](Index x) {
    Index a = x / n, b = x % n;
    Index ai = s.inv(a);
    return ai * n + s.mul(s.mul(ai, s.inv(b)), a);
  };
  std::vector<Index> gens;
  for (Index x : s.generators()) {
    gens.push_back(x * n + x);
    gens.push_back(x);
  }
  FiniteGroup mul = FiniteGroup::from_oracle(g.order(), circle, inverse, gens, {}, limits);
  return make_brace(std::move(g), std::move(mul), limits, "diagonal");
}

std::vector<ExactFactorization> find_exact_factorizations(FiniteGroup const& g, Index order_a,
                                                          Limits const& limits) {
  std::vector<ExactFactorization> out;
  if (order_a == 0 || g.order() % order_a) return out;
  Index order_b = g.order() / order_a;
  auto subs = all_subgroups(g, limits);
  for (auto const& a : subs) {
    if (a.order() != order_a) continue;
    for (auto const& b : subs) {
      if (b.order() != order_b || !intersection(a, b).is_trivial()) continue;
      out.push_back(make_factorization(g, a, b));
    }
  }
  return out;
}

}  // namespace brace_forge
