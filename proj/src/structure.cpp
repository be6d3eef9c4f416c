#include "brace_forge/structure.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "brace_forge/isomorphism.hpp"

namespace brace_forge {

namespace {

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::string_view to_string(ClassificationLabel label) {
  switch (label) {
    case ClassificationLabel::ab: return "ab";
    case ClassificationLabel::nil: return "nil";
    case ClassificationLabel::ssolv: return "ssolv";
    case ClassificationLabel::solv: return "solv";
    case ClassificationLabel::simp: return "simp";
    case ClassificationLabel::chsimp: return "chsimp";
    case ClassificationLabel::perfect: return "perfect";
    case ClassificationLabel::mixed: return "mixed";
  }
  return "?";
}

ClassificationLabel label_from_string(std::string_view s) {
  for (auto l : {ClassificationLabel::ab, ClassificationLabel::nil, ClassificationLabel::ssolv,
                 ClassificationLabel::solv, ClassificationLabel::simp, ClassificationLabel::chsimp,
                 ClassificationLabel::perfect, ClassificationLabel::mixed})
    if (to_string(l) == s) return l;
  throw InvalidArgument("unknown classification label: " + std::string(s));
}

Subgroup derived_subgroup(Subgroup const& h) {
  FiniteGroup const& g = h.parent();
  auto const& gens = h.generators();
  std::vector<Index> comms;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Index c = g.commutator(gens[i], gens[j]);
      if (c != 0) comms.push_back(c);
    }
  return *normal_closure_in(h, comms);
}

std::vector<Subgroup> derived_series(FiniteGroup const& g) {
  std::vector<Subgroup> terms{Subgroup::whole(g)};
  while (!terms.back().is_trivial()) {
    Subgroup next = derived_subgroup(terms.back());
    bool stable = next.order() == terms.back().order();
    terms.push_back(std::move(next));
    if (stable) break;
  }
  return terms;
}

std::vector<Subgroup> lower_central_series(FiniteGroup const& g) {
  Subgroup whole = Subgroup::whole(g);
  std::vector<Subgroup> terms{whole};
  while (!terms.back().is_trivial()) {
    std::vector<Index> comms;
    for (Index a : terms.back().generators())
      for (Index x : g.generators()) {
        Index c = g.commutator(a, x);
        if (c != 0) comms.push_back(c);
      }
    Subgroup next = *normal_closure_in(whole, comms);
    bool stable = next.order() == terms.back().order();
    terms.push_back(std::move(next));
    if (stable) break;
  }
  return terms;
}

bool is_solvable(FiniteGroup const& g) { return derived_series(g).back().is_trivial(); }

bool is_nilpotent(FiniteGroup const& g) {
  return lower_central_series(g).back().is_trivial();
}

bool is_perfect(FiniteGroup const& g) {
  return derived_subgroup(Subgroup::whole(g)).is_whole();
}

bool is_supersolvable(FiniteGroup const& g, Limits const& limits) {
  require_cap("supersolvable_cap", limits.supersolvable_cap, g.order());
  Index n = g.order();
  Subgroup whole = Subgroup::whole(g);
  Subgroup k = Subgroup::trivial(g);
  std::vector<char> in_k(n, 0), tried(n, 0);
  while (k.order() < n) {
    std::fill(in_k.begin(), in_k.end(), 0);
    for (Index x : k.members()) in_k[x] = 1;
    tried = in_k;
    bool found = false;
    for (Index x = 0; x < n && !found; ++x) {
      if (tried[x]) continue;
      // Order of xK in G/K.
      Index m = 1;
      for (Index y = x; !in_k[y]; y = g.mul(y, x)) ++m;
      if (is_prime_number(m)) {
        std::vector<Index> seed = k.generators();
        seed.push_back(x);
        std::size_t target = static_cast<std::size_t>(m) * k.order();
        auto next = normal_closure_in(whole, seed, target);
        if (next && next->order() == target) {
          k = std::move(*next);
          found = true;
          break;
        }
      }
      for (Index y : k.members()) tried[g.mul(x, y)] = 1;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Subgroup> minimal_normal_subgroups(FiniteGroup const& g, Limits const& limits) {
  require_cap("element_cap", limits.element_cap, g.order());
  if (g.order() == 1) return {};
  auto const& reps = g.class_representatives();
  auto const& sizes = g.class_sizes();
  auto const& cls = g.class_of();
  std::vector<Index> prime_reps;
  for (Index i = 1; i < reps.size(); ++i)
    if (is_prime_number(g.element_order(reps[i]))) prime_reps.push_back(i);
  std::sort(prime_reps.begin(), prime_reps.end(), [&](Index a, Index b) {
    return std::pair(sizes[a], reps[a]) < std::pair(sizes[b], reps[b]);
  });

  Subgroup whole = Subgroup::whole(g);
  Index const none = g.order();
  std::vector<Index> label(g.order(), none);
  std::vector<Subgroup> found;
  Closure::Hook hits_known = [&](Index y) { return label[y] != none; };

  for (Index ci : prime_reps) {
    Index x = reps[ci];
    if (label[x] != none) continue;
    auto n = normal_closure_in(whole, std::span(&x, 1), SIZE_MAX, &hits_known);
    if (!n) continue;  // strictly contains a known minimal normal subgroup
    bool minimal = true;
    for (Index cj : prime_reps) {
      Index y = reps[cj];
      if (y == x || !n->contains(y)) continue;
      auto m = normal_closure_in(whole, std::span(&y, 1), n->order() - 1);
      if (m) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    for (Index y : n->members())
      if (y != 0) label[y] = static_cast<Index>(found.size());
    found.push_back(std::move(*n));
  }
  (void)cls;
  std::sort(found.begin(), found.end(), [](Subgroup const& a, Subgroup const& b) {
    return a.members() < b.members();
  });
  return found;
}

bool is_elementary_abelian(FiniteGroup const& g) {
  if (g.order() == 1 || !g.is_abelian()) return false;
  Index p = g.element_order(g.generators().front());
  if (!is_prime_number(p)) return false;
  for (Index o : g.element_orders())
    if (o != 1 && o != p) return false;
  return true;
}

bool is_simple(FiniteGroup const& g, Limits const& limits) {
  if (g.order() == 1) return false;
  if (g.is_abelian()) return is_prime_number(g.order());
  if (!is_perfect(g)) return false;
  auto mins = minimal_normal_subgroups(g, limits);
  return mins.size() == 1 && mins.front().is_whole();
}

bool is_characteristically_simple(FiniteGroup const& g, Limits const& limits) {
  if (g.order() == 1) return false;
  if (g.is_abelian()) return is_elementary_abelian(g);
  if (!is_perfect(g)) return false;
  auto mins = minimal_normal_subgroups(g, limits);
  if (mins.empty()) return false;
  std::uint64_t product = 1;
  SubgroupGroup first = subgroup_as_group(mins.front(), limits);
  if (!is_simple(first.group, limits) || first.group.is_abelian()) return false;
  for (auto const& m : mins) {
    product *= m.order();
    if (product > g.order()) return false;
    if (m.order() != first.group.order()) return false;
  }
  if (product != g.order()) return false;
  for (std::size_t i = 1; i < mins.size(); ++i) {
    SubgroupGroup other = subgroup_as_group(mins[i], limits);
    if (!are_isomorphic(first.group, other.group, limits)) return false;
  }
  return true;
}

Quotient quotient_group(FiniteGroup const& g, Subgroup const& n, Limits const& limits) {
  if (!n.parent().same_as(g)) throw InvalidArgument("subgroup belongs to another group");
  if (!is_normal(n)) throw InvalidArgument("subgroup is not normal");
  Index const none = g.order();
  std::vector<Index> coset(g.order(), none);
  std::vector<Index> reps;
  for (Index x = 0; x < g.order(); ++x) {
    if (coset[x] != none) continue;
    Index id = static_cast<Index>(reps.size());
    reps.push_back(x);
    for (Index k : n.members()) coset[g.mul(x, k)] = id;
  }
  Index q = static_cast<Index>(reps.size());
  auto cos = std::make_shared<std::vector<Index>>(coset);
  auto rep = std::make_shared<std::vector<Index>>(reps);
  std::vector<Index> gens;
  for (Index s : g.generators())
    if (coset[s] != 0) gens.push_back(coset[s]);
  auto mul = [g, cos, rep](Index a, Index b) {
    return (*cos)[g.mul((*rep)[a], (*rep)[b])];
  };
  auto inv = [g, cos, rep](Index a) { return (*cos)[g.inv((*rep)[a])]; };
  auto name = [g, rep](Index a) { return g.element_name((*rep)[a]) + "N"; };
  FiniteGroup qg = FiniteGroup::from_oracle(q, mul, inv, gens, name, limits);
  GroupHom proj(g, qg, std::move(coset));
  return {std::move(qg), std::move(proj), std::move(reps)};
}

FiniteGroup direct_product(FiniteGroup const& g, FiniteGroup const& h, Limits const& limits) {
  std::size_t n = static_cast<std::size_t>(g.order()) * h.order();
  require_cap("element_cap", limits.element_cap, n);
  Index m = h.order();
  std::vector<Index> gens;
  for (Index s : g.generators()) gens.push_back(s * m);
  for (Index s : h.generators()) gens.push_back(s);
  auto mul = [g, h, m](Index a, Index b) {
    return g.mul(a / m, b / m) * m + h.mul(a % m, b % m);
  };
  auto inv = [g, h, m](Index a) { return g.inv(a / m) * m + h.inv(a % m); };
  auto name = [g, h, m](Index a) {
    return "(" + g.element_name(a / m) + "," + h.element_name(a % m) + ")";
  };
  return FiniteGroup::from_oracle(static_cast<Index>(n), mul, inv, gens, name, limits);
}

FiniteGroup direct_product(std::vector<FiniteGroup> const& factors, Limits const& limits) {
  if (factors.empty()) return FiniteGroup();
  FiniteGroup acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) acc = direct_product(acc, factors[i], limits);
  return acc;
}

ProductProjections product_projections(FiniteGroup const& g, FiniteGroup const& h,
                                       FiniteGroup const& product) {
  if (product.order() != static_cast<std::size_t>(g.order()) * h.order())
    throw InvalidArgument("product order mismatch");
  Index m = h.order();
  std::vector<Index> left(product.order()), right(product.order());
  for (Index x = 0; x < product.order(); ++x) {
    left[x] = x / m;
    right[x] = x % m;
  }
  return {GroupHom(product, g, std::move(left)), GroupHom(product, h, std::move(right))};
}

std::vector<Subgroup> all_subgroups(FiniteGroup const& g, Limits const& limits) {
  require_cap("subgroup_cap", limits.subgroup_cap, g.order());
  std::set<std::vector<Index>> seen;
  std::vector<Subgroup> subs;
  std::vector<Index> cyclic_gens;
  for (Index x = 0; x < g.order(); ++x) {
    Subgroup c = generate_subgroup(g, std::span(&x, 1));
    if (seen.insert(c.members()).second) {
      if (x != 0) cyclic_gens.push_back(x);
      subs.push_back(std::move(c));
    }
  }
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (Index c : cyclic_gens) {
      if (subs[i].contains(c)) continue;
      Closure cl(g, subs[i]);
      cl.add_generator(c);
      Subgroup j = cl.to_subgroup();
      if (seen.insert(j.members()).second) subs.push_back(std::move(j));
    }
  }
  std::sort(subs.begin(), subs.end(), [](Subgroup const& a, Subgroup const& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members() < b.members();
  });
  return subs;
}

Subgroup sylow_subgroup(FiniteGroup const& g, unsigned p) {
  if (!is_prime_number(p)) throw InvalidArgument("sylow_subgroup needs a prime");
  std::size_t target = 1;
  for (Index n = g.order(); n % p == 0; n /= p) target *= p;
  Subgroup sub = Subgroup::trivial(g);
  while (sub.order() < target) {
    Subgroup nor = normalizer(g, sub);
    Index pick = g.order();
    for (Index x : nor.members()) {
      if (sub.contains(x)) continue;
      if (sub.contains(g.power(x, p))) {
        pick = x;
        break;
      }
    }
    if (pick == g.order()) throw Error("sylow extension failed");
    Closure cl(g, sub);
    cl.add_generator(pick);
    sub = cl.to_subgroup();
  }
  return sub;
}

ClassificationLabel classify(FiniteGroup const& g, Limits const& limits) {
  if (g.is_abelian()) return ClassificationLabel::ab;
  if (is_nilpotent(g)) return ClassificationLabel::nil;
  // Supersolvable groups are solvable, so the solvable test decides
  // which of the next two branches applies.
  if (is_solvable(g))
    return is_supersolvable(g, limits) ? ClassificationLabel::ssolv : ClassificationLabel::solv;
  if (is_simple(g, limits)) return ClassificationLabel::simp;
  if (is_characteristically_simple(g, limits)) return ClassificationLabel::chsimp;
  if (is_perfect(g)) return ClassificationLabel::perfect;
  return ClassificationLabel::mixed;
}

}  // namespace brace_forge
