#include "brace_forge/subgroup.hpp"

#include <algorithm>

namespace brace_forge {

namespace {

std::vector<Index> greedy_generators(FiniteGroup const& g,
                                     std::vector<Index> const& members) {
  Closure c(g);
  std::vector<Index> gens;
  for (Index x : members) {
    if (!c.contains(x)) c.add_generator(x);
  }
  return c.generators();
}

}  // namespace

Subgroup::Subgroup(FiniteGroup parent, std::vector<Index> members,
                   std::vector<Index> generators)
    : parent_(std::move(parent)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  for (Index x : members_) parent_.check_index(x);
  if (members_.empty() || members_.front() != 0)
    throw InvalidArgument("subgroup must contain the identity");
  if (generators.empty() && members_.size() > 1)
    gens_ = greedy_generators(parent_, members_);
  else
    gens_ = std::move(generators);
}

Subgroup Subgroup::trivial(FiniteGroup const& g) { return Subgroup(g, {0}, {}); }

Subgroup Subgroup::whole(FiniteGroup const& g) {
  std::vector<Index> all(g.order());
  for (Index i = 0; i < g.order(); ++i) all[i] = i;
  return Subgroup(g, std::move(all), g.generators());
}

bool Subgroup::contains(Index x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool Subgroup::satisfies_invariants() const {
  if (members_.empty() || members_.front() != 0) return false;
  for (Index a : members_) {
    if (!contains(parent_.inv(a))) return false;
    for (Index b : members_)
      if (!contains(parent_.mul(a, b))) return false;
  }
  return true;
}

Closure::Closure(FiniteGroup const& g) : g_(g), mark_(g.order(), 0), elems_{0} {
  mark_[0] = 1;
}

Closure::Closure(FiniteGroup const& g, Subgroup const& start)
    : g_(g), mark_(g.order(), 0), elems_(start.members()), gens_(start.generators()) {
  for (Index x : elems_) mark_[x] = 1;
}

bool Closure::add_generator(Index x, std::size_t size_limit, Hook const* hook) {
  if (aborted_) return false;
  g_.check_index(x);
  if (mark_[x]) return true;
  gens_.push_back(x);
  std::size_t old_size = elems_.size();
  auto visit = [&](Index y) {
    if (mark_[y]) return true;
    if (elems_.size() + 1 > size_limit || (hook && (*hook)(y))) {
      aborted_ = true;
      return false;
    }
    mark_[y] = 1;
    elems_.push_back(y);
    return true;
  };
  // Old elements only lack products with the new generator.
  for (std::size_t i = 0; i < old_size; ++i)
    if (!visit(g_.mul(elems_[i], x))) return false;
  for (std::size_t i = old_size; i < elems_.size(); ++i)
    for (Index s : gens_)
      if (!visit(g_.mul(elems_[i], s))) return false;
  return true;
}

Subgroup Closure::to_subgroup() const {
  if (aborted_) throw Error("closure was aborted");
  std::vector<Index> m = elems_;
  std::sort(m.begin(), m.end());
  return Subgroup(g_, std::move(m), gens_);
}

Subgroup generate_subgroup(FiniteGroup const& g, std::span<Index const> gens) {
  Closure c(g);
  for (Index x : gens) {
    g.check_index(x);
    c.add_generator(x);
  }
  return c.to_subgroup();
}

std::optional<Subgroup> normal_closure_in(Subgroup const& within,
                                          std::span<Index const> s,
                                          std::size_t size_limit,
                                          Closure::Hook const* hook) {
  FiniteGroup const& g = within.parent();
  Closure c(g);
  for (Index x : s) {
    g.check_index(x);
    if (!c.add_generator(x, size_limit, hook)) return std::nullopt;
  }
  auto const& outer = within.generators();
  for (std::size_t i = 0; i < c.generators().size(); ++i) {
    for (Index h : outer) {
      Index y = g.conj(c.generators()[i], h);
      if (!c.contains(y) && !c.add_generator(y, size_limit, hook)) return std::nullopt;
    }
  }
  return c.to_subgroup();
}

Subgroup normal_closure(FiniteGroup const& g, std::span<Index const> s) {
  return *normal_closure_in(Subgroup::whole(g), s);
}

Subgroup centralizer(FiniteGroup const& g, std::span<Index const> x) {
  for (Index v : x) g.check_index(v);
  std::vector<Index> m;
  for (Index a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Index v : x)
      if (g.mul(a, v) != g.mul(v, a)) {
        ok = false;
        break;
      }
    if (ok) m.push_back(a);
  }
  return Subgroup(g, std::move(m));
}

Subgroup center(FiniteGroup const& g) { return centralizer(g, g.generators()); }

Subgroup normalizer(FiniteGroup const& g, Subgroup const& h) {
  std::vector<Index> m;
  for (Index a = 0; a < g.order(); ++a) {
    bool ok = true;
    for (Index s : h.generators())
      if (!h.contains(g.conj(s, a))) {
        ok = false;
        break;
      }
    if (ok) m.push_back(a);
  }
  return Subgroup(g, std::move(m));
}

bool is_normal(Subgroup const& h) {
  FiniteGroup const& g = h.parent();
  for (Index s : h.generators())
    for (Index x : g.generators())
      if (!h.contains(g.conj(s, x))) return false;
  return true;
}

Subgroup intersection(Subgroup const& a, Subgroup const& b) {
  std::vector<Index> m;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(m));
  return Subgroup(a.parent(), std::move(m));
}

Subgroup join(Subgroup const& a, Subgroup const& b) {
  Closure c(a.parent(), a);
  for (Index x : b.generators()) c.add_generator(x);
  return c.to_subgroup();
}

GroupHom::GroupHom(FiniteGroup domain, FiniteGroup codomain, std::vector<Index> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
  if (image_.size() != domain_.order())
    throw InvalidArgument("homomorphism image table has wrong length");
  for (Index y : image_) codomain_.check_index(y);
}

LawReport GroupHom::verify(Limits const& limits) const {
  LawReport r;
  r.law = "homomorphism";
  if (image_[0] != 0) {
    r.ok = false;
    r.witness = {0};
    return r;
  }
  Index n = domain_.order();
  auto check = [&](Index x, Index y) {
    if (image_[domain_.mul(x, y)] != codomain_.mul(image_[x], image_[y])) {
      r.ok = false;
      r.witness = {x, y};
      return false;
    }
    return true;
  };
  if (n <= limits.pair_check_cap) {
    r.mode = CheckMode::full(static_cast<std::size_t>(n) * n);
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (!check(x, y)) return r;
  } else {
    r.mode = CheckMode::sampled(limits.seed, limits.group_sample_count);
    Rng rng(limits.seed);
    for (std::size_t i = 0; i < limits.group_sample_count; ++i)
      if (!check(rng.below(n), rng.below(n))) return r;
  }
  return r;
}

bool GroupHom::is_bijective() const {
  if (domain_.order() != codomain_.order()) return false;
  std::vector<char> hit(codomain_.order(), 0);
  for (Index y : image_) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

Subgroup GroupHom::kernel() const {
  std::vector<Index> m;
  for (Index x = 0; x < domain_.order(); ++x)
    if (image_[x] == 0) m.push_back(x);
  return Subgroup(domain_, std::move(m));
}

SubgroupGroup subgroup_as_group(Subgroup const& h, Limits const& limits) {
  FiniteGroup const& g = h.parent();
  auto members = std::make_shared<std::vector<Index>>(h.members());
  auto position = std::make_shared<std::vector<Index>>(g.order(), g.order());
  for (Index i = 0; i < members->size(); ++i) (*position)[(*members)[i]] = i;
  std::vector<Index> gens;
  for (Index s : h.generators()) gens.push_back((*position)[s]);
  auto mul = [g, members, position](Index a, Index b) {
    return (*position)[g.mul((*members)[a], (*members)[b])];
  };
  auto inv = [g, members, position](Index a) {
    return (*position)[g.inv((*members)[a])];
  };
  auto name = [g, members](Index a) { return g.element_name((*members)[a]); };
  FiniteGroup sub = FiniteGroup::from_oracle(h.order(), mul, inv, gens, name, limits);
  return {std::move(sub), *members};
}

}  // namespace brace_forge
