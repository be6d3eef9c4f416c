#include "brace_forge/isomorphism.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace brace_forge {

namespace {

using Signature = std::pair<Index, Index>;  // element order, class size

Signature signature(FiniteGroup const& g, Index x) {
  return {g.element_order(x), g.class_sizes()[g.class_of()[x]]};
}

bool same_profile(FiniteGroup const& g, FiniteGroup const& h) {
  if (g.order() != h.order()) return false;
  std::map<Signature, long> count;
  for (Index x = 0; x < g.order(); ++x) ++count[signature(g, x)];
  for (Index x = 0; x < h.order(); ++x) --count[signature(h, x)];
  return std::all_of(count.begin(), count.end(), [](auto const& kv) { return kv.second == 0; });
}

// Extends a partial map, defined on the subgroup generated by the first
// few generators, one generator at a time. Every Cayley-graph edge
// x -> x*g_j inside the subgroup is checked, so a complete consistent and
// injective map is an isomorphism.
class MapSearch {
 public:
  MapSearch(FiniteGroup g, FiniteGroup h, std::vector<std::vector<Index>> candidates)
      : g_(std::move(g)),
        h_(std::move(h)),
        gens_(g_.generators()),
        candidates_(std::move(candidates)),
        map_(g_.order(), none()),
        used_(h_.order(), 0) {
    map_[0] = 0;
    used_[0] = 1;
    elems_.push_back(0);
  }

  // Calls `found` for every isomorphism; stops when it returns true.
  void run(std::function<bool(std::vector<Index> const&)> const& found) {
    found_ = &found;
    stop_ = false;
    descend(0);
  }

 private:
  Index none() const { return h_.order(); }

  bool assign(Index x, Index hx) {
    if (map_[x] != none()) return map_[x] == hx;
    if (used_[hx]) return false;
    map_[x] = hx;
    used_[hx] = 1;
    elems_.push_back(x);
    return true;
  }

  bool extend(std::size_t level) {
    Index gen = gens_[level];
    Index img = images_[level];
    std::size_t old_size = elems_.size();
    for (std::size_t i = 0; i < old_size; ++i) {
      Index x = elems_[i];
      if (!assign(g_.mul(x, gen), h_.mul(map_[x], img))) return false;
    }
    for (std::size_t i = old_size; i < elems_.size(); ++i) {
      Index x = elems_[i];
      for (std::size_t j = 0; j <= level; ++j)
        if (!assign(g_.mul(x, gens_[j]), h_.mul(map_[x], images_[j]))) return false;
    }
    return true;
  }

  void rollback(std::size_t size) {
    while (elems_.size() > size) {
      Index x = elems_.back();
      elems_.pop_back();
      used_[map_[x]] = 0;
      map_[x] = none();
    }
  }

  void descend(std::size_t level) {
    if (level == gens_.size()) {
      if (elems_.size() == g_.order()) stop_ = (*found_)(map_);
      return;
    }
    images_.resize(level + 1);
    for (Index img : candidates_[level]) {
      if (used_[img] && map_[gens_[level]] != img) continue;
      std::size_t mark = elems_.size();
      images_[level] = img;
      if (extend(level)) descend(level + 1);
      rollback(mark);
      if (stop_) return;
    }
  }

  FiniteGroup g_, h_;
  std::vector<Index> gens_;
  std::vector<std::vector<Index>> candidates_;
  std::vector<Index> images_;
  std::vector<Index> map_;
  std::vector<char> used_;
  std::vector<Index> elems_;
  std::function<bool(std::vector<Index> const&)> const* found_ = nullptr;
  bool stop_ = false;
};

std::vector<std::vector<Index>> candidate_images(FiniteGroup const& g, FiniteGroup const& h,
                                                 bool reps_for_first) {
  auto const& gens = g.generators();
  std::vector<std::vector<Index>> out(gens.size());
  std::vector<char> is_rep(h.order(), 0);
  for (Index r : h.class_representatives()) is_rep[r] = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Signature s = signature(g, gens[i]);
    for (Index y = 0; y < h.order(); ++y) {
      if (i == 0 && reps_for_first && !is_rep[y]) continue;
      if (signature(h, y) == s) out[i].push_back(y);
    }
  }
  return out;
}

}  // namespace

std::optional<GroupHom> find_isomorphism(FiniteGroup const& g, FiniteGroup const& h,
                                         Limits const& limits) {
  require_cap("iso_cap", limits.iso_cap, g.order());
  require_cap("iso_cap", limits.iso_cap, h.order());
  if (!same_profile(g, h)) return std::nullopt;
  if (g.order() == 1) return GroupHom(g, h, {0});
  // Composing with an inner automorphism of H moves the first image to
  // its class representative.
  MapSearch search(g, h, candidate_images(g, h, true));
  std::optional<std::vector<Index>> result;
  search.run([&](std::vector<Index> const& m) {
    result = m;
    return true;
  });
  if (!result) return std::nullopt;
  return GroupHom(g, h, std::move(*result));
}

bool are_isomorphic(FiniteGroup const& g, FiniteGroup const& h, Limits const& limits) {
  return find_isomorphism(g, h, limits).has_value();
}

std::vector<std::vector<Index>> all_automorphisms(FiniteGroup const& g, Limits const& limits) {
  require_cap("aut_cap", limits.aut_cap, g.order());
  std::vector<Index> identity(g.order());
  for (Index i = 0; i < g.order(); ++i) identity[i] = i;
  std::vector<std::vector<Index>> out{identity};
  if (g.order() == 1) return out;
  MapSearch search(g, g, candidate_images(g, g, false));
  search.run([&](std::vector<Index> const& m) {
    if (m != identity) out.push_back(m);
    return false;
  });
  return out;
}

FiniteGroup automorphism_group(FiniteGroup const& g, Limits const& limits) {
  auto auts = all_automorphisms(g, limits);
  // Greedy generating set: add an automorphism whenever it lies outside
  // the closure of those chosen so far.
  std::set<std::vector<Index>> closure{auts.front()};
  std::vector<std::vector<Index>> gens;
  auto compose = [](std::vector<Index> const& a, std::vector<Index> const& b) {
    std::vector<Index> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
  };
  for (auto const& a : auts) {
    if (closure.count(a)) continue;
    gens.push_back(a);
    std::vector<std::vector<Index>> frontier(closure.begin(), closure.end());
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (auto const& s : gens) {
        auto c = compose(frontier[i], s);
        if (closure.insert(c).second) frontier.push_back(std::move(c));
      }
    if (closure.size() == auts.size()) break;
  }
  return FiniteGroup::from_permutations(g.order(), gens, limits);
}

}  // namespace brace_forge
