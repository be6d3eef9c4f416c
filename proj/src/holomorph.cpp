#include "brace_forge/holomorph.hpp"

#include <algorithm>
#include <map>

#include "brace_forge/isomorphism.hpp"

namespace brace_forge {

namespace {

using Clock = std::chrono::steady_clock;

std::map<Index, Index> order_histogram(FiniteGroup const& g) {
  std::map<Index, Index> hist;
  for (Index o : g.element_orders()) ++hist[o];
  return hist;
}

}  // namespace

HolomorphGroup holomorph(FiniteGroup const& a, Limits const& limits) {
  FiniteGroup aut = automorphism_group(a, limits);
  Index m = aut.order();
  std::size_t n = std::size_t(a.order()) * m;
  require_cap("element_cap", limits.element_cap, n);
  auto mul = [a, aut, m](Index x, Index y) {
    Index t = x / m, phi = x % m, s = y / m, psi = y % m;
    return a.mul(t, aut.permutation(phi)[s]) * m + aut.mul(phi, psi);
  };
  // (t, phi)^-1 = (-phi^-1(t), phi^-1)
  auto inv = [a, aut, m](Index x) {
    Index t = x / m, phi_inv = aut.inv(x % m);
    return a.inv(aut.permutation(phi_inv)[t]) * m + phi_inv;
  };
  std::vector<Index> gens;
  for (Index t : a.generators()) gens.push_back(t * m);
  for (Index phi : aut.generators()) gens.push_back(phi);
  FiniteGroup hol = FiniteGroup::from_oracle(static_cast<Index>(n), mul, inv, gens, {}, limits);
  return {a, std::move(aut), std::move(hol)};
}

bool is_regular(HolomorphGroup const& h, std::vector<Index> const& members) {
  Index n = h.base.order();
  if (members.size() != n) return false;
  std::vector<char> hit(n, 0);
  for (Index r : members) {
    Index p = h.act(r, 0);
    if (hit[p]) return false;
    hit[p] = 1;
  }
  std::vector<Index> sorted = members;
  std::sort(sorted.begin(), sorted.end());
  FiniteGroup const& g = h.group;
  for (Index x : sorted)
    for (Index y : sorted)
      if (!std::binary_search(sorted.begin(), sorted.end(), g.mul(x, y))) return false;
  return true;
}

RegularSubgroup translation_subgroup(HolomorphGroup const& h) {
  RegularSubgroup r;
  for (Index t = 0; t < h.base.order(); ++t) r.by_point.push_back(h.element(t, 0));
  r.members = r.by_point;
  return r;
}

struct RegularSubgroupSearch::State {
  struct Frame {
    std::vector<Index> elems;
    std::vector<Index> gens;
    std::vector<Index> by_point;  // point -> element, none when uncovered
    std::map<Index, Index> hist;
    Index point = 0;
    Index next_phi = 0;
  };

  HolomorphGroup hol;
  RegularSearchOptions options;
  Limits limits;
  Index n;
  Index none;
  std::optional<std::map<Index, Index>> filter_hist;
  std::vector<Frame> stack;
  RegularSearchResult result;

  State(HolomorphGroup h, RegularSearchOptions o, Limits const& l)
      : hol(std::move(h)), options(std::move(o)), limits(l) {
    n = hol.base.order();
    none = hol.group.order();
    if (options.iso_filter) {
      if (options.iso_filter->order() != n)
        throw InvalidArgument("iso_filter order differs from the base order");
      filter_hist = order_histogram(*options.iso_filter);
    }
    Frame root;
    root.elems = {0};
    root.by_point.assign(n, none);
    root.by_point[0] = 0;
    root.hist[1] = 1;
    if (n == 1) {
      result.found.push_back({{0}, {0}});
      result.complete = true;
    } else {
      root.point = 1;
      stack.push_back(std::move(root));
    }
  }

  bool fixed_point_free(Index x) const {
    for (Index p = 0; p < n; ++p)
      if (hol.act(x, p) == p) return false;
    return true;
  }

  Index element_order(Index x) const {
    Index o = 1;
    for (Index y = x; y != 0; y = hol.group.mul(y, x)) ++o;
    return o;
  }

  bool hist_fits(std::map<Index, Index> const& hist) const {
    if (!filter_hist) return true;
    for (auto [o, c] : hist) {
      auto it = filter_hist->find(o);
      if (it == filter_hist->end() || it->second < c) return false;
    }
    return true;
  }

  // Closure of frame + x, or nullopt when it stops being semiregular or
  // its order histogram cannot fit the filter.
  std::optional<Frame> extend(Frame const& f, Index x) const {
    Frame g;
    g.elems = f.elems;
    g.gens = f.gens;
    g.gens.push_back(x);
    g.by_point = f.by_point;
    g.hist = f.hist;
    auto visit = [&](Index y) {
      Index p = hol.translation(y);
      if (g.by_point[p] != none) return g.by_point[p] == y;
      if (!fixed_point_free(y)) return false;
      ++g.hist[element_order(y)];
      if (!hist_fits(g.hist)) return false;
      g.by_point[p] = y;
      g.elems.push_back(y);
      return true;
    };
    std::size_t old_size = g.elems.size();
    for (std::size_t i = 0; i < old_size; ++i)
      if (!visit(hol.group.mul(g.elems[i], x))) return std::nullopt;
    for (std::size_t i = old_size; i < g.elems.size(); ++i)
      for (Index s : g.gens)
        if (!visit(hol.group.mul(g.elems[i], s))) return std::nullopt;
    return g;
  }

  void accept(Frame const& f) {
    RegularSubgroup r{f.elems, f.by_point};
    std::sort(r.members.begin(), r.members.end());
    if (options.iso_filter) {
      SkewBrace b = brace_from_regular_subgroup(hol, r, limits);
      if (!are_isomorphic(b.mul_group(), *options.iso_filter, limits)) {
        ++result.rejected_by_filter;
        return;
      }
    }
    result.found.push_back(std::move(r));
  }

  void run(std::chrono::duration<double> budget) {
    auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget);
    Index m = hol.aut.order();
    while (!stack.empty()) {
      if (result.found.size() >= options.max_results) return;
      if ((result.nodes & 255) == 0 && Clock::now() > deadline) {
        result.budget_exhausted = true;
        return;
      }
      Frame& top = stack.back();
      if (top.next_phi == m) {
        stack.pop_back();
        continue;
      }
      Index x = hol.element(top.point, top.next_phi++);
      ++result.nodes;
      if (!fixed_point_free(x)) continue;
      if (filter_hist && !filter_hist->count(element_order(x))) continue;
      auto next = extend(top, x);
      if (!next) continue;
      if (next->elems.size() == n) {
        accept(*next);
        continue;
      }
      Index p = 0;
      while (next->by_point[p] != none) ++p;
      next->point = p;
      stack.push_back(std::move(*next));
    }
    result.complete = true;
    result.budget_exhausted = false;
  }
};

RegularSubgroupSearch::RegularSubgroupSearch(HolomorphGroup h, RegularSearchOptions options,
                                             Limits const& limits)
    : state_(std::make_unique<State>(std::move(h), std::move(options), limits)) {}

RegularSubgroupSearch::~RegularSubgroupSearch() = default;

RegularSearchResult const& RegularSubgroupSearch::run(std::chrono::duration<double> budget) {
  state_->run(budget);
  return state_->result;
}

RegularSearchResult const& RegularSubgroupSearch::result() const { return state_->result; }

RegularSearchResult find_regular_subgroups(HolomorphGroup const& h, Index target_order,
                                           RegularSearchOptions const& options,
                                           Limits const& limits) {
  if (target_order != h.base.order())
    throw InvalidArgument("regular subgroups of Hol(A) have order |A|");
  RegularSubgroupSearch search(h, options, limits);
  return search.run(options.budget);
}

SkewBrace brace_from_regular_subgroup(HolomorphGroup const& h, RegularSubgroup const& r,
                                      Limits const& limits) {
  Index n = h.base.order();
  if (r.by_point.size() != n) throw InvalidArgument("regular subgroup has the wrong size");
  auto by_point = std::make_shared<std::vector<Index>>(r.by_point);
  auto mul = [h, by_point](Index x, Index y) { return h.act((*by_point)[x], y); };
  auto inv = [h, by_point](Index x) {
    Index phi_inv = h.aut.inv(h.automorphism((*by_point)[x]));
    return h.aut.permutation(phi_inv)[h.base.inv(x)];
  };
  FiniteGroup m = FiniteGroup::from_oracle(n, mul, inv, {}, {}, limits);
  return make_brace(h.base, std::move(m), limits, "regular subgroup");
}

}  // namespace brace_forge
