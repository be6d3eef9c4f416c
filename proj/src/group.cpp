#include "brace_forge/group.hpp"

#include <algorithm>
#include <cstdio>
#include <mutex>
#include <unordered_map>

namespace brace_forge {

Limits const& default_limits() {
  static Limits const limits{};
  return limits;
}

std::string CheckMode::str() const {
  if (exhaustive) return "exhaustive";
  char buf[64];
  std::snprintf(buf, sizeof buf, "sampled(seed=0x%llX,count=%zu)",
                static_cast<unsigned long long>(seed), count);
  return buf;
}

void require_cap(char const* cap, std::size_t limit, std::size_t requested) {
  if (requested > limit) throw CapExceeded(cap, limit, requested);
}

std::string_view to_string(Backend b) {
  switch (b) {
    case Backend::cayley_table:
      return "cayley-table";
    case Backend::permutation:
      return "permutation";
    case Backend::composite:
      return "composite";
  }
  return "?";
}

namespace detail {

struct GroupState {
  Index order = 1;
  Backend backend = Backend::cayley_table;
  std::vector<Index> table;
  std::vector<Index> inverse;
  FiniteGroup::MulFn mul_fn;
  std::vector<std::string> names;
  FiniteGroup::NameFn name_fn;

  std::size_t degree = 0;
  std::vector<Index> perms;
  std::unordered_multimap<std::uint64_t, Index> perm_lookup;

  std::vector<Index> gen_hint;

  mutable std::once_flag gens_once;
  mutable std::vector<Index> gens;
  mutable std::once_flag orders_once;
  mutable std::vector<Index> orders;
  mutable std::once_flag classes_once;
  mutable std::vector<Index> class_of, reps, sizes;
};

}  // namespace detail

namespace {

using detail::GroupState;

std::uint64_t hash_perm(std::span<Index const> p) {
  std::uint64_t h = 1469598103934665603ull;
  for (Index v : p) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

Index lookup_perm(GroupState const& s, std::span<Index const> p) {
  auto [lo, hi] = s.perm_lookup.equal_range(hash_perm(p));
  for (auto it = lo; it != hi; ++it) {
    Index const* q = s.perms.data() + static_cast<std::size_t>(it->second) * s.degree;
    if (std::equal(p.begin(), p.end(), q)) return it->second;
  }
  return s.order;
}

void build_table_from_fn(GroupState& s) {
  std::size_t n = s.order;
  s.table.resize(n * n);
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) s.table[a * n + b] = s.mul_fn(a, b);
}

void inverse_from_table(GroupState& s) {
  std::size_t n = s.order;
  s.inverse.assign(n, 0);
  for (Index a = 0; a < n; ++a) {
    Index const* row = s.table.data() + a * n;
    Index const* hit = std::find(row, row + n, Index{0});
    s.inverse[a] = static_cast<Index>(hit - row);
  }
}

// Closure of `gens` inside the group given by `mul`, counting elements.
std::size_t closure_size(FiniteGroup const& g, std::vector<Index> const& gens,
                         std::vector<char>& mark) {
  mark.assign(g.order(), 0);
  std::vector<Index> elems{0};
  mark[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (Index x : gens) {
      Index y = g.mul(elems[i], x);
      if (!mark[y]) {
        mark[y] = 1;
        elems.push_back(y);
      }
    }
  }
  return elems.size();
}

}  // namespace

FiniteGroup::FiniteGroup() {
  auto s = std::make_shared<GroupState>();
  s->order = 1;
  s->table = {0};
  s->inverse = {0};
  *this = FiniteGroup(std::move(s));
}

FiniteGroup::FiniteGroup(std::shared_ptr<GroupState const> state)
    : state_(std::move(state)) {
  order_ = state_->order;
  table_ = state_->table.empty() ? nullptr : state_->table.data();
  inverse_ = state_->inverse.data();
}

Index FiniteGroup::slow_mul(Index a, Index b) const {
  GroupState const& s = *state_;
  if (s.backend == Backend::permutation) {
    std::vector<Index> c(s.degree);
    Index const* pa = s.perms.data() + static_cast<std::size_t>(a) * s.degree;
    Index const* pb = s.perms.data() + static_cast<std::size_t>(b) * s.degree;
    for (std::size_t x = 0; x < s.degree; ++x) c[x] = pa[pb[x]];
    return lookup_perm(s, c);
  }
  return s.mul_fn(a, b);
}

FiniteGroup FiniteGroup::from_table(std::vector<Index> table, Index order,
                                    std::vector<std::string> names,
                                    Limits const& limits) {
  if (order == 0) throw InvalidArgument("group order must be positive");
  std::size_t n = order;
  if (table.size() != n * n)
    throw InvalidArgument("table size " + std::to_string(table.size()) +
                          " does not match order " + std::to_string(n));
  if (!names.empty() && names.size() != n)
    throw InvalidArgument("element name count does not match order");
  for (Index v : table)
    if (v >= n) throw InvalidArgument("table entry out of range");
  for (Index x = 0; x < n; ++x) {
    if (table[x] != x || table[x * n] != x)
      throw LawViolation("identity at index 0", {x});
  }
  // Latin-square rows give left and right cancellation.
  std::vector<char> seen(n);
  for (Index a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (Index b = 0; b < n; ++b) {
      Index v = table[a * n + b];
      if (seen[v]) throw LawViolation("row is a permutation", {a, b});
      seen[v] = 1;
    }
  }
  auto s = std::make_shared<GroupState>();
  s->order = order;
  s->backend = Backend::cayley_table;
  s->table = std::move(table);
  s->names = std::move(names);
  inverse_from_table(*s);
  FiniteGroup g(std::move(s));
  LawReport r = verify_group_laws(g, limits);
  if (!r.ok) throw LawViolation(r.law, r.witness);
  return g;
}

FiniteGroup FiniteGroup::from_rows(std::vector<std::vector<Index>> const& rows,
                                   std::vector<std::string> names,
                                   Limits const& limits) {
  std::size_t n = rows.size();
  std::vector<Index> flat;
  flat.reserve(n * n);
  for (auto const& row : rows) {
    if (row.size() != n) throw InvalidArgument("table is not square");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return from_table(std::move(flat), static_cast<Index>(n), std::move(names),
                    limits);
}

FiniteGroup FiniteGroup::from_permutations(
    std::size_t degree, std::vector<std::vector<Index>> const& generators,
    Limits const& limits) {
  if (degree == 0) throw InvalidArgument("permutation degree must be positive");
  std::vector<std::vector<Index>> gens;
  for (auto const& g : generators) {
    if (g.size() != degree)
      throw InvalidArgument("generator length does not match degree");
    std::vector<char> hit(degree, 0);
    for (Index v : g) {
      if (v >= degree || hit[v])
        throw InvalidArgument("generator is not a permutation");
      hit[v] = 1;
    }
    gens.push_back(g);
  }

  auto s = std::make_shared<GroupState>();
  s->degree = degree;
  s->backend = Backend::permutation;
  std::vector<Index> id(degree);
  for (std::size_t i = 0; i < degree; ++i) id[i] = static_cast<Index>(i);
  s->perms = id;
  s->order = 1;
  s->perm_lookup.emplace(hash_perm(id), 0);

  auto add = [&](std::vector<Index> const& p) -> Index {
    Index found = lookup_perm(*s, p);
    if (found != s->order) return found;
    require_cap("element_cap", limits.element_cap, s->order + 1ull);
    s->perms.insert(s->perms.end(), p.begin(), p.end());
    s->perm_lookup.emplace(hash_perm(p), s->order);
    return s->order++;
  };

  std::vector<Index> gen_ids;
  for (auto const& g : gens) {
    Index id_g = add(g);
    if (id_g != 0 && std::find(gen_ids.begin(), gen_ids.end(), id_g) == gen_ids.end())
      gen_ids.push_back(id_g);
  }
  // Breadth-first closure from the identity.
  std::vector<Index> c(degree);
  std::vector<Index> queue{0};
  queue.insert(queue.end(), gen_ids.begin(), gen_ids.end());
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (Index gi : gen_ids) {
      Index const* pa = s->perms.data() + static_cast<std::size_t>(queue[qi]) * degree;
      Index const* pg = s->perms.data() + static_cast<std::size_t>(gi) * degree;
      for (std::size_t x = 0; x < degree; ++x) c[x] = pa[pg[x]];
      Index before = s->order;
      Index r = add(c);
      if (r == before) queue.push_back(r);
    }
  }
  std::size_t n = s->order;
  // Re-enumerate so indices follow breadth-first order from the identity.
  {
    std::vector<Index> order_map(n, static_cast<Index>(n));
    std::vector<Index> bfs{0};
    order_map[0] = 0;
    for (std::size_t qi = 0; qi < bfs.size(); ++qi) {
      for (Index gi : gen_ids) {
        Index const* pa = s->perms.data() + static_cast<std::size_t>(bfs[qi]) * degree;
        Index const* pg = s->perms.data() + static_cast<std::size_t>(gi) * degree;
        for (std::size_t x = 0; x < degree; ++x) c[x] = pa[pg[x]];
        Index r = lookup_perm(*s, c);
        if (order_map[r] == n) {
          order_map[r] = static_cast<Index>(bfs.size());
          bfs.push_back(r);
        }
      }
    }
    std::vector<Index> perms(n * degree);
    for (Index old = 0; old < n; ++old)
      std::copy_n(s->perms.data() + static_cast<std::size_t>(old) * degree, degree,
                  perms.data() + static_cast<std::size_t>(order_map[old]) * degree);
    s->perms = std::move(perms);
    s->perm_lookup.clear();
    for (Index i = 0; i < n; ++i)
      s->perm_lookup.emplace(
          hash_perm({s->perms.data() + static_cast<std::size_t>(i) * degree, degree}), i);
    for (Index& gi : gen_ids) gi = order_map[gi];
  }
  s->gen_hint = gen_ids;

  // Inverses by inverting each permutation.
  s->inverse.resize(n);
  std::vector<Index> invp(degree);
  for (Index i = 0; i < n; ++i) {
    Index const* p = s->perms.data() + static_cast<std::size_t>(i) * degree;
    for (std::size_t x = 0; x < degree; ++x) invp[p[x]] = static_cast<Index>(x);
    s->inverse[i] = lookup_perm(*s, invp);
  }
  if (n <= limits.table_cap) {
    s->table.resize(n * n);
    for (Index a = 0; a < n; ++a) {
      Index const* pa = s->perms.data() + static_cast<std::size_t>(a) * degree;
      for (Index b = 0; b < n; ++b) {
        Index const* pb = s->perms.data() + static_cast<std::size_t>(b) * degree;
        for (std::size_t x = 0; x < degree; ++x) c[x] = pa[pb[x]];
        s->table[static_cast<std::size_t>(a) * n + b] = lookup_perm(*s, c);
      }
    }
    s->backend = Backend::cayley_table;
  }
  return FiniteGroup(std::move(s));
}

FiniteGroup FiniteGroup::from_oracle(Index order, MulFn mul, InvFn inv,
                                     std::vector<Index> generators,
                                     NameFn names, Limits const& limits) {
  if (order == 0) throw InvalidArgument("group order must be positive");
  require_cap("element_cap", limits.element_cap, order);
  auto s = std::make_shared<GroupState>();
  s->order = order;
  s->mul_fn = std::move(mul);
  s->name_fn = std::move(names);
  for (Index g : generators) {
    if (g >= order) throw InvalidArgument("generator index out of range");
    if (g != 0 && std::find(s->gen_hint.begin(), s->gen_hint.end(), g) == s->gen_hint.end())
      s->gen_hint.push_back(g);
  }
  s->inverse.resize(order);
  for (Index a = 0; a < order; ++a) s->inverse[a] = inv(a);
  if (order <= limits.table_cap) {
    build_table_from_fn(*s);
    s->backend = Backend::cayley_table;
  } else {
    s->backend = Backend::composite;
  }
  return FiniteGroup(std::move(s));
}

Index FiniteGroup::power(Index x, std::uint64_t k) const {
  Index result = 0;
  Index base = x;
  while (k) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Backend FiniteGroup::backend() const noexcept { return state_->backend; }

std::string FiniteGroup::element_name(Index a) const {
  check_index(a);
  if (!state_->names.empty()) return state_->names[a];
  if (state_->name_fn) return state_->name_fn(a);
  return std::to_string(a);
}

void FiniteGroup::check_index(Index a) const {
  if (a >= order_)
    throw InvalidArgument("element index " + std::to_string(a) +
                          " out of range for group of order " +
                          std::to_string(order_));
}

std::vector<Index> const& FiniteGroup::generators() const {
  GroupState const& s = *state_;
  std::call_once(s.gens_once, [&] {
    if (order_ == 1) return;
    std::vector<char> mark;
    std::vector<Index> gens = s.gen_hint;
    if (gens.empty() || closure_size(*this, gens, mark) != order_) {
      gens.clear();
      Rng rng(0x5EEDull ^ order_);
      std::size_t size = 1;
      mark.assign(order_, 0);
      mark[0] = 1;
      while (size < order_) {
        Index pick = order_;
        for (int tries = 0; tries < 64 && pick == order_; ++tries) {
          Index x = rng.below(order_);
          if (!mark[x]) pick = x;
        }
        if (pick == order_)
          pick = static_cast<Index>(std::find(mark.begin(), mark.end(), 0) - mark.begin());
        gens.push_back(pick);
        size = closure_size(*this, gens, mark);
      }
    }
    // Drop redundant generators while the group is small enough for it.
    if (order_ <= 50000 && gens.size() > 1) {
      for (std::size_t i = gens.size(); i-- > 0;) {
        if (gens.size() == 1) break;
        std::vector<Index> rest = gens;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (closure_size(*this, rest, mark) == order_) gens = std::move(rest);
      }
    }
    s.gens = std::move(gens);
  });
  return s.gens;
}

Index FiniteGroup::element_order(Index a) const {
  check_index(a);
  return element_orders()[a];
}

std::vector<Index> const& FiniteGroup::element_orders() const {
  GroupState const& s = *state_;
  std::call_once(s.orders_once, [&] {
    std::vector<Index> orders(order_, 0);
    for (Index a = 0; a < order_; ++a) {
      if (orders[a]) continue;
      Index k = 1;
      Index x = a;
      while (x != 0) {
        x = mul(x, a);
        ++k;
      }
      orders[a] = k;
      // Every power a^j has order k / gcd(j, k); fill the inverse at least.
      orders[inv(a)] = k;
    }
    s.orders = std::move(orders);
  });
  return s.orders;
}

std::vector<Index> const& FiniteGroup::class_of() const {
  GroupState const& s = *state_;
  std::call_once(s.classes_once, [&] {
    Index const none = order_;
    std::vector<Index> cls(order_, none), reps, sizes;
    auto const& gens = generators();
    std::vector<Index> queue;
    for (Index x = 0; x < order_; ++x) {
      if (cls[x] != none) continue;
      Index id = static_cast<Index>(reps.size());
      reps.push_back(x);
      queue.assign(1, x);
      cls[x] = id;
      for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        for (Index g : gens) {
          Index y = conj(queue[qi], g);
          if (cls[y] == none) {
            cls[y] = id;
            queue.push_back(y);
          }
        }
      }
      sizes.push_back(static_cast<Index>(queue.size()));
    }
    s.class_of = std::move(cls);
    s.reps = std::move(reps);
    s.sizes = std::move(sizes);
  });
  return s.class_of;
}

std::vector<Index> const& FiniteGroup::class_representatives() const {
  class_of();
  return state_->reps;
}

std::vector<Index> const& FiniteGroup::class_sizes() const {
  class_of();
  return state_->sizes;
}

bool FiniteGroup::is_abelian() const {
  auto const& g = generators();
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      if (mul(g[i], g[j]) != mul(g[j], g[i])) return false;
  return true;
}

FiniteGroup FiniteGroup::opposite() const {
  auto s = std::make_shared<GroupState>();
  s->order = order_;
  s->inverse = state_->inverse;
  s->names = state_->names;
  s->name_fn = state_->name_fn;
  s->gen_hint = generators();
  if (table_) {
    std::size_t n = order_;
    s->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) s->table[b * n + a] = table_[a * n + b];
    s->backend = Backend::cayley_table;
  } else {
    FiniteGroup base = *this;
    s->mul_fn = [base](Index a, Index b) { return base.mul(b, a); };
    s->backend = Backend::composite;
  }
  return FiniteGroup(std::move(s));
}

std::size_t FiniteGroup::permutation_degree() const noexcept {
  return state_->perms.empty() ? 0 : state_->degree;
}

std::span<Index const> FiniteGroup::permutation(Index a) const {
  check_index(a);
  if (state_->perms.empty()) return {};
  return {state_->perms.data() + static_cast<std::size_t>(a) * state_->degree,
          state_->degree};
}

Index FiniteGroup::find_permutation(std::span<Index const> perm) const {
  if (state_->perms.empty() || perm.size() != state_->degree) return order_;
  return lookup_perm(*state_, perm);
}

bool FiniteGroup::equal_law(FiniteGroup const& other) const {
  if (order_ != other.order_) return false;
  for (Index a = 0; a < order_; ++a)
    for (Index b = 0; b < order_; ++b)
      if (mul(a, b) != other.mul(a, b)) return false;
  return true;
}

LawReport verify_group_laws(FiniteGroup const& g, Limits const& limits) {
  LawReport r;
  Index n = g.order();
  for (Index x = 0; x < n; ++x) {
    if (g.mul(0, x) != x || g.mul(x, 0) != x) {
      r.ok = false;
      r.law = "identity";
      r.witness = {x};
      return r;
    }
    if (g.mul(x, g.inv(x)) != 0 || g.mul(g.inv(x), x) != 0) {
      r.ok = false;
      r.law = "inverse";
      r.witness = {x};
      return r;
    }
  }
  auto assoc = [&](Index a, Index b, Index c) {
    if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
      r.ok = false;
      r.law = "associativity";
      r.witness = {a, b, c};
      return false;
    }
    return true;
  };
  if (n <= limits.full_check_cap) {
    r.mode = CheckMode::full(static_cast<std::size_t>(n) * n * n);
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (!assoc(a, b, c)) return r;
  } else {
    r.mode = CheckMode::sampled(limits.seed, limits.group_sample_count);
    Rng rng(limits.seed);
    for (std::size_t i = 0; i < limits.group_sample_count; ++i) {
      Index a = rng.below(n), b = rng.below(n), c = rng.below(n);
      if (!assoc(a, b, c)) return r;
    }
  }
  return r;
}

}  // namespace brace_forge
