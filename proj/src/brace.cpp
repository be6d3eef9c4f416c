#include "brace_forge/brace.hpp"

#include <algorithm>

#include "brace_forge/isomorphism.hpp"
#include "brace_forge/structure.hpp"

namespace brace_forge {

namespace {

std::vector<char> membership(Index n, std::span<Index const> members) {
  std::vector<char> in(n, 0);
  for (Index x : members) in[x] = 1;
  return in;
}

// Runs check(x, y) over all pairs of xs * ys when small enough, otherwise
// over seeded samples. Stops at the first failure, storing the witness.
template <class Check>
CheckMode for_pairs(std::span<Index const> xs, std::span<Index const> ys, Limits const& limits,
                    std::vector<Index>* witness, Check check) {
  std::size_t total = xs.size() * ys.size();
  if (total <= limits.pair_check_cap * limits.pair_check_cap) {
    for (Index x : xs)
      for (Index y : ys)
        if (!check(x, y)) {
          if (witness) *witness = {x, y};
          return CheckMode::full(total);
        }
    return CheckMode::full(total);
  }
  Rng rng(limits.seed);
  for (std::size_t i = 0; i < limits.sample_count; ++i) {
    Index x = xs[rng.below(xs.size())];
    Index y = ys[rng.below(ys.size())];
    if (!check(x, y)) {
      if (witness) *witness = {x, y};
      break;
    }
  }
  return CheckMode::sampled(limits.seed, limits.sample_count);
}

std::vector<Index> all_indices(Index n) {
  std::vector<Index> v(n);
  for (Index i = 0; i < n; ++i) v[i] = i;
  return v;
}

// Pair check over the whole carrier with the pair_check_cap threshold.
template <class Check>
CheckMode for_all_pairs(Index n, Limits const& limits, std::vector<Index>* witness, Check check) {
  if (n <= limits.pair_check_cap) {
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        if (!check(x, y)) {
          if (witness) *witness = {x, y};
          return CheckMode::full(std::size_t(n) * n);
        }
    return CheckMode::full(std::size_t(n) * n);
  }
  Rng rng(limits.seed);
  for (std::size_t i = 0; i < limits.sample_count; ++i) {
    Index x = rng.below(n), y = rng.below(n);
    if (!check(x, y)) {
      if (witness) *witness = {x, y};
      break;
    }
  }
  return CheckMode::sampled(limits.seed, limits.sample_count);
}

template <class Check>
CheckMode for_all_triples(Index n, Limits const& limits, std::vector<Index>* witness,
                          Check check) {
  if (n <= limits.full_check_cap) {
    for (Index x = 0; x < n; ++x)
      for (Index y = 0; y < n; ++y)
        for (Index z = 0; z < n; ++z)
          if (!check(x, y, z)) {
            if (witness) *witness = {x, y, z};
            return CheckMode::full(std::size_t(n) * n * n);
          }
    return CheckMode::full(std::size_t(n) * n * n);
  }
  Rng rng(limits.seed);
  for (std::size_t i = 0; i < limits.sample_count; ++i) {
    Index x = rng.below(n), y = rng.below(n), z = rng.below(n);
    if (!check(x, y, z)) {
      if (witness) *witness = {x, y, z};
      break;
    }
  }
  return CheckMode::sampled(limits.seed, limits.sample_count);
}

Subgroup span_of(FiniteGroup const& add, std::span<Index const> xs, std::span<Index const> ys,
                 auto op) {
  Closure c(add);
  for (Index x : xs)
    for (Index y : ys) {
      Index s = op(x, y);
      if (!c.contains(s)) {
        c.add_generator(s);
        if (c.size() == add.order()) return c.to_subgroup();
      }
    }
  return c.to_subgroup();
}

Index find_identity(std::vector<std::vector<Index>> const& rows) {
  for (Index e = 0; e < rows.size(); ++e) {
    bool ok = rows[e].size() == rows.size();
    for (Index x = 0; ok && x < rows.size(); ++x) ok = rows[e][x] == x && rows[x][e] == x;
    if (ok) return e;
  }
  throw InvalidArgument("table has no identity element");
}

}  // namespace

std::vector<Index> SkewBrace::lambda_map(Index b) const {
  add_.check_index(b);
  std::vector<Index> m(order());
  for (Index a = 0; a < order(); ++a) m[a] = lambda(b, a);
  return m;
}

std::vector<Index> SkewBrace::lambda_opp_map(Index b) const {
  add_.check_index(b);
  std::vector<Index> m(order());
  for (Index a = 0; a < order(); ++a) m[a] = lambda_opp(b, a);
  return m;
}

LawReport verify_left_brace_law(FiniteGroup const& add, FiniteGroup const& mul,
                                Limits const& limits) {
  if (add.order() != mul.order()) throw InvalidArgument("additive and multiplicative orders differ");
  LawReport r;
  r.law = "left brace law";
  r.mode = for_all_triples(add.order(), limits, &r.witness, [&](Index a, Index b, Index c) {
    Index lhs = mul.mul(a, add.mul(b, c));
    Index rhs = add.mul(add.mul(mul.mul(a, b), add.inv(a)), mul.mul(a, c));
    return lhs == rhs;
  });
  r.ok = r.witness.empty();
  return r;
}

SkewBrace make_brace(FiniteGroup add, FiniteGroup mul, Limits const& limits,
                     std::string provenance) {
  LawReport r = verify_left_brace_law(add, mul, limits);
  if (!r.ok) throw LawViolation(r.law, r.witness);
  return SkewBrace(std::move(add), std::move(mul), std::move(r), std::move(provenance));
}

SkewBrace make_brace_from_tables(std::vector<std::vector<Index>> const& add_rows,
                                 std::vector<std::vector<Index>> const& mul_rows,
                                 Limits const& limits, std::string provenance) {
  if (add_rows.size() != mul_rows.size())
    throw InvalidArgument("additive and multiplicative orders differ");
  Index ea = find_identity(add_rows), em = find_identity(mul_rows);
  if (ea != em)
    throw InvalidArgument("additive identity " + std::to_string(ea) +
                          " differs from multiplicative identity " + std::to_string(em));
  if (ea != 0) throw InvalidArgument("the shared identity must be element 0");
  return make_brace(FiniteGroup::from_rows(add_rows, {}, limits),
                    FiniteGroup::from_rows(mul_rows, {}, limits), limits, std::move(provenance));
}

SkewBrace opposite(SkewBrace const& b, Limits const& limits) {
  return make_brace(b.add_group().opposite(), b.mul_group(), limits, "opposite(" + b.provenance() + ")");
}

SkewBrace triv(FiniteGroup const& g, Limits const& limits) {
  return make_brace(g, g, limits, "triv");
}

SkewBrace a_triv(FiniteGroup const& g, Limits const& limits) {
  return make_brace(g.opposite(), g, limits, "a_triv");
}

SkewBrace brace_product(SkewBrace const& b, SkewBrace const& c, Limits const& limits) {
  return make_brace(direct_product(b.add_group(), c.add_group(), limits),
                    direct_product(b.mul_group(), c.mul_group(), limits), limits,
                    "product(" + b.provenance() + "," + c.provenance() + ")");
}

Subgroup star_span(SkewBrace const& b, std::span<Index const> xs, std::span<Index const> ys) {
  for (Index x : xs) b.add_group().check_index(x);
  for (Index y : ys) b.add_group().check_index(y);
  return span_of(b.add_group(), xs, ys, [&](Index x, Index y) { return b.star(x, y); });
}

Subgroup star_opp_span(SkewBrace const& b, std::span<Index const> xs,
                       std::span<Index const> ys) {
  for (Index x : xs) b.add_group().check_index(x);
  for (Index y : ys) b.add_group().check_index(y);
  return span_of(b.add_group(), xs, ys, [&](Index x, Index y) { return b.star_opp(x, y); });
}

IdealVerdict is_ideal(SkewBrace const& b, std::span<Index const> members, Limits const& limits) {
  FiniteGroup const& add = b.add_group();
  FiniteGroup const& mul = b.mul_group();
  IdealVerdict v;
  std::vector<Index> m(members.begin(), members.end());
  for (Index x : m) add.check_index(x);
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  auto fail = [&](std::string why) {
    if (v.reason.empty()) v.reason = std::move(why);
  };
  if (m.empty() || m.front() != 0) {
    v.reason = "does not contain 0";
    return v;
  }
  Subgroup sa = generate_subgroup(add, m);
  if (sa.order() != m.size()) {
    v.reason = "not a subgroup of (B,+)";
    return v;
  }
  auto in = membership(b.order(), m);

  bool add_normal = true;
  for (Index s : sa.generators())
    for (Index g : add.generators())
      if (!in[add.conj(s, g)]) add_normal = false;
  if (!add_normal) fail("not normal in (B,+)");

  Subgroup sm = generate_subgroup(mul, m);
  if (sm.order() != m.size()) {
    fail("not a subgroup of (B,*)");
  } else {
    for (Index s : sm.generators())
      for (Index g : mul.generators())
        if (!in[mul.conj(s, g)]) {
          fail("not normal in (B,*)");
          break;
        }
  }
  for (Index g : mul.generators())
    for (Index s : sa.generators())
      if (!in[b.lambda(g, s)]) fail("not lambda-invariant");
  v.ok = v.reason.empty();

  std::vector<Index> all = all_indices(b.order());
  std::vector<Index> witness;
  v.star_mode = for_pairs(all, m, limits, &witness,
                          [&](Index x, Index s) { return in[b.star(x, s)] && in[b.star(s, x)]; });
  v.star_ok = add_normal && witness.empty();
  if (v.ok && !v.star_ok) v.reason = "star characterization fails";
  return v;
}

BraceIdeal b_squared(SkewBrace const& b, Side side, Limits const& limits) {
  std::vector<Index> all = all_indices(b.order());
  Subgroup span = side == Side::plain ? star_span(b, all, all) : star_opp_span(b, all, all);
  if (is_ideal(b, span.members(), limits).ok) return {std::move(span), false};
  // Close under lambda images and both conjugations until stable.
  FiniteGroup const& add = b.add_group();
  FiniteGroup const& mul = b.mul_group();
  Subgroup cur = std::move(span);
  while (true) {
    std::vector<Index> seeds = cur.members();
    for (Index s : cur.members())
      for (Index g : mul.generators()) {
        seeds.push_back(b.lambda(g, s));
        seeds.push_back(mul.conj(s, g));
      }
    for (Index s : cur.members())
      for (Index g : add.generators()) seeds.push_back(add.conj(s, g));
    Subgroup next = generate_subgroup(add, seeds);
    if (next.order() == cur.order()) break;
    cur = std::move(next);
  }
  return {std::move(cur), true};
}

QuotientBrace quotient_brace(SkewBrace const& b, Subgroup const& ideal, Limits const& limits) {
  if (!ideal.parent().same_as(b.add_group()))
    throw InvalidArgument("ideal is not a subgroup of the additive group");
  IdealVerdict v = is_ideal(b, ideal.members(), limits);
  if (!v.ok) throw InvalidArgument("not an ideal: " + v.reason);
  FiniteGroup const& add = b.add_group();
  FiniteGroup const& mul = b.mul_group();
  Index const none = b.order();
  auto coset = std::make_shared<std::vector<Index>>(b.order(), none);
  auto reps = std::make_shared<std::vector<Index>>();
  for (Index x = 0; x < b.order(); ++x) {
    if ((*coset)[x] != none) continue;
    Index id = static_cast<Index>(reps->size());
    reps->push_back(x);
    for (Index k : ideal.members()) (*coset)[add.mul(x, k)] = id;
  }
  Index q = static_cast<Index>(reps->size());
  auto induced = [&](FiniteGroup const& g) {
    std::vector<Index> gens;
    for (Index s : g.generators()) gens.push_back((*coset)[s]);
    auto m = [g, coset, reps](Index x, Index y) { return (*coset)[g.mul((*reps)[x], (*reps)[y])]; };
    auto i = [g, coset, reps](Index x) { return (*coset)[g.inv((*reps)[x])]; };
    return FiniteGroup::from_oracle(q, m, i, gens, {}, limits);
  };
  SkewBrace qb = make_brace(induced(add), induced(mul), limits, "quotient(" + b.provenance() + ")");
  std::vector<Index> witness;
  for_all_pairs(q, limits, &witness, [&](Index i, Index j) {
    return (*coset)[b.star((*reps)[i], (*reps)[j])] == qb.star(i, j);
  });
  bool compatible = witness.empty();
  return {std::move(qb), *coset, *reps, compatible};
}

BraceFlags classify_brace(SkewBrace const& b, Limits const& limits) {
  BraceFlags f;
  Index n = b.order();
  f.pair_mode = for_all_pairs(n, limits, &f.not_trivial_witness,
                              [&](Index x, Index y) { return b.mul(x, y) == b.add(x, y); });
  for_all_pairs(n, limits, &f.not_almost_trivial_witness,
                [&](Index x, Index y) { return b.mul(x, y) == b.add(y, x); });
  f.triple_mode = for_all_triples(n, limits, &f.not_two_sided_witness,
                                  [&](Index x, Index y, Index z) {
                                    Index lhs = b.mul(b.add(x, y), z);
                                    Index rhs = b.add(b.sub(b.mul(x, z), z), b.mul(y, z));
                                    return lhs == rhs;
                                  });
  f.is_trivial = f.not_trivial_witness.empty();
  f.is_almost_trivial = f.not_almost_trivial_witness.empty();
  f.is_two_sided = f.not_two_sided_witness.empty();
  return f;
}

LambdaKernel kernel_lambda(SkewBrace const& b) {
  FiniteGroup const& add = b.add_group();
  FiniteGroup const& mul = b.mul_group();
  std::vector<Index> m;
  for (Index x = 0; x < b.order(); ++x) {
    bool id = true;
    for (Index g : add.generators())
      if (b.lambda(x, g) != g) {
        id = false;
        break;
      }
    if (id) m.push_back(x);
  }
  auto in = membership(b.order(), m);
  LambdaKernel k{Subgroup(add, m)};
  k.additive_subgroup = generate_subgroup(add, m).order() == m.size();
  Subgroup sm = generate_subgroup(mul, m);
  k.multiplicative_subgroup = sm.order() == m.size();
  k.normal_in_mul = k.multiplicative_subgroup;
  for (Index s : sm.generators())
    for (Index g : mul.generators())
      if (!in[mul.conj(s, g)]) k.normal_in_mul = false;
  return k;
}

ProductFormReport check_two_sided_product_form(SkewBrace const& b, Limits const& limits) {
  FiniteGroup const& mul = b.mul_group();
  if (mul.is_abelian())
    throw InvalidArgument("product form needs a non-abelian multiplicative group");
  ClassificationLabel label = classify(mul, limits);
  if (label != ClassificationLabel::simp && label != ClassificationLabel::chsimp)
    throw InvalidArgument("product form needs a simple or characteristically simple "
                          "multiplicative group, got " + std::string(to_string(label)));
  if (!classify_brace(b, limits).is_two_sided)
    throw InvalidArgument("product form needs a two-sided brace");

  ProductFormReport r;
  Subgroup sq = b_squared(b, Side::plain, limits).members;
  Subgroup osq = b_squared(b, Side::opp, limits).members;
  r.square_order = sq.order();
  r.opp_square_order = osq.order();
  r.intersection_trivial = intersection(sq, osq).is_trivial();
  r.sum_is_whole = join(sq, osq).is_whole();
  std::vector<Index> w1, w2;
  for_pairs(sq.members(), sq.members(), limits, &w1,
            [&](Index x, Index y) { return b.mul(x, y) == b.add(y, x); });
  for_pairs(osq.members(), osq.members(), limits, &w2,
            [&](Index x, Index y) { return b.mul(x, y) == b.add(x, y); });
  r.square_almost_trivial = w1.empty();
  r.opp_square_trivial = w2.empty();
  r.add_mul_isomorphic = are_isomorphic(b.add_group(), mul, limits);
  r.ok = r.intersection_trivial && r.sum_is_whole && r.square_almost_trivial &&
         r.opp_square_trivial && r.add_mul_isomorphic;
  return r;
}

}  // namespace brace_forge
