#include <algorithm>
#include <optional>

#include "brace_forge/catalog.hpp"
#include "brace_forge/factorization.hpp"
#include "brace_forge/holomorph.hpp"
#include "brace_forge/isomorphism.hpp"
#include "suites.hpp"

namespace brace_forge::verify::detail {

namespace {

using nt::BigInt;

void nt_valuations(Sink& s) {
  Limits const& l = s.limits();
  std::size_t const pairs = 10'000;
  s.check("v_p(ab) = v_p(a) + v_p(b) on seeded pairs", "v_p(ab) = v_p(a) + v_p(b)", [&] {
    Rng rng(l.seed);
    std::uint64_t const primes[] = {2, 3, 5, 7, 11, 13};
    for (std::size_t i = 0; i < pairs; ++i) {
      std::uint64_t p = primes[rng.below(std::size(primes))];
      BigInt a = BigInt(rng.next() % 1'000'000'007) * nt::BigInt(p) * rng.below(4);
      BigInt b = BigInt(rng.next() % 1'000'000'007 + 1) * BigInt(rng.below(100) + 1);
      if (nt::vp(a * b, p) != nt::vp(a, p) + nt::vp(b, p))
        return Outcome{false, {{"a", a.str()}, {"b", b.str()}, {"p", p}},
                       CheckMode::sampled(l.seed, pairs).str()};
    }
    return Outcome{true, {{"pairs", pairs}}, CheckMode::sampled(l.seed, pairs).str()};
  });
  s.check("v_p(0) = infinity", "v_p(0) = inf", [&] {
    return Outcome{nt::vp(0, 7).is_infinite(), {{"v7(0)", nt::vp(0, 7).str()}}};
  });
  s.check("Legendre sum equals v_p(n!) for n <= 2000", "v_p(n!) = sum floor(n/p^i)", [&] {
    for (std::uint64_t p : {2, 3, 5, 7}) {
      BigInt f = 1;
      for (std::uint64_t n = 1; n <= 2000; ++n) {
        f *= n;
        if (nt::vp(f, p) != nt::Valuation::finite(nt::legendre(n, p)))
          return Outcome{false, {{"n", n}, {"p", p}}};
      }
    }
    return Outcome{true, {{"n_max", 2000}}};
  });
}

void nt_sl3(Sink& s) {
  s.check("e(n) closed form equals v_7(|SL_n(3)|) for n <= 200", "e(n) = v_7(|SL_n(3)|)", [&] {
    for (unsigned n = 1; n <= 200; ++n)
      if (nt::e_of_n(n) != nt::e_of_n_direct(n))
        return Outcome{false, {{"n", n}, {"closed", nt::e_of_n(n)}, {"direct", nt::e_of_n_direct(n)}}};
    return Outcome{true, {{"n_max", 200}, {"e(200)", nt::e_of_n(200)}}};
  });
  s.check("2e(n) <= floor(7n/18) and 2e(n) < n for n <= 200", "2e(n) < n", [&] {
    for (unsigned n = 1; n <= 200; ++n) {
      std::uint64_t e2 = 2 * nt::e_of_n(n);
      if (e2 > 7 * n / 18 || e2 >= n) return Outcome{false, {{"n", n}, {"2e", e2}}};
    }
    return Outcome{true, {{"n_max", 200}}};
  });
  s.check("2n + 1 - r > 2e(n) for 1 <= r <= n + 1, n <= 200", "2n + 1 - r > 2e(n)", [&] {
    for (unsigned n = 1; n <= 200; ++n)
      for (unsigned r = 1; r <= n + 1; ++r)
        if (!nt::check_lemma_bound(n, r)) return Outcome{false, {{"n", n}, {"r", r}}};
    return Outcome{true, {{"n_max", 200}}};
  });
}

void nt_lte(Sink& s) {
  s.check("LTE equals the big-integer valuation, |x|,|y| <= 50, n <= 20, odd p <= 23",
          "v_p(x^n - y^n) = v_p(x - y) + v_p(n)", [&] {
            std::size_t cases = 0;
            for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23})
              for (int x = -50; x <= 50; ++x)
                for (int y = -50; y <= 50; ++y) {
                  long px = static_cast<long>(p);
                  if (x % px == 0 || y % px == 0 || (x - y) % px != 0 || x == y) continue;
                  for (unsigned n = 1; n <= 20; ++n) {
                    BigInt d = boost::multiprecision::pow(BigInt(x), n) -
                               boost::multiprecision::pow(BigInt(y), n);
                    if (nt::lte(x, y, n, p) != nt::vp(d, p))
                      return Outcome{false, {{"x", x}, {"y", y}, {"n", n}, {"p", p}}};
                    ++cases;
                  }
                }
            return Outcome{true, {{"cases", cases}}};
          });
  s.check("LTE rejects inputs outside its hypotheses", "p odd, p | x - y, p !| xy", [&] {
    struct Bad {
      long x, y;
      unsigned n;
      std::uint64_t p;
    };
    Bad const bad[] = {{3, 1, 2, 2}, {3, 6, 2, 3}, {4, 2, 2, 3}, {4, 2, 2, 5}};
    for (auto const& b : bad) {
      try {
        nt::lte(b.x, b.y, b.n, b.p);
        return Outcome{false, {{"x", b.x}, {"y", b.y}, {"n", b.n}, {"p", b.p}}};
      } catch (InvalidArgument const&) {
      }
    }
    return Outcome{true, {{"rejected", std::size(bad)}}};
  });
}

void nt_scan(Sink& s) {
  s.check("p^{fn} - 1 = 2^t (p^f - 1) over p <= 200, f <= 6, n <= 12, t <= 64",
          "p^{fn} - 1 = 2^t (p^f - 1)", [&] {
            nt::ScanResult r = nt::diophantine_scan({});
            json sols = json::array();
            bool ok = !r.solutions.empty();
            bool has7 = false;
            for (auto const& x : r.solutions) {
              sols.push_back({x.p, x.f, x.n, x.t});
              ok = ok && x.p % 2 == 1 && x.f == 1 && x.n == 2 && x.t < 64 && x.p == (std::uint64_t{1} << x.t) - 1;
              has7 = has7 || x == nt::DiophantineSolution{7, 1, 2, 3};
            }
            bool note = std::any_of(r.notes.begin(), r.notes.end(), [](std::string const& n) {
              return n.find("(3,1,2,2)") != std::string::npos;
            });
            return Outcome{ok && has7 && note, {{"solutions", sols}, {"notes", r.notes}}, "exhaustive",
                           ok && has7 && note ? "" : "unexpected solution set or missing note"};
          });
}

}  // namespace

std::vector<Task> numtheory_tasks() { return {nt_valuations, nt_sl3, nt_lte, nt_scan}; }

namespace {

// Exhaustive up to the cap, seeded samples above it.
template <class F>
Outcome forall_pairs(Index n, Limits const& l, F const& pred) {
  if (n <= l.pair_check_cap) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        if (!pred(a, b)) return {false, json::array({a, b}), CheckMode::full(std::size_t{n} * n).str()};
    return {true, nullptr, CheckMode::full(std::size_t{n} * n).str()};
  }
  Rng rng(l.seed);
  std::string mode = CheckMode::sampled(l.seed, l.sample_count).str();
  for (std::size_t i = 0; i < l.sample_count; ++i) {
    Index a = rng.below(n), b = rng.below(n);
    if (!pred(a, b)) return {false, json::array({a, b}), mode};
  }
  return {true, nullptr, mode};
}

template <class F>
Outcome forall_triples(Index n, Limits const& l, F const& pred) {
  std::size_t total = std::size_t{n} * n * n;
  if (n <= l.full_check_cap) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b)
        for (Index c = 0; c < n; ++c)
          if (!pred(a, b, c)) return {false, json::array({a, b, c}), CheckMode::full(total).str()};
    return {true, nullptr, CheckMode::full(total).str()};
  }
  Rng rng(l.seed);
  std::string mode = CheckMode::sampled(l.seed, l.sample_count).str();
  for (std::size_t i = 0; i < l.sample_count; ++i) {
    Index a = rng.below(n), b = rng.below(n), c = rng.below(n);
    if (!pred(a, b, c)) return {false, json::array({a, b, c}), mode};
  }
  return {true, nullptr, mode};
}

struct AxiomCase {
  std::string name;
  std::function<SkewBrace(Limits const&)> make;
  bool trivial;
};

void brace_axioms(Sink& s, AxiomCase const& c) {
  Limits const& l = s.limits();
  std::optional<SkewBrace> built;
  s.check(c.name + ": left brace law", "a(b+c) = ab - a + ac", [&] {
    built = c.make(l);
    return law_outcome(*built);
  });
  if (!built) return;
  SkewBrace const& b = *built;
  Index n = b.order();
  std::vector<std::vector<Index>> lam(n), lam_inv(n);
  for (Index a = 0; a < n; ++a) {
    lam[a] = b.lambda_map(a);
    lam_inv[a].assign(n, 0);
    for (Index x = 0; x < n; ++x) lam_inv[a][lam[a][x]] = x;
  }
  s.check(c.name + ": a + b = a lambda_a^-1(b) and ab = a + lambda_a(b)",
          "a + b = a lambda_a^-1(b)", [&] {
            return forall_pairs(n, l, [&](Index a, Index x) {
              return b.add(a, x) == b.mul(a, lam_inv[a][x]) && b.mul(a, x) == b.add(a, lam[a][x]);
            });
          });
  s.check(c.name + ": lambda_{ab} = lambda_a lambda_b", "lambda_{ab} = lambda_a lambda_b", [&] {
    return forall_triples(n, l, [&](Index a, Index x, Index y) {
      return lam[b.mul(a, x)][y] == lam[a][lam[x][y]];
    });
  });
  s.check(c.name + ": lambda_a is an automorphism of (B,+)", "lambda_a(x + y) = lambda_a(x) + lambda_a(y)",
          [&] {
            return forall_triples(n, l, [&](Index a, Index x, Index y) {
              return lam[a][b.add(x, y)] == b.add(lam[a][x], lam[a][y]);
            });
          });
  s.check(c.name + ": a * b = lambda_a(b) - b and a *opp b = -b + lambda^opp_a(b)",
          "a * b = -a + ab - b", [&] {
            return forall_pairs(n, l, [&](Index a, Index x) {
              return b.star(a, x) == b.sub(lam[a][x], x) &&
                     b.star_opp(a, x) == b.add(b.neg(x), b.lambda_opp(a, x));
            });
          });
  SkewBrace op = opposite(b, l);
  s.check(c.name + ": star of the opposite brace is star_opp", "a *opp b = -b + ab - a", [&] {
    return forall_pairs(n, l, [&](Index a, Index x) { return op.star(a, x) == b.star_opp(a, x); });
  });
  s.check(c.name + ": opposite is an involution", "(B^opp)^opp = B", [&] {
    SkewBrace back = opposite(op, l);
    bool ok = back.add_group().equal_law(b.add_group()) && back.mul_group().equal_law(b.mul_group());
    return Outcome{ok, {{"order", n}}};
  });
  s.check(c.name + ": ker lambda is a normal subgroup of (B,.) and a subgroup of (B,+)",
          "ker lambda", [&] {
            LambdaKernel k = kernel_lambda(b);
            bool ok = k.additive_subgroup && k.multiplicative_subgroup && k.normal_in_mul;
            return Outcome{ok, {{"order", k.members.order()}}};
          });
  for (Side side : {Side::plain, Side::opp}) {
    bool plain = side == Side::plain;
    std::string what = plain ? "B/B^2 is trivial" : "B/(B^opp)^2 is almost trivial";
    s.check(c.name + ": " + what, plain ? "B^2 = B * B" : "(B^opp)^2", [&] {
      BraceIdeal ideal = b_squared(b, side, l);
      IdealVerdict v = is_ideal(b, ideal.members.members(), l);
      QuotientBrace q = quotient_brace(b, ideal.members, l);
      BraceFlags f = classify_brace(q.brace, l);
      bool ok = v.ok && v.agree() && q.star_compatible &&
                (plain ? f.is_trivial : f.is_almost_trivial);
      return Outcome{ok,
                     {{"ideal_order", ideal.members.order()},
                      {"closure_fallback", ideal.closure_fallback},
                      {"star_compatible", q.star_compatible},
                      {"witness", plain ? f.not_trivial_witness : f.not_almost_trivial_witness}},
                     f.pair_mode.str()};
    });
  }
  if (n <= 60 && b.add_group().order() <= l.aut_cap) {
    s.check(c.name + ": both ideal characterizations agree on every additive subgroup",
            "B * I + I * B <= I", [&] {
              std::size_t ideals = 0;
              for (auto const& h : all_subgroups(b.add_group(), l)) {
                IdealVerdict v = is_ideal(b, h.members(), l);
                if (!v.agree())
                  return Outcome{false, {{"members", h.members()}, {"reason", v.reason}}};
                ideals += v.ok;
              }
              return Outcome{true, {{"ideals", ideals}}};
            });
    s.check(c.name + ": characteristic subgroups of (B,+) are closed under the product",
            "lambda_a(H) = H", [&] {
              auto autos = all_automorphisms(b.add_group(), l);
              std::size_t count = 0;
              for (auto const& h : all_subgroups(b.add_group(), l)) {
                bool characteristic = std::all_of(autos.begin(), autos.end(), [&](auto const& phi) {
                  return std::all_of(h.members().begin(), h.members().end(),
                                     [&](Index x) { return h.contains(phi[x]); });
                });
                if (!characteristic) continue;
                ++count;
                for (Index x : h.members())
                  for (Index y : h.members())
                    if (!h.contains(b.mul(x, y)))
                      return Outcome{false, {{"members", h.members()}, {"x", x}, {"y", y}}};
              }
              return Outcome{true, {{"characteristic_subgroups", count}}};
            });
  }
  if (!c.trivial) return;
  s.check(c.name + ": x *opp y = -y + x + y - x", "x *opp y = [y, -x]", [&] {
    return forall_pairs(n, l, [&](Index x, Index y) {
      return b.star_opp(x, y) == b.add(b.add(b.neg(y), x), b.sub(y, x));
    });
  });
  s.check(c.name + ": (B^opp)^2 is the derived subgroup of (B,.)", "(B^opp)^2 = [G, G]", [&] {
    BraceIdeal sq = b_squared(b, Side::opp, l);
    Subgroup d = derived_subgroup(Subgroup::whole(b.mul_group()));
    return Outcome{sq.members.members() == d.members(),
                   {{"square_order", sq.members.order()}, {"derived_order", d.order()}}};
  });
}

std::vector<Task> axioms() {
  std::vector<AxiomCase> cases;
  for (std::string expr : {"S3", "A4", "D8", "A5"}) {
    cases.push_back({"Triv(" + expr + ")",
                     [expr](Limits const& l) { return triv(parse_group(expr, l), l); }, true});
    cases.push_back({"aTriv(" + expr + ")",
                     [expr](Limits const& l) { return a_triv(parse_group(expr, l), l); }, false});
  }
  auto factor = [](std::string expr, Index order_a) {
    return [expr, order_a](Limits const& l) {
      auto fs = find_exact_factorizations(parse_group(expr, l), order_a, l);
      if (fs.empty()) throw Error("no exact factorization of " + expr);
      return brace_from_factorization(fs.front(), l);
    };
  };
  auto regular = [](std::string base, std::string filter) {
    return [base, filter](Limits const& l) {
      HolomorphGroup hol = holomorph(parse_group(base, l), l);
      RegularSearchOptions o;
      o.iso_filter = parse_group(filter, l);
      o.max_results = 1;
      auto r = find_regular_subgroups(hol, hol.base.order(), o, l);
      if (r.found.empty()) throw Error("no regular subgroup " + filter + " in Hol(" + base + ")");
      return brace_from_regular_subgroup(hol, r.found.front(), l);
    };
  };
  cases.push_back({"S3 = C3 . C2 brace", factor("S3", 3), false});
  cases.push_back({"A5 = A4 . C5 brace", factor("A5", 12), false});
  cases.push_back({"PSL2(7) = F21 . D8 brace", factor("PSL2(7)", 21), false});
  cases.push_back({"Hol(C4xC2) brace with (C2)^3 product", regular("C4xC2", "C2^3"), false});
  cases.push_back({"Hol(C3^3) brace with M3 product", regular("C3^3", "M3"), false});
  std::vector<Task> tasks;
  for (auto const& c : cases) tasks.push_back([c](Sink& s) { brace_axioms(s, c); });
  return tasks;
}

}  // namespace

std::vector<Task> brace_axiom_tasks() { return axioms(); }

}  // namespace brace_forge::verify::detail
