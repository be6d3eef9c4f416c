#include <chrono>
#include <map>
#include <optional>

#include "brace_forge/catalog.hpp"
#include "brace_forge/factorization.hpp"
#include "brace_forge/holomorph.hpp"
#include "brace_forge/isomorphism.hpp"
#include "suites.hpp"

namespace brace_forge::verify::detail {

using L = ClassificationLabel;

std::string label_name(L label) { return std::string(to_string(label)); }

Outcome law_outcome(SkewBrace const& b) {
  LawReport const& v = b.validation();
  return {v.ok, v.ok ? json() : json(v.witness), v.mode.str(), v.ok ? "" : v.law};
}

Outcome nontrivial_outcome(SkewBrace const& b, Limits const& limits) {
  BraceFlags f = classify_brace(b, limits);
  bool ok = !f.is_trivial && !f.is_almost_trivial;
  return {ok,
          {{"ab != a+b", f.not_trivial_witness}, {"ab != b+a", f.not_almost_trivial_witness}},
          f.pair_mode.str(),
          ok ? "" : "brace is trivial or almost trivial"};
}

Outcome label_outcome(FiniteGroup const& g, L want, Limits const& limits) {
  L got = classify(g, limits);
  return {got == want, {{"order", g.order()}, {"label", label_name(got)}}, "exhaustive",
          got == want ? "" : "expected " + label_name(want)};
}

Outcome iso_outcome(FiniteGroup const& g, std::string const& expr, Limits const& limits) {
  FiniteGroup h = parse_group(expr, limits);
  bool ok = are_isomorphic(g, h, limits);
  return {ok, {{"order", g.order()}, {"target", expr}}, "exhaustive",
          ok ? "" : "not isomorphic to " + expr};
}

namespace {

std::chrono::duration<double> budget_of(Sink const& s) {
  return std::chrono::duration<double>(s.config().search_budget_sec);
}

std::string cell(L row, std::string_view column) {
  return "(" + label_name(row) + ", " + std::string(column) + ")";
}

constexpr std::string_view kCp = "(C_p)^n";
constexpr std::string_view kCh = "chsimp";

// Regular subgroups of Hol((C3)^3) with prescribed isomorphism type.
void cp_constructions(Sink& s) {
  Limits const& l = s.limits();
  FiniteGroup base = parse_group("C3^3", l);
  HolomorphGroup hol = holomorph(base, l);
  std::pair<char const*, L> const targets[] = {{"C3xC9", L::ab}, {"M3", L::nil}};
  for (auto const& [expr, row] : targets) {
    std::string c = cell(row, kCp);
    std::string name = c + ": regular subgroup of Hol(C3^3) isomorphic to " + expr;
    RegularSearchOptions o;
    o.iso_filter = parse_group(expr, l);
    o.budget = budget_of(s);
    o.max_results = 1;
    RegularSearchResult res = find_regular_subgroups(hol, base.order(), o, l);
    if (res.found.empty()) {
      if (res.budget_exhausted) {
        s.skip(name, "Hol(A) = A x| Aut(A)",
               "search budget exhausted after " + std::to_string(res.nodes) + " nodes");
      } else {
        s.check(name, "Hol(A) = A x| Aut(A)", [&] {
          return Outcome{false, {{"nodes", res.nodes}, {"complete", res.complete}}, "exhaustive",
                         "search space exhausted without a match"};
        });
      }
      continue;
    }
    s.check(name, "Hol(A) = A x| Aut(A)", [&] {
      return Outcome{true, {{"nodes", res.nodes}, {"by_point", res.found[0].by_point}}};
    });
    std::optional<SkewBrace> b;
    s.check(c + ": left brace law on all triples", "a(b+c) = ab - a + ac", [&] {
      b = brace_from_regular_subgroup(hol, res.found[0], l);
      return law_outcome(*b);
    });
    if (!b) continue;
    s.check(c + ": additive group is elementary abelian", "(C_p)^n", [&] {
      return Outcome{is_elementary_abelian(b->add_group()), {{"order", b->order()}}};
    });
    s.check(c + ": multiplicative group is " + label_name(row), c,
            [&] { return label_outcome(b->mul_group(), row, l); });
    s.check(c + ": multiplicative group isomorphic to " + expr, c,
            [&] { return iso_outcome(b->mul_group(), expr, l); });
    s.check(c + ": neither trivial nor almost trivial", "ab != a+b, ab != b+a",
            [&] { return nontrivial_outcome(*b, l); });
  }
}

// Every brace on an elementary abelian p-group has a p-group, hence
// nilpotent, multiplicative group.
void cp_obstructions(Sink& s) {
  Limits const& l = s.limits();
  struct Base {
    char const* expr;
    std::size_t max_results;
  };
  Base const bases[] = {{"C2^2", SIZE_MAX}, {"C2^3", SIZE_MAX}, {"C3^2", SIZE_MAX},
                        {"C5^2", SIZE_MAX}, {"C3^3", 400}};
  std::map<L, std::size_t> tally;
  std::size_t total = 0;
  for (auto const& base_spec : bases) {
    std::string expr = base_spec.expr;
    std::string name = std::string(kCp) + " sweep over Hol(" + expr +
                       "): every multiplicative group is a nilpotent p-group";
    FiniteGroup base = parse_group(expr, l);
    HolomorphGroup hol = holomorph(base, l);
    RegularSearchOptions o;
    o.budget = budget_of(s);
    o.max_results = base_spec.max_results;
    RegularSearchResult res = find_regular_subgroups(hol, base.order(), o, l);
    if (res.budget_exhausted && res.found.size() < base_spec.max_results) {
      s.skip(name, "|B| = p^n", "search budget exhausted after " + std::to_string(res.nodes) + " nodes");
      continue;
    }
    s.check(name, "|B| = p^n", [&] {
      std::map<std::string, std::size_t> labels;
      for (std::size_t i = 0; i < res.found.size(); ++i) {
        SkewBrace b = brace_from_regular_subgroup(hol, res.found[i], l);
        L label = classify(b.mul_group(), l);
        ++tally[label];
        ++labels[label_name(label)];
        ++total;
        if (!is_nilpotent(b.mul_group()))
          return Outcome{false, {{"regular_subgroup", i}, {"by_point", res.found[i].by_point}},
                         "exhaustive", "multiplicative group not nilpotent"};
      }
      return Outcome{true,
                     {{"regular_subgroups", res.found.size()},
                      {"complete", res.complete},
                      {"labels", labels}}};
    });
  }
  for (L row : {L::ssolv, L::solv, L::simp, L::chsimp, L::perfect, L::mixed}) {
    s.check(cell(row, kCp) + ": no brace among the sweep results", cell(row, kCp), [&] {
      std::size_t hits = tally.count(row) ? tally.at(row) : 0;
      return Outcome{hits == 0 && total > 0, {{"braces_examined", total}, {"matches", hits}},
                     "exhaustive", hits ? "a multiplicative group of forbidden type" : ""};
    });
  }
}

std::optional<ExactFactorization> first_factorization(FiniteGroup const& g, Index order_a,
                                                      Limits const& l) {
  auto fs = find_exact_factorizations(g, order_a, l);
  if (fs.empty()) return std::nullopt;
  return fs.front();
}

void ssolv_cell(Sink& s) {
  Limits const& l = s.limits();
  std::string c = cell(L::ssolv, kCh);
  std::optional<SkewBrace> b;
  s.check(c + ": PSL2(7) = F21 . D8 brace, left brace law on all triples",
          "x o y = a y b, x = ab", [&] {
            FiniteGroup g = catalog::psl2(7, l);
            auto f = first_factorization(g, 21, l);
            if (!f) return Outcome{false, {{"order_a", 21}}, "exhaustive", "no factorization"};
            b = brace_from_factorization(*f, l);
            return law_outcome(*b);
          });
  if (!b) return;
  s.check(c + ": multiplicative group isomorphic to D8xF21", c,
          [&] { return iso_outcome(b->mul_group(), "D8xF21", l); });
  s.check(c + ": PSL2(7) brace multiplicative group is ssolv", c,
          [&] { return label_outcome(b->mul_group(), L::ssolv, l); });
  s.check(c + ": PSL2(7) brace neither trivial nor almost trivial", "ab != a+b, ab != b+a",
          [&] { return nontrivial_outcome(*b, l); });
  std::optional<SkewBrace> bb;
  s.check(c + ": square of the PSL2(7) brace, left brace law", "a(b+c) = ab - a + ac", [&] {
    bb = brace_product(*b, *b, l);
    return law_outcome(*bb);
  });
  if (!bb) return;
  s.check(c + ": additive group PSL2(7)^2 is chsimp", c,
          [&] { return label_outcome(bb->add_group(), L::chsimp, l); });
  s.check(c + ": multiplicative group (D8xF21)^2 is ssolv", c,
          [&] { return label_outcome(bb->mul_group(), L::ssolv, l); });
  s.check(c + ": square neither trivial nor almost trivial", "ab != a+b, ab != b+a",
          [&] { return nontrivial_outcome(*bb, l); });
}

void solv_cell(Sink& s) {
  Limits const& l = s.limits();
  std::string c = cell(L::solv, kCh);
  std::optional<SkewBrace> b;
  s.check(c + ": A5 = A4 . C5 brace, left brace law on all triples", "x o y = a y b, x = ab",
          [&] {
            auto f = first_factorization(catalog::alternating(5, l), 12, l);
            if (!f) return Outcome{false, {{"order_a", 12}}, "exhaustive", "no factorization"};
            b = brace_from_factorization(*f, l);
            return law_outcome(*b);
          });
  if (!b) return;
  s.check(c + ": multiplicative group isomorphic to A4xC5", c,
          [&] { return iso_outcome(b->mul_group(), "A4xC5", l); });
  s.check(c + ": A4xC5 is solv", c, [&] { return label_outcome(b->mul_group(), L::solv, l); });
  std::optional<SkewBrace> bb;
  s.check(c + ": B1 x B1, left brace law", "a(b+c) = ab - a + ac", [&] {
    bb = brace_product(*b, *b, l);
    return law_outcome(*bb);
  });
  if (!bb) return;
  s.check(c + ": additive group A5^2 is characteristically simple", c, [&] {
    return Outcome{is_characteristically_simple(bb->add_group(), l), {{"order", bb->order()}}};
  });
  s.check(c + ": multiplicative group (A4xC5)^2 is solv", c,
          [&] { return label_outcome(bb->mul_group(), L::solv, l); });
  s.check(c + ": B1 x B1 neither trivial nor almost trivial", "ab != a+b, ab != b+a",
          [&] { return nontrivial_outcome(*bb, l); });
}

void chsimp_cell(Sink& s) {
  Limits const& l = s.limits();
  std::string c = cell(L::chsimp, kCh);
  FiniteGroup a5 = catalog::alternating(5, l);
  Index n = a5.order();
  std::optional<SkewBrace> d;
  s.check(c + ": diagonal brace on A5^2, left brace law", "(a,b) o (c,d) = (ac, a d a^-1 b)",
          [&] {
            d = diagonal_brace(a5, l);
            return law_outcome(*d);
          });
  if (!d) return;
  s.check(c + ": closed form agrees with the factorization brace", "S x S = {(x,x)}{(1,x)}",
          [&] {
            SkewBrace f = brace_from_factorization(diagonal_factorization(a5, l), l);
            if (!f.add_group().equal_law(d->add_group()))
              return Outcome{false, {{"additive", "differs"}}, "exhaustive", "additive groups differ"};
            Index m = d->order();
            for (Index x = 0; x < m; ++x)
              for (Index e = 0; e < n; ++e)
                if (d->mul(x, e) != f.mul(x, e))
                  return Outcome{false, json::array({x, e}), "exhaustive", "slice mismatch"};
            Rng rng(l.seed);
            for (std::size_t i = 0; i < l.sample_count; ++i) {
              Index x = rng.below(m), y = rng.below(m);
              if (d->mul(x, y) != f.mul(x, y))
                return Outcome{false, json::array({x, y}),
                               CheckMode::sampled(l.seed, l.sample_count).str(), "sample mismatch"};
            }
            return Outcome{true, {{"slice_pairs", static_cast<std::size_t>(m) * n}},
                           CheckMode::sampled(l.seed, l.sample_count).str()};
          });
  s.check(c + ": (a,1) o (1,d) != (a,1)(1,d) for some a, d", "(a,b) o (c,d) = (ac, a d a^-1 b)",
          [&] {
            for (Index a = 0; a < n; ++a)
              for (Index e = 0; e < n; ++e)
                if (d->mul(a * n, e) != d->add(a * n, e))
                  return Outcome{true, {{"a", a}, {"d", e}, {"circle", d->mul(a * n, e)},
                                        {"sum", d->add(a * n, e)}}};
            return Outcome{false, {{"pairs_checked", n * n}}, "exhaustive", "no witness"};
          });
  s.check(c + ": additive group A5^2 is chsimp", c,
          [&] { return label_outcome(d->add_group(), L::chsimp, l); });
  s.check(c + ": multiplicative group is chsimp", c,
          [&] { return label_outcome(d->mul_group(), L::chsimp, l); });
  s.check(c + ": diagonal brace neither trivial nor almost trivial", "ab != a+b, ab != b+a",
          [&] { return nontrivial_outcome(*d, l); });
}

void mixed_cell(Sink& s) {
  Limits const& l = s.limits();
  std::string c = cell(L::mixed, kCh);
  FiniteGroup a5 = catalog::alternating(5, l);
  auto f = first_factorization(a5, 12, l);
  if (!f) throw Error("A5 has no factorization with |A| = 12");
  SkewBrace b1 = brace_from_factorization(*f, l);
  SkewBrace t = triv(a5, l);
  std::optional<SkewBrace> small;
  s.check(c + ": B1 x Triv(A5), left brace law", "a(b+c) = ab - a + ac", [&] {
    small = brace_product(b1, t, l);
    return law_outcome(*small);
  });
  if (small) {
    s.check(c + ": B1 x Triv(A5) additive group is chsimp", c,
            [&] { return label_outcome(small->add_group(), L::chsimp, l); });
    s.check(c + ": B1 x Triv(A5) multiplicative group isomorphic to A4xC5xA5", c,
            [&] { return iso_outcome(small->mul_group(), "A4xC5xA5", l); });
    s.check(c + ": B1 x Triv(A5) multiplicative group is mixed", c,
            [&] { return label_outcome(small->mul_group(), L::mixed, l); });
    s.check(c + ": B1 x Triv(A5) neither trivial nor almost trivial", "ab != a+b, ab != b+a",
            [&] { return nontrivial_outcome(*small, l); });
  }
  std::optional<SkewBrace> big;
  s.check(c + ": B1 x B1 x Triv(A5), left brace law", "a(b+c) = ab - a + ac", [&] {
    big = brace_product(brace_product(b1, b1, l), t, l);
    return law_outcome(*big);
  });
  if (!big) return;
  s.check(c + ": B1 x B1 x Triv(A5) additive group A5^3 is characteristically simple", c, [&] {
    return Outcome{is_characteristically_simple(big->add_group(), l), {{"order", big->order()}}};
  });
  s.check(c + ": B1 x B1 x Triv(A5) multiplicative group is mixed", c,
          [&] { return label_outcome(big->mul_group(), L::mixed, l); });
  s.check(c + ": B1 x B1 x Triv(A5) neither trivial nor almost trivial", "ab != a+b, ab != b+a",
          [&] { return nontrivial_outcome(*big, l); });
}

void metadata_cells(Sink& s) {
  s.skip(cell(L::perfect, kCh) + ": construction", cell(L::perfect, kCh),
         "metadata only: the smallest known instance has order 11!/2");
  s.check(cell(L::perfect, kCh) + ": catalog factorization orders multiply to the group order",
          "|A||B| = |G|", [&] {
            json rows = json::array();
            for (auto const& e : catalog_entries()) {
              if (e.left_order.empty() || e.right_order.empty()) continue;
              auto numeric = [](std::string const& v) {
                return !v.empty() && v.find_first_not_of("0123456789") == std::string::npos;
              };
              if (!numeric(e.left_order) || !numeric(e.right_order) || !numeric(e.expected_order))
                continue;
              nt::BigInt product = nt::BigInt(e.left_order) * nt::BigInt(e.right_order);
              if (product != nt::BigInt(e.expected_order))
                return Outcome{false, {{"entry", e.name}, {"product", product.str()}}, "exhaustive",
                               "orders do not multiply"};
              rows.push_back(e.name);
            }
            return Outcome{!rows.empty(), {{"entries", rows}}};
          });
  s.check(cell(L::perfect, kCh) + ": M11xA7 is recorded as perfect", cell(L::perfect, kCh), [&] {
    auto const& e = catalog_metadata("M11xA7");
    bool ok = e.expected_label == L::perfect && e.expected_order == "19958400";
    return Outcome{ok, {{"order", e.expected_order}}};
  });
  for (L row : {L::ab, L::nil, L::simp})
    s.skip(cell(row, kCh) + ": obstruction", cell(row, kCh),
           "general statement, not checkable at desk scale");
}

}  // namespace

std::vector<Task> theorem_d_tasks() {
  return {cp_constructions, cp_obstructions, ssolv_cell, solv_cell,
          chsimp_cell,      mixed_cell,      metadata_cells};
}

}  // namespace brace_forge::verify::detail
