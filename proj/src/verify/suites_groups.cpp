#include <map>
#include <optional>

#include "brace_forge/catalog.hpp"
#include "brace_forge/factorization.hpp"
#include "brace_forge/isomorphism.hpp"
#include "suites.hpp"

namespace brace_forge::verify::detail {

using L = ClassificationLabel;

namespace {

void gl23_aut(Sink& s) {
  Limits const& l = s.limits();
  FiniteGroup g = catalog::gl2_3();
  std::vector<Subgroup> subs;
  s.check("GL2(3): subgroup enumeration", "H <= GL2(3)", [&] {
    subs = all_subgroups(g, l);
    for (std::size_t i = 0; i < subs.size(); ++i)
      if (!subs[i].satisfies_invariants() || g.order() % subs[i].order() != 0)
        return Outcome{false, {{"subgroup", i}, {"members", subs[i].members()}}, "exhaustive",
                       "invalid subgroup"};
    return Outcome{!subs.empty(), {{"subgroups", subs.size()}}};
  });
  if (subs.empty()) return;
  std::vector<Index> aut_orders;
  s.check("GL2(3): Aut(H) solvable for every subgroup H", "Aut(H) solvable", [&] {
    std::map<std::string, std::size_t> by_type;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      FiniteGroup h = subgroup_as_group(subs[i], l).group;
      FiniteGroup aut = automorphism_group(h, l);
      aut_orders.push_back(aut.order());
      if (!is_solvable(aut))
        return Outcome{false, {{"subgroup", i}, {"order", h.order()}, {"aut_order", aut.order()}},
                       "exhaustive", "non-solvable automorphism group"};
      ++by_type[std::to_string(h.order()) + ":" + std::to_string(aut.order())];
    }
    return Outcome{true, {{"subgroups", subs.size()}, {"order:aut_order", by_type}}};
  });
  s.check("GL2(3): |H/Z(H)| divides |Aut(H)| for every subgroup H", "Inn(H) = H/Z(H)", [&] {
    if (aut_orders.size() != subs.size())
      return Outcome{false, {{"computed", aut_orders.size()}}, "exhaustive", "missing data"};
    for (std::size_t i = 0; i < subs.size(); ++i) {
      FiniteGroup h = subgroup_as_group(subs[i], l).group;
      Index inner = h.order() / center(h).order();
      if (aut_orders[i] % inner != 0)
        return Outcome{false, {{"subgroup", i}, {"inner", inner}, {"aut_order", aut_orders[i]}},
                       "exhaustive", "inner automorphism count does not divide"};
    }
    return Outcome{true, {{"subgroups", subs.size()}}};
  });
}

void aut_c9(Sink& s) {
  Limits const& l = s.limits();
  s.check("Aut(C9) has order 6 and is cyclic", "Aut(C9) = C6", [&] {
    FiniteGroup aut = automorphism_group(catalog::cyclic(9), l);
    Index max_order = 0;
    for (Index x = 0; x < aut.order(); ++x) max_order = std::max(max_order, aut.element_order(x));
    bool ok = aut.order() == 6 && max_order == 6;
    return Outcome{ok, {{"order", aut.order()}, {"max_element_order", max_order}}};
  });
}

}  // namespace

std::vector<Task> gl23_aut_tasks() { return {gl23_aut, aut_c9}; }

namespace {

void psl27(Sink& s) {
  Limits const& l = s.limits();
  FiniteGroup g = catalog::psl2(7, l);
  s.check("PSL2(7): order 168", "|PSL2(7)| = 168", [&] {
    return Outcome{g.order() == 168, {{"order", g.order()}}};
  });
  s.check("PSL2(7): simple", "PSL2(7) simple", [&] {
    return Outcome{is_simple(g, l), {{"minimal_normal", minimal_normal_subgroups(g, l).size()}}};
  });
  s.check("PSL2(7): Sylow subgroup orders 8, 3, 7", "168 = 2^3 3 7", [&] {
    json orders = json::object();
    bool ok = true;
    for (auto [p, want] : {std::pair<unsigned, Index>{2, 8}, {3, 3}, {7, 7}}) {
      Index got = sylow_subgroup(g, p).order();
      orders[std::to_string(p)] = got;
      ok = ok && got == want;
    }
    return Outcome{ok, orders};
  });
  std::vector<Subgroup> subs = all_subgroups(g, l);
  auto of_order = [&](Index k) {
    std::vector<Subgroup const*> r;
    for (auto const& h : subs)
      if (h.order() == k) r.push_back(&h);
    return r;
  };
  s.check("PSL2(7): subgroups of orders 21 and 8 with trivial intersection", "G = AB, A cap B = 1",
          [&] {
            for (auto const* a : of_order(21))
              for (auto const* b : of_order(8))
                if (intersection(*a, *b).is_trivial())
                  return Outcome{true, {{"A", a->generators()}, {"B", b->generators()}}};
            return Outcome{false, {{"subgroups", subs.size()}}, "exhaustive", "none found"};
          });
  s.check("PSL2(7): subgroup of order 21 (2-complement)", "|G|_{2'} = 21", [&] {
    auto hs = of_order(21);
    return Outcome{!hs.empty(),
                   {{"count", hs.size()}, {"generators", hs.empty() ? json() : json(hs[0]->generators())}},
                   "exhaustive", hs.empty() ? "none found" : ""};
  });
  s.check("PSL2(7): no subgroup of order 56", "index 3", [&] {
    auto hs = of_order(56);
    return Outcome{hs.empty(),
                   {{"subgroups", subs.size()},
                    {"found", hs.empty() ? json() : json(hs[0]->generators())}},
                   "exhaustive", hs.empty() ? "" : "order-56 subgroup exists"};
  });
  s.check("PSL2(7): 9 does not divide 168", "index 9", [&] {
    return Outcome{g.order() % 9 != 0, {{"remainder", g.order() % 9}}};
  });
}

}  // namespace

std::vector<Task> psl27_tasks() { return {psl27}; }

namespace {

struct RigidityCase {
  std::string name;
  std::function<SkewBrace(Limits const&)> make;
  bool must_be_two_sided;
};

void rigidity_case(Sink& s, RigidityCase const& c) {
  Limits const& l = s.limits();
  std::optional<SkewBrace> b;
  s.check(c.name + ": construction", "a(b+c) = ab - a + ac", [&] {
    b = c.make(l);
    return law_outcome(*b);
  });
  if (!b) return;
  s.check(c.name + ": multiplicative group is simp or chsimp", "non-abelian (char.) simple", [&] {
    L got = classify(b->mul_group(), l);
    return Outcome{got == L::simp || got == L::chsimp, {{"label", label_name(got)}}};
  });
  BraceFlags f = classify_brace(*b, l);
  s.check(c.name + ": two-sided verdict", "(a+b)c = ac - c + bc", [&] {
    bool ok = !c.must_be_two_sided || f.is_two_sided;
    return Outcome{ok,
                   {{"two_sided", f.is_two_sided}, {"witness", f.not_two_sided_witness}},
                   f.triple_mode.str(), ok ? "" : "expected a two-sided brace"};
  });
  if (!f.is_two_sided) return;
  s.check(c.name + ": B = B^2 + (B^opp)^2 splitting and (B,+) isomorphic to (B,.)",
          "B = aTriv(G) x Triv(H)", [&] {
            ProductFormReport r = check_two_sided_product_form(*b, l);
            bool ok = r.ok && r.add_mul_isomorphic;
            return Outcome{ok,
                           {{"intersection_trivial", r.intersection_trivial},
                            {"sum_is_whole", r.sum_is_whole},
                            {"square_almost_trivial", r.square_almost_trivial},
                            {"opp_square_trivial", r.opp_square_trivial},
                            {"add_mul_isomorphic", r.add_mul_isomorphic},
                            {"square_order", r.square_order},
                            {"opp_square_order", r.opp_square_order}}};
          });
}

std::vector<Task> rigidity() {
  auto a5 = [](Limits const& l) { return catalog::alternating(5, l); };
  auto a5sq = [](Limits const& l) { return parse_group("A5xA5", l); };
  std::vector<RigidityCase> cases = {
      {"Triv(A5)", [=](Limits const& l) { return triv(a5(l), l); }, true},
      {"aTriv(A5)", [=](Limits const& l) { return a_triv(a5(l), l); }, true},
      {"Triv(A5^2)", [=](Limits const& l) { return triv(a5sq(l), l); }, true},
      {"aTriv(A5^2)", [=](Limits const& l) { return a_triv(a5sq(l), l); }, true},
      {"aTriv(A5) x Triv(A5)",
       [=](Limits const& l) { return brace_product(a_triv(a5(l), l), triv(a5(l), l), l); }, true},
      {"diagonal brace on A5^2", [=](Limits const& l) { return diagonal_brace(a5(l), l); }, false},
      {"opposite of the diagonal brace",
       [=](Limits const& l) { return opposite(diagonal_brace(a5(l), l), l); }, false},
  };
  std::vector<Task> tasks;
  for (auto const& c : cases) tasks.push_back([c](Sink& s) { rigidity_case(s, c); });
  tasks.push_back([](Sink& s) {
    s.check("|Out(A5)| = |Aut(A5)| / |A5| = 2 < 60", "|Out(T)| < |T|", [&] {
      FiniteGroup a = catalog::alternating(5, s.limits());
      FiniteGroup aut = automorphism_group(a, s.limits());
      Index inner = a.order() / center(a).order();
      Index out = aut.order() / inner;
      return Outcome{out == 2 && out < a.order(),
                     {{"aut_order", aut.order()}, {"inner", inner}, {"out", out}}};
    });
  });
  return tasks;
}

}  // namespace

std::vector<Task> two_sided_tasks() { return rigidity(); }

}  // namespace brace_forge::verify::detail
