// Brute-force reference implementations. They only read multiplication
// tables and never call library algorithms.
#ifndef BRACE_FORGE_TESTS_ORACLES_HPP_
#define BRACE_FORGE_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "brace_forge/group.hpp"

namespace oracle {

using Index = std::uint32_t;
using Table = std::vector<std::vector<Index>>;
using Set = std::vector<Index>;  // sorted

inline Table table_of(brace_forge::FiniteGroup const& g) {
  Table t(g.order(), std::vector<Index>(g.order()));
  for (Index a = 0; a < g.order(); ++a)
    for (Index b = 0; b < g.order(); ++b) t[a][b] = g.mul(a, b);
  return t;
}

inline Index identity(Table const& t) {
  for (Index e = 0; e < t.size(); ++e) {
    bool ok = true;
    for (Index x = 0; x < t.size() && ok; ++x) ok = t[e][x] == x && t[x][e] == x;
    if (ok) return e;
  }
  return static_cast<Index>(t.size());
}

inline Index inverse(Table const& t, Index x) {
  Index e = identity(t);
  for (Index y = 0; y < t.size(); ++y)
    if (t[x][y] == e) return y;
  return static_cast<Index>(t.size());
}

inline bool is_associative(Table const& t) {
  for (Index a = 0; a < t.size(); ++a)
    for (Index b = 0; b < t.size(); ++b)
      for (Index c = 0; c < t.size(); ++c)
        if (t[t[a][b]][c] != t[a][t[b][c]]) return false;
  return true;
}

inline Index order_of(Table const& t, Index x) {
  Index e = identity(t), k = 1;
  for (Index y = x; y != e; y = t[y][x]) ++k;
  return k;
}

/// Fixpoint closure under right multiplication by the generators.
inline Set closure(Table const& t, std::vector<Index> const& gens) {
  std::vector<char> in(t.size(), 0);
  Index e = identity(t);
  std::vector<Index> list{e};
  in[e] = 1;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Index g : gens) {
      Index y = t[list[i]][g];
      if (!in[y]) {
        in[y] = 1;
        list.push_back(y);
      }
    }
  std::sort(list.begin(), list.end());
  return list;
}

/// Every subgroup generated by at most `k` elements (k <= 3).
inline std::set<Set> subgroups_by_generators(Table const& t, int k) {
  std::set<Set> out;
  Index n = static_cast<Index>(t.size());
  out.insert(closure(t, {}));
  for (Index a = 0; a < n; ++a) {
    out.insert(closure(t, {a}));
    if (k < 2) continue;
    for (Index b = a + 1; b < n; ++b) {
      out.insert(closure(t, {a, b}));
      if (k < 3) continue;
      for (Index c = b + 1; c < n; ++c) out.insert(closure(t, {a, b, c}));
    }
  }
  return out;
}

inline Set center(Table const& t) {
  Set z;
  for (Index a = 0; a < t.size(); ++a) {
    bool ok = true;
    for (Index b = 0; b < t.size() && ok; ++b) ok = t[a][b] == t[b][a];
    if (ok) z.push_back(a);
  }
  return z;
}

inline bool is_normal(Table const& t, Set const& h) {
  for (Index g = 0; g < t.size(); ++g)
    for (Index x : h) {
      Index c = t[t[inverse(t, g)][x]][g];
      if (!std::binary_search(h.begin(), h.end(), c)) return false;
    }
  return true;
}

/// Bijections fixing the identity that preserve the table. Only for tiny
/// groups: cost is (n-1)! * n^2.
inline std::vector<std::vector<Index>> automorphisms(Table const& t) {
  Index n = static_cast<Index>(t.size());
  Index e = identity(t);
  std::vector<Index> rest;
  for (Index x = 0; x < n; ++x)
    if (x != e) rest.push_back(x);
  std::vector<std::vector<Index>> out;
  std::vector<Index> perm = rest;
  do {
    std::vector<Index> phi(n);
    phi[e] = e;
    for (std::size_t i = 0; i < rest.size(); ++i) phi[rest[i]] = perm[i];
    bool ok = true;
    for (Index a = 0; a < n && ok; ++a)
      for (Index b = 0; b < n && ok; ++b) ok = phi[t[a][b]] == t[phi[a]][phi[b]];
    if (ok) out.push_back(phi);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline bool isomorphic(Table const& a, Table const& b) {
  if (a.size() != b.size()) return false;
  Index n = static_cast<Index>(a.size());
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (Index x = 0; x < n && ok; ++x)
      for (Index y = 0; y < n && ok; ++y) ok = perm[a[x][y]] == b[perm[x]][perm[y]];
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Element-order histogram.
inline std::map<Index, Index> order_profile(Table const& t) {
  std::map<Index, Index> m;
  for (Index x = 0; x < t.size(); ++x) ++m[order_of(t, x)];
  return m;
}

using Perm = std::vector<Index>;

/// (p q)(x) = p(q(x)).
inline Perm compose(Perm const& p, Perm const& q) {
  Perm r(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
  return r;
}

/// Closure of a set of permutations; stops early once larger than `limit`.
inline std::set<Perm> perm_closure(std::vector<Perm> const& gens, std::size_t degree,
                                   std::size_t limit = SIZE_MAX) {
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  std::set<Perm> seen{id};
  std::vector<Perm> list{id};
  for (std::size_t i = 0; i < list.size(); ++i)
    for (auto const& g : gens) {
      Perm y = compose(list[i], g);
      if (seen.insert(y).second) list.push_back(y);
      if (seen.size() > limit) return seen;
    }
  return seen;
}

/// Affine maps x -> Mx + t on F_p^2 as permutations of the p^2 points
/// (point index x0 + p x1).
inline std::vector<Perm> affine_group_2(unsigned p) {
  std::vector<Perm> out;
  for (unsigned a = 0; a < p; ++a)
    for (unsigned b = 0; b < p; ++b)
      for (unsigned c = 0; c < p; ++c)
        for (unsigned d = 0; d < p; ++d) {
          if ((a * d + p * p - (b * c) % p) % p == 0) continue;
          for (unsigned t0 = 0; t0 < p; ++t0)
            for (unsigned t1 = 0; t1 < p; ++t1) {
              Perm perm(p * p);
              for (unsigned x0 = 0; x0 < p; ++x0)
                for (unsigned x1 = 0; x1 < p; ++x1) {
                  unsigned y0 = (a * x0 + b * x1 + t0) % p;
                  unsigned y1 = (c * x0 + d * x1 + t1) % p;
                  perm[x0 + p * x1] = y0 + p * y1;
                }
              out.push_back(perm);
            }
        }
  return out;
}

/// Number of regular subgroups of AGL_2(p) on p^2 points, by closing all
/// pairs of fixed-point-free elements.
inline std::size_t count_regular_affine(unsigned p) {
  auto all = affine_group_2(p);
  std::size_t n = p * p;
  std::vector<Perm> fpf;
  for (auto const& g : all) {
    bool moves = true;
    for (std::size_t x = 0; x < n && moves; ++x) moves = g[x] != x;
    if (moves) fpf.push_back(g);
  }
  std::set<std::set<Perm>> regular;
  auto consider = [&](std::set<Perm> const& s) {
    if (s.size() != n) return;
    std::vector<char> hit(n, 0);
    for (auto const& g : s) hit[g[0]] = 1;
    if (std::all_of(hit.begin(), hit.end(), [](char c) { return c; })) regular.insert(s);
  };
  for (std::size_t i = 0; i < fpf.size(); ++i)
    for (std::size_t j = i; j < fpf.size(); ++j) {
      auto s = perm_closure({fpf[i], fpf[j]}, n, n);
      consider(s);
    }
  return regular.size();
}

}  // namespace oracle

#endif  // BRACE_FORGE_TESTS_ORACLES_HPP_
