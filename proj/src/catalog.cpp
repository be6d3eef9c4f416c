#include "brace_forge/catalog.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace brace_forge {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<Index> cycle(std::size_t degree, std::vector<Index> const& points) {
  std::vector<Index> p(degree);
  std::iota(p.begin(), p.end(), 0);
  for (std::size_t i = 0; i < points.size(); ++i) p[points[i]] = points[(i + 1) % points.size()];
  return p;
}

struct Mat2 {
  unsigned a, b, c, d;
};

// 2x2 matrices over F_q with determinant in `dets`, identity first.
FiniteGroup matrix_group(unsigned q, bool special, Limits const& limits) {
  if (!is_prime(q)) throw InvalidArgument("matrix groups need a prime field size");
  auto mats = std::make_shared<std::vector<Mat2>>();
  mats->push_back({1, 0, 0, 1});
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      for (unsigned c = 0; c < q; ++c)
        for (unsigned d = 0; d < q; ++d) {
          unsigned det = (a * d + q * q - b * c) % q;
          if (det == 0 || (special && det != 1)) continue;
          if (a == 1 && b == 0 && c == 0 && d == 1) continue;
          mats->push_back({a, b, c, d});
        }
  auto code = [q](Mat2 const& m) { return ((m.a * q + m.b) * q + m.c) * q + m.d; };
  auto index = std::make_shared<std::vector<Index>>(q * q * q * q, 0);
  for (Index i = 0; i < mats->size(); ++i) (*index)[code((*mats)[i])] = i;
  auto mul = [mats, index, q, code](Index x, Index y) {
    Mat2 const& m = (*mats)[x];
    Mat2 const& n = (*mats)[y];
    Mat2 r{(m.a * n.a + m.b * n.c) % q, (m.a * n.b + m.b * n.d) % q,
           (m.c * n.a + m.d * n.c) % q, (m.c * n.b + m.d * n.d) % q};
    return (*index)[code(r)];
  };
  auto inv = [mats, index, q, code](Index x) {
    Mat2 const& m = (*mats)[x];
    unsigned det = (m.a * m.d + q * q - m.b * m.c) % q;
    unsigned di = 1;
    while (det * di % q != 1) ++di;
    Mat2 r{m.d * di % q, (q - m.b) % q * di % q, (q - m.c) % q * di % q, m.a * di % q};
    return (*index)[code(r)];
  };
  auto name = [mats](Index x) {
    Mat2 const& m = (*mats)[x];
    return "[" + std::to_string(m.a) + "," + std::to_string(m.b) + ";" + std::to_string(m.c) +
           "," + std::to_string(m.d) + "]";
  };
  return FiniteGroup::from_oracle(static_cast<Index>(mats->size()), mul, inv, {}, name, limits);
}

FiniteGroup quaternion8() {
  // Units 1, i, j, k with sign; index = unit + 4 * (sign is negative).
  static constexpr int prod[4][4] = {{0, 1, 2, 3}, {1, -4, 3, -6}, {2, -7, -4, 1}, {3, 2, -5, -4}};
  auto mul = [](Index x, Index y) {
    int u = prod[x % 4][y % 4];
    bool neg = (x / 4) ^ (y / 4);
    if (u < 0) {
      neg = !neg;
      u = -u - 4;
    }
    return static_cast<Index>(u + 4 * neg);
  };
  auto inv = [](Index x) { return x % 4 == 0 ? x : (x + 4) % 8; };
  return FiniteGroup::from_oracle(8, mul, inv, {1, 2});
}

}  // namespace

namespace catalog {

FiniteGroup cyclic(Index n) {
  if (n == 0) throw InvalidArgument("cyclic group order must be positive");
  auto mul = [n](Index a, Index b) { return static_cast<Index>((std::uint64_t(a) + b) % n); };
  auto inv = [n](Index a) { return a == 0 ? 0 : n - a; };
  return FiniteGroup::from_oracle(n, mul, inv, {n > 1 ? 1u : 0u});
}

FiniteGroup elementary_abelian(unsigned p, unsigned k, Limits const& limits) {
  if (!is_prime(p)) throw InvalidArgument("elementary_abelian needs a prime");
  std::size_t n = 1;
  for (unsigned i = 0; i < k; ++i) {
    n *= p;
    require_cap("element_cap", limits.element_cap, n);
  }
  auto mul = [p, k](Index a, Index b) {
    Index r = 0, scale = 1;
    for (unsigned i = 0; i < k; ++i, a /= p, b /= p, scale *= p) r += (a % p + b % p) % p * scale;
    return r;
  };
  auto inv = [p, k](Index a) {
    Index r = 0, scale = 1;
    for (unsigned i = 0; i < k; ++i, a /= p, scale *= p) r += (p - a % p) % p * scale;
    return r;
  };
  std::vector<Index> gens;
  for (Index i = 0, s = 1; i < k; ++i, s *= p) gens.push_back(s);
  return FiniteGroup::from_oracle(static_cast<Index>(n), mul, inv, gens, {}, limits);
}

FiniteGroup symmetric(unsigned n, Limits const& limits) {
  if (n == 0) throw InvalidArgument("symmetric group degree must be positive");
  if (n == 1) return FiniteGroup();
  std::vector<Index> all(n);
  std::iota(all.begin(), all.end(), 0);
  return FiniteGroup::from_permutations(n, {cycle(n, {0, 1}), cycle(n, all)}, limits);
}

FiniteGroup alternating(unsigned n, Limits const& limits) {
  if (n == 0) throw InvalidArgument("alternating group degree must be positive");
  if (n < 3) return FiniteGroup();
  std::vector<std::vector<Index>> gens;
  for (Index i = 2; i < n; ++i) gens.push_back(cycle(n, {0, 1, i}));
  return FiniteGroup::from_permutations(n, gens, limits);
}

FiniteGroup dihedral(Index order) {
  if (order < 2 || order % 2) throw InvalidArgument("dihedral group order must be even");
  Index n = order / 2;
  auto mul = [n](Index x, Index y) {
    Index a = x % n, b = x / n, c = y % n, d = y / n;
    Index r = b ? (a + n - c) % n : (a + c) % n;
    return r + n * ((b + d) % 2);
  };
  auto inv = [n](Index x) { return x < n ? (n - x) % n : x; };
  auto name = [n](Index x) {
    return "r" + std::to_string(x % n) + (x >= n ? "s" : "");
  };
  return FiniteGroup::from_oracle(order, mul, inv, {n > 1 ? 1u : 0u, n}, name);
}

FiniteGroup frobenius21() {
  static constexpr Index pow2[3] = {1, 2, 4};
  auto mul = [](Index x, Index y) {
    Index a = x % 7, b = x / 7, c = y % 7, d = y / 7;
    return (a + pow2[b] * c) % 7 + 7 * ((b + d) % 3);
  };
  auto inv = [](Index x) {
    Index a = x % 7, b = x / 7;
    Index bi = (3 - b) % 3;
    // (a, b)^-1 = (-2^{-b} a, -b)
    return (7 - pow2[bi] * a % 7) % 7 + 7 * bi;
  };
  return FiniteGroup::from_oracle(21, mul, inv, {1, 7});
}

FiniteGroup psl2(unsigned q, Limits const& limits) {
  if (!is_prime(q) || q < 5) throw InvalidArgument("psl2 needs a prime q >= 5");
  unsigned infinity = q;
  auto inverse = [q](unsigned x) {
    unsigned y = 1;
    while (x * y % q != 1) ++y;
    return y;
  };
  auto action = [&](Mat2 m) {
    std::vector<Index> img(q + 1);
    for (unsigned x = 0; x < q; ++x) {
      unsigned num = (m.a * x + m.b) % q, den = (m.c * x + m.d) % q;
      img[x] = den == 0 ? infinity : num * inverse(den) % q;
    }
    img[infinity] = m.c == 0 ? infinity : m.a * inverse(m.c) % q;
    return img;
  };
  return FiniteGroup::from_permutations(q + 1, {action({1, 1, 0, 1}), action({0, q - 1, 1, 0})},
                                        limits);
}

FiniteGroup sl2(unsigned q, Limits const& limits) { return matrix_group(q, true, limits); }
FiniteGroup gl2(unsigned q, Limits const& limits) { return matrix_group(q, false, limits); }

FiniteGroup heisenberg3() {
  auto enc = [](Index a, Index b, Index c) { return a % 3 + 3 * (b % 3) + 9 * (c % 3); };
  auto mul = [enc](Index x, Index y) {
    Index a = x % 3, b = x / 3 % 3, c = x / 9, d = y % 3, e = y / 3 % 3, f = y / 9;
    return enc(a + d, b + e, c + f + 2 * b * d);
  };
  auto inv = [enc](Index x) {
    Index a = x % 3, b = x / 3 % 3, c = x / 9;
    return enc(3 - a, 3 - b, 2 * c + 2 * a * b);
  };
  auto name = [](Index x) {
    return "x" + std::to_string(x % 3) + "y" + std::to_string(x / 3 % 3) + "z" +
           std::to_string(x / 9);
  };
  return FiniteGroup::from_oracle(27, mul, inv, {1, 3}, name);
}

}  // namespace catalog

FiniteGroup make_group(std::string_view name, std::vector<long> const& params,
                       Limits const& limits) {
  auto need = [&](std::size_t k) {
    if (params.size() != k)
      throw InvalidArgument(std::string(name) + " expects " + std::to_string(k) + " parameter(s)");
    for (long v : params)
      if (v <= 0 || static_cast<unsigned long>(v) > limits.element_cap)
        throw InvalidArgument(std::string(name) + ": parameter out of range");
  };
  if (name == "cyclic") {
    need(1);
    require_cap("element_cap", limits.element_cap, params[0]);
    return catalog::cyclic(static_cast<Index>(params[0]));
  }
  if (name == "elementary_abelian") {
    need(2);
    return catalog::elementary_abelian(params[0], params[1], limits);
  }
  if (name == "symmetric" || name == "alternating") {
    need(1);
    if (params[0] > 12) throw InvalidArgument(std::string(name) + ": degree out of range");
    return name == "symmetric" ? catalog::symmetric(params[0], limits)
                               : catalog::alternating(params[0], limits);
  }
  if (name == "dihedral") {
    need(1);
    require_cap("element_cap", limits.element_cap, params[0]);
    return catalog::dihedral(static_cast<Index>(params[0]));
  }
  if (name == "psl2" || name == "sl2" || name == "gl2") {
    need(1);
    if (params[0] > 31) throw InvalidArgument(std::string(name) + ": q out of range");
    if (name == "psl2") return catalog::psl2(params[0], limits);
    return name == "sl2" ? catalog::sl2(params[0], limits) : catalog::gl2(params[0], limits);
  }
  need(0);
  if (name == "frobenius21") return catalog::frobenius21();
  if (name == "gl2_3") return catalog::gl2(3, limits);
  if (name == "sl2_3") return catalog::sl2(3, limits);
  if (name == "heisenberg3") return catalog::heisenberg3();
  if (name == "quaternion8") return quaternion8();
  throw InvalidArgument("unknown group family: " + std::string(name));
}

FiniteGroup direct_product_of(std::vector<std::string> const& factors, Limits const& limits) {
  std::vector<FiniteGroup> gs;
  for (auto const& f : factors) gs.push_back(parse_group(f, limits));
  return direct_product(gs, limits);
}

namespace {

class ExprParser {
 public:
  ExprParser(std::string_view s, Limits const& limits) : s_(s), limits_(limits) {}

  FiniteGroup parse() {
    std::vector<FiniteGroup> factors{factor()};
    while (peek() == 'x') {
      ++pos_;
      factors.push_back(factor());
    }
    if (pos_ != s_.size()) fail("unexpected character");
    return direct_product(factors, limits_);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(std::string const& what) const {
    throw InvalidArgument("cannot parse group '" + std::string(s_) + "' at " +
                          std::to_string(pos_) + ": " + what);
  }

  bool eat(std::string_view word) {
    if (s_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  long number() {
    long v = 0;
    auto r = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (r.ec != std::errc() || r.ptr == s_.data() + pos_) fail("expected a number");
    pos_ = r.ptr - s_.data();
    return v;
  }

  long paren_number() {
    if (!eat("(")) fail("expected '('");
    long v = number();
    if (!eat(")")) fail("expected ')'");
    return v;
  }

  FiniteGroup factor() {
    std::size_t start = pos_;
    FiniteGroup g = atom();
    std::string atom_text(s_.substr(start, pos_ - start));
    if (!eat("^")) return g;
    long k = number();
    if (k < 1) fail("exponent must be positive");
    if (atom_text.size() > 1 && atom_text[0] == 'C' && std::isdigit(atom_text[1])) {
      long p = std::stol(atom_text.substr(1));
      if (is_prime(static_cast<unsigned>(p))) return catalog::elementary_abelian(p, k, limits_);
    }
    return direct_product(std::vector<FiniteGroup>(k, g), limits_);
  }

  FiniteGroup atom() {
    if (eat("PSL2")) return make_group("psl2", {paren_number()}, limits_);
    if (eat("SL2")) return make_group("sl2", {paren_number()}, limits_);
    if (eat("GL2")) return make_group("gl2", {paren_number()}, limits_);
    if (eat("F21")) return catalog::frobenius21();
    if (eat("M3")) return catalog::heisenberg3();
    if (eat("Q8")) return quaternion8();
    if (eat("1")) return FiniteGroup();
    char c = peek();
    if (c == 'C' || c == 'S' || c == 'A' || c == 'D') {
      ++pos_;
      long n = number();
      switch (c) {
        case 'C': return make_group("cyclic", {n}, limits_);
        case 'S': return make_group("symmetric", {n}, limits_);
        case 'A': return make_group("alternating", {n}, limits_);
        default: return make_group("dihedral", {n}, limits_);
      }
    }
    fail("unknown group atom");
  }

  std::string_view s_;
  Limits const& limits_;
  std::size_t pos_ = 0;
};

std::string factorial_half(unsigned m) {
  boost::multiprecision::cpp_int f = 1;
  for (unsigned i = 2; i <= m; ++i) f *= i;
  boost::multiprecision::cpp_int half = f / 2;
  return half.str();
}

std::vector<CatalogEntry> build_catalog() {
  using L = ClassificationLabel;
  auto row = [](std::string name, std::string expr, std::string order, L label,
                std::string note = {}) {
    return CatalogEntry{std::move(name), std::move(expr), std::move(order), label, false, {}, {},
                        {}, std::move(note)};
  };
  auto meta = [](std::string name, std::string order, std::optional<L> label,
                 std::string factorization, std::string left, std::string right,
                 std::string note) {
    return CatalogEntry{std::move(name), {}, std::move(order), label, true,
                        std::move(factorization), std::move(left), std::move(right),
                        std::move(note)};
  };
  return {
      row("C2", "C2", "2", L::ab),
      row("C5", "C5", "5", L::ab),
      row("C6", "C6", "6", L::ab),
      row("C9", "C9", "9", L::ab),
      row("C2^2", "C2^2", "4", L::ab),
      row("C2^3", "C2^3", "8", L::ab),
      row("C4xC2", "C4xC2", "8", L::ab),
      row("C3^3", "C3^3", "27", L::ab),
      row("C3xC9", "C3xC9", "27", L::ab),
      row("S3", "S3", "6", L::ssolv),
      row("S4", "S4", "24", L::solv),
      row("S5", "S5", "120", L::mixed),
      row("A4", "A4", "12", L::solv),
      row("A5", "A5", "60", L::simp),
      row("D8", "D8", "8", L::nil),
      row("Q8", "Q8", "8", L::nil),
      row("F21", "F21", "21", L::ssolv, "C7 x| C3"),
      row("M3", "M3", "27", L::nil, "Heisenberg group of order 27"),
      row("GL2(3)", "GL2(3)", "48", L::solv),
      row("SL2(3)", "SL2(3)", "24", L::solv),
      row("SL2(5)", "SL2(5)", "120", L::perfect),
      row("PSL2(5)", "PSL2(5)", "60", L::simp),
      row("PSL2(7)", "PSL2(7)", "168", L::simp),
      row("D8xF21", "D8xF21", "168", L::ssolv),
      row("A4xC5", "A4xC5", "60", L::solv),
      row("A5xA5", "A5xA5", "3600", L::chsimp),
      row("(A4xC5)^2", "A4xC5xA4xC5", "3600", L::solv),
      row("A4xC5xA5", "A4xC5xA5", "3600", L::mixed),
      row("PSL2(7)^2", "PSL2(7)^2", "28224", L::chsimp),
      meta("M11xA7", "19958400", L::perfect, {}, {}, {},
           "perfect, not characteristically simple; multiplicative group of the A11 brace"),
      meta("A11", factorial_half(11), L::simp, "M11 . A7", "7920", "2520",
           "exact factorization into perfect groups"),
      meta("A12", factorial_half(12), L::simp, "M12 . A7", "95040", "2520",
           "exact factorization into perfect groups"),
      meta("A121", factorial_half(121), L::simp, "(11^2:SL2(5)) . A119", "14520",
           factorial_half(119), "exact factorization into perfect groups"),
      meta("O8+(2)", "174182400", L::simp, "(2^4:A5) . A9", "960", "181440",
           "exact factorization into perfect groups"),
      meta("M24", "244823040", L::simp, "(2^4:A7) . PSL2(23)", "40320", "6072",
           "exact factorization into perfect groups"),
      meta("Am", "m!/2", L::simp, "[m] . A(m-1)", "m", "(m-1)!/2",
           "m >= 60; [m] an unspecified perfect group of order m"),
      meta("A(q+1)", "(q+1)!/2", L::simp, "PSL2(q) . A(q-2)", "q(q^2-1)", "(q-2)!/2",
           "q = 2^f >= 8"),
  };
}

}  // namespace

FiniteGroup parse_group(std::string_view expr, Limits const& limits) {
  return ExprParser(expr, limits).parse();
}

std::vector<CatalogEntry> const& catalog_entries() {
  static std::vector<CatalogEntry> const entries = build_catalog();
  return entries;
}

CatalogEntry const& catalog_metadata(std::string_view name) {
  for (auto const& e : catalog_entries())
    if (e.name == name) return e;
  throw InvalidArgument("unknown catalog entry: " + std::string(name));
}

FiniteGroup build_entry(CatalogEntry const& entry, Limits const& limits) {
  if (entry.metadata_only)
    throw InvalidArgument(entry.name + " is metadata-only and cannot be built");
  return parse_group(entry.expr, limits);
}

}  // namespace brace_forge
