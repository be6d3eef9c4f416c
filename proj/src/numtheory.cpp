#include "brace_forge/numtheory.hpp"

#include "brace_forge/core.hpp"

namespace brace_forge::nt {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InvalidArgument(std::to_string(p) + " is not prime");
}

BigInt pow_big(BigInt base, std::uint64_t e) {
  BigInt r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Valuation vp(BigInt const& m, std::uint64_t p) {
  require_prime(p);
  if (m == 0) return Valuation::infinity();
  BigInt x = m < 0 ? BigInt(-m) : m;
  if (p == 2) return Valuation::finite(boost::multiprecision::lsb(x));
  // Divide by p, p^2, p^4, ... while possible, then step back down.
  std::vector<BigInt> pows{BigInt(p)};
  std::uint64_t k = 0;
  BigInt q, r;
  while (true) {
    boost::multiprecision::divide_qr(x, pows.back(), q, r);
    if (r != 0) break;
    x = q;
    k += std::uint64_t(1) << (pows.size() - 1);
    pows.push_back(pows.back() * pows.back());
  }
  // What is left is below p^(2^top), so each power divides at most once.
  for (std::size_t i = pows.size() - 1; i-- > 0;) {
    boost::multiprecision::divide_qr(x, pows[i], q, r);
    if (r != 0) continue;
    x = q;
    k += std::uint64_t(1) << i;
  }
  return Valuation::finite(k);
}

std::uint64_t legendre(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  std::uint64_t sum = 0;
  for (std::uint64_t q = n / p; q > 0; q /= p) sum += q;
  return sum;
}

Valuation lte(BigInt const& x, BigInt const& y, std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  if (p == 2) throw InvalidArgument("lte: p must be odd");
  if (n == 0) throw InvalidArgument("lte: n must be positive");
  if (x % p == 0) throw InvalidArgument("lte: p divides x");
  if (y % p == 0) throw InvalidArgument("lte: p divides y");
  if ((x - y) % p != 0) throw InvalidArgument("lte: p does not divide x - y");
  return vp(x - y, p) + vp(BigInt(n), p);
}

BigInt sl_n_3_order(unsigned n) {
  if (n == 0) throw InvalidArgument("sl_n_3_order: n must be positive");
  BigInt r = pow_big(3, std::uint64_t(n) * (n - 1) / 2);
  BigInt three_i = 3;
  for (unsigned i = 2; i <= n; ++i) {
    three_i *= 3;
    r *= three_i - 1;
  }
  return r;
}

std::uint64_t e_of_n(unsigned n) {
  if (n == 0) throw InvalidArgument("e_of_n: n must be positive");
  std::uint64_t m = n / 6;
  std::uint64_t e = m;
  for (std::uint64_t q = m / 7; q > 0; q /= 7) e += q;
  return e;
}

std::uint64_t e_of_n_direct(unsigned n) { return *vp(sl_n_3_order(n), 7).value; }

bool check_lemma_bound(unsigned n, unsigned r) {
  if (n == 0) throw InvalidArgument("check_lemma_bound: n must be positive");
  if (r < 1 || r > n + 1)
    throw InvalidArgument("check_lemma_bound: r must lie in [1, n + 1]");
  return 2ull * n + 1 - r > 2 * e_of_n(n);
}

ScanResult diophantine_scan(ScanBox const& box) {
  ScanResult res;
  res.box = box;
  for (std::uint64_t p = 2; p <= box.p_max; ++p) {
    if (!is_prime(p)) continue;
    BigInt q = 1;
    for (unsigned f = 1; f <= box.f_max; ++f) {
      q *= p;
      BigInt qn = q;
      for (unsigned n = 2; n <= box.n_max; ++n) {
        qn *= q;
        BigInt lhs = qn - 1;
        BigInt base = q - 1;
        if (lhs % base != 0) continue;
        BigInt s = lhs / base;
        unsigned t = 0;
        while (s % 2 == 0) {
          s /= 2;
          ++t;
        }
        if (s != 1 || t > box.t_max) continue;
        if (lhs == pow_big(2, t) * base) res.solutions.push_back({p, f, n, t});
      }
    }
  }
  for (auto const& s : res.solutions) {
    if (s.t != 3)
      res.notes.push_back("(" + std::to_string(s.p) + "," + std::to_string(s.f) + "," +
                          std::to_string(s.n) + "," + std::to_string(s.t) +
                          ") solves the equation with t != 3; t = 3 holds only for p = 7");
  }
  return res;
}

}  // namespace brace_forge::nt
