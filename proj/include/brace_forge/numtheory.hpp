#ifndef BRACE_FORGE_NUMTHEORY_HPP_
#define BRACE_FORGE_NUMTHEORY_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace brace_forge::nt {

using BigInt = boost::multiprecision::cpp_int;

/// v_p(m); infinite exactly for m = 0.
struct Valuation {
  std::optional<std::uint64_t> value;

  static Valuation infinity() { return {}; }
  static Valuation finite(std::uint64_t v) { return {v}; }
  bool is_infinite() const { return !value.has_value(); }
  std::string str() const { return value ? std::to_string(*value) : "inf"; }
  bool operator==(Valuation const&) const = default;
  Valuation operator+(Valuation const& o) const {
    if (is_infinite() || o.is_infinite()) return infinity();
    return finite(*value + *o.value);
  }
};

bool is_prime(std::uint64_t n);

/// Throws InvalidArgument when p is not prime. Sign of m is ignored.
Valuation vp(BigInt const& m, std::uint64_t p);

/// sum_{i >= 1} floor(n / p^i) = v_p(n!).
std::uint64_t legendre(std::uint64_t n, std::uint64_t p);

/// v_p(x^n - y^n) = v_p(x - y) + v_p(n) for an odd prime p with p | x - y
/// and p dividing neither x nor y. Throws InvalidArgument naming the
/// failed hypothesis.
Valuation lte(BigInt const& x, BigInt const& y, std::uint64_t n, std::uint64_t p);

/// |SL_n(3)| = 3^{n(n-1)/2} prod_{i=2}^{n} (3^i - 1).
BigInt sl_n_3_order(unsigned n);

/// v_7(|SL_n(3)|) by the floor-sum closed form with m = floor(n/6):
/// m + sum_{j >= 1} floor(m / 7^j).
std::uint64_t e_of_n(unsigned n);
/// v_7(|SL_n(3)|) computed directly from the big integer.
std::uint64_t e_of_n_direct(unsigned n);

/// 2n + 1 - r > 2 e(n), for 1 <= r <= n + 1.
bool check_lemma_bound(unsigned n, unsigned r);

struct ScanBox {
  std::uint64_t p_max = 200;
  unsigned f_max = 6;
  unsigned n_max = 12;
  unsigned t_max = 64;
};

struct DiophantineSolution {
  std::uint64_t p;
  unsigned f;
  unsigned n;
  unsigned t;
  bool operator==(DiophantineSolution const&) const = default;
};

struct ScanResult {
  ScanBox box;
  std::vector<DiophantineSolution> solutions;
  std::vector<std::string> notes;
};

/// All (p, f, n, t) in the box with p prime, n >= 2, and
/// p^{fn} - 1 = 2^t (p^f - 1), ordered by (p, f, n, t).
ScanResult diophantine_scan(ScanBox const& box = {});

}  // namespace brace_forge::nt

#endif  // BRACE_FORGE_NUMTHEORY_HPP_
