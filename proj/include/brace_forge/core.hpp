#ifndef BRACE_FORGE_CORE_HPP_
#define BRACE_FORGE_CORE_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace brace_forge {

/// Element index inside a finite group. The identity is always index 0.
using Index = std::uint32_t;

inline constexpr Index kIdentity = 0;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad argument: index out of range, unmet precondition, unknown name.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A configured size limit was exceeded.
class CapExceeded : public Error {
 public:
  CapExceeded(std::string const& cap, std::size_t limit, std::size_t requested)
      : Error(cap + " exceeded: requested " + std::to_string(requested) +
              ", limit " + std::to_string(limit)),
        cap_(cap),
        limit_(limit),
        requested_(requested) {}

  std::string const& cap() const noexcept { return cap_; }
  std::size_t limit() const noexcept { return limit_; }
  std::size_t requested() const noexcept { return requested_; }

 private:
  std::string cap_;
  std::size_t limit_;
  std::size_t requested_;
};

/// An algebraic law failed. The witness holds the offending elements.
class LawViolation : public Error {
 public:
  LawViolation(std::string const& law, std::vector<Index> witness)
      : Error(law + " violated at " + render(witness)),
        law_(law),
        witness_(std::move(witness)) {}

  std::string const& law() const noexcept { return law_; }
  std::vector<Index> const& witness() const noexcept { return witness_; }

 private:
  static std::string render(std::vector<Index> const& w) {
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(w[i]);
    }
    return s + ")";
  }

  std::string law_;
  std::vector<Index> witness_;
};

/// Size limits and sampling policy shared by every algorithm.
struct Limits {
  std::size_t full_check_cap = 300;      // exhaustive O(n^3) laws up to here
  std::size_t pair_check_cap = 2048;     // exhaustive O(n^2) laws up to here
  std::size_t table_cap = 2048;          // Cayley tables materialized up to here
  std::size_t subgroup_cap = 400;        // all_subgroups
  std::size_t aut_cap = 200;             // automorphism_group, holomorph
  std::size_t iso_cap = 5000;            // are_isomorphic
  std::size_t supersolvable_cap = 32768; // is_supersolvable
  std::size_t element_cap = 1u << 20;    // any constructed group
  std::size_t sample_count = 1'000'000;  // sampled triple laws on braces
  std::size_t group_sample_count = 100'000;  // sampled associativity
  std::uint64_t seed = 0xB12ACE;
};

Limits const& default_limits();

/// How a law was checked.
struct CheckMode {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::size_t count = 0;

  static CheckMode full(std::size_t count) { return {true, 0, count}; }
  static CheckMode sampled(std::uint64_t seed, std::size_t count) {
    return {false, seed, count};
  }

  std::string str() const;
  bool operator==(CheckMode const&) const = default;
};

/// splitmix64; deterministic across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform-enough value in [0, n).
  Index below(std::size_t n) { return static_cast<Index>(next() % n); }

 private:
  std::uint64_t state_;
};

void require_cap(char const* cap, std::size_t limit, std::size_t requested);

}  // namespace brace_forge

#endif  // BRACE_FORGE_CORE_HPP_
