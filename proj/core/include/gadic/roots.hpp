#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gadic/digit_expansion.hpp"

namespace gadic {

/// The two square roots of a unit in Z_p. `principal` is the one whose last
/// digit lies in [1, (p-1)/2].
struct SqrtPair {
  DigitExpansion principal;
  DigitExpansion other;
};

/// binom(1/2, k) = sign * catalan(k-1) / 2^two_exponent for k >= 1, and 1
/// for k = 0. The Catalan factor is kept as a residue mod p^N.
struct BinomialCoefficient {
  int sign;
  DigitExpansion catalan;
  unsigned two_exponent;
};

/// sqrt(a) = sqrt(1 + x) / n with a*n^2 = 1 + x and x = 0 mod p.
struct BinomialSeriesPlan {
  std::int64_t normalizer;  // n
  std::int64_t argument;    // x
  std::size_t term_count;
  std::vector<BinomialCoefficient> coefficients;
};

/// Quadratic periods (-1 + sqrt5)/2 and (-1 - sqrt5)/2 for the principal sqrt5.
struct PeriodPair {
  DigitExpansion a;
  DigitExpansion b;
};

/// One digit of the base-10 square-root-of-one iteration: with
/// 1 - a^2 = 10^n * r mod 10^(n+2), the next digit is b = -r/2 mod 10.
struct GaussStep {
  std::size_t position;  // n
  unsigned window;       // r
  unsigned digit;        // b
  DigitExpansion value;  // a + 10^n b, precision n + 1
};

namespace roots {

/// Both square roots of a unit a in Z_p at precision N (a.base() == p).
/// Throws DomainError for p = 2, non-prime p, a non-unit or a non-residue.
SqrtPair sqrt_hensel(const DigitExpansion& a, std::size_t precision);
SqrtPair sqrt_hensel(std::int64_t a, std::uint64_t p, std::size_t precision);

BinomialSeriesPlan plan_binomial_sqrt(std::int64_t a, std::uint64_t p, std::size_t precision);

/// sqrt(a) from the binomial series of sqrt(1 + x), divided by n.
DigitExpansion sqrt_binomial(std::int64_t a, std::uint64_t p, std::size_t precision);

/// {2e - 1 : e idempotent}: 1, then -1, then the rest by ascending residue.
std::vector<DigitExpansion> unit_sqrts_of_one(Base g, std::size_t precision);

/// The seed 249 = eps mod 10^3.
DigitExpansion default_gauss_seed();

/// Extends a base-10 seed (last digit 9, seed^2 = 1 at its precision) one
/// digit at a time up to precision N.
DigitExpansion gauss_sqrt1_iterate(const DigitExpansion& seed, std::size_t precision);
std::vector<GaussStep> gauss_sqrt1_trace(const DigitExpansion& seed, std::size_t precision);

/// Requires an odd prime p != 5 with 5 a square mod p.
PeriodPair quadratic_periods(std::uint64_t p, std::size_t precision);

/// Smallest r in [0, p) with r^2 = a mod p (Tonelli-Shanks), if any.
std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p);

}  // namespace roots
}  // namespace gadic
