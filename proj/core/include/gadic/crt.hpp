#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gadic/digit_expansion.hpp"

namespace gadic {

struct PrimePower {
  std::uint32_t prime;
  std::uint32_t exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// g = prod p^e over `components`, primes strictly increasing.
struct BaseFactorization {
  Base base;
  std::vector<PrimePower> components;
};

/// One coordinate of Z/g^N = (+) Z/p^(eN): the residue mod p^(eN) written
/// in base p with precision e*N.
struct ComponentValue {
  PrimePower component;
  DigitExpansion value;

  std::size_t component_precision() const noexcept { return value.precision(); }
};

namespace crt {

BaseFactorization factor_base(Base g);

/// Residue of x mod p^(eN) re-expanded in base p. Throws DomainError if
/// (p, e) is not a component of x's base.
ComponentValue project(const DigitExpansion& x, PrimePower component);

/// All components of x, in factorization order.
std::vector<ComponentValue> project_all(const DigitExpansion& x);

/// The unique x mod g^N with the given projections. Components are folded
/// left to right: with x' the partial solution mod M, the next coordinate
/// c mod q is matched by x' + M*t, t = (c - x')*M^-1 mod q.
/// Throws DomainError on a missing/extra component or inconsistent
/// precisions.
DigitExpansion recombine(const BaseFactorization& factorization,
                         const std::vector<ComponentValue>& values);

/// All 2^w idempotents of Z/g^N: 0, 1, then the rest by ascending residue.
std::vector<DigitExpansion> idempotents(Base g, std::size_t precision);

/// The idempotent that is 1 on component `index` and 0 elsewhere.
DigitExpansion minimal_idempotent(const BaseFactorization& factorization, std::size_t index,
                                  std::size_t precision);

}  // namespace crt
}  // namespace gadic
