#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gadic/digit_expansion.hpp"
#include "gadic/errors.hpp"
#include "gadic/polynomial.hpp"

namespace gadic {

/// A root of f modulo g^N together with the mod-p root(s) it refines.
/// For a prime base `seeds` has one entry; for a composite base one entry
/// per prime component, in factorization order.
struct LiftedRoot {
  DigitExpansion root;
  std::vector<std::uint64_t> seeds;
};

/// Signals a root r with f'(r) = 0 mod p, where lifting is not unique.
class HenselHypothesisViolated : public DomainError {
 public:
  using DomainError::DomainError;
};

namespace hensel {

/// All r in [0, p) with f(r) = 0 mod p, ascending. Throws DomainError if p
/// is not prime or every coefficient of f vanishes mod p.
std::vector<std::uint64_t> roots_mod_p(const IntPolynomial& f, std::uint64_t p);

/// Lifts a simple root r0 mod p to the unique root mod p^N congruent to r0,
/// by Newton steps x <- x - f(x)/f'(x) doubling the precision each time.
LiftedRoot hensel_lift(const IntPolynomial& f, std::uint64_t r0, std::uint64_t p, std::size_t precision);

/// Roots of f in Z/g^N that come from simple roots mod every p | g: each
/// prime-power component p^e is lifted to e*N base-p digits, and every
/// combination of component roots is recombined. Sorted by residue.
std::vector<LiftedRoot> gadic_roots(const IntPolynomial& f, Base g, std::size_t precision);

}  // namespace hensel
}  // namespace gadic
