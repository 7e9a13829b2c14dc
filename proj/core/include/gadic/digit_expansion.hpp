#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "gadic/base.hpp"

namespace gadic {

/// A g-adic integer known to N base-g digits, i.e. a residue mod g^N.
///
/// Digits are stored least-significant first. Values are immutable; every
/// operation returns a new expansion. Binary operations require equal
/// bases and produce the smaller of the two operand precisions.
class DigitExpansion {
 public:
  /// Throws DomainError if `digits` is empty or holds a digit >= g.
  DigitExpansion(Base base, std::vector<Digit> digits_lsf);

  static DigitExpansion zero(Base base, std::size_t precision);
  static DigitExpansion one(Base base, std::size_t precision);

  Base base() const noexcept { return base_; }
  std::size_t precision() const noexcept { return digits_.size(); }
  std::span<const Digit> digits() const noexcept { return digits_; }
  Digit digit(std::size_t i) const { return digits_.at(i); }

  bool is_zero() const noexcept;
  /// d0 coprime to g.
  bool is_unit() const noexcept;

  friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;

 private:
  Base base_;
  std::vector<Digit> digits_;
};

/// n mod g^N; negative n wraps to complement digits (-1 = ...999 in base 10).
DigitExpansion from_integer(std::int64_t n, Base base, std::size_t precision);

/// Non-negative decimal string (arbitrary length) reduced mod g^N.
DigitExpansion from_decimal(std::string_view decimal, Base base, std::size_t precision);

DigitExpansion add(const DigitExpansion& x, const DigitExpansion& y);
DigitExpansion sub(const DigitExpansion& x, const DigitExpansion& y);
DigitExpansion mul(const DigitExpansion& x, const DigitExpansion& y);
DigitExpansion negate(const DigitExpansion& x);

/// x * m for a small signed integer, |m| <= Base::kMax.
DigitExpansion mul_small(const DigitExpansion& x, std::int64_t m);
DigitExpansion add_small(const DigitExpansion& x, std::int64_t m);

/// The z with m*z = x mod g^N, computed digit by digit: at each position
/// pick the digit q with q*m matching the current digit, subtract q*m and
/// borrow into the higher digits. Requires gcd(m, g) = 1.
DigitExpansion div_exact_by_unit(const DigitExpansion& x, std::int64_t m);

/// Multiplicative inverse of a unit, by Newton iteration y <- y(2 - xy)
/// from the inverse of d0 mod g. Throws NotAUnit.
DigitExpansion invert_unit(const DigitExpansion& x);

/// Index of the first nonzero digit; nullopt for the zero expansion.
std::optional<std::size_t> digit_valuation(const DigitExpansion& x) noexcept;

/// Keep the low M digits. Throws PrecisionError unless 1 <= M <= N.
DigitExpansion truncate(const DigitExpansion& x, std::size_t m);

/// x^k by repeated squaring; pow(x, 0) = 1.
DigitExpansion pow(const DigitExpansion& x, std::uint64_t k);

/// Pads with high zero digits up to precision M >= N. This chooses the
/// smallest non-negative representative of the residue, so callers use it
/// only where the result provably does not depend on the unknown digits.
DigitExpansion extend_with_zeros(const DigitExpansion& x, std::size_t m);

/// x * g^k at the same precision (the top k digits fall off).
DigitExpansion shift_up(const DigitExpansion& x, std::size_t k);

/// x / g^k, exact: requires the low k digits to be zero. The result has
/// precision N - k. Throws PrecisionError otherwise.
DigitExpansion shift_down(const DigitExpansion& x, std::size_t k);

/// Compares the residues 0 <= x, y < g^N as integers. Same base and
/// precision required.
std::strong_ordering compare_residue(const DigitExpansion& x, const DigitExpansion& y);

/// Re-expand the residue x (its representative in [0, g^N)) in another base,
/// reduced mod target^m. When target^m divides g^N this is the natural
/// ring projection Z/g^N -> Z/target^m.
DigitExpansion rebase(const DigitExpansion& x, Base target, std::size_t m);

/// The residue as an unsigned integer if it fits in 64 bits.
std::optional<std::uint64_t> to_uint64(const DigitExpansion& x) noexcept;

inline DigitExpansion operator+(const DigitExpansion& x, const DigitExpansion& y) { return add(x, y); }
inline DigitExpansion operator-(const DigitExpansion& x, const DigitExpansion& y) { return sub(x, y); }
inline DigitExpansion operator*(const DigitExpansion& x, const DigitExpansion& y) { return mul(x, y); }
inline DigitExpansion operator-(const DigitExpansion& x) { return negate(x); }

}  // namespace gadic
