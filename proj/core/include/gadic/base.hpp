#pragma once

#include <compare>
#include <cstdint>

namespace gadic {

using Digit = std::uint32_t;

/// Radix g of a g-adic ring. Bounded so that digit products and
/// digit-times-small-integer products fit in 64 bits.
class Base {
 public:
  static constexpr std::uint64_t kMax = (std::uint64_t{1} << 31) - 1;

  /// Throws DomainError unless 2 <= g <= kMax.
  explicit Base(std::uint64_t g);

  constexpr Digit value() const noexcept { return g_; }
  constexpr operator Digit() const noexcept { return g_; }

  friend constexpr bool operator==(Base, Base) noexcept = default;
  friend constexpr auto operator<=>(Base, Base) noexcept = default;

 private:
  Digit g_;
};

/// Trial-division primality test, adequate for human-entered bases.
bool is_prime(std::uint64_t n) noexcept;

/// Modular inverse of a mod m via extended gcd; requires gcd(a, m) = 1.
/// Returns 0 when no inverse exists.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) noexcept;

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept;
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept;

/// Reduce a signed integer into [0, m).
std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m) noexcept;

}  // namespace gadic
