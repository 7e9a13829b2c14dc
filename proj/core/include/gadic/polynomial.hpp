#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gadic/digit_expansion.hpp"

namespace gadic {

/// Integer polynomial c0 + c1 x + ... + cd x^d with no stored leading zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  /// Ascending coefficients; trailing zeros are dropped.
  explicit IntPolynomial(std::vector<std::int64_t> coefficients);

  /// "c0,c1,...,cd" (ascending) or "x^5-20x^4-86x^3-98x^2+80x+3".
  static IntPolynomial parse(std::string_view text);

  std::span<const std::int64_t> coefficients() const noexcept { return coefficients_; }
  bool is_zero() const noexcept { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }

  IntPolynomial derivative() const;

  /// f(x) mod m by Horner's rule.
  std::uint64_t evaluate_mod(std::uint64_t x, std::uint64_t m) const noexcept;
  /// f(x) in expansion arithmetic at x's precision.
  DigitExpansion evaluate(const DigitExpansion& x) const;
  /// True when every coefficient is divisible by m.
  bool vanishes_mod(std::uint64_t m) const noexcept;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<std::int64_t> coefficients_;
};

}  // namespace gadic
