#include "gadic/digit_expansion.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gadic/errors.hpp"

namespace gadic {

namespace {

void require_same_base(const DigitExpansion& x, const DigitExpansion& y) {
  if (x.base() != y.base()) throw BaseMismatch(x.base(), y.base());
}

std::size_t common_precision(const DigitExpansion& x, const DigitExpansion& y) {
  require_same_base(x, y);
  return std::min(x.precision(), y.precision());
}

void require_small(std::uint64_t magnitude) {
  if (magnitude > Base::kMax) {
    throw DomainError("small-integer operand out of range: " + std::to_string(magnitude));
  }
}

std::uint64_t magnitude(std::int64_t m) {
  return m < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(m) : static_cast<std::uint64_t>(m);
}

}  // namespace

DigitExpansion::DigitExpansion(Base base, std::vector<Digit> digits_lsf)
    : base_(base), digits_(std::move(digits_lsf)) {
  if (digits_.empty()) throw PrecisionError("precision must be at least 1");
  for (const Digit d : digits_) {
    if (d >= base_.value()) {
      throw DomainError("digit " + std::to_string(d) + " out of range for base " +
                        std::to_string(base_.value()));
    }
  }
}

DigitExpansion DigitExpansion::zero(Base base, std::size_t precision) {
  return DigitExpansion(base, std::vector<Digit>(precision, 0));
}

DigitExpansion DigitExpansion::one(Base base, std::size_t precision) {
  std::vector<Digit> digits(precision, 0);
  if (!digits.empty()) digits[0] = 1;
  return DigitExpansion(base, std::move(digits));
}

bool DigitExpansion::is_zero() const noexcept {
  return std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d == 0; });
}

bool DigitExpansion::is_unit() const noexcept { return gcd(digits_[0], base_.value()) == 1; }

DigitExpansion from_integer(std::int64_t n, Base base, std::size_t precision) {
  if (precision == 0) throw PrecisionError("precision must be at least 1");
  std::vector<Digit> digits(precision, 0);
  std::uint64_t rest = magnitude(n);
  for (std::size_t i = 0; i < precision && rest != 0; ++i) {
    digits[i] = static_cast<Digit>(rest % base.value());
    rest /= base.value();
  }
  DigitExpansion result(base, std::move(digits));
  return n < 0 ? negate(result) : result;
}

DigitExpansion from_decimal(std::string_view decimal, Base base, std::size_t precision) {
  if (decimal.empty()) throw ParseError("empty decimal literal");
  auto acc = DigitExpansion::zero(base, precision);
  for (const char c : decimal) {
    if (c < '0' || c > '9') throw ParseError("not a decimal digit: '" + std::string(1, c) + "'");
    acc = add_small(mul_small(acc, 10), c - '0');
  }
  return acc;
}

DigitExpansion add(const DigitExpansion& x, const DigitExpansion& y) {
  const auto n = common_precision(x, y);
  const std::uint64_t g = x.base();
  std::vector<Digit> out(n);
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t s = std::uint64_t{x.digit(i)} + y.digit(i) + carry;
    out[i] = static_cast<Digit>(s % g);
    carry = s / g;
  }
  return DigitExpansion(x.base(), std::move(out));
}

DigitExpansion sub(const DigitExpansion& x, const DigitExpansion& y) {
  const auto n = common_precision(x, y);
  const std::int64_t g = x.base();
  std::vector<Digit> out(n);
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t d = std::int64_t{x.digit(i)} - y.digit(i) - borrow;
    borrow = d < 0 ? 1 : 0;
    if (d < 0) d += g;
    out[i] = static_cast<Digit>(d);
  }
  return DigitExpansion(x.base(), std::move(out));
}

DigitExpansion negate(const DigitExpansion& x) {
  return sub(DigitExpansion::zero(x.base(), x.precision()), x);
}

DigitExpansion mul(const DigitExpansion& x, const DigitExpansion& y) {
  const auto n = common_precision(x, y);
  const std::uint64_t g = x.base();
  std::vector<std::uint64_t> acc(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t xi = x.digit(i);
    if (xi == 0) continue;
    std::uint64_t carry = 0;
    for (std::size_t j = 0; i + j < n; ++j) {
      const std::uint64_t cur = acc[i + j] + xi * y.digit(j) + carry;
      acc[i + j] = cur % g;
      carry = cur / g;
    }
  }
  std::vector<Digit> out(acc.begin(), acc.end());
  return DigitExpansion(x.base(), std::move(out));
}

DigitExpansion mul_small(const DigitExpansion& x, std::int64_t m) {
  const auto mag = magnitude(m);
  require_small(mag);
  const std::uint64_t g = x.base();
  std::vector<Digit> out(x.precision());
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t cur = std::uint64_t{x.digit(i)} * mag + carry;
    out[i] = static_cast<Digit>(cur % g);
    carry = cur / g;
  }
  DigitExpansion result(x.base(), std::move(out));
  return m < 0 ? negate(result) : result;
}

DigitExpansion add_small(const DigitExpansion& x, std::int64_t m) {
  return add(x, from_integer(m, x.base(), x.precision()));
}

DigitExpansion div_exact_by_unit(const DigitExpansion& x, std::int64_t m) {
  const auto mag = magnitude(m);
  require_small(mag);
  const std::uint64_t g = x.base();
  if (mag == 0 || gcd(mag, g) != 1) {
    throw NotAUnit("divisor " + std::to_string(m) + " is not a unit in base " + std::to_string(g));
  }
  const std::uint64_t inv = inverse_mod(mag % g, g);
  std::vector<Digit> out(x.precision());
  // Amount still owed to the higher digits after subtracting q*m.
  std::uint64_t borrow = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::uint64_t owed_low = borrow % g;
    const std::uint64_t owed_high = borrow / g;
    const std::uint64_t digit = (x.digit(i) + g - owed_low) % g;
    const std::uint64_t q = mul_mod(digit, inv, g);
    out[i] = static_cast<Digit>(q);
    // x_i - borrow - q*m is divisible by g; carry the (non-negative) deficit.
    const std::uint64_t deficit_low = owed_low + q * mag - x.digit(i);
    borrow = owed_high + deficit_low / g;
  }
  DigitExpansion result(x.base(), std::move(out));
  return m < 0 ? negate(result) : result;
}

DigitExpansion invert_unit(const DigitExpansion& x) {
  if (!x.is_unit()) throw NotAUnit("expansion is not a unit: last digit shares a factor with the base");
  const Base base = x.base();
  const std::size_t n = x.precision();
  auto y = from_integer(static_cast<std::int64_t>(inverse_mod(x.digit(0), base)), base, 1);
  for (std::size_t k = 1; k < n;) {
    k = std::min(2 * k, n);
    const auto xk = truncate(x, k);
    const auto yk = extend_with_zeros(y, k);
    y = mul(yk, sub(from_integer(2, base, k), mul(xk, yk)));
  }
  return y;
}

std::optional<std::size_t> digit_valuation(const DigitExpansion& x) noexcept {
  const auto digits = x.digits();
  const auto it = std::find_if(digits.begin(), digits.end(), [](Digit d) { return d != 0; });
  if (it == digits.end()) return std::nullopt;
  return static_cast<std::size_t>(it - digits.begin());
}

DigitExpansion truncate(const DigitExpansion& x, std::size_t m) {
  if (m == 0 || m > x.precision()) {
    throw PrecisionError("truncate: precision " + std::to_string(m) + " outside [1, " +
                         std::to_string(x.precision()) + "]");
  }
  const auto digits = x.digits();
  return DigitExpansion(x.base(), std::vector<Digit>(digits.begin(), digits.begin() + m));
}

DigitExpansion pow(const DigitExpansion& x, std::uint64_t k) {
  auto result = DigitExpansion::one(x.base(), x.precision());
  auto square = x;
  while (k != 0) {
    if (k & 1) result = mul(result, square);
    k >>= 1;
    if (k != 0) square = mul(square, square);
  }
  return result;
}

DigitExpansion extend_with_zeros(const DigitExpansion& x, std::size_t m) {
  if (m < x.precision()) {
    throw PrecisionError("extend_with_zeros: target precision below current precision");
  }
  std::vector<Digit> digits(x.digits().begin(), x.digits().end());
  digits.resize(m, 0);
  return DigitExpansion(x.base(), std::move(digits));
}

DigitExpansion shift_up(const DigitExpansion& x, std::size_t k) {
  std::vector<Digit> digits(x.precision(), 0);
  for (std::size_t i = k; i < digits.size(); ++i) digits[i] = x.digit(i - k);
  return DigitExpansion(x.base(), std::move(digits));
}

DigitExpansion shift_down(const DigitExpansion& x, std::size_t k) {
  if (k >= x.precision()) throw PrecisionError("shift_down would leave no digits");
  const auto digits = x.digits();
  if (std::any_of(digits.begin(), digits.begin() + k, [](Digit d) { return d != 0; })) {
    throw PrecisionError("shift_down: value not divisible by g^" + std::to_string(k));
  }
  return DigitExpansion(x.base(), std::vector<Digit>(digits.begin() + k, digits.end()));
}

std::strong_ordering compare_residue(const DigitExpansion& x, const DigitExpansion& y) {
  require_same_base(x, y);
  if (x.precision() != y.precision()) throw PrecisionError("compare_residue: precision mismatch");
  for (std::size_t i = x.precision(); i-- > 0;) {
    if (const auto c = x.digit(i) <=> y.digit(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

DigitExpansion rebase(const DigitExpansion& x, Base target, std::size_t m) {
  if (target == x.base()) {
    return m <= x.precision() ? truncate(x, m) : extend_with_zeros(x, m);
  }
  auto acc = DigitExpansion::zero(target, m);
  const std::int64_t g = x.base();
  for (std::size_t i = x.precision(); i-- > 0;) {
    acc = add_small(mul_small(acc, g), x.digit(i));
  }
  return acc;
}

std::optional<std::uint64_t> to_uint64(const DigitExpansion& x) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t g = x.base();
  std::uint64_t value = 0;
  for (std::size_t i = x.precision(); i-- > 0;) {
    if (value > (kMax - x.digit(i)) / g) return std::nullopt;
    value = value * g + x.digit(i);
  }
  return value;
}

}  // namespace gadic
