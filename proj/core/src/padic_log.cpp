#include "gadic/padic_log.hpp"

#include <algorithm>
#include <string>

#include "gadic/crt.hpp"
#include "gadic/errors.hpp"

namespace gadic::padic_log {

namespace {

std::uint64_t require_prime_base(const DigitExpansion& x) {
  const std::uint64_t p = x.base();
  if (!is_prime(p)) throw DomainError("p-adic logarithm needs a prime base, got " + std::to_string(p));
  return p;
}

void require_precision(const DigitExpansion& x, std::size_t precision) {
  if (precision == 0 || precision > x.precision()) {
    throw PrecisionError("requested precision " + std::to_string(precision) + " exceeds input precision " +
                         std::to_string(x.precision()));
  }
}

// floor(log_p k) for k >= 1.
std::size_t floor_log(std::uint64_t k, std::uint64_t p) {
  std::size_t e = 0;
  while (k >= p) {
    k /= p;
    ++e;
  }
  return e;
}

std::size_t valuation_of(std::uint64_t k, std::uint64_t p) {
  std::size_t v = 0;
  while (k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

}  // namespace

LogSeriesPlan plan_log_series(const DigitExpansion& x, std::size_t precision) {
  const auto p = require_prime_base(x);
  require_precision(x, precision);
  const std::size_t min_valuation = p == 2 ? 2 : 1;
  auto u = sub(truncate(x, precision), DigitExpansion::one(x.base(), precision));
  const auto v = digit_valuation(u);
  if (v && *v < min_valuation) {
    throw DomainError("log series diverges: v_p(x - 1) = " + std::to_string(*v) + " < " +
                      std::to_string(min_valuation));
  }
  // k*v_min - floor(log_p k) is nondecreasing in k; T is the last k where
  // it is still below N.
  std::size_t first_small = 1;
  while (first_small * min_valuation < precision + floor_log(first_small, p)) ++first_small;
  const std::size_t terms = first_small - 1;
  const std::size_t guard = floor_log(std::max<std::size_t>(terms, 1), p) + 1;
  return LogSeriesPlan{std::move(u), min_valuation, terms, guard};
}

DigitExpansion log_series(const DigitExpansion& x, std::size_t precision, std::size_t extra_terms) {
  const auto plan = plan_log_series(x, precision);
  const std::uint64_t p = x.base();
  const Base base = x.base();
  const std::size_t terms = plan.term_count + extra_terms;
  const std::size_t guard = floor_log(std::max<std::size_t>(terms, 1), p) + 1;
  const std::size_t working = precision + guard;

  // log(1+u) mod p^N depends only on u mod p^N, so zero high digits are as
  // good as any.
  const auto u = extend_with_zeros(plan.argument, working);
  auto sum = DigitExpansion::zero(base, precision);
  auto power = DigitExpansion::one(base, working);
  for (std::size_t k = 1; k <= terms; ++k) {
    power = mul(power, u);
    const auto v = valuation_of(k, p);
    std::uint64_t cofactor = k;
    for (std::size_t i = 0; i < v; ++i) cofactor /= p;
    // v_p(u^k) >= k > v, so the shift is exact.
    const auto term = div_exact_by_unit(truncate(shift_down(power, v), precision),
                                        static_cast<std::int64_t>(cofactor));
    sum = k % 2 == 1 ? add(sum, term) : sub(sum, term);
  }
  return sum;
}

DigitExpansion log_unit(const DigitExpansion& x, std::size_t precision) {
  const auto p = require_prime_base(x);
  require_precision(x, precision);
  if (!x.is_unit()) throw NotAUnit("log_unit: argument is not a unit");
  const auto known = truncate(x, precision);
  if (p != 2) {
    const auto series = log_series(pow(known, p - 1), precision);
    return div_exact_by_unit(series, static_cast<std::int64_t>(p - 1));
  }
  // x^2 mod 2^(N+1) depends only on x mod 2^N, and v_2(log x^2) >= 3 makes
  // the halving exact.
  const auto squared = pow(extend_with_zeros(known, precision + 1), 2);
  return shift_down(log_series(squared, precision + 1), 1);
}

DigitExpansion log_value(const DigitExpansion& x, std::size_t precision) {
  require_prime_base(x);
  const auto v = digit_valuation(x);
  if (!v) throw DomainError("logarithm of zero");
  const auto unit = *v == 0 ? x : shift_down(x, *v);
  return log_unit(unit, std::min(precision, unit.precision()));
}

DigitExpansion log_gadic(const DigitExpansion& x, std::size_t precision) {
  require_precision(x, precision);
  const auto factorization = crt::factor_base(x.base());
  std::vector<ComponentValue> logs;
  for (const auto& c : factorization.components) {
    const auto projected = crt::project(x, c);
    const std::size_t target = std::size_t{c.exponent} * precision;
    if (projected.value.is_zero()) {
      throw DomainError("logarithm undefined: component " + std::to_string(c.prime) + " is zero");
    }
    auto value = log_value(projected.value, target);
    if (value.precision() < target) {
      throw PrecisionError("component " + std::to_string(c.prime) + " has valuation " +
                           std::to_string(*digit_valuation(projected.value)) +
                           "; input needs more digits for a precision-" + std::to_string(precision) + " log");
    }
    logs.push_back({c, std::move(value)});
  }
  return crt::recombine(factorization, logs);
}

DigitExpansion log_gadic(std::int64_t n, Base g, std::size_t precision) {
  if (n == 0) throw DomainError("logarithm of zero");
  const std::uint64_t magnitude =
      n < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  std::size_t extra = 0;
  for (const auto& c : crt::factor_base(g).components) {
    const auto v = valuation_of(magnitude, c.prime);
    extra = std::max<std::size_t>(extra, (v + c.exponent - 1) / c.exponent);
  }
  return log_gadic(from_integer(n, g, precision + extra), precision);
}

}  // namespace gadic::padic_log
