#include "gadic/roots.hpp"

#include <algorithm>
#include <string>

#include "gadic/crt.hpp"
#include "gadic/errors.hpp"

namespace gadic::roots {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p == 2) throw DomainError("square roots in Z_2 are not supported");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

bool is_residue(std::uint64_t a, std::uint64_t p) { return pow_mod(a % p, (p - 1) / 2, p) == 1; }

// An integer kept as unit * p^valuation, so that exact divisions by
// multiples of p stay inside Z/p^N.
struct ScaledUnit {
  DigitExpansion unit;
  std::size_t valuation;

  void multiply(std::uint64_t m, std::uint64_t p) {
    while (m % p == 0) {
      m /= p;
      ++valuation;
    }
    unit = mul_small(unit, static_cast<std::int64_t>(m));
  }
  void divide(std::uint64_t m, std::uint64_t p) {
    while (m % p == 0) {
      m /= p;
      --valuation;
    }
    unit = div_exact_by_unit(unit, static_cast<std::int64_t>(m));
  }
  DigitExpansion value() const {
    if (valuation >= unit.precision()) return DigitExpansion::zero(unit.base(), unit.precision());
    return shift_up(unit, valuation);
  }
};

}  // namespace

std::optional<std::uint64_t> sqrt_mod_prime(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) return 0;
  if (p == 2) return a;
  if (!is_residue(a, p)) return std::nullopt;

  std::uint64_t q = p - 1;
  unsigned s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::uint64_t z = 2;
  while (is_residue(z, p)) ++z;

  std::uint64_t m = s;
  std::uint64_t c = pow_mod(z, q, p);
  std::uint64_t t = pow_mod(a, q, p);
  std::uint64_t r = pow_mod(a, (q + 1) / 2, p);
  while (t != 1) {
    std::uint64_t i = 0;
    for (std::uint64_t t2 = t; t2 != 1; t2 = mul_mod(t2, t2, p)) ++i;
    std::uint64_t b = c;
    for (std::uint64_t j = 0; j + 1 < m - i; ++j) b = mul_mod(b, b, p);
    m = i;
    c = mul_mod(b, b, p);
    t = mul_mod(t, c, p);
    r = mul_mod(r, b, p);
  }
  return std::min(r, p - r);
}

SqrtPair sqrt_hensel(const DigitExpansion& a, std::size_t precision) {
  const std::uint64_t p = a.base();
  require_odd_prime(p);
  if (precision == 0 || precision > a.precision()) {
    throw PrecisionError("sqrt_hensel: requested precision exceeds the input precision");
  }
  if (!a.is_unit()) throw NotAUnit("sqrt_hensel: argument must be a unit");
  const auto r0 = sqrt_mod_prime(a.digit(0), p);
  if (!r0) {
    throw DomainError("non-residue: " + std::to_string(a.digit(0)) + " is not a square mod " + std::to_string(p));
  }

  const auto target = truncate(a, precision);
  auto x = from_integer(static_cast<std::int64_t>(*r0), a.base(), 1);
  for (std::size_t k = 1; k < precision;) {
    k = std::min(2 * k, precision);
    x = extend_with_zeros(x, k);
    const auto residual = sub(mul(x, x), truncate(target, k));
    x = sub(x, mul(residual, invert_unit(mul_small(x, 2))));
  }
  auto y = negate(x);
  if (x.digit(0) > (p - 1) / 2) std::swap(x, y);
  return SqrtPair{std::move(x), std::move(y)};
}

SqrtPair sqrt_hensel(std::int64_t a, std::uint64_t p, std::size_t precision) {
  require_odd_prime(p);
  return sqrt_hensel(from_integer(a, Base(p), precision), precision);
}

BinomialSeriesPlan plan_binomial_sqrt(std::int64_t a, std::uint64_t p, std::size_t precision) {
  require_odd_prime(p);
  if (precision == 0) throw PrecisionError("precision must be at least 1");
  if (a <= 0) throw DomainError("sqrt_binomial expects a positive integer");
  const auto a_mod = reduce_mod(a, p);
  if (a_mod == 0) throw NotAUnit("sqrt_binomial: argument must be a unit");
  if (!is_residue(a_mod, p)) {
    throw DomainError("non-residue: " + std::to_string(a) + " is not a square mod " + std::to_string(p));
  }

  std::uint64_t n = 1;
  while (mul_mod(a_mod, mul_mod(n, n, p), p) != 1) ++n;
  std::int64_t an2 = 0;
  if (__builtin_mul_overflow(a, static_cast<std::int64_t>(n * n), &an2)) {
    throw DomainError("sqrt_binomial: a*n^2 overflows");
  }

  const Base base(p);
  BinomialSeriesPlan plan{static_cast<std::int64_t>(n), an2 - 1, precision, {}};
  plan.coefficients.push_back({1, DigitExpansion::one(base, precision), 0});
  // catalan(k-1) built incrementally: C_j = C_{j-1} * 2(2j-1) / (j+1).
  ScaledUnit catalan{DigitExpansion::one(base, precision), 0};
  for (std::size_t k = 1; k < plan.term_count; ++k) {
    const std::size_t j = k - 1;
    if (j > 0) {
      catalan.multiply(2 * (2 * j - 1), p);
      catalan.divide(j + 1, p);
    }
    plan.coefficients.push_back({k % 2 == 1 ? 1 : -1, catalan.value(), static_cast<unsigned>(2 * k - 1)});
  }
  return plan;
}

DigitExpansion sqrt_binomial(std::int64_t a, std::uint64_t p, std::size_t precision) {
  const auto plan = plan_binomial_sqrt(a, p, precision);
  const Base base(p);
  const auto x = from_integer(plan.argument, base, precision);
  const auto half = invert_unit(from_integer(2, base, precision));

  auto sum = DigitExpansion::zero(base, precision);
  auto x_power = DigitExpansion::one(base, precision);
  auto half_power = DigitExpansion::one(base, precision);
  unsigned half_exponent = 0;
  for (const auto& c : plan.coefficients) {
    for (; half_exponent < c.two_exponent; ++half_exponent) half_power = mul(half_power, half);
    auto term = mul(c.catalan, mul(x_power, half_power));
    sum = c.sign > 0 ? add(sum, term) : sub(sum, term);
    x_power = mul(x_power, x);
  }
  return div_exact_by_unit(sum, plan.normalizer);
}

std::vector<DigitExpansion> unit_sqrts_of_one(Base g, std::size_t precision) {
  const auto one = DigitExpansion::one(g, precision);
  const auto minus_one = negate(one);
  std::vector<DigitExpansion> rest;
  for (const auto& e : crt::idempotents(g, precision)) {
    auto s = sub(mul_small(e, 2), one);
    if (s == one || s == minus_one) continue;
    if (std::find(rest.begin(), rest.end(), s) == rest.end()) rest.push_back(std::move(s));
  }
  std::sort(rest.begin(), rest.end(), [](const auto& x, const auto& y) { return compare_residue(x, y) < 0; });

  std::vector<DigitExpansion> out{one};
  if (minus_one != one) out.push_back(minus_one);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

DigitExpansion default_gauss_seed() { return from_integer(249, Base(10), 3); }

std::vector<GaussStep> gauss_sqrt1_trace(const DigitExpansion& seed, std::size_t precision) {
  if (seed.base().value() != 10) throw DomainError("the digit iteration runs in base 10");
  if (seed.digit(0) != 9) throw DomainError("seed must end in 9");
  const auto start = seed.precision();
  if (precision < start) throw PrecisionError("target precision is below the seed precision");
  if (!sub(DigitExpansion::one(seed.base(), start), mul(seed, seed)).is_zero()) {
    throw DomainError("seed does not square to 1 at its precision");
  }

  // Two extra digits hold the window read at the last step.
  const std::size_t width = precision + 2;
  auto value = extend_with_zeros(seed, width);
  auto remainder = sub(DigitExpansion::one(seed.base(), width), mul(value, value));

  std::vector<GaussStep> steps;
  for (std::size_t n = start; n < precision; ++n) {
    const unsigned r = remainder.digit(n) + 10 * remainder.digit(n + 1);
    if (r % 2 != 0) throw DomainError("odd window r = " + std::to_string(r) + "; seed is not on the 2-adic branch +1");
    const unsigned b = (10 - (r / 2) % 10) % 10;

    // 1 - (a + 10^n b)^2 = (1 - a^2) - 2ab 10^n - b^2 10^(2n). The last term
    // vanishes mod 10^(n+2) once n >= 2, so b ignores it; the remainder
    // still carries it exactly for the later windows.
    remainder = sub(remainder, shift_up(mul_small(value, 2 * b), n));
    if (2 * n < width) remainder = sub(remainder, shift_up(from_integer(b * b, seed.base(), width), 2 * n));
    value = add(value, shift_up(from_integer(b, seed.base(), width), n));

    steps.push_back({n, r, b, truncate(value, n + 1)});
  }
  return steps;
}

DigitExpansion gauss_sqrt1_iterate(const DigitExpansion& seed, std::size_t precision) {
  const auto steps = gauss_sqrt1_trace(seed, precision);
  return steps.empty() ? truncate(seed, precision) : steps.back().value;
}

PeriodPair quadratic_periods(std::uint64_t p, std::size_t precision) {
  require_odd_prime(p);
  if (p == 5) throw DomainError("5 is not a unit in Z_5");
  if (!is_residue(5, p)) throw DomainError("non-residue: 5 is not a square mod " + std::to_string(p));
  const Base base(p);
  const auto s = sqrt_hensel(5, p, precision).principal;
  const auto one = DigitExpansion::one(base, precision);
  const auto half = invert_unit(from_integer(2, base, precision));
  return PeriodPair{mul(sub(s, one), half), mul(negate(add(one, s)), half)};
}

}  // namespace gadic::roots
