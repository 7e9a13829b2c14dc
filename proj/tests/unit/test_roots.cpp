#include <gtest/gtest.h>

#include <set>

#include "gadic/crt.hpp"
#include "gadic/errors.hpp"
#include "gadic/notation.hpp"
#include "gadic/roots.hpp"
#include "oracle.hpp"

namespace gadic::roots {
namespace {

using notation::parse_dotted;
using notation::render_dotted;
using oracle::BigInt;

TEST(SqrtHensel, FiveInElevenAdics) {
  const auto six = sqrt_hensel(5, 11, 6);
  EXPECT_EQ(render_dotted(six.principal), "9.0.4.10.4.4");
  EXPECT_EQ(six.other, negate(six.principal));

  const auto eight = sqrt_hensel(5, 11, 8).principal;
  EXPECT_EQ(eight.digit(6), 5u);
  EXPECT_EQ(eight.digit(7), 8u);
  EXPECT_EQ(truncate(eight, 6), six.principal);
}

TEST(SqrtHensel, PerfectSquareAndErrors) {
  EXPECT_EQ(sqrt_hensel(4, 7, 5).principal, from_integer(2, Base(7), 5));
  EXPECT_THROW(sqrt_hensel(2, 5, 4), DomainError);
  EXPECT_THROW(sqrt_hensel(5, 2, 4), DomainError);
  EXPECT_THROW(sqrt_hensel(9, 9, 4), DomainError);
  EXPECT_THROW(sqrt_hensel(25, 5, 4), NotAUnit);
  EXPECT_THROW(sqrt_hensel(from_integer(4, Base(7), 3), 4), PrecisionError);
}

TEST(SqrtHensel, NonResidueMessage) {
  try {
    sqrt_hensel(2, 5, 4);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("non-residue"), std::string::npos);
  }
}

TEST(SqrtModPrime, MatchesScan) {
  for (const std::uint64_t p : {3u, 5u, 7u, 13u, 17u, 41u, 97u, 241u, 257u}) {
    for (std::uint64_t a = 0; a < p; ++a) {
      std::optional<std::uint64_t> scan;
      for (std::uint64_t r = 0; r < p && !scan; ++r) {
        if (r * r % p == a) scan = r;
      }
      EXPECT_EQ(sqrt_mod_prime(a, p), scan) << a << " mod " << p;
    }
  }
}

TEST(SqrtBinomial, GaussRoute) {
  const auto plan = plan_binomial_sqrt(5, 11, 6);
  EXPECT_EQ(plan.normalizer, 3);
  EXPECT_EQ(plan.argument, 4 * 11);
  EXPECT_EQ(plan.term_count, 6u);
  EXPECT_EQ(render_dotted(sqrt_binomial(5, 11, 6)), "9.0.4.10.4.4");
}

TEST(SqrtBinomial, SeriesPrefixForFourP) {
  // binom(1/2, k) * 4^k: 1, 2, -2, 4, -10, 28.
  const auto plan = plan_binomial_sqrt(5, 11, 6);
  const std::vector<std::int64_t> expected = {1, 2, -2, 4, -10, 28};
  for (std::size_t k = 0; k < expected.size(); ++k) {
    const auto& c = plan.coefficients[k];
    const auto catalan = static_cast<std::int64_t>(*to_uint64(c.catalan));
    const std::int64_t scaled = c.sign * catalan * (std::int64_t{1} << (2 * k)) / (std::int64_t{1} << c.two_exponent);
    EXPECT_EQ(scaled, expected[k]) << "k=" << k;
  }
  EXPECT_EQ(28 % 11, 6);
}

TEST(SqrtBinomial, Catalan) {
  const auto plan = plan_binomial_sqrt(2, 7, 12);
  const std::vector<std::uint64_t> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (std::size_t k = 1; k < 12; ++k) EXPECT_EQ(to_uint64(plan.coefficients[k].catalan), catalan[k - 1]);
}

TEST(SqrtBinomial, DegenerateSeries) {
  const auto plan = plan_binomial_sqrt(1, 7, 5);
  EXPECT_EQ(plan.normalizer, 1);
  EXPECT_EQ(plan.argument, 0);
  EXPECT_EQ(sqrt_binomial(1, 7, 5), DigitExpansion::one(Base(7), 5));
}

TEST(SqrtBinomial, AgreesWithHensel) {
  std::mt19937_64 rng(5);
  const std::vector<std::uint64_t> primes = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
  int checked = 0;
  while (checked < 200) {
    const auto p = primes[rng() % primes.size()];
    const std::int64_t a = 1 + static_cast<std::int64_t>(rng() % 1000);
    if (a % static_cast<std::int64_t>(p) == 0 || !sqrt_mod_prime(a % p, p)) continue;
    const std::size_t n = 1 + rng() % 20;
    const auto pair = sqrt_hensel(a, p, n);
    const auto series = sqrt_binomial(a, p, n);
    EXPECT_TRUE(series == pair.principal || series == pair.other) << a << " mod " << p << "^" << n;
    EXPECT_EQ(mul(series, series), from_integer(a, Base(p), n));
    ++checked;
  }
}

TEST(SqrtProperties, SquareBackAndBranchStability) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{3, 7, 11, 101, 241}[rng() % 5];
    const Base base(p);
    const std::size_t n = 2 + rng() % 30;
    auto r = oracle::random_unit(rng, base, n);
    const auto square = mul(r, r);
    const auto pair = sqrt_hensel(square, n);
    EXPECT_EQ(mul(pair.principal, pair.principal), square);
    EXPECT_EQ(mul(pair.other, pair.other), square);
    EXPECT_LE(pair.principal.digit(0), (p - 1) / 2);
    EXPECT_GE(pair.principal.digit(0), 1u);
    const std::size_t m = 1 + rng() % (n - 1);
    EXPECT_EQ(truncate(pair.principal, m), sqrt_hensel(square, m).principal);
  }
}

TEST(UnitSqrtsOfOne, TenAdic) {
  const auto roots = unit_sqrts_of_one(Base(10), 9);
  ASSERT_EQ(roots.size(), 4u);
  EXPECT_EQ(roots[0], DigitExpansion::one(Base(10), 9));
  EXPECT_EQ(roots[1], from_integer(-1, Base(10), 9));
  EXPECT_NE(std::find(roots.begin(), roots.end(), from_integer(425781249, Base(10), 9)), roots.end());
  for (const auto& r : roots) EXPECT_EQ(mul(r, r), DigitExpansion::one(Base(10), 9));
}

TEST(UnitSqrtsOfOne, LocalRing) {
  const auto roots = unit_sqrts_of_one(Base(11), 4);
  EXPECT_EQ(roots, (std::vector<DigitExpansion>{DigitExpansion::one(Base(11), 4), from_integer(-1, Base(11), 4)}));
}

TEST(UnitSqrtsOfOne, ResiduesOfLiftingRootsModThousand) {
  // Oracle: roots of x^2 = 1 mod 10^6 reduced mod 1000. (A scan mod 1000
  // alone also finds 251, 499, 501, 749, which do not lift.)
  std::set<std::uint64_t> scanned;
  for (std::uint64_t x = 0; x < 1'000'000; ++x) {
    if (x * x % 1'000'000 == 1) scanned.insert(x % 1000);
  }
  ASSERT_EQ(scanned, (std::set<std::uint64_t>{1, 249, 751, 999}));

  std::vector<std::uint64_t> got;
  for (const auto& r : unit_sqrts_of_one(Base(10), 3)) got.push_back(*to_uint64(r));
  EXPECT_EQ(got, (std::vector<std::uint64_t>{1, 999, 249, 751}));
}

TEST(GaussIteration, FirstTwoSteps) {
  const auto steps = gauss_sqrt1_trace(default_gauss_seed(), 5);
  ASSERT_EQ(steps.size(), 2u);
  EXPECT_EQ(steps[0].position, 3u);
  EXPECT_EQ(steps[0].window, 38u);
  EXPECT_EQ(steps[0].digit, 1u);
  EXPECT_EQ(to_uint64(steps[0].value), 1249u);
  EXPECT_EQ(steps[1].window, 44u);
  EXPECT_EQ(steps[1].digit, 8u);
  EXPECT_EQ(to_uint64(steps[1].value), 81249u);
}

TEST(GaussIteration, NineDigits) {
  EXPECT_EQ(notation::render_tail(gauss_sqrt1_iterate(default_gauss_seed(), 9)), "\xE2\x80\xA6" "425781249");
  EXPECT_EQ(gauss_sqrt1_iterate(default_gauss_seed(), 3), default_gauss_seed());
}

TEST(GaussIteration, AgreesWithCrtEpsilon) {
  const auto f = crt::factor_base(Base(10));
  for (const std::size_t n : {3u, 4u, 10u, 24u, 60u}) {
    const auto eps = crt::recombine(f, {{{2, 1}, DigitExpansion::one(Base(2), n)}, {{5, 1}, from_integer(-1, Base(5), n)}});
    EXPECT_EQ(gauss_sqrt1_iterate(default_gauss_seed(), n), eps) << n;
  }
}

TEST(GaussIteration, OtherSeeds) {
  // A one-digit seed exercises the window where the b^2 term still matters.
  const auto minus_one = gauss_sqrt1_iterate(from_integer(9, Base(10), 1), 12);
  EXPECT_EQ(mul(minus_one, minus_one), DigitExpansion::one(Base(10), 12));
  EXPECT_EQ(gauss_sqrt1_iterate(from_integer(49, Base(10), 2), 9), from_integer(425781249, Base(10), 9));
}

TEST(GaussIteration, SeedPreconditions) {
  EXPECT_THROW(gauss_sqrt1_trace(from_integer(251, Base(10), 3), 6), DomainError);
  EXPECT_THROW(gauss_sqrt1_trace(from_integer(239, Base(10), 3), 6), DomainError);
  EXPECT_THROW(gauss_sqrt1_trace(from_integer(249, Base(11), 3), 6), DomainError);
  EXPECT_THROW(gauss_sqrt1_trace(default_gauss_seed(), 2), PrecisionError);
}

TEST(QuadraticPeriods, ElevenAdic) {
  const auto periods = quadratic_periods(11, 6);
  EXPECT_EQ(render_dotted(periods.b), "6.5.3.0.3.3");

  // Oracle: 2a = -1 + sqrt5 mod 11^6 solved with the extended gcd.
  const BigInt m = oracle::big_pow(11, 6);
  const BigInt s = oracle::to_big(parse_dotted("9.0.4.10.4.4", Base(11)));
  const BigInt a = oracle::reduce((s - 1) * oracle::inverse(2, m), m);
  EXPECT_EQ(oracle::to_big(periods.a), a);
  EXPECT_EQ(render_dotted(periods.a), "4.5.7.10.7.7");
  EXPECT_NE(render_dotted(periods.a), "6.7.9.9.8.7");
  EXPECT_EQ(render_dotted(add(periods.a, periods.a)), "9.0.4.10.4.3");
}

TEST(QuadraticPeriods, Identities) {
  for (const auto& [p, n] : std::vector<std::pair<std::uint64_t, std::size_t>>{{11, 6}, {11, 20}, {19, 5}, {29, 12}, {31, 9}}) {
    const auto pp = quadratic_periods(p, n);
    const Base base(p);
    EXPECT_EQ(add(pp.a, pp.b), from_integer(-1, base, n));
    EXPECT_EQ(mul(pp.a, pp.b), from_integer(-1, base, n));
    const auto diff = sub(pp.a, pp.b);
    EXPECT_EQ(mul(diff, diff), from_integer(5, base, n));
    EXPECT_EQ(diff, sqrt_hensel(5, p, n).principal);
  }
}

TEST(QuadraticPeriods, Preconditions) {
  EXPECT_THROW(quadratic_periods(7, 4), DomainError);
  EXPECT_THROW(quadratic_periods(5, 4), DomainError);
  EXPECT_THROW(quadratic_periods(2, 4), DomainError);
}

}  // namespace
}  // namespace gadic::roots
