#include <benchmark/benchmark.h>

#include <random>

#include "gadic/gadic.hpp"

namespace {

using namespace gadic;

DigitExpansion random_unit(std::mt19937_64& rng, Base base, std::size_t n) {
  std::vector<Digit> digits(n);
  for (auto& d : digits) d = static_cast<Digit>(rng() % base.value());
  do {
    digits[0] = static_cast<Digit>(rng() % base.value());
  } while (gcd(digits[0], base.value()) != 1);
  return DigitExpansion(base, std::move(digits));
}

void BM_Mul(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto x = random_unit(rng, Base(10), n), y = random_unit(rng, Base(10), n);
  for (auto _ : state) benchmark::DoNotOptimize(mul(x, y));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Mul)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_InvertUnit(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto x = random_unit(rng, Base(241), static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(invert_unit(x));
}
BENCHMARK(BM_InvertUnit)->RangeMultiplier(4)->Range(16, 1024);

void BM_HenselLift(benchmark::State& state) {
  const auto f = IntPolynomial::parse("x^5-20x^4-86x^3-98x^2+80x+3");
  for (auto _ : state) benchmark::DoNotOptimize(hensel::hensel_lift(f, 2, 241, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_HenselLift)->RangeMultiplier(4)->Range(3, 768);

void BM_SqrtHensel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(roots::sqrt_hensel(5, 11, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SqrtHensel)->RangeMultiplier(4)->Range(6, 1536);

void BM_SqrtBinomial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(roots::sqrt_binomial(5, 11, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_SqrtBinomial)->RangeMultiplier(4)->Range(6, 384);

void BM_LogGadic(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(padic_log::log_gadic(31, Base(10), static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_LogGadic)->RangeMultiplier(2)->Range(10, 160);

void BM_Recombine(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = crt::factor_base(Base(10));
  const std::vector<ComponentValue> values = {{{2, 1}, DigitExpansion::one(Base(2), n)},
                                              {{5, 1}, from_integer(-1, Base(5), n)}};
  for (auto _ : state) benchmark::DoNotOptimize(crt::recombine(f, values));
}
BENCHMARK(BM_Recombine)->RangeMultiplier(4)->Range(25, 1600);

}  // namespace

BENCHMARK_MAIN();
