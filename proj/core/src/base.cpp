#include "gadic/base.hpp"

#include <string>

#include "gadic/errors.hpp"

namespace gadic {

namespace {
__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;
}  // namespace

Base::Base(std::uint64_t g) : g_(static_cast<Digit>(g)) {
  if (g < 2 || g > kMax) {
    throw DomainError("base must lie in [2, 2^31-1], got " + std::to_string(g));
  }
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) noexcept {
  while (b != 0) {
    const auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) noexcept {
  if (m == 1) return 0;
  i128 old_r = static_cast<i128>(a % m), r = m;
  i128 old_s = 1, s = 0;
  while (r != 0) {
    const i128 q = old_r / r;
    i128 t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) return 0;
  old_s %= static_cast<i128>(m);
  if (old_s < 0) old_s += m;
  return static_cast<std::uint64_t>(old_s);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e != 0) {
    if (e & 1) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::uint64_t reduce_mod(std::int64_t a, std::uint64_t m) noexcept {
  const i128 r = static_cast<i128>(a) % static_cast<i128>(m);
  return static_cast<std::uint64_t>(r < 0 ? r + m : r);
}

}  // namespace gadic
