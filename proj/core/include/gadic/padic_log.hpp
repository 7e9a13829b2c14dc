#pragma once

#include <cstddef>
#include <cstdint>

#include "gadic/digit_expansion.hpp"

namespace gadic {

/// Parameters of the log(1+u) series for u = x - 1 in Z_p at precision N.
///
/// Terms beyond `term_count` have valuation >= N. Each term u^k/k is formed
/// at N + guard_digits digits so that the exact division by the p-part of k
/// still leaves N correct digits.
struct LogSeriesPlan {
  DigitExpansion argument;  // u, precision N
  std::size_t min_valuation;
  std::size_t term_count;
  std::size_t guard_digits;
};

namespace padic_log {

/// Throws DomainError if v_p(x - 1) < 1 (p odd) or < 2 (p = 2).
LogSeriesPlan plan_log_series(const DigitExpansion& x, std::size_t precision);

/// sum_{k=1}^{T} (-1)^(k+1) u^k / k with u = x - 1; x.base() must be prime.
/// `extra_terms` extends T (the result must not change).
DigitExpansion log_series(const DigitExpansion& x, std::size_t precision, std::size_t extra_terms = 0);

/// log x = log(x^m) / m with m = p - 1 (odd p) or 2 (p = 2), for a unit x.
DigitExpansion log_unit(const DigitExpansion& x, std::size_t precision);

/// Iwasawa branch log p = 0: for x = p^v u returns log u, at precision
/// min(N, precision(x) - v).
DigitExpansion log_value(const DigitExpansion& x, std::size_t precision);

/// The g-adic logarithm: log_value on every prime-power component, then
/// recombined. Throws PrecisionError if some component valuation leaves
/// fewer than e*N digits of the unit part.
DigitExpansion log_gadic(const DigitExpansion& x, std::size_t precision);

/// log_gadic of an ordinary nonzero integer; the integer is embedded with
/// enough extra digits to absorb its valuation, so the result has the full
/// precision N.
DigitExpansion log_gadic(std::int64_t n, Base g, std::size_t precision);

}  // namespace padic_log
}  // namespace gadic
