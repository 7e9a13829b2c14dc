#include "gadic/hensel.hpp"

#include <algorithm>
#include <string>

#include "gadic/crt.hpp"
#include "gadic/errors.hpp"

namespace gadic::hensel {

std::vector<std::uint64_t> roots_mod_p(const IntPolynomial& f, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (f.vanishes_mod(p)) {
    throw DomainError("polynomial vanishes identically mod " + std::to_string(p));
  }
  std::vector<std::uint64_t> out;
  for (std::uint64_t r = 0; r < p; ++r) {
    if (f.evaluate_mod(r, p) == 0) out.push_back(r);
  }
  return out;
}

LiftedRoot hensel_lift(const IntPolynomial& f, std::uint64_t r0, std::uint64_t p, std::size_t precision) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (precision == 0) throw PrecisionError("precision must be at least 1");
  r0 %= p;
  if (f.evaluate_mod(r0, p) != 0) {
    throw DomainError(std::to_string(r0) + " is not a root of " + f.to_string() + " mod " + std::to_string(p));
  }
  const auto df = f.derivative();
  if (df.evaluate_mod(r0, p) == 0) {
    throw HenselHypothesisViolated("Hensel hypothesis violated: " + std::to_string(r0) + " is a multiple root of " +
                                   f.to_string() + " mod " + std::to_string(p));
  }

  const Base base(p);
  auto x = from_integer(static_cast<std::int64_t>(r0), base, 1);
  for (std::size_t k = 1; k < precision;) {
    k = std::min(2 * k, precision);
    x = extend_with_zeros(x, k);
    x = sub(x, mul(f.evaluate(x), invert_unit(df.evaluate(x))));
  }
  return LiftedRoot{std::move(x), {r0}};
}

std::vector<LiftedRoot> gadic_roots(const IntPolynomial& f, Base g, std::size_t precision) {
  const auto factorization = crt::factor_base(g);

  std::vector<std::vector<LiftedRoot>> per_component;
  for (const auto& c : factorization.components) {
    std::vector<LiftedRoot> lifted;
    for (const auto r : roots_mod_p(f, c.prime)) {
      lifted.push_back(hensel_lift(f, r, c.prime, std::size_t{c.exponent} * precision));
    }
    per_component.push_back(std::move(lifted));
  }

  std::vector<LiftedRoot> out;
  std::vector<std::size_t> choice(per_component.size(), 0);
  if (std::any_of(per_component.begin(), per_component.end(), [](const auto& v) { return v.empty(); })) {
    return out;
  }
  while (true) {
    std::vector<ComponentValue> values;
    std::vector<std::uint64_t> seeds;
    for (std::size_t i = 0; i < choice.size(); ++i) {
      const auto& lr = per_component[i][choice[i]];
      values.push_back({factorization.components[i], lr.root});
      seeds.push_back(lr.seeds.front());
    }
    out.push_back({crt::recombine(factorization, values), std::move(seeds)});

    std::size_t i = 0;
    for (; i < choice.size(); ++i) {
      if (++choice[i] < per_component[i].size()) break;
      choice[i] = 0;
    }
    if (i == choice.size()) break;
  }
  std::sort(out.begin(), out.end(),
            [](const LiftedRoot& a, const LiftedRoot& b) { return compare_residue(a.root, b.root) < 0; });
  return out;
}

}  // namespace gadic::hensel
