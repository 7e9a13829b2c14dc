#include "gadic/crt.hpp"

#include <algorithm>
#include <string>

#include "gadic/errors.hpp"

namespace gadic::crt {

namespace {

std::size_t composite_precision(const BaseFactorization& factorization,
                                const std::vector<ComponentValue>& values) {
  if (values.size() != factorization.components.size()) {
    throw DomainError("recombine: expected " + std::to_string(factorization.components.size()) +
                      " components, got " + std::to_string(values.size()));
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& want = factorization.components[i];
    const auto& have = values[i];
    if (have.component != want || have.value.base().value() != want.prime) {
      throw DomainError("recombine: component " + std::to_string(i) + " is not " +
                        std::to_string(want.prime) + "^" + std::to_string(want.exponent));
    }
    const auto prec = have.value.precision();
    if (prec % want.exponent != 0 || (n != 0 && prec / want.exponent != n)) {
      throw PrecisionError("recombine: component precisions do not share a common N");
    }
    n = prec / want.exponent;
  }
  return n;
}

}  // namespace

BaseFactorization factor_base(Base g) {
  BaseFactorization out{g, {}};
  std::uint32_t rest = g.value();
  for (std::uint32_t p = 2; std::uint64_t{p} * p <= rest; ++p) {
    if (rest % p != 0) continue;
    std::uint32_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    out.components.push_back({p, e});
  }
  if (rest > 1) out.components.push_back({rest, 1});
  return out;
}

ComponentValue project(const DigitExpansion& x, PrimePower component) {
  const auto factorization = factor_base(x.base());
  const auto& comps = factorization.components;
  if (std::find(comps.begin(), comps.end(), component) == comps.end()) {
    throw DomainError(std::to_string(component.prime) + "^" + std::to_string(component.exponent) +
                      " is not a prime-power component of base " + std::to_string(x.base().value()));
  }
  return ComponentValue{component,
                        rebase(x, Base(component.prime), std::size_t{component.exponent} * x.precision())};
}

std::vector<ComponentValue> project_all(const DigitExpansion& x) {
  std::vector<ComponentValue> out;
  for (const auto& c : factor_base(x.base()).components) out.push_back(project(x, c));
  return out;
}

DigitExpansion recombine(const BaseFactorization& factorization,
                         const std::vector<ComponentValue>& values) {
  const std::size_t n = composite_precision(factorization, values);
  const Base g = factorization.base;

  auto solution = DigitExpansion::zero(g, n);
  auto modulus = DigitExpansion::one(g, n);
  for (const auto& [component, target] : values) {
    const Base p(component.prime);
    const std::size_t prec = target.precision();
    // The partial solution and modulus are exact integers below g^N, so
    // their residues mod p^(eN) are read off by re-expansion.
    const auto local_solution = rebase(solution, p, prec);
    const auto local_modulus = rebase(modulus, p, prec);
    const auto t = mul(sub(target, local_solution), invert_unit(local_modulus));
    solution = add(solution, mul(modulus, rebase(t, g, n)));
    modulus = mul(modulus, pow(from_integer(component.prime, g, n), prec));
  }
  return solution;
}

DigitExpansion minimal_idempotent(const BaseFactorization& factorization, std::size_t index,
                                  std::size_t precision) {
  std::vector<ComponentValue> values;
  for (std::size_t i = 0; i < factorization.components.size(); ++i) {
    const auto c = factorization.components[i];
    const Base p(c.prime);
    const std::size_t prec = std::size_t{c.exponent} * precision;
    values.push_back({c, i == index ? DigitExpansion::one(p, prec) : DigitExpansion::zero(p, prec)});
  }
  return recombine(factorization, values);
}

std::vector<DigitExpansion> idempotents(Base g, std::size_t precision) {
  const auto factorization = factor_base(g);
  const std::size_t omega = factorization.components.size();
  std::vector<DigitExpansion> minimal;
  for (std::size_t i = 0; i < omega; ++i) minimal.push_back(minimal_idempotent(factorization, i, precision));

  std::vector<DigitExpansion> out;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << omega); ++subset) {
    auto e = DigitExpansion::zero(g, precision);
    for (std::size_t i = 0; i < omega; ++i) {
      if (subset >> i & 1) e = add(e, minimal[i]);
    }
    out.push_back(std::move(e));
  }
  // 0 and 1 are the two smallest residues, so ascending order puts them first.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return compare_residue(a, b) < 0; });
  return out;
}

}  // namespace gadic::crt
