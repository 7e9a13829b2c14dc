// One line per acceptance criterion; exit status is nonzero if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "gadic/gadic.hpp"
#include "oracle.hpp"

namespace {

using namespace gadic;
using oracle::BigInt;
using notation::parse_dotted;
using notation::render_dotted;
using notation::render_tail;

// Collects the first few mismatches so a FAIL line says what went wrong.
class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++count_;
    if (!ok && failures_.size() < 3) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  template <typename A, typename B>
  void equal(const A& a, const B& b, const std::string& what) {
    expect(a == b, what);
  }
  bool ok() const { return failed_ == 0; }
  std::string detail() const {
    std::ostringstream s;
    s << count_ << " checks";
    if (failed_) {
      s << ", " << failed_ << " failed:";
      for (const auto& f : failures_) s << " [" << f << "]";
    }
    return s.str();
  }

 private:
  std::size_t count_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

const IntPolynomial kQuintic = IntPolynomial::parse("x^5-20x^4-86x^3-98x^2+80x+3");

void lift_table(Check& c) {
  const std::array<std::array<std::int64_t, 3>, 5> rows = {
      {{2, 191, 160}, {3, 238, 16}, {4, 192, 221}, {5, 65, 17}, {6, 37, 65}}};
  for (const auto& row : rows) {
    const auto lifted = hensel::hensel_lift(kQuintic, static_cast<std::uint64_t>(row[0]), 241, 3).root;
    const auto expected = from_integer(row[0] + row[1] * 241 + row[2] * 241 * 241, Base(241), 3);
    c.equal(lifted, expected, "x = " + std::to_string(row[0]) + " + ...");
    c.expect(kQuintic.evaluate(lifted).is_zero(), "f(x) = 0 mod 241^3");
  }
}

void sqrt5(Check& c) {
  c.equal(render_dotted(roots::sqrt_hensel(5, 11, 6).principal), std::string("9.0.4.10.4.4"), "sqrt5 N=6");
  const auto eight = roots::sqrt_hensel(5, 11, 8).principal;
  c.equal(sub(eight, extend_with_zeros(roots::sqrt_hensel(5, 11, 6).principal, 8)),
          from_integer(5 * 1771561LL + 8 * 19487171LL, Base(11), 8), "5*11^6 + 8*11^7");
  c.equal(roots::sqrt_binomial(5, 11, 6), roots::sqrt_hensel(5, 11, 6).principal, "(5,11) binomial");

  std::mt19937_64 rng(2024);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 3; p < 100; p += 2) {
    if (is_prime(p)) primes.push_back(p);
  }
  int pairs = 0;
  while (pairs < 50) {
    const auto p = primes[rng() % primes.size()];
    const auto a = static_cast<std::int64_t>(1 + rng() % (p - 1));
    if (!roots::sqrt_mod_prime(static_cast<std::uint64_t>(a), p)) continue;
    const std::size_t n = 1 + rng() % 20;
    // The series fixes the branch congruent to 1/n mod p, which need not be
    // the principal one; it must match one of sqrt_hensel's two roots exactly.
    const auto series = roots::sqrt_binomial(a, p, n);
    const auto pair = roots::sqrt_hensel(a, p, n);
    c.expect(series == pair.principal || series == pair.other,
             "a=" + std::to_string(a) + " p=" + std::to_string(p) + " N=" + std::to_string(n));
    ++pairs;
  }
}

void figure(Check& c) {
  const Base b(11);
  c.equal(sub(parse_dotted("6.0.4.0.2.1", b), parse_dotted("0.10.0.2.0.0", b)), parse_dotted("5.1.3.9.2.1", b),
          "subtraction");
  c.equal(div_exact_by_unit(parse_dotted("5.1.3.9.2.1", b), 3), parse_dotted("9.0.4.10.4.4", b), "division by 3");
}

void periods(Check& c) {
  const auto p6 = roots::quadratic_periods(11, 6);
  c.equal(render_dotted(p6.b), std::string("6.5.3.0.3.3"), "b");
  const BigInt m = oracle::big_pow(11, 6);
  const BigInt s = oracle::to_big(parse_dotted("9.0.4.10.4.4", Base(11)));
  c.equal(oracle::to_big(p6.a), oracle::reduce((s - 1) * oracle::inverse(2, m), m), "a by ext-gcd");
  for (const std::size_t n : {6u, 20u}) {
    const auto p = roots::quadratic_periods(11, n);
    const Base b(11);
    c.equal(add(p.a, p.b), from_integer(-1, b, n), "a+b=-1");
    c.equal(mul(p.a, p.b), from_integer(-1, b, n), "ab=-1");
    const auto d = sub(p.a, p.b);
    c.equal(mul(d, d), from_integer(5, b, n), "(a-b)^2=5");
  }
}

void epsilon(Check& c) {
  const auto idem = crt::idempotents(Base(10), 12);
  c.expect(std::find(idem.begin(), idem.end(), from_integer(918212890625, Base(10), 12)) != idem.end(),
           "918212890625 idempotent");
  const auto eps = crt::recombine(crt::factor_base(Base(10)), {{{2, 1}, DigitExpansion::one(Base(2), 100)},
                                                               {{5, 1}, from_integer(-1, Base(5), 100)}});
  const auto tail = render_tail(eps);
  c.expect(tail.ends_with("954784512519836425781249"), "24-digit tail");
  c.expect(tail.ends_with("2001114846846461792218008213239954784512519836425781249"), "55-digit tail");
  c.equal(render_tail(roots::gauss_sqrt1_iterate(roots::default_gauss_seed(), 9)),
          std::string("\xE2\x80\xA6" "425781249"), "iteration to 9 digits");
  const auto steps = roots::gauss_sqrt1_trace(roots::default_gauss_seed(), 5);
  c.expect(steps.size() == 2 && steps[0].window == 38 && steps[0].digit == 1 && steps[1].window == 44 &&
               steps[1].digit == 8,
           "steps r=38,b=1 then r=44,b=8");
}

void logs(Check& c) {
  const auto l31 = padic_log::log_gadic(31, Base(10), 10);
  c.equal(truncate(l31, 7), from_integer(666080, Base(10), 7), "log 31 mod 10^7");
  c.equal(l31, from_integer(3280666080, Base(10), 10), "log 31 mod 10^10");
  c.expect(render_tail(padic_log::log_gadic(2, Base(10), 9)).ends_with("863080960"), "log 2 tail");
  c.equal(to_uint64(padic_log::log_value(from_integer(2, Base(5), 7), 7)), std::optional<std::uint64_t>(34085),
          "log_5 2 mod 5^7");
  c.equal(mul_small(padic_log::log_gadic(3, Base(10), 10), 4), padic_log::log_gadic(81, Base(10), 10),
          "4 log 3 = log 81");
  c.equal(notation::render_integer(from_integer(21830960, Base(5), 7)), std::string("34085"), "21830960 mod 5^7");
  c.equal(notation::render_integer(from_integer(21830960, Base(2), 7)), std::string("48"), "21830960 mod 2^7");
}

void properties(Check& c) {
  std::mt19937_64 rng(7);
  const std::array<unsigned, 6> bases = {2, 3, 10, 11, 12, 241};

  // Ring laws against big-integer residues.
  for (int i = 0; i < 10000; ++i) {
    const Base base(bases[static_cast<std::size_t>(i) % bases.size()]);
    const std::size_t n = 1 + rng() % 24;
    const auto x = oracle::random_expansion(rng, base, n);
    const auto y = oracle::random_expansion(rng, base, n);
    const BigInt m = oracle::modulus(x), bx = oracle::to_big(x), by = oracle::to_big(y);
    c.expect(oracle::to_big(add(x, y)) == oracle::reduce(bx + by, m) &&
                 oracle::to_big(sub(x, y)) == oracle::reduce(bx - by, m) &&
                 oracle::to_big(mul(x, y)) == oracle::reduce(bx * by, m),
             "ring law base " + std::to_string(base.value()));
  }

  // CRT round trip.
  for (const unsigned g : {6u, 10u, 12u, 30u, 210u, 241u}) {
    for (int i = 0; i < 50; ++i) {
      const auto x = oracle::random_expansion(rng, Base(g), 1 + rng() % 20);
      c.equal(crt::recombine(crt::factor_base(Base(g)), crt::project_all(x)), x, "crt round trip");
    }
  }

  // Hensel roots against an exhaustive scan, g^N <= 10^6.
  const std::vector<std::tuple<IntPolynomial, unsigned, std::size_t>> scans = {
      {IntPolynomial({0, -1, 1}), 10, 6}, {IntPolynomial({-2, 0, 1}), 7, 7}, {IntPolynomial({6, -5, 1}), 30, 4},
      {kQuintic, 241, 2},                 {IntPolynomial({3, 0, 1}), 13, 5}, {IntPolynomial({0, -1, 0, 1}), 15, 5}};
  for (const auto& [f, g, n] : scans) {
    std::uint64_t modulus = 1;
    for (std::size_t i = 0; i < n; ++i) modulus *= g;
    std::set<std::uint64_t> scanned, found;
    for (std::uint64_t x = 0; x < modulus; ++x) {
      if (f.evaluate_mod(x, modulus) == 0) scanned.insert(x);
    }
    for (const auto& r : hensel::gadic_roots(f, Base(g), n)) found.insert(*to_uint64(r.root));
    c.equal(found, scanned, "scan " + f.to_string() + " base " + std::to_string(g));
  }

  // Square roots square back; truncation coherence for lift, sqrt and log.
  for (int i = 0; i < 300; ++i) {
    const std::uint64_t p = std::array<std::uint64_t, 5>{3, 7, 11, 101, 241}[rng() % 5];
    const std::size_t n = 2 + rng() % 30;
    const auto r = oracle::random_unit(rng, Base(p), n);
    const auto sq = mul(r, r);
    const auto pair = roots::sqrt_hensel(sq, n);
    c.expect(mul(pair.principal, pair.principal) == sq && mul(pair.other, pair.other) == sq, "sqrt squares back");
    const std::size_t m = 1 + rng() % (n - 1);
    c.equal(truncate(pair.principal, m), roots::sqrt_hensel(truncate(sq, m), m).principal, "sqrt coherence");
  }
  for (std::uint64_t seed = 2; seed <= 6; ++seed) {
    const auto deep = hensel::hensel_lift(kQuintic, seed, 241, 10).root;
    for (std::size_t m = 1; m < 10; ++m) {
      c.equal(truncate(deep, m), hensel::hensel_lift(kQuintic, seed, 241, m).root, "lift coherence");
    }
  }

  // Log homomorphism on 10^3 unit pairs; log truncation coherence.
  for (int i = 0; i < 1000; ++i) {
    const Base base(bases[static_cast<std::size_t>(i) % bases.size()]);
    const std::size_t n = 2 + rng() % 10;
    const auto x = oracle::random_unit(rng, base, n);
    const auto y = oracle::random_unit(rng, base, n);
    const auto lx = padic_log::log_gadic(x, n);
    c.equal(padic_log::log_gadic(mul(x, y), n), add(lx, padic_log::log_gadic(y, n)), "log homomorphism");
    const std::size_t m = 1 + rng() % (n - 1);
    c.equal(truncate(lx, m), padic_log::log_gadic(truncate(x, m), m), "log coherence");
  }
}

std::string run_capture(const std::string& command, int& status) {
  std::string out;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) {
    status = -1;
    return out;
  }
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

void notebook(Check& c, const std::string& exe) {
  int first_status = 0, second_status = 0;
  const auto first = run_capture("'" + exe + "' notebook", first_status);
  const auto second = run_capture("'" + exe + "' notebook", second_status);
  c.equal(first_status, 0, "first run exits 0");
  c.equal(second_status, 0, "second run exits 0");
  c.expect(!first.empty() && first == second, "byte-identical output");
  c.expect(first.find("[FAIL]") == std::string::npos, "no FAIL entries");
  c.expect(first.find(" / 0 fail") != std::string::npos, "summary reports 0 fail");
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: gadic_acceptance <path-to-gadic>\n";
    return 64;
  }
  const std::string exe = argv[1];
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"lift table mod 241^3", lift_table},
      {"sqrt(5) in Z_11 and binomial agreement", sqrt5},
      {"subtraction and division figure", figure},
      {"quadratic periods", periods},
      {"idempotent, eps and the digit iteration", epsilon},
      {"logarithms and integer congruences", logs},
      {"property suites", properties},
      {"notebook exit status and stability", [&](Check& c) { notebook(c, exe); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first << " ("
              << c.detail() << ")\n";
    if (!c.ok()) ++failed;
  }
  std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size()
            << " acceptance criteria pass\n";
  return failed == 0 ? 0 : 1;
}
