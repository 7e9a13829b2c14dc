#include "gadic/polynomial.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "gadic/errors.hpp"

namespace gadic {

namespace {

class TermParser {
 public:
  explicit TermParser(std::string_view text) : text_(text) {}

  std::vector<std::int64_t> run() {
    std::vector<std::int64_t> coefficients;
    skip_space();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;

      std::int64_t coeff = 1;
      bool has_coeff = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = integer();
        has_coeff = true;
        skip_space();
        if (peek() == '*') {
          ++pos_;
          skip_space();
          if (peek() != 'x') fail("expected 'x' after '*'");
        }
      }
      std::size_t power = 0;
      if (peek() == 'x') {
        ++pos_;
        power = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          skip_space();
          const auto e = integer();
          if (e > 4096) fail("exponent too large");
          power = static_cast<std::size_t>(e);
        }
      } else if (!has_coeff) {
        fail("expected a coefficient or 'x'");
      }
      skip_space();
      if (coefficients.size() <= power) coefficients.resize(power + 1, 0);
      if (__builtin_add_overflow(coefficients[power], sign * coeff, &coefficients[power])) {
        fail("coefficient overflow");
      }
    }
    return coefficients;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::int64_t integer() {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), v);
    if (ec != std::errc{}) fail("bad integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(text_) + "': " + what + " at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::int64_t> parse_coefficient_list(std::string_view text) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    if (!token.empty() && token.front() == '+') token.remove_prefix(1);
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw ParseError("bad coefficient '" + std::string(token) + "' in '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

IntPolynomial IntPolynomial::parse(std::string_view text) {
  if (text.find('x') == std::string_view::npos) return IntPolynomial(parse_coefficient_list(text));
  return IntPolynomial(TermParser(text).run());
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<std::int64_t> out;
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    std::int64_t c = 0;
    if (__builtin_mul_overflow(coefficients_[i], static_cast<std::int64_t>(i), &c)) {
      throw DomainError("derivative coefficient overflow");
    }
    out.push_back(c);
  }
  return IntPolynomial(std::move(out));
}

std::uint64_t IntPolynomial::evaluate_mod(std::uint64_t x, std::uint64_t m) const noexcept {
  std::uint64_t acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = (mul_mod(acc, x, m) + reduce_mod(*it, m)) % m;
  }
  return acc;
}

DigitExpansion IntPolynomial::evaluate(const DigitExpansion& x) const {
  auto acc = DigitExpansion::zero(x.base(), x.precision());
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = add(mul(acc, x), from_integer(*it, x.base(), x.precision()));
  }
  return acc;
}

bool IntPolynomial::vanishes_mod(std::uint64_t m) const noexcept {
  for (const auto c : coefficients_) {
    if (reduce_mod(c, m) != 0) return false;
  }
  return true;
}

std::string IntPolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    const auto c = coefficients_[i];
    if (c == 0) continue;
    const std::uint64_t mag = c < 0 ? std::uint64_t{0} - static_cast<std::uint64_t>(c) : static_cast<std::uint64_t>(c);
    if (c < 0) out += '-';
    else if (!out.empty()) out += '+';
    if (mag != 1 || i == 0) out += std::to_string(mag);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

}  // namespace gadic
