#include "gadic/notation.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include "gadic/errors.hpp"

namespace gadic::notation {

namespace {

constexpr std::string_view kEllipsis = "\xE2\x80\xA6";  // U+2026
constexpr std::string_view kAsciiEllipsis = "...";

std::string_view strip_ellipsis(std::string_view text) {
  if (text.starts_with(kEllipsis)) return text.substr(kEllipsis.size());
  if (text.starts_with(kAsciiEllipsis)) return text.substr(kAsciiEllipsis.size());
  return text;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

}  // namespace

DigitExpansion parse_dotted(std::string_view text, Base base) {
  const auto body = strip_ellipsis(text);
  if (body.empty()) throw ParseError("empty dotted literal");

  std::vector<Digit> msf;
  std::size_t pos = 0;
  while (true) {
    const auto dot = body.find('.', pos);
    const auto token = body.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    if (token.empty() || token.size() > 3 ||
        !std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      throw ParseError("malformed digit token '" + std::string(token) + "' in '" + std::string(text) + "'");
    }
    Digit d = 0;
    std::from_chars(token.data(), token.data() + token.size(), d);
    if (d >= base.value()) {
      throw ParseError("digit " + std::to_string(d) + " out of range for base " + std::to_string(base.value()));
    }
    msf.push_back(d);
    if (dot == std::string_view::npos) break;
    pos = dot + 1;
  }
  return DigitExpansion(base, std::vector<Digit>(msf.rbegin(), msf.rend()));
}

std::string render_dotted(const DigitExpansion& x) {
  std::string out;
  for (std::size_t i = x.precision(); i-- > 0;) {
    out += std::to_string(x.digit(i));
    if (i != 0) out += '.';
  }
  return out;
}

std::string render_tail(const DigitExpansion& x) {
  if (x.base().value() > 10) {
    throw DomainError("tail notation needs single-character digits; base " +
                      std::to_string(x.base().value()) + " > 10");
  }
  std::string out(kEllipsis);
  for (std::size_t i = x.precision(); i-- > 0;) out += static_cast<char>('0' + x.digit(i));
  return out;
}

DigitExpansion parse_tail(std::string_view text, Base base) {
  if (base.value() > 10) throw DomainError("tail notation is limited to bases <= 10");
  const auto body = strip_ellipsis(text);
  if (body.empty()) throw ParseError("empty tail literal");
  std::vector<Digit> lsf;
  lsf.reserve(body.size());
  for (auto it = body.rbegin(); it != body.rend(); ++it) {
    if (*it < '0' || *it > '9') throw ParseError("malformed tail literal '" + std::string(text) + "'");
    const Digit d = static_cast<Digit>(*it - '0');
    if (d >= base.value()) {
      throw ParseError("digit " + std::to_string(d) + " out of range for base " + std::to_string(base.value()));
    }
    lsf.push_back(d);
  }
  return DigitExpansion(base, std::move(lsf));
}

std::string render_integer(const DigitExpansion& x) {
  const double decimal_digits = static_cast<double>(x.precision()) * std::log10(static_cast<double>(x.base().value()));
  const auto width = static_cast<std::size_t>(std::ceil(decimal_digits)) + 1;
  const auto dec = rebase(x, Base(10), width);
  std::string out;
  for (std::size_t i = dec.precision(); i-- > 0;) {
    if (out.empty() && dec.digit(i) == 0) continue;
    out += static_cast<char>('0' + dec.digit(i));
  }
  return out.empty() ? "0" : out;
}

std::string render_default(const DigitExpansion& x) {
  return x.base().value() > 10 ? render_dotted(x) : render_tail(x);
}

LiteralFile parse_literal_file(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Base> base;
  std::vector<DigitExpansion> values;
  while (std::getline(in, line)) {
    const auto t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    if (!base) {
      if (!t.starts_with("base=")) throw ParseError("literal file must start with a base= header");
      const auto num = t.substr(5);
      std::uint64_t g = 0;
      const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), g);
      if (ec != std::errc{} || ptr != num.data() + num.size()) {
        throw ParseError("bad base header '" + std::string(t) + "'");
      }
      base.emplace(g);
      continue;
    }
    values.push_back(parse_dotted(t, *base));
  }
  if (!base) throw ParseError("literal file has no base= header");
  return LiteralFile{*base, std::move(values)};
}

std::string render_literal_file(const LiteralFile& file) {
  std::string out = "base=" + std::to_string(file.base.value()) + "\n";
  for (const auto& v : file.values) out += render_dotted(v) + "\n";
  return out;
}

}  // namespace gadic::notation
