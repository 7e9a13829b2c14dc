#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gadic/digit_expansion.hpp"

namespace gadic::notation {

/// Parses "9.0.4.10.4.4": dot-separated decimal digit tokens, most
/// significant first, optionally preceded by "…" or "...". Precision is the
/// token count. Throws ParseError on malformed text or a token >= g.
DigitExpansion parse_dotted(std::string_view text, Base base);

/// Inverse of parse_dotted; never emits the leading ellipsis.
std::string render_dotted(const DigitExpansion& x);

/// "…425781249": ellipsis then one character per digit, most significant
/// first. Only for bases <= 10; throws DomainError otherwise.
std::string render_tail(const DigitExpansion& x);

/// Inverse of render_tail. Accepts "…" or "..." as the prefix.
DigitExpansion parse_tail(std::string_view text, Base base);

/// The residue in [0, g^N) as an ordinary decimal integer.
std::string render_integer(const DigitExpansion& x);

/// Dotted for bases > 10, tail otherwise.
std::string render_default(const DigitExpansion& x);

/// Golden-file format: a "base=<g>" header line followed by one dotted
/// literal per line. Blank lines and lines starting with '#' are skipped.
struct LiteralFile {
  Base base;
  std::vector<DigitExpansion> values;
};

LiteralFile parse_literal_file(std::string_view text);
std::string render_literal_file(const LiteralFile& file);

}  // namespace gadic::notation
