#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "gadic/gadic.hpp"
#include "notebook.hpp"

namespace gadic::app {

namespace {

constexpr std::string_view kEllipsis = "\xE2\x80\xA6";

struct Options {
  std::uint64_t base = 0;
  std::size_t precision = 0;
  std::string format;
  std::string out_path;

  std::string sqrt_input;
  std::string method = "hensel";
  bool both = false;

  std::string polynomial;
  std::string log_input;
  std::string literal;
  std::string convert_to = "dotted";

  std::size_t precision_override = 0;
  bool json = false;
  std::string expected_file;
};

std::string render(const DigitExpansion& x, const std::string& format) {
  if (format == "dotted") return notation::render_dotted(x);
  if (format == "tail") return notation::render_tail(x);
  if (format == "integer") return notation::render_integer(x);
  return notation::render_default(x);
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("not an integer: '" + std::string(text) + "'");
  }
  return v;
}

bool looks_like_integer(std::string_view text) {
  if (!text.empty() && text.front() == '-') text.remove_prefix(1);
  return !text.empty() && std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

// A dotted literal, or a tail literal ("…425781249") for bases <= 10.
DigitExpansion parse_literal(std::string_view text, Base base) {
  std::string_view rest = text;
  if (rest.starts_with(kEllipsis)) {
    rest.remove_prefix(kEllipsis.size());
  } else if (rest.starts_with("...")) {
    rest.remove_prefix(3);
  } else {
    return notation::parse_dotted(text, base);
  }
  if (base.value() <= 10 && rest.find('.') == std::string_view::npos) return notation::parse_tail(text, base);
  return notation::parse_dotted(text, base);
}

void cmd_sqrt(const Options& o, std::ostream& out) {
  const std::size_t n = o.precision ? o.precision : 6;
  const std::int64_t a = parse_int(o.sqrt_input);
  DigitExpansion root = o.method == "binomial" ? roots::sqrt_binomial(a, o.base, n)
                                               : roots::sqrt_hensel(a, o.base, n).principal;
  const std::string format = o.format.empty() ? "dotted" : o.format;
  out << render(root, format) << '\n';
  if (o.both) out << render(negate(root), format) << '\n';
}

void cmd_hensel(const Options& o, std::ostream& out) {
  const auto f = IntPolynomial::parse(o.polynomial);
  auto found = hensel::gadic_roots(f, Base(o.base), o.precision ? o.precision : 3);
  // Listed by their mod-p seeds, the order a root table is usually written in.
  std::stable_sort(found.begin(), found.end(),
                   [](const LiftedRoot& x, const LiftedRoot& y) { return x.seeds < y.seeds; });
  for (const auto& r : found) out << render(r.root, o.format) << '\n';
}

void cmd_idempotents(const Options& o, std::ostream& out) {
  for (const auto& e : crt::idempotents(Base(o.base), o.precision ? o.precision : 12)) {
    out << render(e, o.format) << '\n';
  }
}

void cmd_periods(const Options& o, std::ostream& out) {
  const auto p = roots::quadratic_periods(o.base, o.precision ? o.precision : 6);
  out << render(p.a, o.format) << '\n' << render(p.b, o.format) << '\n';
}

void cmd_log(const Options& o, std::ostream& out) {
  const Base base(o.base);
  const std::size_t n = o.precision ? o.precision : 7;
  if (looks_like_integer(o.log_input)) {
    out << render(padic_log::log_gadic(parse_int(o.log_input), base, n), o.format) << '\n';
    return;
  }
  const auto x = parse_literal(o.log_input, base);
  out << render(padic_log::log_gadic(x, o.precision ? o.precision : x.precision()), o.format) << '\n';
}

void cmd_convert(const Options& o, std::ostream& out) {
  out << render(parse_literal(o.literal, Base(o.base)), o.convert_to) << '\n';
}

int cmd_notebook(const Options& o, std::ostream& out) {
  NotebookOptions options;
  options.precision_override = o.precision_override;
  if (!o.expected_file.empty()) {
    std::ifstream in(o.expected_file);
    if (!in) throw ParseError("cannot read " + o.expected_file);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    options.expected_overrides = parse_expected_overrides(text);
  }
  const auto report = run_notebook(options);
  out << (o.json ? render_json_lines(report) : render_text(report));
  return report.ok() ? kExitOk : kExitNotebookFail;
}

void add_base(CLI::App* cmd, Options& o) {
  cmd->add_option("--base", o.base, "Base g (a prime where required)")->required();
}

void add_prec(CLI::App* cmd, Options& o, const std::string& fallback) {
  cmd->add_option("--prec", o.precision, "Digits of precision (default " + fallback + ")")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1} << 20));
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output notation")->check(CLI::IsMember({"dotted", "tail", "integer"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Truncated g-adic arithmetic", "gadic"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", o.out_path, "Write the output to this file instead of stdout");

  auto* sqrt = app.add_subcommand("sqrt", "Square root of an integer in Z_p");
  sqrt->add_option("a", o.sqrt_input, "Integer radicand")->required();
  add_base(sqrt, o);
  add_prec(sqrt, o, "6");
  sqrt->add_option("--method", o.method, "hensel or binomial")->check(CLI::IsMember({"hensel", "binomial"}));
  add_format(sqrt, o);
  sqrt->add_flag("--both", o.both, "Also print the negated root");

  auto* hensel = app.add_subcommand("hensel", "Lift the roots of a polynomial to g-adic precision");
  hensel->add_option("poly", o.polynomial, "\"x^2-x\" or ascending coefficients \"0,-1,1\"")->required();
  add_base(hensel, o);
  add_prec(hensel, o, "3");
  add_format(hensel, o);

  auto* idem = app.add_subcommand("idempotents", "All e with e^2 = e in Z_g");
  add_base(idem, o);
  add_prec(idem, o, "12");
  add_format(idem, o);

  auto* periods = app.add_subcommand("periods", "Quadratic periods (-1 +- sqrt5)/2 in Z_p");
  add_base(periods, o);
  add_prec(periods, o, "6");
  add_format(periods, o);

  auto* log = app.add_subcommand("log", "g-adic logarithm (log p = 0 on each prime component)");
  log->add_option("x", o.log_input, "Integer or literal")->required();
  add_base(log, o);
  add_prec(log, o, "7, or the literal's precision");
  add_format(log, o);

  auto* convert = app.add_subcommand("convert", "Re-render a literal");
  convert->add_option("literal", o.literal, "Dotted or tail literal")->required();
  add_base(convert, o);
  convert->add_option("--to", o.convert_to, "Target notation")->check(CLI::IsMember({"dotted", "tail", "integer"}));

  auto* notebook = app.add_subcommand("notebook", "Recompute and check every value in the reproduction table");
  notebook->add_option("--prec-override", o.precision_override,
                       "Compute with at least this many digits before comparing");
  notebook->add_flag("--json", o.json, "One JSON record per line");
  notebook->add_option("--expected-file", o.expected_file, "JSON object of replacement expected literals by id");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ostringstream buffer;
  int code = kExitOk;
  try {
    if (*sqrt) cmd_sqrt(o, buffer);
    else if (*hensel) cmd_hensel(o, buffer);
    else if (*idem) cmd_idempotents(o, buffer);
    else if (*periods) cmd_periods(o, buffer);
    else if (*log) cmd_log(o, buffer);
    else if (*convert) cmd_convert(o, buffer);
    else if (*notebook) code = cmd_notebook(o, buffer);
  } catch (const ParseError& e) {
    err << "gadic: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "gadic: " << e.what() << '\n';
    return kExitDomain;
  }

  if (o.out_path.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out_path, std::ios::binary);
    file << buffer.str();
    if (!file) {
      err << "gadic: cannot write " << o.out_path << '\n';
      return kExitUsage;
    }
  }
  return code;
}

}  // namespace gadic::app
