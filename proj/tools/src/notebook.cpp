#include "notebook.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gadic/gadic.hpp"
#include "notebook_table.hpp"

namespace gadic::app {

namespace {

using notation::render_dotted;
using notation::render_integer;
using notation::render_tail;

class Context {
 public:
  explicit Context(std::size_t floor) : floor_(floor) {}

  std::size_t work(std::size_t n) const { return std::max(n, floor_); }

 private:
  std::size_t floor_;
};

const IntPolynomial& lift_polynomial() {
  static const IntPolynomial f = IntPolynomial::parse("x^5-20x^4-86x^3-98x^2+80x+3");
  return f;
}

std::string tail(const DigitExpansion& x, std::size_t n) { return render_tail(truncate(x, n)); }
std::string dotted(const DigitExpansion& x, std::size_t n) { return render_dotted(truncate(x, n)); }

DigitExpansion lift_root(const Context& c, std::uint64_t seed) {
  return hensel::hensel_lift(lift_polynomial(), seed, 241, c.work(3)).root;
}

DigitExpansion sqrt5(const Context& c, std::size_t n) { return roots::sqrt_hensel(5, 11, c.work(n)).principal; }

PeriodPair periods(const Context& c) { return roots::quadratic_periods(11, c.work(6)); }

DigitExpansion idempotent_a(const Context& c, std::size_t n) {
  return crt::minimal_idempotent(crt::factor_base(Base(10)), 0, c.work(n));
}

DigitExpansion epsilon(std::size_t n) {
  return crt::recombine(crt::factor_base(Base(10)),
                        {{{2, 1}, DigitExpansion::one(Base(2), n)}, {{5, 1}, from_integer(-1, Base(5), n)}});
}

DigitExpansion eps_from_idempotent(const Context& c, std::size_t n) {
  const auto a = idempotent_a(c, n);
  return sub(mul_small(a, 2), DigitExpansion::one(a.base(), a.precision()));
}

std::string gauss_step(std::size_t index) {
  const auto steps = roots::gauss_sqrt1_trace(roots::default_gauss_seed(), 5);
  const auto& s = steps.at(index);
  return "r=" + std::to_string(s.window) + " b=" + std::to_string(s.digit);
}

DigitExpansion ten_adic_log(std::int64_t n, const Context& c, std::size_t digits) {
  return padic_log::log_gadic(n, Base(10), c.work(digits));
}

DigitExpansion log5_of_2(const Context& c) {
  const std::size_t n = c.work(7);
  return padic_log::log_value(from_integer(2, Base(5), n), n);
}

std::string binomial_coefficient_5() {
  const auto plan = roots::plan_binomial_sqrt(5, 11, 6);
  const auto& c = plan.coefficients.at(5);
  auto v = mul_small(c.catalan, std::int64_t{1} << 10);
  v = div_exact_by_unit(v, std::int64_t{1} << c.two_exponent);
  if (c.sign < 0) v = negate(v);
  return std::to_string(v.digit(0));
}

std::string sqrt_of_epsilon(const Context& c) {
  const std::size_t n = c.work(5);
  const auto root = crt::recombine(crt::factor_base(Base(10)), {{{2, 1}, from_integer(-1, Base(2), n)},
                                                                {{5, 1}, roots::sqrt_hensel(-1, 5, n).principal}});
  if (mul(root, root) != epsilon(n)) return "root does not square to eps";
  return tail(root, 5);
}

using Compute = std::function<std::string(const Context&)>;

const std::map<std::string_view, Compute>& computations() {
  static const std::map<std::string_view, Compute> table = {
      {"lift.x1", [](const Context& c) { return dotted(lift_root(c, 2), 3); }},
      {"lift.x2", [](const Context& c) { return dotted(lift_root(c, 3), 3); }},
      {"lift.x3", [](const Context& c) { return dotted(lift_root(c, 4), 3); }},
      {"lift.x4", [](const Context& c) { return dotted(lift_root(c, 5), 3); }},
      {"lift.x5", [](const Context& c) { return dotted(lift_root(c, 6), 3); }},

      {"sqrt5.n6", [](const Context& c) { return dotted(sqrt5(c, 6), 6); }},
      {"sqrt5.n8", [](const Context& c) { return dotted(sqrt5(c, 8), 8); }},
      {"sqrt5.normalizer",
       [](const Context&) { return std::to_string(roots::plan_binomial_sqrt(5, 11, 6).normalizer); }},
      {"sqrt5.coef5", [](const Context&) { return binomial_coefficient_5(); }},
      {"sqrt5.binomial", [](const Context& c) { return dotted(roots::sqrt_binomial(5, 11, c.work(6)), 6); }},
      {"figure.sub",
       [](const Context&) {
         const Base b(11);
         return render_dotted(sub(notation::parse_dotted("6.0.4.0.2.1", b), notation::parse_dotted("0.10.0.2.0.0", b)));
       }},
      {"figure.div",
       [](const Context&) {
         return render_dotted(div_exact_by_unit(notation::parse_dotted("5.1.3.9.2.1", Base(11)), 3));
       }},

      {"periods.2a", [](const Context& c) { const auto p = periods(c); return dotted(add(p.a, p.a), 6); }},
      {"periods.a", [](const Context& c) { return dotted(periods(c).a, 6); }},
      {"periods.b", [](const Context& c) { return dotted(periods(c).b, 6); }},
      {"periods.sum", [](const Context& c) { const auto p = periods(c); return dotted(add(p.a, p.b), 6); }},
      {"periods.product", [](const Context& c) { const auto p = periods(c); return dotted(mul(p.a, p.b), 6); }},

      {"idem.a", [](const Context& c) { return tail(idempotent_a(c, 12), 12); }},
      {"eps.n11", [](const Context& c) { return tail(eps_from_idempotent(c, 11), 11); }},
      {"eps.n12", [](const Context& c) { return tail(eps_from_idempotent(c, 12), 12); }},
      {"eps.crt24", [](const Context& c) { return tail(epsilon(c.work(100)), 24); }},
      {"eps.crt55", [](const Context& c) { return tail(epsilon(c.work(100)), 55); }},
      {"eps.sqrts",
       [](const Context& c) { return std::to_string(roots::unit_sqrts_of_one(Base(10), c.work(12)).size()); }},
      {"eps.step1", [](const Context&) { return gauss_step(0); }},
      {"eps.step2", [](const Context&) { return gauss_step(1); }},
      {"eps.gauss9",
       [](const Context& c) { return tail(roots::gauss_sqrt1_iterate(roots::default_gauss_seed(), c.work(9)), 9); }},
      {"eps.gauss55",
       [](const Context& c) {
         const std::size_t n = c.work(55);
         const auto x = roots::gauss_sqrt1_iterate(roots::default_gauss_seed(), n);
         if (x != epsilon(n)) return std::string("differs from the CRT value");
         return tail(x, 55);
       }},

      {"log31.n7", [](const Context& c) { return tail(ten_adic_log(31, c, 7), 7); }},
      {"log31.n8", [](const Context& c) { return tail(ten_adic_log(31, c, 8), 8); }},
      {"log31.n10", [](const Context& c) { return tail(ten_adic_log(31, c, 10), 10); }},
      {"log31.n50", [](const Context& c) { return tail(ten_adic_log(31, c, 50), 50); }},
      {"log.3x4", [](const Context& c) { return tail(mul_small(ten_adic_log(3, c, 10), 4), 10); }},
      {"log.81", [](const Context& c) { return tail(ten_adic_log(81, c, 10), 10); }},
      {"log2.n9", [](const Context& c) { return tail(ten_adic_log(2, c, 9), 9); }},
      {"log2.n8", [](const Context& c) { return tail(ten_adic_log(2, c, 8), 8); }},
      {"log2.n4", [](const Context& c) { return tail(ten_adic_log(2, c, 4), 4); }},
      {"log5.2", [](const Context& c) { return render_integer(truncate(log5_of_2(c), 7)); }},
      {"log5.2.digits", [](const Context& c) { return dotted(log5_of_2(c), 7); }},
      {"gauss.log2.mod5", [](const Context&) { return render_integer(from_integer(21830960, Base(5), 7)); }},
      {"gauss.log2.mod2", [](const Context&) { return render_integer(from_integer(21830960, Base(2), 7)); }},
      {"log.10",
       [](const Context& c) {
         const auto sum = add(ten_adic_log(2, c, 10), ten_adic_log(5, c, 10));
         if (sum != ten_adic_log(10, c, 10)) return std::string("log(10) != log(2) + log(5)");
         return tail(sum, 10);
       }},

      {"lambda.B", [](const Context& c) { return tail(from_integer(-1, Base(10), c.work(5)), 5); }},
      {"lambda.A", [](const Context& c) { return sqrt_of_epsilon(c); }},
  };
  return table;
}

}  // namespace

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::DiscrepancyExpected:
      return "DISCREPANCY-EXPECTED";
  }
  return "FAIL";
}

NotebookReport run_notebook(const NotebookOptions& options) {
  const Context context(options.precision_override);
  NotebookReport report;
  report.table_version = kNotebookTableVersion;
  for (const auto& row : kNotebookTable) {
    NotebookEntry e;
    e.id = row.id;
    e.label = row.label;
    e.citation = row.citation;
    e.gauss = row.gauss;
    const auto override_it = options.expected_overrides.find(e.id);
    e.expected = override_it != options.expected_overrides.end() ? override_it->second : std::string(row.expected);
    try {
      e.computed = computations().at(row.id)(context);
    } catch (const std::exception& ex) {
      e.computed = std::string("error: ") + ex.what();
    }
    if (e.computed != e.expected) {
      e.status = Status::Fail;
    } else {
      e.status = row.gauss.empty() ? Status::Pass : Status::DiscrepancyExpected;
    }
    switch (e.status) {
      case Status::Pass:
        ++report.passed;
        break;
      case Status::DiscrepancyExpected:
        ++report.passed;
        ++report.discrepancies;
        break;
      case Status::Fail:
        ++report.failed;
        break;
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string render_text(const NotebookReport& report) {
  std::ostringstream out;
  out << "gadic notebook (table v" << report.table_version << ")\n";
  for (const auto& e : report.entries) {
    out << '[' << status_name(e.status) << "] " << e.id << ": " << e.label << '\n';
    out << "    expected " << e.expected << '\n';
    out << "    computed " << e.computed << '\n';
    if (!e.gauss.empty()) out << "    notebook " << e.gauss << '\n';
    out << "    source   " << e.citation << '\n';
  }
  out << "summary: " << report.passed << " pass / " << report.failed << " fail (" << report.discrepancies
      << " discrepancy-expected)\n";
  return out.str();
}

std::string render_json_lines(const NotebookReport& report) {
  std::ostringstream out;
  for (const auto& e : report.entries) {
    nlohmann::ordered_json j;
    j["id"] = e.id;
    j["label"] = e.label;
    j["expected"] = e.expected;
    j["computed"] = e.computed;
    j["status"] = status_name(e.status);
    j["citation"] = e.citation;
    if (!e.gauss.empty()) j["notebook_value"] = e.gauss;
    out << j.dump() << '\n';
  }
  nlohmann::ordered_json summary;
  summary["summary"] = {{"table_version", report.table_version},
                        {"pass", report.passed},
                        {"fail", report.failed},
                        {"discrepancy_expected", report.discrepancies}};
  out << summary.dump() << '\n';
  return out.str();
}

std::map<std::string, std::string> parse_expected_overrides(std::string_view json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("expected-literal file: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("expected-literal file must hold a JSON object");
  std::map<std::string, std::string> out;
  for (const auto& [key, value] : j.items()) {
    const bool known = std::any_of(kNotebookTable.begin(), kNotebookTable.end(),
                                   [&](const ExpectedRow& r) { return r.id == key; });
    if (!known) throw ParseError("unknown notebook entry '" + key + "'");
    if (!value.is_string()) throw ParseError("expected literal for '" + key + "' must be a string");
    out[key] = value.get<std::string>();
  }
  return out;
}

}  // namespace gadic::app
