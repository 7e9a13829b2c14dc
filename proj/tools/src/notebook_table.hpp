#pragma once

// Expected literals for `gadic notebook`, in report order. Each row carries
// the statement it reproduces. Rows with a nonempty `gauss` field are the
// places where the notebook's own figure is wrong; `expected` then holds the
// corrected value.

#include <array>
#include <cstddef>
#include <string_view>

namespace gadic::app {

inline constexpr int kNotebookTableVersion = 1;

struct ExpectedRow {
  std::string_view id;
  std::string_view label;
  std::string_view expected;
  std::string_view citation;
  std::string_view gauss = {};
};

inline constexpr std::array kNotebookTable = {
    ExpectedRow{"lift.x1", "root x1 of f mod 241^3", "160.191.2", "x1 = 2 + 191*241 + 160*241^2"},
    ExpectedRow{"lift.x2", "root x2 of f mod 241^3", "16.238.3", "x2 = 3 + 238*241 + 16*241^2"},
    ExpectedRow{"lift.x3", "root x3 of f mod 241^3", "221.192.4", "x3 = 4 + 192*241 + 221*241^2"},
    ExpectedRow{"lift.x4", "root x4 of f mod 241^3", "17.65.5", "x4 = 5 + 65*241 + 17*241^2"},
    ExpectedRow{"lift.x5", "root x5 of f mod 241^3", "65.37.6", "x5 = 6 + 37*241 + 65*241^2"},

    ExpectedRow{"sqrt5.n6", "sqrt(5) in Z_11, 6 digits", "9.0.4.10.4.4", "sqrt5 (mod 11^oo) = 9.0.4.10.4.4"},
    ExpectedRow{"sqrt5.n8", "sqrt(5) in Z_11, 8 digits", "8.5.9.0.4.10.4.4",
                "sqrt(5 + O(11^8)) = 4 + 4*11 + 10*11^2 + 4*11^3 + 9*11^5 + 5*11^6 + 8*11^7"},
    ExpectedRow{"sqrt5.normalizer", "n with 5n^2 = 1 mod 11", "3", "5*9 = 45 = 1 + 4*11"},
    ExpectedRow{"sqrt5.coef5", "binom(1/2,5) * 4^5 mod 11", "6", "28 = 6 mod 11"},
    ExpectedRow{"sqrt5.binomial", "sqrt(1+4*11) / 3 by the binomial series", "9.0.4.10.4.4",
                "sqrt(1+4p) = 1 + 2p - 2p^2 + 4p^3 - 10p^4 + 28p^5 + ..."},
    ExpectedRow{"figure.sub", "6.0.4.0.2.1 - 0.10.0.2.0.0", "5.1.3.9.2.1", "subtraction array for sqrt5"},
    ExpectedRow{"figure.div", "5.1.3.9.2.1 / 3", "9.0.4.10.4.4", "borrowing until the digits are divisible by 3"},

    ExpectedRow{"periods.2a", "2a = -1 + sqrt(5)", "9.0.4.10.4.3", "2a = -1 + sqrt5 = 9.0.4.10.4.3"},
    ExpectedRow{"periods.a", "period a = (-1 + sqrt5)/2", "4.5.7.10.7.7",
                "Gauss's table: a = 10.0.2.5.2.7 (dropped borrow)", "10.0.2.5.2.7"},
    ExpectedRow{"periods.b", "period b = (-1 - sqrt5)/2", "6.5.3.0.3.3", "Gauss's table: b = 0.10.8.5.9.3",
                "0.10.8.5.9.3"},
    ExpectedRow{"periods.sum", "a + b", "10.10.10.10.10.10", "a + b = -1"},
    ExpectedRow{"periods.product", "a * b", "10.10.10.10.10.10", "ab = -1"},

    ExpectedRow{"idem.a", "idempotent a = 1 mod 2^12, 0 mod 5^12",
                "\xE2\x80\xA6"
                "918212890625",
                "a = ...918212890625"},
    ExpectedRow{"eps.n11", "eps = 2a - 1, 11 digits",
                "\xE2\x80\xA6"
                "36425781249",
                "2a - 1 = ...36425781249"},
    ExpectedRow{"eps.n12", "eps = 2a - 1, 12 digits",
                "\xE2\x80\xA6"
                "836425781249",
                "eps = (1, -1) in Z_2 + Z_5"},
    ExpectedRow{"eps.crt24", "chinese(1 mod 2^100, -1 mod 5^100), last 24 digits",
                "\xE2\x80\xA6"
                "954784512519836425781249",
                "n=100; chinese(Mod(-1,5^n),Mod(1,2^n))"},
    ExpectedRow{"eps.crt55", "chinese(1 mod 2^100, -1 mod 5^100), last 55 digits",
                "\xE2\x80\xA6"
                "2001114846846461792218008213239954784512519836425781249",
                "eps = ...2001114846846461792218008213239954784512519836425781249"},
    ExpectedRow{"eps.sqrts", "square roots of 1 in Z_10", "4", "1, -1, 2a-1, 1-2a"},
    ExpectedRow{"eps.step1", "digit step from 249", "r=38 b=1", "1 - 249^2 = ...99938000 gives r = 38, b = 1"},
    ExpectedRow{"eps.step2", "digit step from 1249", "r=44 b=8", "1 - 1249^2 = ...999844 gives r = 44, b = 8"},
    ExpectedRow{"eps.gauss9", "digit iteration from 249, 9 digits",
                "\xE2\x80\xA6"
                "425781249",
                "eps = ...425781249"},
    ExpectedRow{"eps.gauss55", "digit iteration from 249, 55 digits (equals CRT value)",
                "\xE2\x80\xA6"
                "2001114846846461792218008213239954784512519836425781249",
                "eps = ...2001114846846461792218008213239954784512519836425781249"},

    ExpectedRow{"log31.n7", "log(31) mod 10^7",
                "\xE2\x80\xA6"
                "0666080",
                "log(31) = 666080 mod 10^7"},
    ExpectedRow{"log31.n8", "log(31) mod 10^8",
                "\xE2\x80\xA6"
                "80666080",
                "the value Gauss gives is log(31) = 80666080"},
    ExpectedRow{"log31.n10", "log(31) mod 10^10",
                "\xE2\x80\xA6"
                "3280666080",
                "log(31) = ...74644513498439453658032250654972777814723280666080"},
    ExpectedRow{"log31.n50", "log(31) mod 10^50",
                "\xE2\x80\xA6"
                "74644513498439453658032250654972777814723280666080",
                "n=50; chinese(Mod(lift(log(31+O(2^n))),2^n),Mod(lift(log(31+O(5^n))),5^n))"},
    ExpectedRow{"log.3x4", "4 log(3) mod 10^10",
                "\xE2\x80\xA6"
                "7114620880",
                "4 log(3) = log(81)"},
    ExpectedRow{"log.81", "log(81) mod 10^10",
                "\xE2\x80\xA6"
                "7114620880",
                "4 log(3) = log(81)"},
    ExpectedRow{"log2.n9", "log(2) = preimage of (0, log_5 2)",
                "\xE2\x80\xA6"
                "863080960",
                "log(2) = ...863080960"},
    ExpectedRow{"log2.n8", "log(2) mod 10^8",
                "\xE2\x80\xA6"
                "63080960",
                "Gauss starts by computing log(2) = ...21830960",
                "\xE2\x80\xA6"
                "21830960"},
    ExpectedRow{"log2.n4", "log(2) mod 10^4",
                "\xE2\x80\xA6"
                "0960",
                "agrees with Gauss's log(2) only modulo 10^4"},
    ExpectedRow{"log5.2", "log_5(2) mod 5^7", "34085", "log_5(2) = 34085 mod 5^7"},
    ExpectedRow{"log5.2.digits", "log_5(2), 7 digits", "2.0.4.2.3.2.0",
                "log_5(2) = 2*5 + 3*5^2 + 2*5^3 + 4*5^4 + 2*5^6 + ..."},
    ExpectedRow{"gauss.log2.mod5", "21830960 mod 5^7", "34085", "21830960 = 34085 mod 5^7"},
    ExpectedRow{"gauss.log2.mod2", "21830960 mod 2^7", "48", "21830960 = 48 mod 2^7"},
    ExpectedRow{"log.10", "log(10) = log(2) + log(5) with log p = 0 per component",
                "\xE2\x80\xA6"
                "7261518460",
                "Gauss's log(20) = log(2) implies log(10) = 0; not the branch used here"},

    ExpectedRow{"lambda.B", "B = \xCE\x9B"
                "99999 read as -1",
                "\xE2\x80\xA6"
                "99999",
                "apparently B = -1"},
    ExpectedRow{"lambda.A", "square root of eps near A = \xCE\x9B"
                "75807",
                "\xE2\x80\xA6"
                "95807",
                "one such square root has 10-adic approximation ...95807"},
};

}  // namespace gadic::app
