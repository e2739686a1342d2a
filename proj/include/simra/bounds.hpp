#pragma once

#include "simra/interval.hpp"
#include "simra/polynomial.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace simra {

inline constexpr long kBoundsMaxBits = 4096;

// 1 - (m+1)x - mx^2          (odd n = 2m+1)
IntPolynomial poly_P(unsigned m);
// 1 - mx - mx^2 - m(m-1)x^3 for m >= 3; 1 - 3x + x^2 - 2x^3 - 2x^4 at m = 2
IntPolynomial poly_Q(unsigned m);
// 1 - (m+1)x - (m-1)x^2
IntPolynomial poly_R(unsigned m);

// alpha_m / beta_m: positive roots of poly_P / poly_Q, width <= 2^-frac_bits.
Interval alpha(unsigned m, long frac_bits);
Interval beta(unsigned m, long frac_bits);

// a = (1 - ln 2)/2.
Interval thm11_a(long frac_bits);

// 1 / (n/2 + a*sqrt(n) + 1/3), width <= 2^-frac_bits.
Interval thm11_bound(unsigned n, long frac_bits);

// Certified verification of the two conditions 1/2 <= theta^k < 1 and
// eta > 1/lambda at the parameter choice ell = floor(n/2 - (ln2/2) sqrt(n) + 1),
// k = n - 2*ell, theta = ell*lambda/(1-lambda),
// eta = ell - 1 + sum_{m=0}^{k+1} theta^m.
struct Thm11Report {
    unsigned n = 0;
    unsigned ell = 0;
    unsigned k = 0;
    Interval lambda;
    Interval theta;
    Interval theta_pow_k;
    Interval eta;
    Interval inv_lambda; // the denominator n/2 + a*sqrt(n) + 1/3
    bool pass = false;
};

Thm11Report verify_thm11(unsigned n, long max_bits = kBoundsMaxBits);
std::vector<Thm11Report> verify_thm11_range(unsigned n_from, unsigned n_to,
                                            long max_bits = kBoundsMaxBits);

// Exact sign checks for 1/(m+2) < alpha_m < 1/(m+2) + 2/(m+2)^3 and
// 1/(m+2) < beta_m < 1/(m+2) + 7/(m+2)^3.
struct BracketReport {
    unsigned m = 0;
    bool alpha_ok = false;
    bool beta_ok = false;
};

BracketReport bracket_check(unsigned m);
std::vector<BracketReport> bracket_check_range(unsigned m_from, unsigned m_to);

// One row of the bound table (n = 4..13): prior bounds for comparison and
// the new alpha/beta bound, with the two derived tau_{n+1} lower bounds.
struct BoundRow {
    unsigned n = 0;
    std::optional<mpq_class> laurent; // 1/ceil(n/2), odd n only
    std::string schleischitz;         // display-only literals from prior work
    std::string badziahin;
    Interval new_bound;    // alpha_m (odd) or beta_m (even)
    Interval tau_from_new; // 1 + 1/new_bound
    Interval tau_thm11;    // n/2 + a*sqrt(n) + 4/3
};

std::vector<BoundRow> bound_table(long frac_bits = 96);

// Decimal truncation of an interval value, certified: refines via `refine`
// until floor(v * 10^digits) is the same at both endpoints.
std::string certified_truncation(const std::function<Interval(long)>& refine, int digits,
                                 long max_bits = kBoundsMaxBits);

} // namespace simra
