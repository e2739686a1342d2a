#include "simra/bounds.hpp"

#include "simra/errors.hpp"

namespace simra {

IntPolynomial poly_P(unsigned m) {
    if (m < 2) throw std::invalid_argument("poly_P: m >= 2");
    return IntPolynomial({mpz_class(1), mpz_class(-(long)(m + 1)), mpz_class(-(long)m)});
}

IntPolynomial poly_Q(unsigned m) {
    if (m < 2) throw std::invalid_argument("poly_Q: m >= 2");
    if (m == 2)
        return IntPolynomial({mpz_class(1), mpz_class(-3), mpz_class(1), mpz_class(-2), mpz_class(-2)});
    return IntPolynomial({mpz_class(1), mpz_class(-(long)m), mpz_class(-(long)m),
                          mpz_class(-(long)(m * (m - 1)))});
}

IntPolynomial poly_R(unsigned m) {
    if (m < 2) throw std::invalid_argument("poly_R: m >= 2");
    return IntPolynomial({mpz_class(1), mpz_class(-(long)(m + 1)), mpz_class(-(long)(m - 1))});
}

Interval alpha(unsigned m, long frac_bits) { return unique_positive_root(poly_P(m), frac_bits); }

Interval beta(unsigned m, long frac_bits) { return unique_positive_root(poly_Q(m), frac_bits); }

Interval thm11_a(long frac_bits) {
    Interval ln2 = log2_constant(frac_bits + 4);
    Interval one = Interval::of_long(1);
    return ((one - ln2) * Interval(Dyadic::one_half())).round_out(frac_bits);
}

namespace {

Interval sqrt_n(unsigned n, long bits) {
    return sqrt_interval(Interval(Dyadic(mpz_class(n))), bits);
}

// n/2 + a*sqrt(n) + c with rational c, outward at `bits`.
Interval thm11_denominator(unsigned n, const mpq_class& c, long bits) {
    Interval a = thm11_a(bits + 8);
    Interval r = a * sqrt_n(n, bits + 8);
    r = r + Interval::of_mpq(mpq_class(n, 2) + c, bits + 8);
    return r.round_out(bits);
}

} // namespace

Interval thm11_bound(unsigned n, long frac_bits) {
    if (n < 2) throw std::invalid_argument("thm11_bound: n >= 2");
    long bits = frac_bits + 8;
    for (int attempt = 0; attempt < 32; ++attempt) {
        Interval den = thm11_denominator(n, mpq_class(1, 3), bits);
        Interval r = Interval::div(Interval::of_long(1), den, bits);
        if (!(r.width() > Dyadic::pow2(-frac_bits))) return r;
        bits *= 2;
    }
    throw precision_exhausted("thm11_bound failed to converge", frac_bits);
}

Thm11Report verify_thm11(unsigned n, long max_bits) {
    if (n < 12) throw std::invalid_argument("verify_thm11: n >= 12");
    Thm11Report rep;
    rep.n = n;

    for (long bits = 96; bits <= max_bits; bits *= 2) {
        // ell = floor(n/2 - (ln2/2) sqrt(n) + 1), certified via a stable floor
        Interval ln2 = log2_constant(bits);
        Interval expr = Interval::of_mpq(mpq_class(n, 2) + 1, bits) -
                        (ln2 * Interval(Dyadic::one_half()) * sqrt_n(n, bits)).round_out(bits);
        if (expr.lo().floor() != expr.hi().floor()) continue; // refine the floor
        mpz_class ell_z = expr.lo().floor();
        if (ell_z < 1 || 2 * ell_z >= n)
            throw contract_violation("verify_thm11: parameter ell out of range at n=" +
                                     std::to_string(n));
        rep.ell = static_cast<unsigned>(ell_z.get_ui());
        rep.k = n - 2 * rep.ell;
        if (rep.k < 1 || rep.k > rep.ell)
            throw contract_violation("verify_thm11: k outside [1, ell] at n=" + std::to_string(n));

        Interval den = thm11_denominator(n, mpq_class(1, 3), bits); // 1/lambda
        rep.inv_lambda = den;
        rep.lambda = Interval::div(Interval::of_long(1), den, bits);
        // theta = ell*lambda/(1-lambda) = ell/(den - 1)
        Interval thden = den - Interval::of_long(1);
        if (!(thden.lo().sign() > 0)) continue;
        rep.theta = Interval::div(Interval::of_long(static_cast<long>(rep.ell)), thden, bits);
        rep.theta_pow_k = Interval::pow_int(rep.theta, rep.k, bits);
        Interval eta = Interval::of_long(static_cast<long>(rep.ell) - 1);
        Interval tp = Interval::of_long(1);
        for (unsigned mm = 0; mm <= rep.k + 1; ++mm) {
            eta = (eta + tp).round_out(bits);
            tp = (tp * rep.theta).round_out(bits);
        }
        rep.eta = eta;

        bool cond1 = rep.theta_pow_k.lo() >= Dyadic::one_half() &&
                     rep.theta_pow_k.hi() < Dyadic(1);
        bool cond2 = rep.eta.lo() > rep.inv_lambda.hi();
        if (cond1 && cond2) {
            rep.pass = true;
            return rep;
        }
        // certified failure (not just unresolved overlap)?
        bool fail1 = rep.theta_pow_k.hi() < Dyadic::one_half() || rep.theta_pow_k.lo() >= Dyadic(1);
        bool fail2 = rep.eta.hi() < rep.inv_lambda.lo();
        if (fail1 || fail2) {
            rep.pass = false;
            return rep;
        }
    }
    throw precision_exhausted("verify_thm11: conditions unresolved at max_bits for n=" +
                                  std::to_string(n),
                              max_bits);
}

std::vector<Thm11Report> verify_thm11_range(unsigned n_from, unsigned n_to, long max_bits) {
    if (n_from < 12 || n_to < n_from)
        throw std::invalid_argument("verify_thm11_range: need 12 <= n_from <= n_to");
    std::vector<Thm11Report> out;
    out.reserve(n_to - n_from + 1);
    for (unsigned n = n_from; n <= n_to; ++n) out.push_back(verify_thm11(n, max_bits));
    return out;
}

BracketReport bracket_check(unsigned m) {
    if (m < 2) throw std::invalid_argument("bracket_check: m >= 2");
    BracketReport rep;
    rep.m = m;
    mpq_class lo(1, m + 2);
    mpq_class cube = lo * lo * lo; // 1/(m+2)^3
    // P_m and Q_m are positive at 0 and have a single positive root, so
    // value > 0 left of the root and < 0 right of it.
    IntPolynomial P = poly_P(m);
    rep.alpha_ok = P.sign_at(lo) > 0 && P.sign_at(lo + 2 * cube) < 0;
    IntPolynomial Q = poly_Q(m);
    rep.beta_ok = Q.sign_at(lo) > 0 && Q.sign_at(lo + 7 * cube) < 0;
    return rep;
}

std::vector<BracketReport> bracket_check_range(unsigned m_from, unsigned m_to) {
    std::vector<BracketReport> out;
    for (unsigned m = m_from; m <= m_to; ++m) out.push_back(bracket_check(m));
    return out;
}

std::vector<BoundRow> bound_table(long frac_bits) {
    struct Prior {
        unsigned n;
        const char* s;
        const char* b;
    };
    // Display-only columns from prior work; their derivations are out of
    // scope here, so they are carried as literals.
    static const Prior priors[] = {
        {4, "0.3706", "0.3660"},  {6, "0.2681", "0.2637"},  {8, "0.2107", "0.2071"},
        {10, "0.1737", "0.1708"}, {12, "0.1478", "0.1454"},
    };
    std::vector<BoundRow> rows;
    for (unsigned n = 4; n <= 13; ++n) {
        BoundRow row;
        row.n = n;
        if (n % 2 == 1) {
            row.laurent = mpq_class(1, (n + 1) / 2); // 1/ceil(n/2)
            row.new_bound = alpha((n - 1) / 2, frac_bits);
        } else {
            for (const auto& p : priors)
                if (p.n == n) {
                    row.schleischitz = p.s;
                    row.badziahin = p.b;
                }
            row.new_bound = beta(n / 2, frac_bits);
        }
        row.tau_from_new =
            (Interval::of_long(1) + Interval::div(Interval::of_long(1), row.new_bound, frac_bits))
                .round_out(frac_bits);
        row.tau_thm11 = thm11_denominator(n, mpq_class(4, 3), frac_bits);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string certified_truncation(const std::function<Interval(long)>& refine, int digits,
                                 long max_bits) {
    if (digits < 0) throw std::invalid_argument("certified_truncation: digits must be >= 0");
    for (long bits = 64; bits <= max_bits; bits *= 2) {
        Interval v = refine(bits);
        mpz_class a = floor_scaled_pow10(v.lo().to_mpq(), digits);
        mpz_class b = floor_scaled_pow10(v.hi().to_mpq(), digits);
        if (a == b) {
            mpq_class shifted(a);
            // a / 10^digits rendered with exactly `digits` decimals
            mpz_class p10;
            mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
            return decimal_of_mpq(mpq_class(a, p10), digits, RoundDir::Down);
        }
    }
    throw precision_exhausted("certified_truncation: digits unstable at max_bits (value may sit "
                              "on a decimal boundary)",
                              max_bits);
}

} // namespace simra
