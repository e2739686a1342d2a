#pragma once

#include "simra/interval.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace simra {

class ambiguous_root_count : public std::runtime_error {
public:
    explicit ambiguous_root_count(const std::string& w) : std::runtime_error(w) {}
};
class no_positive_root : public std::runtime_error {
public:
    explicit no_positive_root(const std::string& w) : std::runtime_error(w) {}
};

// Dense univariate polynomial over Z, constant term first.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);
    static IntPolynomial parse(const std::string& comma_separated);

    const std::vector<mpz_class>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero poly
    bool is_zero() const { return c_.empty(); }

    mpq_class eval(const mpq_class& x) const;
    int sign_at(const mpq_class& x) const { return sgn(eval(x)); }
    Interval eval_interval(const Interval& x, long frac_bits) const;

    // Number of coefficient sign changes (Descartes bound on positive roots).
    int descartes_sign_changes() const;

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);

    std::string to_string() const;

private:
    std::vector<mpz_class> c_; // trailing (leading-coefficient) entry nonzero
};

struct IsolatedRoot {
    mpq_class lo, hi;  // open interval (lo, hi) with exactly one root, or
    bool exact = false; // exact rational root at lo == hi
};

// Descartes/VCA bisection isolation of the roots in the open interval
// (lo, hi); endpoint values must be nonzero.  Throws ambiguous_root_count
// when the depth budget runs out (multiple/clustered roots).
std::vector<IsolatedRoot> isolate_roots_in(const IntPolynomial& p, const mpq_class& lo,
                                           const mpq_class& hi, int max_depth = 128);

// Isolation over (0, +inf) using the Cauchy bound.
std::vector<IsolatedRoot> isolate_positive_roots(const IntPolynomial& p, int max_depth = 128);

// Certified count of roots in the open interval (lo, hi) via the
// Moebius-transformed Descartes test: returns the sign-variation count,
// which equals the root count when it is 0 or 1.
int descartes_variation_in(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi);

// Enclosure (width <= 2^-frac_bits) of the unique positive root; the
// polynomial must isolate to exactly one positive root.
Interval unique_positive_root(const IntPolynomial& p, long frac_bits);

// Same, restricted to the open interval (lo, hi).
Interval unique_root_in(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi,
                        long frac_bits);

// One bisection-refined enclosure step workhorse shared with the oracle:
// refine the bracket [lo,hi] (signs opposite at endpoints) until its width
// is <= eps.  Returns the refined rational bracket.
void bisect_to_width(const IntPolynomial& p, mpq_class& lo, mpq_class& hi, const mpq_class& eps);

// Exact divisibility over Q[x]: remainder of p by d vanishes.
bool divides_rational(const IntPolynomial& d, const IntPolynomial& p);

} // namespace simra
