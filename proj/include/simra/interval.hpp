#pragma once

#include "simra/dyadic.hpp"

#include <string>

namespace simra {

// Closed interval with dyadic endpoints.  Every operation returns an
// interval containing the exact image of its operand intervals; +, -, *
// are exact, the rest round outward at a caller-supplied precision
// (absolute, in fractional bits: a grid of 2^-frac_bits).
class Interval {
public:
    Interval() : lo_(), hi_() {}
    Interval(Dyadic point) : lo_(point), hi_(point) {}
    Interval(Dyadic lo, Dyadic hi);

    static Interval of_long(long v) { return Interval(Dyadic(v)); }
    // Outward enclosure of an exact rational on the 2^-frac_bits grid.
    static Interval of_mpq(const mpq_class& q, long frac_bits);

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    Dyadic width() const { return hi_ - lo_; }
    Dyadic mid() const;
    bool is_point() const { return lo_ == hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool contains(const Dyadic& v) const { return lo_ <= v && v <= hi_; }
    bool contains(const mpq_class& v) const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    Interval operator-() const { return Interval(-hi_, -lo_); }
    Interval abs() const;

    Interval round_out(long frac_bits) const;

    // a/b with 0 not in b; outward at frac_bits.
    static Interval div(const Interval& a, const Interval& b, long frac_bits);
    // x^k by repeated multiplication, rounding outward at frac_bits each step.
    static Interval pow_int(const Interval& x, unsigned k, long frac_bits);

    // True when the entire interval is strictly below/above the other.
    friend bool strictly_less(const Interval& a, const Interval& b) { return a.hi_ < b.lo_; }
    friend bool disjoint(const Interval& a, const Interval& b) { return a.hi_ < b.lo_ || b.hi_ < a.lo_; }

    std::string to_string(int decimal_digits = 12) const;

private:
    Dyadic lo_, hi_;
};

// Enclosure of sqrt over x (requires x.lo >= 0), outward at frac_bits.
// Exact endpoints (perfect dyadic squares) stay exact.
Interval sqrt_interval(const Interval& x, long frac_bits);

// Enclosure of ln over x (requires x.lo > 0), width driven by frac_bits.
Interval log_interval(const Interval& x, long frac_bits);

// Enclosure of ln(2) with width <= 2^-frac_bits.  Cached.
Interval log2_constant(long frac_bits);

// Enclosure of max_i |x_i| given per-coordinate enclosures.
Interval max_abs(const Interval* xs, size_t count);

} // namespace simra
