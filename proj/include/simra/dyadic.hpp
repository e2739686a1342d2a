#pragma once

#include <gmpxx.h>

#include <string>

namespace simra {

enum class RoundDir { Down, Up };

// Dyadic rational m * 2^e with arbitrary-precision mantissa.  Addition,
// subtraction and multiplication are exact; that is the whole point of the
// representation.  Values are kept normalized (odd mantissa, or 0 with e=0)
// so equal values compare equal structurally.
class Dyadic {
public:
    Dyadic() : mant_(0), exp_(0) {}
    Dyadic(long v) : mant_(v), exp_(0) { normalize(); }
    Dyadic(const mpz_class& m) : mant_(m), exp_(0) { normalize(); }
    Dyadic(mpz_class m, long e) : mant_(std::move(m)), exp_(e) { normalize(); }

    // floor/ceil of q * 2^frac_bits, scaled back; |error| < 2^-frac_bits.
    static Dyadic from_mpq(const mpq_class& q, long frac_bits, RoundDir dir);
    static Dyadic one_half() { return Dyadic(mpz_class(1), -1); }
    static Dyadic pow2(long e) { return Dyadic(mpz_class(1), e); }

    const mpz_class& mantissa() const { return mant_; }
    long exponent() const { return exp_; }
    bool is_zero() const { return mant_ == 0; }
    int sign() const { return sgn(mant_); }

    mpq_class to_mpq() const;
    double to_double() const;
    mpz_class floor() const;
    mpz_class ceil() const;

    // Position of the leading bit: smallest p with |x| < 2^p (0 for x=0).
    long magnitude_exponent() const;

    // Re-quantize to the grid 2^-frac_bits (absolute precision), directed.
    Dyadic round_to(long frac_bits, RoundDir dir) const;

    Dyadic operator-() const { return Dyadic(-mant_, exp_); }
    Dyadic abs() const { return Dyadic(::abs(mant_), exp_); }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const mpz_class& k);

    friend bool operator==(const Dyadic& a, const Dyadic& b) {
        return a.exp_ == b.exp_ && a.mant_ == b.mant_;
    }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return !(a == b); }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }

    static int cmp(const Dyadic& a, const Dyadic& b);

    // Decimal rendering with `digits` fractional digits, directed rounding.
    std::string to_decimal(int digits, RoundDir dir) const;

private:
    void normalize();
    mpz_class mant_;
    long exp_;
};

// floor(v * 10^digits) for exact printing helpers.
mpz_class floor_scaled_pow10(const mpq_class& v, int digits);

// Decimal rendering of an exact rational, directed, `digits` fractional digits.
std::string decimal_of_mpq(const mpq_class& v, int digits, RoundDir dir);

} // namespace simra
