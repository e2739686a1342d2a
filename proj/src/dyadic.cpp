#include "simra/dyadic.hpp"

#include <cmath>
#include <stdexcept>

namespace simra {

void Dyadic::normalize() {
    if (mant_ == 0) {
        exp_ = 0;
        return;
    }
    unsigned long tz = mpz_scan1(mant_.get_mpz_t(), 0);
    if (tz > 0) {
        mant_ >>= tz;
        exp_ += static_cast<long>(tz);
    }
}

Dyadic Dyadic::from_mpq(const mpq_class& q, long frac_bits, RoundDir dir) {
    // n = round_dir(num * 2^frac_bits / den), value n*2^-frac_bits
    mpz_class num = q.get_num();
    mpz_class den = q.get_den(); // canonical: den > 0
    if (frac_bits >= 0)
        num <<= static_cast<unsigned long>(frac_bits);
    else
        den <<= static_cast<unsigned long>(-frac_bits);
    mpz_class n;
    if (dir == RoundDir::Down)
        mpz_fdiv_q(n.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else
        mpz_cdiv_q(n.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return Dyadic(std::move(n), -frac_bits);
}

mpq_class Dyadic::to_mpq() const {
    mpq_class q(mant_);
    if (exp_ >= 0) {
        mpz_class scale = mpz_class(1) << static_cast<unsigned long>(exp_);
        q *= mpq_class(scale);
    } else {
        mpz_class scale = mpz_class(1) << static_cast<unsigned long>(-exp_);
        q /= mpq_class(scale);
    }
    return q;
}

double Dyadic::to_double() const {
    return mant_.get_d() * std::ldexp(1.0, static_cast<int>(std::max<long>(std::min<long>(exp_, 40000), -40000)));
}

mpz_class Dyadic::floor() const {
    mpz_class r;
    if (exp_ >= 0)
        r = mant_ << static_cast<unsigned long>(exp_);
    else
        mpz_fdiv_q_2exp(r.get_mpz_t(), mant_.get_mpz_t(), static_cast<unsigned long>(-exp_));
    return r;
}

mpz_class Dyadic::ceil() const {
    mpz_class r;
    if (exp_ >= 0)
        r = mant_ << static_cast<unsigned long>(exp_);
    else
        mpz_cdiv_q_2exp(r.get_mpz_t(), mant_.get_mpz_t(), static_cast<unsigned long>(-exp_));
    return r;
}

long Dyadic::magnitude_exponent() const {
    if (mant_ == 0) return 0;
    size_t bits = mpz_sizeinbase(mant_.get_mpz_t(), 2);
    return static_cast<long>(bits) + exp_;
}

Dyadic Dyadic::round_to(long frac_bits, RoundDir dir) const {
    if (mant_ == 0) return Dyadic();
    long drop = -frac_bits - exp_; // bits to discard
    if (drop <= 0) return *this;   // already on a finer grid
    mpz_class n;
    if (dir == RoundDir::Down)
        mpz_fdiv_q_2exp(n.get_mpz_t(), mant_.get_mpz_t(), static_cast<unsigned long>(drop));
    else
        mpz_cdiv_q_2exp(n.get_mpz_t(), mant_.get_mpz_t(), static_cast<unsigned long>(drop));
    return Dyadic(std::move(n), -frac_bits);
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.mant_ == 0) return b;
    if (b.mant_ == 0) return a;
    long e = std::min(a.exp_, b.exp_);
    mpz_class ma = a.mant_ << static_cast<unsigned long>(a.exp_ - e);
    mpz_class mb = b.mant_ << static_cast<unsigned long>(b.exp_ - e);
    return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_);
}

Dyadic operator*(const Dyadic& a, const mpz_class& k) {
    return Dyadic(a.mant_ * k, a.exp_);
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
    int sa = sgn(a.mant_), sb = sgn(b.mant_);
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    long e = std::min(a.exp_, b.exp_);
    mpz_class ma = a.mant_ << static_cast<unsigned long>(a.exp_ - e);
    mpz_class mb = b.mant_ << static_cast<unsigned long>(b.exp_ - e);
    return ::cmp(ma, mb);
}

mpz_class floor_scaled_pow10(const mpq_class& v, int digits) {
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = v.get_num() * p10;
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    return r;
}

std::string decimal_of_mpq(const mpq_class& v, int digits, RoundDir dir) {
    if (digits < 0) throw std::invalid_argument("decimal_of_mpq: digits must be >= 0");
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class num = v.get_num() * p10;
    mpz_class scaled;
    if (dir == RoundDir::Down)
        mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    else
        mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), v.get_den().get_mpz_t());
    bool neg = scaled < 0;
    mpz_class a = neg ? mpz_class(-scaled) : scaled;
    std::string ds = a.get_str();
    if (static_cast<int>(ds.size()) <= digits)
        ds = std::string(digits + 1 - ds.size(), '0') + ds;
    std::string out = ds.substr(0, ds.size() - digits);
    if (digits > 0) out += "." + ds.substr(ds.size() - digits);
    return neg ? "-" + out : out;
}

std::string Dyadic::to_decimal(int digits, RoundDir dir) const {
    return decimal_of_mpq(to_mpq(), digits, dir);
}

} // namespace simra
