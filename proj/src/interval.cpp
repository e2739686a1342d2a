#include "simra/interval.hpp"

#include "simra/errors.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace simra {

Interval::Interval(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("Interval: lo > hi");
}

Interval Interval::of_mpq(const mpq_class& q, long frac_bits) {
    return Interval(Dyadic::from_mpq(q, frac_bits, RoundDir::Down),
                    Dyadic::from_mpq(q, frac_bits, RoundDir::Up));
}

Dyadic Interval::mid() const {
    return (lo_ + hi_) * Dyadic::one_half();
}

bool Interval::contains(const mpq_class& v) const {
    return lo_.to_mpq() <= v && v <= hi_.to_mpq();
}

Interval operator+(const Interval& a, const Interval& b) {
    return Interval(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

Interval operator-(const Interval& a, const Interval& b) {
    return Interval(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

Interval operator*(const Interval& a, const Interval& b) {
    Dyadic c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    Dyadic lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo) lo = c[i];
        if (c[i] > hi) hi = c[i];
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval Interval::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    return Interval(Dyadic(), std::max(-lo_, hi_));
}

Interval Interval::round_out(long frac_bits) const {
    return Interval(lo_.round_to(frac_bits, RoundDir::Down),
                    hi_.round_to(frac_bits, RoundDir::Up));
}

Interval Interval::div(const Interval& a, const Interval& b, long frac_bits) {
    if (b.contains_zero()) throw std::domain_error("Interval::div: denominator contains zero");
    mpq_class q[4] = {a.lo_.to_mpq() / b.lo_.to_mpq(), a.lo_.to_mpq() / b.hi_.to_mpq(),
                      a.hi_.to_mpq() / b.lo_.to_mpq(), a.hi_.to_mpq() / b.hi_.to_mpq()};
    mpq_class lo = q[0], hi = q[0];
    for (int i = 1; i < 4; ++i) {
        if (q[i] < lo) lo = q[i];
        if (q[i] > hi) hi = q[i];
    }
    return Interval(Dyadic::from_mpq(lo, frac_bits, RoundDir::Down),
                    Dyadic::from_mpq(hi, frac_bits, RoundDir::Up));
}

Interval Interval::pow_int(const Interval& x, unsigned k, long frac_bits) {
    Interval acc = Interval::of_long(1);
    for (unsigned i = 0; i < k; ++i)
        acc = (acc * x).round_out(frac_bits);
    return acc;
}

Interval max_abs(const Interval* xs, size_t count) {
    if (count == 0) throw std::invalid_argument("max_abs: empty");
    Interval m = xs[0].abs();
    Dyadic lo = m.lo(), hi = m.hi();
    for (size_t i = 1; i < count; ++i) {
        Interval a = xs[i].abs();
        if (a.lo() > lo) lo = a.lo();
        if (a.hi() > hi) hi = a.hi();
    }
    return Interval(lo, hi);
}

std::string Interval::to_string(int digits) const {
    return "[" + lo_.to_decimal(digits, RoundDir::Down) + ", " + hi_.to_decimal(digits, RoundDir::Up) + "]";
}

namespace {

// floor(sqrt(d * 4^p)) * 2^-p  <=  sqrt(d); exact when d is a perfect square
// on the grid.  Directed variants below.
Dyadic sqrt_dyadic(const Dyadic& d, long p, RoundDir dir) {
    if (d.sign() < 0) throw std::domain_error("sqrt of negative value");
    if (d.is_zero()) return Dyadic();
    // N_down = floor(d*4^p), N_up = ceil(d*4^p)
    long shift = d.exponent() + 2 * p;
    mpz_class n;
    if (shift >= 0) {
        n = d.mantissa() << static_cast<unsigned long>(shift);
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        if (dir == RoundDir::Down) return Dyadic(s, -p);
        return Dyadic(s * s == n ? s : s + 1, -p);
    }
    if (dir == RoundDir::Down) {
        mpz_fdiv_q_2exp(n.get_mpz_t(), d.mantissa().get_mpz_t(), static_cast<unsigned long>(-shift));
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
        return Dyadic(s, -p);
    }
    mpz_cdiv_q_2exp(n.get_mpz_t(), d.mantissa().get_mpz_t(), static_cast<unsigned long>(-shift));
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), n.get_mpz_t());
    // s = floor(sqrt(N_up)); need s' with s'^2 >= N_up
    return Dyadic(s * s == n ? s : s + 1, -p);
}

} // namespace

Interval sqrt_interval(const Interval& x, long frac_bits) {
    if (x.lo().sign() < 0) throw std::domain_error("sqrt_interval: negative lower endpoint");
    return Interval(sqrt_dyadic(x.lo(), frac_bits, RoundDir::Down),
                    sqrt_dyadic(x.hi(), frac_bits, RoundDir::Up));
}

Interval log2_constant(long frac_bits) {
    static std::mutex mu;
    static long cached_bits = -1;
    static Interval cached;
    std::lock_guard<std::mutex> lock(mu);
    // total width: series enclosure (<= 2^-(k+2)) plus the outward
    // re-quantization at k+2 (< 2^-(k+1)), comfortably under 2^-k
    if (cached_bits >= frac_bits) return cached.round_out(frac_bits + 2);
    // ln 2 = sum_{j>=1} 1/(j*2^j); tail after J terms is < 1/((J+1)*2^J).
    for (long guard = 8;; guard *= 2) {
        long P = frac_bits + guard;
        unsigned long J = static_cast<unsigned long>(P) + 2;
        mpz_class acc = 0; // accumulates floor(2^P / (j*2^j)) summands
        for (unsigned long j = 1; j <= J; ++j) {
            if (static_cast<long>(j) > P) break;
            mpz_class term;
            mpz_class den = mpz_class(j) << j;
            mpz_class num = mpz_class(1) << static_cast<unsigned long>(P);
            mpz_fdiv_q(term.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            acc += term;
        }
        // floor error: < 1 per term (J total); tail: < 2^P/((J+1) 2^J) < 1 for J >= P.
        mpz_class err = mpz_class(J) + 2;
        Interval cand(Dyadic(acc, -P), Dyadic(acc + err, -P));
        if (!(cand.width() > Dyadic::pow2(-(frac_bits + 2)))) {
            cached = cand;
            cached_bits = frac_bits;
            return cached.round_out(frac_bits + 2);
        }
    }
}

namespace {

// ln(m / 2^s) for odd m > 2^s (i.e. u = m*2^-s in (1,2)), via
// ln u = 2 atanh(z), z = (u-1)/(u+1) in (0, 1/3).
Interval log_mantissa(const mpz_class& m, unsigned long s, long P) {
    mpz_class pow2s = mpz_class(1) << s;
    mpq_class z(m - pow2s, m + pow2s);
    Interval Z = Interval::of_mpq(z, P + 8);
    Interval Z2 = (Z * Z).round_out(P + 8);
    Interval acc{Dyadic(), Dyadic()};
    Interval zpow = Z;
    for (unsigned long j = 0;; ++j) {
        Interval term = Interval::div(zpow, Interval::of_long(static_cast<long>(2 * j + 1)), P + 8);
        acc = (acc + term).round_out(P + 4);
        if (zpow.hi().magnitude_exponent() < -(P + 4)) {
            // geometric tail: z^(2j+3)/(1-z^2) <= 2 z_hi^(2j+3) since
            // z_hi^2 <= 1/2 (z < 1/3 plus rounding slack)
            Dyadic tail = (zpow.hi() * Z2.hi() * Dyadic(2)).round_to(P + 4, RoundDir::Up);
            acc = Interval(acc.lo(), acc.hi() + tail);
            break;
        }
        zpow = (zpow * Z2).round_out(P + 8);
    }
    return (acc + acc).round_out(P);
}

Interval log_dyadic_point(const Dyadic& d, long frac_bits) {
    if (d.sign() <= 0) throw std::domain_error("log of non-positive value");
    long P = frac_bits + 8;
    // d = m * 2^e with m odd; u = m / 2^(s), E = e + s where s = bitlen(m)-1
    const mpz_class& m = d.mantissa();
    unsigned long s = mpz_sizeinbase(m.get_mpz_t(), 2) - 1;
    long E = d.exponent() + static_cast<long>(s);
    Interval res{Dyadic(), Dyadic()};
    if (m != 1) res = log_mantissa(m, s, P);
    if (E != 0) {
        Interval ln2 = log2_constant(P + 8);
        res = (res + ln2 * Interval::of_long(E)).round_out(P);
    }
    return res;
}

} // namespace

Interval log_interval(const Interval& x, long frac_bits) {
    if (x.lo().sign() <= 0) throw std::domain_error("log_interval: lower endpoint <= 0");
    Interval a = log_dyadic_point(x.lo(), frac_bits);
    Interval b = x.is_point() ? a : log_dyadic_point(x.hi(), frac_bits);
    return Interval(a.lo(), b.hi());
}

} // namespace simra
