#include "simra/oracle.hpp"

#include "simra/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

namespace simra {

struct RealOracle::Impl {
    Kind kind;

    // Algebraic state
    IntPolynomial poly;
    mutable std::mutex mu;
    mutable mpq_class lo, hi; // current bracket, monotonically shrinking
    mutable bool exact_hit = false;
    std::optional<mpq_class> rational_value;

    // Decimal state
    mpq_class literal;
    long cap = -1;

    std::string description;

    // power enclosure cache: power -> (frac_bits, interval)
    mutable std::map<unsigned, std::pair<long, Interval>> pow_cache;
};

namespace {

mpq_class parse_rational(const std::string& s) {
    if (s.find('/') != std::string::npos) {
        mpq_class q(s, 10);
        q.canonicalize();
        return q;
    }
    // also accept decimal point notation in interval endpoints
    if (s.find('.') != std::string::npos) {
        size_t dot = s.find('.');
        std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
        if (ip.empty() || ip == "-" || ip == "+") ip += "0";
        mpz_class num(ip + fp, 10);
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
        if (!ip.empty() && ip[0] == '-' && num >= 0) num = -num; // "-0.5" case
        mpq_class q(num, den);
        q.canonicalize();
        return q;
    }
    mpq_class q{mpz_class(s, 10)};
    return q;
}

} // namespace

RealOracle RealOracle::algebraic(IntPolynomial p, mpq_class iso_lo, mpq_class iso_hi) {
    if (p.degree() < 1) throw std::invalid_argument("algebraic oracle: polynomial must be nonconstant");
    if (!(iso_lo < iso_hi)) throw std::invalid_argument("algebraic oracle: empty isolating interval");
    int slo = p.sign_at(iso_lo), shi = p.sign_at(iso_hi);
    if (slo == 0 || shi == 0)
        throw std::invalid_argument("algebraic oracle: isolating endpoints must not be roots");
    if (slo == shi)
        throw std::invalid_argument("algebraic oracle: no sign change on isolating interval");
    int v = descartes_variation_in(p, iso_lo, iso_hi);
    if (v != 1)
        throw ambiguous_root_count("algebraic oracle: Descartes count " + std::to_string(v) +
                                   " on isolating interval of " + p.to_string());
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::Algebraic;
    impl->poly = p;
    impl->lo = iso_lo;
    impl->hi = iso_hi;
    if (p.degree() == 1) {
        // root = -c0/c1 exactly
        mpq_class r(-p.coeffs()[0], p.coeffs()[1]);
        r.canonicalize();
        impl->rational_value = r;
        impl->lo = impl->hi = r;
        impl->exact_hit = true;
    }
    impl->description = "alg:" + p.to_string() + ":" + iso_lo.get_str() + "," + iso_hi.get_str();
    RealOracle o;
    o.impl_ = std::move(impl);
    return o;
}

RealOracle RealOracle::decimal(const std::string& digits, long cap_bits) {
    mpq_class v = parse_rational(digits);
    long frac_digits = 0;
    size_t dot = digits.find('.');
    if (dot != std::string::npos) frac_digits = static_cast<long>(digits.size() - dot - 1);
    long cap = cap_bits > 0 ? cap_bits
                            : std::max<long>(4, static_cast<long>(std::ceil(frac_digits * 3.3219280948873623)));
    auto impl = std::make_shared<Impl>();
    impl->kind = Kind::DecimalLiteral;
    impl->literal = v;
    impl->cap = cap;
    impl->description = "dec:" + digits + ":" + std::to_string(cap);
    RealOracle o;
    o.impl_ = std::move(impl);
    return o;
}

RealOracle RealOracle::parse(const std::string& literal) {
    if (literal.rfind("alg:", 0) == 0) {
        std::string rest = literal.substr(4);
        size_t colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("oracle literal: expected alg:<coeffs>:<lo>,<hi>");
        IntPolynomial p = IntPolynomial::parse(rest.substr(0, colon));
        std::string iv = rest.substr(colon + 1);
        size_t comma = iv.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("oracle literal: expected <lo>,<hi> isolating interval");
        return algebraic(p, parse_rational(iv.substr(0, comma)), parse_rational(iv.substr(comma + 1)));
    }
    if (literal.rfind("dec:", 0) == 0) {
        std::string rest = literal.substr(4);
        size_t colon = rest.find(':');
        if (colon == std::string::npos) return decimal(rest);
        return decimal(rest.substr(0, colon), std::stol(rest.substr(colon + 1)));
    }
    throw std::invalid_argument("oracle literal must start with alg: or dec:");
}

RealOracle::Kind RealOracle::kind() const { return impl_->kind; }

unsigned RealOracle::algebraic_degree() const {
    return impl_->kind == Kind::Algebraic ? static_cast<unsigned>(impl_->poly.degree()) : 0;
}

long RealOracle::cap_bits() const { return impl_->kind == Kind::DecimalLiteral ? impl_->cap : -1; }

std::optional<mpq_class> RealOracle::exact_rational() const { return impl_->rational_value; }

std::string RealOracle::describe() const { return impl_->description; }

Interval RealOracle::enclosure(long frac_bits) const {
    Impl& im = *impl_;
    if (im.kind == Kind::DecimalLiteral) {
        if (frac_bits > im.cap)
            throw precision_exhausted("decimal literal capped at " + std::to_string(im.cap) +
                                          " bits, requested " + std::to_string(frac_bits),
                                      im.cap);
        // measurement model: value known to +- (2^-(k+1) - 2^-(k+4)); the
        // remaining 2^-(k+4) per side absorbs the dyadic rounding of the
        // literal so the total width stays <= 2^-k
        Interval point = Interval::of_mpq(im.literal, frac_bits + 4);
        Dyadic half = Dyadic::pow2(-(frac_bits + 1)) - Dyadic::pow2(-(frac_bits + 4));
        return Interval(point.lo() - half, point.hi() + half);
    }
    std::lock_guard<std::mutex> lock(im.mu);
    if (im.exact_hit) return Interval::of_mpq(im.lo, frac_bits + 2);
    mpq_class eps(mpz_class(1), mpz_class(1) << static_cast<unsigned long>(frac_bits + 1));
    if (im.hi - im.lo > eps) {
        bisect_to_width(im.poly, im.lo, im.hi, eps);
        if (im.lo == im.hi) im.exact_hit = true;
    }
    if (im.exact_hit) return Interval::of_mpq(im.lo, frac_bits + 2);
    return Interval(Dyadic::from_mpq(im.lo, frac_bits + 2, RoundDir::Down),
                    Dyadic::from_mpq(im.hi, frac_bits + 2, RoundDir::Up));
}

Interval RealOracle::power_enclosure(unsigned power, long frac_bits) const {
    if (power == 0) return Interval::of_long(1);
    if (power == 1) return enclosure(frac_bits);
    {
        std::lock_guard<std::mutex> lock(impl_->mu);
        auto it = impl_->pow_cache.find(power);
        if (it != impl_->pow_cache.end() && it->second.first >= frac_bits)
            return it->second.second;
    }
    // width(x^p) <= p * max|x|^(p-1) * width(x) plus rounding slack
    Interval probe = enclosure(4);
    long mag = std::max({probe.lo().abs().magnitude_exponent(),
                         probe.hi().abs().magnitude_exponent(), 0L});
    long extra = 8;
    for (int attempt = 0; attempt < 64; ++attempt) {
        long need = frac_bits + (static_cast<long>(power) - 1) * mag + extra;
        Interval base = enclosure(need);
        Interval r = Interval::pow_int(base, power, need + 8);
        if (!(r.width() > Dyadic::pow2(-frac_bits))) {
            std::lock_guard<std::mutex> lock(impl_->mu);
            auto it = impl_->pow_cache.find(power);
            if (it == impl_->pow_cache.end() || it->second.first < frac_bits)
                impl_->pow_cache[power] = {frac_bits, r};
            return r;
        }
        extra = extra * 2 + 8;
    }
    throw precision_exhausted("power_enclosure failed to converge", frac_bits);
}

int RealOracle::poly_sign_at_value(const IntPolynomial& p, long max_bits) const {
    if (p.is_zero()) return 0;
    if (auto q = exact_rational()) return p.sign_at(*q);
    if (impl_->kind == Kind::Algebraic && divides_rational(impl_->poly, p)) return 0;
    for (long bits = 32;; bits = std::min(bits * 2, max_bits)) {
        Interval x = enclosure(bits);
        long mag = std::max({x.lo().abs().magnitude_exponent(),
                             x.hi().abs().magnitude_exponent(), 1L});
        Interval v = p.eval_interval(x, bits + mag * (p.degree() + 1));
        if (v.lo().sign() > 0) return 1;
        if (v.hi().sign() < 0) return -1;
        if (bits >= max_bits)
            throw precision_exhausted("poly_sign_at_value: sign of " + p.to_string() +
                                          " at oracle value undecided",
                                      max_bits);
    }
}

RefinableReal RefinableReal::of_oracle(const RealOracle& o) {
    RefinableReal r;
    r.enclosure = [o](long bits) { return o.enclosure(bits); };
    r.exact = o.exact_rational();
    return r;
}

RefinableReal RefinableReal::of_mpq(const mpq_class& q) {
    RefinableReal r;
    mpq_class v = q;
    v.canonicalize();
    r.enclosure = [v](long bits) { return Interval::of_mpq(v, bits + 2); };
    r.exact = v;
    return r;
}

RefinableReal RefinableReal::of_fn(std::function<Interval(long)> fn) {
    RefinableReal r;
    r.enclosure = std::move(fn);
    return r;
}

CompareOutcome certified_compare(const RefinableReal& a, const RefinableReal& b, long max_bits) {
    if (a.exact && b.exact) {
        int c = cmp(*a.exact, *b.exact);
        if (c < 0) return {CompareResult::Less, 0, Dyadic(), Dyadic()};
        if (c > 0) return {CompareResult::Greater, 0, Dyadic(), Dyadic()};
        return {CompareResult::EqualProven, 0, Dyadic(), Dyadic()};
    }
    long bits = 16;
    long achieved = 0;
    bool a_capped = false, b_capped = false;
    Interval ia, ib;
    auto get = [&](const RefinableReal& r, bool& capped, Interval& out) {
        if (capped) return;
        try {
            out = r.enclosure(bits);
        } catch (const precision_exhausted& e) {
            capped = true;
            if (e.achieved_bits > 0) out = r.enclosure(e.achieved_bits);
        }
    };
    while (true) {
        get(a, a_capped, ia);
        get(b, b_capped, ib);
        achieved = bits;
        if (strictly_less(ia, ib)) return {CompareResult::Less, achieved, ia.width(), ib.width()};
        if (strictly_less(ib, ia)) return {CompareResult::Greater, achieved, ia.width(), ib.width()};
        if (bits >= max_bits || (a_capped && b_capped))
            return {CompareResult::Unresolved, achieved, ia.width(), ib.width()};
        bits = std::min(max_bits, bits * 2);
    }
}

} // namespace simra
