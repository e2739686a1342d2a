#include "simra/polynomial.hpp"

#include "simra/errors.hpp"

#include <sstream>

namespace simra {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::parse(const std::string& s) {
    std::vector<mpz_class> coeffs;
    std::string tok;
    std::stringstream ss(s);
    while (std::getline(ss, tok, ',')) {
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) throw std::invalid_argument("empty polynomial coefficient");
        coeffs.emplace_back(mpz_class(tok.substr(a, b - a + 1), 10));
    }
    return IntPolynomial(std::move(coeffs));
}

mpq_class IntPolynomial::eval(const mpq_class& x) const {
    mpq_class acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * x + mpq_class(*it);
    return acc;
}

Interval IntPolynomial::eval_interval(const Interval& x, long frac_bits) const {
    Interval acc = Interval::of_long(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = (acc * x + Interval(Dyadic(*it))).round_out(frac_bits);
    return acc;
}

int IntPolynomial::descartes_sign_changes() const {
    int changes = 0, prev = 0;
    for (const auto& c : c_) {
        int s = sgn(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<mpz_class> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> out(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < out.size(); ++i) {
        if (i < a.c_.size()) out[i] += a.c_[i];
        if (i < b.c_.size()) out[i] -= b.c_[i];
    }
    return IntPolynomial(std::move(out));
}

bool divides_rational(const IntPolynomial& d, const IntPolynomial& p) {
    if (d.is_zero()) return p.is_zero();
    if (p.is_zero()) return true;
    if (p.degree() < d.degree()) return false;
    std::vector<mpq_class> rem(p.coeffs().begin(), p.coeffs().end());
    const auto& dc = d.coeffs();
    mpq_class lead(dc.back());
    for (size_t top = rem.size(); top-- >= dc.size();) {
        mpq_class f = rem[top] / lead;
        if (f == 0) continue;
        size_t off = top - (dc.size() - 1);
        for (size_t i = 0; i < dc.size(); ++i) rem[off + i] -= f * mpq_class(dc[i]);
    }
    for (size_t i = 0; i + 1 < dc.size() && i < rem.size(); ++i)
        if (rem[i] != 0) return false;
    return true;
}

std::string IntPolynomial::to_string() const {
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].get_str();
    }
    return s.empty() ? "0" : s;
}

namespace {

// Coefficients of (1+t)^d * p((a + b t)/(1 + t)) up to a positive factor
// (denominators of a and b cleared).  Sign variations of this sequence
// bound the number of roots of p in the open interval (a, b).
std::vector<mpz_class> moebius_transform(const IntPolynomial& p, const mpq_class& a,
                                         const mpq_class& b) {
    int d = p.degree();
    if (d < 0) return {};
    // common denominator D: evaluate with A = a*D, B = b*D over Z, scaling by D^d
    mpz_class da = a.get_den(), db = b.get_den();
    mpz_class D;
    mpz_lcm(D.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
    mpz_class A = a.get_num() * (D / da);
    mpz_class B = b.get_num() * (D / db);

    // pow_lin[i] = coefficients of (A + B t)^i; pow_one[i] = (1 + t)^i
    std::vector<std::vector<mpz_class>> pow_lin(d + 1), pow_one(d + 1);
    pow_lin[0] = {mpz_class(1)};
    pow_one[0] = {mpz_class(1)};
    for (int i = 1; i <= d; ++i) {
        const auto& pl = pow_lin[i - 1];
        std::vector<mpz_class> nl(pl.size() + 1, mpz_class(0));
        for (size_t k = 0; k < pl.size(); ++k) {
            nl[k] += pl[k] * A;
            nl[k + 1] += pl[k] * B;
        }
        pow_lin[i] = std::move(nl);
        const auto& po = pow_one[i - 1];
        std::vector<mpz_class> no(po.size() + 1, mpz_class(0));
        for (size_t k = 0; k < po.size(); ++k) {
            no[k] += po[k];
            no[k + 1] += po[k];
        }
        pow_one[i] = std::move(no);
    }

    std::vector<mpz_class> out(d + 1, mpz_class(0));
    mpz_class scale; // D^(d-i) factor keeps everything integral
    for (int i = 0; i <= d; ++i) {
        const mpz_class& ci = p.coeffs()[i];
        if (ci == 0) continue;
        mpz_pow_ui(scale.get_mpz_t(), D.get_mpz_t(), static_cast<unsigned long>(d - i));
        // c_i * D^(d-i) * (A+Bt)^i * (1+t)^(d-i)
        const auto& li = pow_lin[i];
        const auto& oi = pow_one[d - i];
        for (size_t u = 0; u < li.size(); ++u) {
            if (li[u] == 0) continue;
            mpz_class f = ci * scale * li[u];
            for (size_t v = 0; v < oi.size(); ++v)
                out[u + v] += f * oi[v];
        }
    }
    return out;
}

int sign_variations(const std::vector<mpz_class>& cs) {
    int changes = 0, prev = 0;
    for (const auto& c : cs) {
        int s = sgn(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++changes;
        prev = s;
    }
    return changes;
}

void isolate_rec(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi,
                 std::vector<IsolatedRoot>& out, int depth) {
    int v = descartes_variation_in(p, lo, hi);
    if (v == 0) return;
    if (v == 1) {
        out.push_back({lo, hi, false});
        return;
    }
    if (depth <= 0)
        throw ambiguous_root_count("root isolation depth exhausted on (" + lo.get_str() + ", " +
                                   hi.get_str() + ") for poly " + p.to_string());
    mpq_class mid = (lo + hi) / 2;
    if (p.sign_at(mid) == 0) out.push_back({mid, mid, true});
    isolate_rec(p, lo, mid, out, depth - 1);
    isolate_rec(p, mid, hi, out, depth - 1);
}

} // namespace

int descartes_variation_in(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi) {
    if (!(lo < hi)) throw std::invalid_argument("descartes_variation_in: empty interval");
    return sign_variations(moebius_transform(p, lo, hi));
}

std::vector<IsolatedRoot> isolate_roots_in(const IntPolynomial& p, const mpq_class& lo,
                                           const mpq_class& hi, int max_depth) {
    if (p.degree() <= 0) return {};
    std::vector<IsolatedRoot> out;
    isolate_rec(p, lo, hi, out, max_depth);
    return out;
}

std::vector<IsolatedRoot> isolate_positive_roots(const IntPolynomial& p, int max_depth) {
    if (p.degree() <= 0) return {};
    // Cauchy bound: 1 + max |c_i| / |c_d|
    mpz_class maxc = 0;
    for (const auto& c : p.coeffs()) {
        mpz_class a = abs(c);
        if (a > maxc) maxc = a;
    }
    mpz_class lead = abs(p.coeffs().back());
    mpz_class bq;
    mpz_cdiv_q(bq.get_mpz_t(), maxc.get_mpz_t(), lead.get_mpz_t());
    mpq_class bound = mpq_class(bq + 1);
    std::vector<IsolatedRoot> out;
    if (p.sign_at(bound) == 0) out.push_back({bound, bound, true});
    isolate_rec(p, mpq_class(0), bound, out, max_depth);
    return out;
}

void bisect_to_width(const IntPolynomial& p, mpq_class& lo, mpq_class& hi, const mpq_class& eps) {
    int slo = p.sign_at(lo);
    int shi = p.sign_at(hi);
    if (slo == 0 || shi == 0 || slo == shi)
        throw std::invalid_argument("bisect_to_width: endpoints must have opposite nonzero signs");
    while (hi - lo > eps) {
        mpq_class mid = (lo + hi) / 2;
        int sm = p.sign_at(mid);
        if (sm == 0) { // rational root: collapse the bracket
            lo = mid;
            hi = mid;
            return;
        }
        if (sm == slo)
            lo = mid;
        else
            hi = mid;
    }
}

namespace {

Interval refine_isolated(const IntPolynomial& p, IsolatedRoot r, long frac_bits) {
    if (r.exact) return Interval::of_mpq(r.lo, frac_bits + 2);
    mpq_class eps(mpz_class(1), mpz_class(1) << static_cast<unsigned long>(frac_bits + 1));
    // The isolating interval is open with one simple root inside, so the
    // endpoint signs are opposite unless an endpoint evaluates to zero --
    // excluded by construction (we only isolate with nonzero endpoint signs).
    mpq_class lo = r.lo, hi = r.hi;
    bisect_to_width(p, lo, hi, eps);
    if (lo == hi) return Interval::of_mpq(lo, frac_bits + 2);
    return Interval(Dyadic::from_mpq(lo, frac_bits + 2, RoundDir::Down),
                    Dyadic::from_mpq(hi, frac_bits + 2, RoundDir::Up));
}

} // namespace

Interval unique_positive_root(const IntPolynomial& p, long frac_bits) {
    auto roots = isolate_positive_roots(p);
    if (roots.empty()) throw no_positive_root("no positive root for poly " + p.to_string());
    if (roots.size() > 1)
        throw ambiguous_root_count("poly " + p.to_string() + " has " +
                                   std::to_string(roots.size()) + " positive roots");
    return refine_isolated(p, roots[0], frac_bits);
}

Interval unique_root_in(const IntPolynomial& p, const mpq_class& lo, const mpq_class& hi,
                        long frac_bits) {
    auto roots = isolate_roots_in(p, lo, hi);
    if (roots.empty()) throw no_positive_root("no root of " + p.to_string() + " in given interval");
    if (roots.size() > 1)
        throw ambiguous_root_count("poly " + p.to_string() + " has " +
                                   std::to_string(roots.size()) + " roots in given interval");
    return refine_isolated(p, roots[0], frac_bits);
}

} // namespace simra
