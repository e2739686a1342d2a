#include "simra/minimal.hpp"

#include "simra/errors.hpp"

#include <algorithm>
#include <thread>

namespace simra {

namespace {

struct PowerTable {
    long bits = 0;
    std::vector<Interval> pw; // pw[j] encloses xi^j, j = 0..n
};

PowerTable make_table(const RealOracle& xi, size_t n, long bits) {
    long cap = xi.cap_bits();
    if (cap > 0 && bits > cap) bits = cap; // capped literals give what they can
    PowerTable t;
    t.bits = bits;
    t.pw.resize(n + 1);
    for (size_t j = 0; j <= n; ++j)
        t.pw[j] = xi.power_enclosure(static_cast<unsigned>(j), bits);
    return t;
}

struct Candidate {
    bool ok = false; // rounding certified at the table precision
    IntegerVector x;
    mpz_class norm2;
    Interval L;
};

// v * k for k > 0, exact (hot path of the candidate walk)
inline Interval scale_pos(const Interval& v, const mpz_class& k) {
    return Interval(v.lo() * k, v.hi() * k);
}

// Round x0*xi^j for every j with certificates; fails (ok=false) when some
// enclosure straddles the half-integer grid at this precision.
Candidate try_candidate(const mpz_class& x0, const PowerTable& t, size_t n) {
    Candidate c;
    std::vector<mpz_class> coords(n + 1);
    coords[0] = x0;
    std::vector<Interval> errs;
    errs.reserve(n);
    for (size_t j = 1; j <= n; ++j) {
        Interval v = scale_pos(t.pw[j], x0);
        Dyadic mid = v.mid();
        mpz_class r = (mid + Dyadic::one_half()).floor();
        Dyadic rlo = Dyadic(r) - Dyadic::one_half();
        Dyadic rhi = Dyadic(r) + Dyadic::one_half();
        if (!(rlo < v.lo() && v.hi() < rhi)) return c; // not separated
        coords[j] = r;
        errs.push_back(v - Interval(Dyadic(r)));
    }
    c.x = IntegerVector(std::move(coords));
    c.norm2 = c.x.norm_squared();
    c.L = max_abs(errs.data(), errs.size());
    c.ok = true;
    return c;
}

Candidate candidate_adaptive(const mpz_class& x0, const RealOracle& xi, size_t n, long start_bits,
                             long max_bits) {
    long x0mag = Dyadic(x0).magnitude_exponent();
    long bits = start_bits;
    while (true) {
        PowerTable t = make_table(xi, n, bits + x0mag);
        Candidate c = try_candidate(x0, t, n);
        if (c.ok) return c;
        if (bits >= max_bits)
            throw rounding_unresolved("candidate: x0=" + x0.get_str() +
                                          " straddles a half-integer at max_bits",
                                      max_bits);
        bits = std::min(bits * 2, max_bits);
    }
}

// x0 * t^j - x_j as an integer polynomial in t.
IntPolynomial coordinate_form(const IntegerVector& x, size_t j) {
    std::vector<mpz_class> c(j + 1);
    c[0] = -x[j];
    c[j] = x[0];
    return IntPolynomial(std::move(c));
}

// max_i |A_i(xi)| <= max_j |B_j(xi)|, decided exactly through squared-form
// differences (possible because |u| <= |v| iff u^2 - v^2 <= 0 and the
// squared forms are again integer polynomials in xi).
bool L_less_equal_exact(const IntegerVector& xa, const IntegerVector& xb, const RealOracle& xi,
                        long max_bits) {
    const size_t n = xa.ambient_dim() - 1;
    for (size_t i = 1; i <= n; ++i) {
        IntPolynomial ai = coordinate_form(xa, i);
        IntPolynomial ai2 = ai * ai;
        bool dominated = false;
        for (size_t j = 1; j <= n && !dominated; ++j) {
            IntPolynomial bj = coordinate_form(xb, j);
            dominated = xi.poly_sign_at_value(ai2 - bj * bj, max_bits) <= 0;
        }
        if (!dominated) return false;
    }
    return true;
}

// Certified strict comparison of two candidates' true L values; refines
// through direct L_xi evaluation, then (for algebraic values, where exact
// ties between distinct points are possible once [Q(xi):Q] <= n) decides
// the remaining cases exactly.
bool L_strictly_less(const IntegerVector& xa, Interval La, const IntegerVector& xb, Interval Lb,
                     const RealOracle& xi, long max_bits) {
    if (strictly_less(La, Lb)) return true;
    if (strictly_less(Lb, La)) return false;
    long interval_budget = xi.kind() == RealOracle::Kind::Algebraic ? std::min(1024L, max_bits)
                                                                    : max_bits;
    for (long bits = 128; bits <= interval_budget; bits *= 2) {
        La = L_xi(xa, xi, bits);
        Lb = L_xi(xb, xi, bits);
        if (strictly_less(La, Lb)) return true;
        if (strictly_less(Lb, La)) return false;
    }
    if (xi.kind() == RealOracle::Kind::Algebraic) {
        bool ab = L_less_equal_exact(xa, xb, xi, max_bits);
        bool ba = L_less_equal_exact(xb, xa, xi, max_bits);
        if (ab && !ba) return true;
        if (!ab && ba) return false;
        if (ab && ba) return false; // exact tie: records demand strict decrease
        throw contract_violation("L comparison: exact order undecided between " + xa.to_string() +
                                 " and " + xb.to_string());
    }
    throw tie_unresolved("L tie unresolved at max_bits between " + xa.to_string() + " and " +
                             xb.to_string(),
                         max_bits);
}

void mark_I(std::vector<MinimalPointRecord>& recs) {
    for (size_t i = 1; i + 1 < recs.size(); ++i) {
        IntMatrix rows = {recs[i - 1].x, recs[i].x, recs[i + 1].x};
        recs[i].in_I = rank_of(rows) == 3;
    }
}

} // namespace

IntegerVector candidate(const mpz_class& x0, const RealOracle& xi, size_t n, long max_bits) {
    if (x0 < 1) throw std::invalid_argument("candidate: x0 must be >= 1");
    if (n < 1) throw std::invalid_argument("candidate: n must be >= 1");
    return candidate_adaptive(x0, xi, n, 64, max_bits).x;
}

std::vector<MinimalPointRecord> enumerate_minimal_points(const RealOracle& xi, size_t n,
                                                         const mpz_class& X_max,
                                                         const EnumerateOptions& opts) {
    if (n < 1) throw std::invalid_argument("enumerate_minimal_points: n must be >= 1");
    if (xi.kind() == RealOracle::Kind::Algebraic && xi.algebraic_degree() <= n &&
        opts.strict_degree)
        throw degenerate_xi("enumerate_minimal_points: [Q(xi):Q] = " +
                            std::to_string(xi.algebraic_degree()) + " <= n = " + std::to_string(n));
    std::vector<MinimalPointRecord> records;
    if (X_max < 1) return records;
    mpz_class limit2 = X_max * X_max;

    const long base_bits = 64;
    const size_t chunk = 4096;
    unsigned shards = std::max(1u, opts.shards);
    mpz_class x0 = 1;
    bool have_best = false;
    IntegerVector best_x;
    Interval best_L;

    std::vector<Candidate> slot(chunk);
    bool done = false;
    while (!done && x0 <= X_max) { // ||candidate|| >= x0, so x0 > X_max ends it
        size_t filled = chunk;
        mpz_class rem = X_max - x0 + 1;
        if (rem < static_cast<long>(chunk)) filled = static_cast<size_t>(rem.get_ui());
        // fill the chunk (parallel when sharded); results are merged in x0
        // order below, so the outcome does not depend on the shard count
        long table_bits = base_bits + Dyadic(x0 + static_cast<long>(filled)).magnitude_exponent();
        auto work = [&](unsigned tid) {
            PowerTable t = make_table(xi, n, table_bits);
            for (size_t k = tid; k < filled; k += shards) {
                mpz_class v0 = x0 + static_cast<long>(k);
                slot[k] = try_candidate(v0, t, n);
            }
        };
        if (shards == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(shards);
            for (unsigned tid = 0; tid < shards; ++tid) pool.emplace_back(work, tid);
            for (auto& th : pool) th.join();
        }

        for (size_t k = 0; k < filled; ++k) {
            mpz_class v0 = x0 + static_cast<long>(k);
            Candidate c = slot[k].ok ? std::move(slot[k])
                                     : candidate_adaptive(v0, xi, n, 2 * base_bits, opts.max_bits);
            if (c.norm2 > limit2) {
                done = true;
                break;
            }
            if (!have_best ||
                L_strictly_less(c.x, c.L, best_x, best_L, xi, opts.max_bits)) {
                MinimalPointRecord r;
                r.index = records.size();
                r.x = c.x;
                r.X_squared = c.norm2;
                r.L = c.L;
                if (!records.empty() && !(r.X_squared > records.back().X_squared))
                    throw contract_violation("enumerate: norms not strictly increasing at x0=" +
                                             v0.get_str());
                if (r.x.content() != 1)
                    throw contract_violation("enumerate: record not primitive: " + r.x.to_string());
                best_x = c.x;
                best_L = c.L;
                have_best = true;
                records.push_back(std::move(r));
            }
        }
        x0 += static_cast<long>(filled);
    }
    mark_I(records);
    return records;
}

std::vector<MinimalPointRecord> brute_force_minimal_points(const RealOracle& xi, size_t n,
                                                           const mpz_class& X_max, long max_bits) {
    if (n < 1) throw std::invalid_argument("brute_force_minimal_points: n must be >= 1");
    if (X_max > 1000)
        throw std::invalid_argument("brute_force_minimal_points: X_max > 1000 (cost guard)");
    std::vector<MinimalPointRecord> records;
    if (X_max < 1) return records;
    mpz_class limit2 = X_max * X_max;

    struct Point {
        IntegerVector x;
        mpz_class norm2;
        Interval L;
    };
    std::vector<Point> pts;

    for (mpz_class x0 = 1; x0 * x0 <= limit2; ++x0) {
        // per coordinate: the open unit window around x0*xi^j holds at
        // most one integer; find it by certified scan
        std::vector<mpz_class> coords(n + 1);
        coords[0] = x0;
        bool exists = true;
        for (size_t j = 1; j <= n && exists; ++j) {
            bool found = false;
            long bits = 64;
            while (!found) {
                long req = bits + Dyadic(x0).magnitude_exponent();
                if (xi.cap_bits() > 0) req = std::min(req, xi.cap_bits());
                Interval v = scale_pos(xi.power_enclosure(static_cast<unsigned>(j), req), x0);
                mpz_class clo = v.lo().floor() - 1;
                mpz_class chi = v.hi().ceil() + 1;
                bool ambiguous = false;
                for (mpz_class c = clo; c <= chi; ++c) {
                    Interval err = (v - Interval(Dyadic(c))).abs();
                    if (err.hi() < Dyadic::one_half()) {
                        coords[j] = c;
                        found = true;
                        break;
                    }
                    if (!(err.lo() > Dyadic::one_half())) ambiguous = true;
                }
                if (found) break;
                if (!ambiguous) {
                    exists = false; // certified: no integer within 1/2
                    break;
                }
                if (bits >= max_bits)
                    throw rounding_unresolved("brute force: x0=" + x0.get_str() +
                                                  " half-integer tie at max_bits",
                                              max_bits);
                bits = std::min(bits * 2, max_bits);
            }
        }
        if (!exists) continue;
        IntegerVector x(std::move(coords));
        mpz_class norm2 = x.norm_squared();
        if (norm2 > limit2) continue;
        Interval L = L_xi(x, xi, 64);
        pts.push_back({std::move(x), std::move(norm2), std::move(L)});
    }

    std::sort(pts.begin(), pts.end(), [&](const Point& a, const Point& b) {
        int c = cmp(a.norm2, b.norm2);
        if (c != 0) return c < 0;
        if (L_strictly_less(a.x, a.L, b.x, b.L, xi, max_bits)) return true;
        if (L_strictly_less(b.x, b.L, a.x, a.L, xi, max_bits)) return false;
        return cmp(a.x[0], b.x[0]) < 0; // exact double tie: match x0 order
    });

    for (auto& p : pts) {
        if (!records.empty() &&
            !L_strictly_less(p.x, p.L, records.back().x, records.back().L, xi, max_bits))
            continue;
        MinimalPointRecord r;
        r.index = records.size();
        r.x = std::move(p.x);
        r.X_squared = std::move(p.norm2);
        r.L = p.L;
        records.push_back(std::move(r));
    }
    mark_I(records);
    return records;
}

namespace {

// L enclosure with a certified positive lower endpoint.
Interval refine_L_positive(const MinimalPointRecord& rec, const RealOracle& xi, long frac_bits,
                           long max_bits = kDefaultMaxBits) {
    Interval L = rec.L;
    for (long bits = frac_bits; L.lo().sign() <= 0; bits *= 2) {
        if (bits > max_bits)
            throw precision_exhausted("cannot separate L from zero for " + rec.x.to_string(),
                                      bits);
        L = L_xi(rec.x, xi, bits);
    }
    return L;
}

} // namespace

StructureIndex build_structure(const std::vector<MinimalPointRecord>& records,
                               const RealOracle& xi, long frac_bits) {
    if (records.size() < 3)
        throw std::invalid_argument("build_structure: need at least 3 records");
    StructureIndex st;
    st.n = records[0].x.ambient_dim() - 1;
    for (size_t i = 1; i + 1 < records.size(); ++i)
        if (records[i].in_I) st.I.push_back(i);

    const size_t count = records.size();
    st.sigma.assign(st.n, std::vector<size_t>(count, kUndefinedIndex));
    st.Y_squared.assign(st.n, std::vector<mpz_class>(count, mpz_class(0)));
    for (size_t i = 0; i < count; ++i) {
        IntMatrix span;
        size_t dim = 0;
        for (size_t q = i; q < count; ++q) {
            span.push_back(records[q].x);
            size_t nd = rank_of(span);
            if (nd > dim && dim >= 1 && dim - 1 < st.n) {
                st.sigma[dim - 1][i] = q - 1; // plateau at dim just ended
                if (q < count) st.Y_squared[dim - 1][i] = records[q].X_squared;
            }
            dim = nd;
            if (dim == st.n + 1) break;
        }
    }

    for (size_t a = 0; a + 1 < st.I.size(); ++a) {
        size_t i = st.I[a], j = st.I[a + 1];
        if (j + 1 >= records.size() || i == 0) continue;
        // (X_j * L_{j-1}) / (X_{i+1} * L_i)
        Interval Xi1 = sqrt_interval(Interval(Dyadic(records[i + 1].X_squared)), frac_bits + 16);
        Interval Xj = sqrt_interval(Interval(Dyadic(records[j].X_squared)), frac_bits + 16);
        Interval Li = refine_L_positive(records[i], xi, frac_bits + 16);
        Interval Lj1 = refine_L_positive(records[j - 1], xi, frac_bits + 16);
        Interval num = (Xj * Lj1).round_out(frac_bits + 16);
        Interval den = (Xi1 * Li).round_out(frac_bits + 16);
        st.consecutive_ratios.push_back({{i, j}, Interval::div(num, den, frac_bits)});
    }
    return st;
}

PCheckReport check_P(const std::vector<MinimalPointRecord>& records, size_t j, size_t ell,
                     size_t i0) {
    if (records.empty()) throw std::invalid_argument("check_P: no records");
    const size_t n = records[0].x.ambient_dim() - 1;
    if (j > n || ell > n) throw std::invalid_argument("check_P: j, ell must be <= n");
    PCheckReport rep;
    rep.j = j;
    rep.ell = ell;
    rep.i0 = i0;
    rep.all_pass = true;

    for (size_t i = i0; i < records.size(); ++i) {
        // A_m(i) = span of records i.. up to the dim-(m+1) plateau; the
        // subspace is known as soon as the plateau is entered.
        std::vector<Subspace> spans;
        IntMatrix rows;
        for (size_t q = i; q < records.size() && spans.size() <= j; ++q) {
            rows.push_back(records[q].x);
            size_t d = rank_of(rows);
            if (d == spans.size() + 1)
                spans.push_back(Subspace::from_spanning_set(rows, n + 1));
        }
        if (spans.size() <= j) break; // beyond computable range
        rep.i_last = i;
        rep.any_row = true;

        PCheckRow row;
        row.i = i;
        row.pass = true;
        for (size_t m = 0; m <= j; ++m) {
            size_t d = u_ell(spans[m], ell).dim();
            if (d < m + ell + 1) {
                row.pass = false;
                row.fail_m = m;
                row.fail_dim = d;
                rep.all_pass = false;
                break;
            }
        }
        if (row.pass && j + 2 * ell > n)
            throw contract_violation(
                "check_P: pass with j+2*ell > n contradicts the dimension bound (i=" +
                std::to_string(i) + ")");
        rep.rows.push_back(row);
    }
    if (!rep.any_row) rep.all_pass = false;
    return rep;
}

ExponentEstimate estimate_exponents(const std::vector<MinimalPointRecord>& records,
                                    const RealOracle& xi, long frac_bits, size_t window) {
    if (records.size() < 2)
        throw std::invalid_argument("estimate_exponents: need at least 2 records");
    ExponentEstimate est;
    est.window = window;

    auto log_X = [&](size_t i) {
        Interval lx = log_interval(Interval(Dyadic(records[i].X_squared)), frac_bits + 16);
        return lx * Interval(Dyadic::one_half());
    };
    auto neg_log_L = [&](size_t i) {
        Interval L = refine_L_positive(records[i], xi, frac_bits + 16);
        return -log_interval(L, frac_bits + 16);
    };

    for (size_t i = 0; i < records.size(); ++i) {
        Interval nl = neg_log_L(i);
        if (records[i].X_squared > 1) {
            est.lambda_indices.push_back(i);
            est.lambda_terms.push_back(Interval::div(nl, log_X(i), frac_bits));
        }
        if (i + 1 < records.size()) {
            est.lambda_hat_indices.push_back(i);
            est.lambda_hat_terms.push_back(Interval::div(nl, log_X(i + 1), frac_bits));
        }
    }

    if (!est.lambda_terms.empty()) {
        size_t b = est.lambda_terms.size();
        size_t a = b > window ? b - window : 0;
        Dyadic lo = est.lambda_terms[a].lo(), hi = est.lambda_terms[a].hi();
        for (size_t t = a + 1; t < b; ++t) { // enclosure of the window max
            lo = std::max(lo, est.lambda_terms[t].lo());
            hi = std::max(hi, est.lambda_terms[t].hi());
        }
        est.lambda_raw_max = Interval(lo, hi);
    }
    if (!est.lambda_hat_terms.empty()) {
        size_t b = est.lambda_hat_terms.size();
        size_t a = b > window ? b - window : 0;
        Dyadic lo = est.lambda_hat_terms[a].lo(), hi = est.lambda_hat_terms[a].hi();
        for (size_t t = a + 1; t < b; ++t) { // enclosure of the window min
            lo = std::min(lo, est.lambda_hat_terms[t].lo());
            hi = std::min(hi, est.lambda_hat_terms[t].hi());
        }
        est.lambda_hat_raw_min = Interval(lo, hi);
    }

    // Window slopes: secant of -log L against log X across the trailing
    // window; the multiplicative constant in L ~ c X^-lambda cancels.
    size_t last = records.size() - 2; // last i with a successor
    if (records.size() >= 3) {
        size_t first = last >= window ? last - window + 1 : 0;
        if (first < last) {
            Interval dl = neg_log_L(last) - neg_log_L(first);
            Interval dxh = log_X(last + 1) - log_X(first + 1);
            if (dxh.lo().sign() > 0) est.lambda_hat_window_slope = Interval::div(dl, dxh, frac_bits);
            if (records[first].X_squared > 1) {
                Interval dx = log_X(last) - log_X(first);
                if (dx.lo().sign() > 0) est.lambda_window_slope = Interval::div(dl, dx, frac_bits);
            }
        }
    }
    return est;
}

IntegerVector construct_C(const Subspace& v, const IntegerVector& x, size_t k, size_t ell) {
    if (k < 1 || ell < 1) throw std::invalid_argument("construct_C: need k, ell >= 1");
    const size_t n = k + ell;
    if (v.ambient_dim() != k + 1)
        throw std::invalid_argument("construct_C: V must live in R^(k+1)");
    if (v.dim() != k) throw std::invalid_argument("construct_C: dim V must be k");
    if (x.ambient_dim() != n + 1)
        throw std::invalid_argument("construct_C: x must live in R^(n+1), n = k+ell");

    std::vector<mpz_class> c(ell + 1);
    for (size_t jj = 0; jj <= ell; ++jj) {
        std::vector<std::vector<mpz_class>> mat(k + 1, std::vector<mpz_class>(k + 1));
        for (size_t r = 0; r < k; ++r)
            for (size_t col = 0; col <= k; ++col) mat[r][col] = v.basis()[r][col];
        IntegerVector w = window(x, jj, ell);
        for (size_t col = 0; col <= k; ++col) mat[k][col] = w[col];
        c[jj] = det_int(mat);
    }
    return IntegerVector(std::move(c));
}

} // namespace simra
