#include "simra/projections.hpp"

#include "simra/errors.hpp"

#include <stdexcept>

namespace simra {

IntegerVector window(const IntegerVector& x, size_t k, size_t ell) {
    if (x.ambient_dim() == 0) throw std::out_of_range("window: empty vector");
    const size_t n = x.ambient_dim() - 1;
    if (ell > n || k > ell) throw std::out_of_range("window: need 0 <= k <= ell <= n");
    std::vector<mpz_class> c(n + 1 - ell);
    for (size_t i = 0; i < c.size(); ++i) c[i] = x[k + i];
    return IntegerVector(std::move(c));
}

Subspace u_ell(const Subspace& a, size_t ell) {
    if (a.ambient_dim() == 0) throw std::invalid_argument("u_ell: ambient dim 0");
    const size_t n = a.ambient_dim() - 1;
    if (ell > n + 1) throw std::out_of_range("u_ell: ell > n+1");
    if (ell == n + 1) return Subspace::zero(0);
    IntMatrix windows;
    windows.reserve(a.dim() * (ell + 1));
    for (const auto& b : a.basis())
        for (size_t k = 0; k <= ell; ++k) windows.push_back(window(b, k, ell));
    return Subspace::from_spanning_set(windows, n + 1 - ell);
}

bool DimensionProfile::concave() const {
    for (size_t i = 1; i + 1 < values.size(); ++i) {
        long left = static_cast<long>(values[i]) - static_cast<long>(values[i - 1]);
        long right = static_cast<long>(values[i + 1]) - static_cast<long>(values[i]);
        if (right > left) return false;
    }
    return true;
}

bool DimensionProfile::tail_law() const {
    size_t m = n + 1;
    for (size_t ell = 0; ell < values.size(); ++ell) {
        if (values[ell] == n + 1 - ell) {
            m = ell;
            break;
        }
    }
    for (size_t ell = m; ell < values.size(); ++ell)
        if (values[ell] != n + 1 - ell) return false;
    for (size_t ell = 1; ell <= m; ++ell)
        if (values[ell] < values[ell - 1]) return false;
    return true;
}

DimensionProfile dimension_profile(const Subspace& a) {
    DimensionProfile p;
    p.n = a.ambient_dim() - 1;
    p.values.resize(p.n + 2);
    for (size_t ell = 0; ell <= p.n + 1; ++ell) p.values[ell] = u_ell(a, ell).dim();
    return p;
}

std::optional<DegeneracyReport> analyze_degeneracy(const Subspace& a, size_t j, size_t ell,
                                                   const IntMatrix& probes) {
    const size_t n = a.ambient_dim() - 1;
    if (a.dim() != j + 1)
        throw std::invalid_argument("analyze_degeneracy: dim(A) must be j+1");
    if (j + 2 * ell > n)
        throw std::invalid_argument("analyze_degeneracy: requires j + 2*ell <= n");
    const size_t d = u_ell(a, ell).dim();
    if (d > j + ell) return std::nullopt;

    auto fail = [&](const std::string& what) {
        throw contract_violation("analyze_degeneracy: " + what + " [A=" + a.to_string() +
                                 ", j=" + std::to_string(j) + ", ell=" + std::to_string(ell) +
                                 ", d=" + std::to_string(d) + "]");
    };
    if (d < j + 1) fail("d < j+1");
    const size_t t_lo = d - j - 1;
    if (!(t_lo < ell)) fail("d-j-1 < ell violated");
    if (!(ell <= n - d)) fail("ell <= n-d violated");
    const size_t t_hi = n - d;

    DegeneracyReport rep;
    rep.d = d;
    rep.t_lo = t_lo;
    rep.t_hi = t_hi;
    rep.V = u_ell(a, t_hi);
    if (rep.V.dim() != d) fail("dim U^(n-d)(A) != d");

    for (size_t t = t_lo; t <= t_hi; ++t) {
        Subspace ut = u_ell(a, t);
        if (ut.dim() != d) fail("dim U^t(A) != d at t=" + std::to_string(t));
        // H(U^t(A))^2 / H(V)^(2(n-d-t+1)), exact rational diagnostic
        mpz_class denom;
        mpz_pow_ui(denom.get_mpz_t(), rep.V.height_squared().get_mpz_t(),
                   static_cast<unsigned long>(t_hi - t + 1));
        mpq_class ratio(ut.height_squared(), denom);
        ratio.canonicalize();
        rep.height_ratios.push_back(ratio);

        for (const auto& x : probes) {
            if (x.ambient_dim() != n + 1)
                throw std::invalid_argument("analyze_degeneracy: probe dim mismatch");
            Subspace ux_t = u_ell(Subspace::from_spanning_set({x}, n + 1), t);
            Subspace ux_nd = u_ell(Subspace::from_spanning_set({x}, n + 1), t_hi);
            bool in_t = ut.contains(ux_t);
            bool in_v = rep.V.contains(ux_nd);
            if (in_t != in_v)
                fail("membership equivalence failed at t=" + std::to_string(t) +
                     " for probe " + x.to_string());
        }
    }
    return rep;
}

IntegerVector tau_apply(const std::vector<long>& a, const IntegerVector& x, size_t ell) {
    if (a.size() != ell + 1) throw std::invalid_argument("tau_apply: |a| must be ell+1");
    const size_t n = x.ambient_dim() - 1;
    IntegerVector acc = IntegerVector::zero(n + 1 - ell);
    for (size_t k = 0; k <= ell; ++k) {
        if (a[k] == 0) continue;
        acc = acc + (mpz_class(a[k]) * window(x, k, ell));
    }
    return acc;
}

namespace {

// Enumerate coefficient vectors with l1 norm exactly `rem` in descending
// lexicographic order (each component scanned from +rem down to -rem).
bool search_shell(std::vector<long>& a, size_t pos, long rem, const Subspace& A, size_t ell,
                  const Subspace& V) {
    if (pos + 1 == a.size()) {
        for (long v : rem == 0 ? std::vector<long>{0} : std::vector<long>{rem, -rem}) {
            a[pos] = v;
            IntMatrix images;
            bool escapes = false;
            for (const auto& b : A.basis()) {
                IntegerVector img = tau_apply(a, b, ell);
                if (!V.contains(img)) escapes = true;
                images.push_back(std::move(img));
            }
            if (escapes && rank_of(images) == A.dim()) return true;
        }
        return false;
    }
    for (long v = rem; v >= -rem; --v) {
        a[pos] = v;
        if (search_shell(a, pos + 1, rem - std::labs(v), A, ell, V)) return true;
    }
    return false;
}

} // namespace

std::vector<long> find_avoiding_map(const Subspace& a, size_t ell, const Subspace& v) {
    const size_t n = a.ambient_dim() - 1;
    if (ell > n) throw std::invalid_argument("find_avoiding_map: ell > n");
    if (v.ambient_dim() != n + 1 - ell)
        throw std::invalid_argument("find_avoiding_map: V must live in R^(n-ell+1)");
    if (a.dim() > n - ell + 1)
        throw hypothesis_unmet("find_avoiding_map: dim(A) > n-ell+1");
    if (v.contains(u_ell(a, ell)))
        throw hypothesis_unmet("find_avoiding_map: U^ell(A) contained in V");

    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), n + 1, static_cast<unsigned long>(ell));
    std::vector<long> coeffs(ell + 1, 0);
    for (mpz_class s = 1; s <= bound; ++s) {
        if (!s.fits_slong_p())
            throw contract_violation("find_avoiding_map: shell norm exceeds long range");
        if (search_shell(coeffs, 0, s.get_si(), a, ell, v)) return coeffs;
    }
    throw contract_violation("find_avoiding_map: search exhausted up to (n+1)^ell = " +
                             bound.get_str() + " for A=" + a.to_string());
}

} // namespace simra
