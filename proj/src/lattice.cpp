#include "simra/lattice.hpp"

#include "simra/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace simra {

IntegerVector IntegerVector::unit(size_t ambient, size_t index) {
    std::vector<mpz_class> c(ambient);
    c.at(index) = 1;
    return IntegerVector(std::move(c));
}

bool IntegerVector::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

mpz_class IntegerVector::norm_squared() const {
    mpz_class s = 0;
    for (const auto& x : c_) s += x * x;
    return s;
}

mpz_class IntegerVector::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

IntegerVector IntegerVector::primitive() const {
    mpz_class g = content();
    if (g <= 1) return *this;
    std::vector<mpz_class> c(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] / g;
    return IntegerVector(std::move(c));
}

IntegerVector operator+(const IntegerVector& a, const IntegerVector& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("vector dim mismatch");
    std::vector<mpz_class> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return IntegerVector(std::move(c));
}

IntegerVector operator-(const IntegerVector& a, const IntegerVector& b) {
    if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("vector dim mismatch");
    std::vector<mpz_class> c(a.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return IntegerVector(std::move(c));
}

IntegerVector operator*(const mpz_class& k, const IntegerVector& v) {
    std::vector<mpz_class> c(v.c_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = k * v.c_[i];
    return IntegerVector(std::move(c));
}

std::string IntegerVector::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].get_str();
    }
    return s + ")";
}

IntMatrix hnf_rows(IntMatrix rows) {
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const IntegerVector& r) { return r.is_zero(); }),
               rows.end());
    if (rows.empty()) return rows;
    const size_t cols = rows[0].ambient_dim();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        // Euclidean elimination below row r in column c
        while (true) {
            size_t best = rows.size();
            for (size_t i = r; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                if (best == rows.size() ||
                    cmp(abs(rows[i][c]), abs(rows[best][c])) < 0)
                    best = i;
            }
            if (best == rows.size()) break; // column clear below r
            std::swap(rows[r], rows[best]);
            bool clean = true;
            for (size_t i = r + 1; i < rows.size(); ++i) {
                if (rows[i][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
                if (q != 0)
                    rows[i] = rows[i] - (q * rows[r]);
                if (rows[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[r][c] == 0) continue;
        if (rows[r][c] < 0) rows[r] = mpz_class(-1) * rows[r];
        // reduce the entries above the pivot into [0, pivot)
        for (size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
            if (q != 0) rows[i] = rows[i] - (q * rows[r]);
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

size_t rank_of(const IntMatrix& rows) { return hnf_rows(rows).size(); }

IntMatrix integer_kernel(const IntMatrix& rows, size_t ambient) {
    // Row-reduce [M^T | I] over the first `rows.size()` columns; the
    // identity parts of the rows whose M^T part vanishes form a basis of
    // { x : M x = 0 }, automatically saturated.
    const size_t k = rows.size();
    IntMatrix aug;
    aug.reserve(ambient);
    for (size_t i = 0; i < ambient; ++i) {
        std::vector<mpz_class> row(k + ambient);
        for (size_t j = 0; j < k; ++j) row[j] = rows[j][i];
        row[k + i] = 1;
        aug.emplace_back(std::move(row));
    }
    size_t r = 0;
    for (size_t c = 0; c < k && r < aug.size(); ++c) {
        while (true) {
            size_t best = aug.size();
            for (size_t i = r; i < aug.size(); ++i) {
                if (aug[i][c] == 0) continue;
                if (best == aug.size() || cmp(abs(aug[i][c]), abs(aug[best][c])) < 0) best = i;
            }
            if (best == aug.size()) break;
            std::swap(aug[r], aug[best]);
            bool clean = true;
            for (size_t i = r + 1; i < aug.size(); ++i) {
                if (aug[i][c] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), aug[i][c].get_mpz_t(), aug[r][c].get_mpz_t());
                if (q != 0) aug[i] = aug[i] - (q * aug[r]);
                if (aug[i][c] != 0) clean = false;
            }
            if (clean) break;
        }
        if (aug[r][c] != 0) ++r;
    }
    IntMatrix kernel;
    for (size_t i = r; i < aug.size(); ++i) {
        std::vector<mpz_class> x(ambient);
        for (size_t j = 0; j < ambient; ++j) x[j] = aug[i][k + j];
        kernel.emplace_back(std::move(x));
    }
    return hnf_rows(std::move(kernel));
}

mpz_class det_int(const std::vector<std::vector<mpz_class>>& m) {
    const size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("det_int: not square");
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> a = m;
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : mpz_class(-a[n - 1][n - 1]);
}

mpz_class wedge_norm_squared(const IntMatrix& rows) {
    const size_t k = rows.size();
    std::vector<std::vector<mpz_class>> gram(k, std::vector<mpz_class>(k));
    for (size_t i = 0; i < k; ++i)
        for (size_t j = i; j < k; ++j) {
            mpz_class s = 0;
            for (size_t t = 0; t < rows[i].ambient_dim(); ++t) s += rows[i][t] * rows[j][t];
            gram[i][j] = s;
            if (i != j) gram[j][i] = s;
        }
    return det_int(gram);
}

std::vector<mpz_class> plucker_coordinates(const IntMatrix& rows) {
    if (rows.empty()) return {mpz_class(1)};
    const size_t m = rows[0].ambient_dim();
    const size_t k = rows.size();
    if (m > 12) throw std::invalid_argument("plucker_coordinates: ambient_dim > 12");
    if (k > m) throw std::invalid_argument("plucker_coordinates: more rows than columns");
    std::vector<size_t> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = i;
    std::vector<mpz_class> out;
    while (true) {
        std::vector<std::vector<mpz_class>> minor(k, std::vector<mpz_class>(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) minor[i][j] = rows[i][idx[j]];
        out.push_back(det_int(minor));
        // next lexicographic combination
        size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] != i + m - k) {
                ++idx[i];
                for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0) return out;
        }
        if (k == 0) return out;
    }
}

Subspace::Subspace(size_t ambient, IntMatrix basis) : ambient_(ambient), basis_(std::move(basis)) {
    height_sq_ = basis_.empty() ? mpz_class(1) : wedge_norm_squared(basis_);
}

Subspace Subspace::zero(size_t ambient) { return Subspace(ambient, {}); }

Subspace Subspace::full(size_t ambient) {
    IntMatrix id;
    for (size_t i = 0; i < ambient; ++i) id.push_back(IntegerVector::unit(ambient, i));
    return Subspace(ambient, std::move(id));
}

Subspace Subspace::from_spanning_set(const IntMatrix& vectors, size_t ambient) {
    IntMatrix nz;
    for (const auto& v : vectors) {
        if (v.ambient_dim() != ambient) throw std::invalid_argument("spanning set: dim mismatch");
        if (!v.is_zero()) nz.push_back(v);
    }
    if (nz.empty()) return zero(ambient);
    // saturation = kernel of the orthogonal kernel
    IntMatrix perp = integer_kernel(nz, ambient);
    IntMatrix sat = integer_kernel(perp, ambient);
    return Subspace(ambient, std::move(sat));
}

Subspace Subspace::from_canonical_basis(IntMatrix basis, size_t ambient) {
    return Subspace(ambient, std::move(basis));
}

bool Subspace::contains(const IntegerVector& x) const {
    if (x.ambient_dim() != ambient_) throw std::invalid_argument("contains: dim mismatch");
    if (x.is_zero()) return true;
    IntMatrix rows = basis_;
    rows.push_back(x);
    return rank_of(rows) == dim();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_) throw std::invalid_argument("contains: dim mismatch");
    IntMatrix rows = basis_;
    for (const auto& v : other.basis_) rows.push_back(v);
    return rank_of(rows) == dim();
}

std::string Subspace::to_string() const {
    std::string s = "Subspace(ambient=" + std::to_string(ambient_) + ", dim=" + std::to_string(dim()) + ", basis=[";
    for (size_t i = 0; i < basis_.size(); ++i) {
        if (i) s += ", ";
        s += basis_[i].to_string();
    }
    return s + "], H^2=" + height_sq_.get_str() + ")";
}

Subspace orthogonal_complement(const Subspace& v) {
    if (v.is_zero()) return Subspace::full(v.ambient_dim());
    return Subspace::from_canonical_basis(integer_kernel(v.basis(), v.ambient_dim()), v.ambient_dim());
}

Subspace sum(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
    IntMatrix rows = u.basis();
    for (const auto& r : v.basis()) rows.push_back(r);
    return Subspace::from_spanning_set(rows, u.ambient_dim());
}

Subspace intersect(const Subspace& u, const Subspace& v) {
    if (u.ambient_dim() != v.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
    // U cap V = (U^perp + V^perp)^perp, all saturated along the way
    IntMatrix rows;
    if (!u.is_zero())
        rows = integer_kernel(u.basis(), u.ambient_dim());
    else
        rows = Subspace::full(u.ambient_dim()).basis();
    IntMatrix vperp;
    if (!v.is_zero())
        vperp = integer_kernel(v.basis(), v.ambient_dim());
    else
        vperp = Subspace::full(v.ambient_dim()).basis();
    for (auto& r : vperp) rows.push_back(std::move(r));
    return Subspace::from_canonical_basis(integer_kernel(rows, u.ambient_dim()), u.ambient_dim());
}

Interval L_xi(const IntegerVector& x, const RealOracle& xi, long frac_bits) {
    if (x.is_zero()) throw std::invalid_argument("L_xi: zero vector");
    const size_t m = x.ambient_dim() - 1;
    if (m == 0) throw std::invalid_argument("L_xi: need ambient dim >= 2");
    long extra = 4;
    for (int attempt = 0; attempt < 64; ++attempt) {
        long x0mag = Dyadic(x[0]).abs().magnitude_exponent();
        long bits = frac_bits + x0mag + extra;
        std::vector<Interval> terms;
        terms.reserve(m);
        for (size_t j = 1; j <= m; ++j) {
            Interval pj = xi.power_enclosure(static_cast<unsigned>(j), bits);
            Interval t = pj * Interval(Dyadic(x[0])) - Interval(Dyadic(x[j]));
            terms.push_back(t);
        }
        Interval r = max_abs(terms.data(), terms.size());
        if (!(r.width() > Dyadic::pow2(-frac_bits))) return r;
        extra = extra * 2 + 8;
    }
    throw precision_exhausted("L_xi failed to converge", frac_bits);
}

Interval hadamard_ratio(const IntMatrix& rows, const RealOracle& xi, long frac_bits) {
    if (rows.empty()) throw std::invalid_argument("hadamard_ratio: empty");
    mpz_class w2 = wedge_norm_squared(rows);
    Interval wedge = sqrt_interval(Interval(Dyadic(w2)), frac_bits + 16);
    Interval denom = Interval::of_long(0);
    for (size_t i = 0; i < rows.size(); ++i) {
        Interval term = sqrt_interval(Interval(Dyadic(rows[i].norm_squared())), frac_bits + 16);
        for (size_t j = 0; j < rows.size(); ++j) {
            if (j == i) continue;
            term = (term * L_xi(rows[j], xi, frac_bits + 16)).round_out(frac_bits + 16);
        }
        denom = denom + term;
    }
    return Interval::div(wedge, denom, frac_bits);
}

} // namespace simra
