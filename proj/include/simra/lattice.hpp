#pragma once

#include "simra/interval.hpp"
#include "simra/oracle.hpp"

#include <gmpxx.h>

#include <string>
#include <vector>

namespace simra {

// Exact integer point of R^m.
class IntegerVector {
public:
    IntegerVector() = default;
    explicit IntegerVector(std::vector<mpz_class> coords) : c_(std::move(coords)) {}
    static IntegerVector zero(size_t ambient) { return IntegerVector(std::vector<mpz_class>(ambient)); }
    static IntegerVector unit(size_t ambient, size_t index);

    size_t ambient_dim() const { return c_.size(); }
    const std::vector<mpz_class>& coords() const { return c_; }
    const mpz_class& operator[](size_t i) const { return c_[i]; }
    mpz_class& operator[](size_t i) { return c_[i]; }

    bool is_zero() const;
    mpz_class norm_squared() const;
    mpz_class content() const; // gcd of |coords|, 0 for the zero vector
    IntegerVector primitive() const;
    bool is_primitive() const { return content() == 1; }

    friend IntegerVector operator+(const IntegerVector& a, const IntegerVector& b);
    friend IntegerVector operator-(const IntegerVector& a, const IntegerVector& b);
    friend IntegerVector operator*(const mpz_class& k, const IntegerVector& v);
    friend bool operator==(const IntegerVector& a, const IntegerVector& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    std::vector<mpz_class> c_;
};

using IntMatrix = std::vector<IntegerVector>; // rows

// Unique row Hermite normal form: pivot columns strictly increasing,
// pivots positive, entries above each pivot reduced into [0, pivot).
// Zero rows are dropped.
IntMatrix hnf_rows(IntMatrix rows);

size_t rank_of(const IntMatrix& rows);

// Z-basis (rows) of { x in Z^ambient : r . x = 0 for every row r }.
// Kernels of integer matrices are saturated lattices.
IntMatrix integer_kernel(const IntMatrix& rows, size_t ambient);

// det of a square integer matrix (Bareiss, fraction-free).
mpz_class det_int(const std::vector<std::vector<mpz_class>>& m);

// ||x_1 ^ ... ^ x_k||^2 = det of the Gram matrix, exact.
mpz_class wedge_norm_squared(const IntMatrix& rows);

// Plucker coordinates (k x k minors in lexicographic column order);
// guarded to ambient_dim <= 12 where the count stays reasonable.
std::vector<mpz_class> plucker_coordinates(const IntMatrix& rows);

// Rational subspace of R^m represented by the canonical (HNF) basis of the
// saturated lattice V cap Z^m.  Two values are equal iff their bases match.
class Subspace {
public:
    static Subspace zero(size_t ambient);
    static Subspace full(size_t ambient);
    static Subspace from_spanning_set(const IntMatrix& vectors, size_t ambient);
    // Rows must already be a saturated canonical basis (internal fast path).
    static Subspace from_canonical_basis(IntMatrix basis, size_t ambient);

    size_t ambient_dim() const { return ambient_; }
    size_t dim() const { return basis_.size(); }
    const IntMatrix& basis() const { return basis_; }
    const mpz_class& height_squared() const { return height_sq_; }
    bool is_zero() const { return basis_.empty(); }

    bool contains(const IntegerVector& x) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    std::string to_string() const;

private:
    Subspace(size_t ambient, IntMatrix basis);
    size_t ambient_ = 0;
    IntMatrix basis_;
    mpz_class height_sq_;
};

Subspace orthogonal_complement(const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
Subspace intersect(const Subspace& u, const Subspace& v);

// Enclosure of L_xi(x) = max_{1<=j<=m} |x_0 xi^j - x_j| with width <= 2^-frac_bits.
Interval L_xi(const IntegerVector& x, const RealOracle& xi, long frac_bits);

// Diagnostic for the Schmidt/Davenport lemma: ratio of ||x_1^...^x_k|| to
// sum_i ||x_i|| prod_{j != i} L_xi(x_j); implied constants unknown, so this
// is reported, never asserted.
Interval hadamard_ratio(const IntMatrix& rows, const RealOracle& xi, long frac_bits);

} // namespace simra
