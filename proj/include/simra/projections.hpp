#pragma once

#include "simra/lattice.hpp"

#include <optional>
#include <vector>

namespace simra {

// Coordinate window x^(k,ell) = (x_k, ..., x_{k+n-ell}) of x in R^{n+1}.
IntegerVector window(const IntegerVector& x, size_t k, size_t ell);

// U^ell(A): the subspace of R^{n+1-ell} spanned by all windows of A,
// for A a subspace of R^{n+1} (n+1 = A.ambient_dim).  ell = n+1 yields the
// zero subspace of R^0.
Subspace u_ell(const Subspace& a, size_t ell);

// f(ell) = dim U^ell(A) for ell = 0..n+1.
struct DimensionProfile {
    size_t n = 0;
    std::vector<size_t> values; // length n+2

    bool concave() const;
    // f nondecreasing up to the first index where f(ell) = n-ell+1, then
    // exactly on that line to the end.
    bool tail_law() const;
};

DimensionProfile dimension_profile(const Subspace& a);

// Degenerate window-dimension analysis (dim A = j+1, j+2ell <= n,
// d = dim U^ell(A) <= j+ell).  All listed facts are verified exactly;
// a failure raises contract_violation.  Height ratios
// H(U^t(A))^2 / H(V)^(2(n-d-t+1)) are diagnostics only.
struct DegeneracyReport {
    size_t d = 0;
    size_t t_lo = 0, t_hi = 0;
    Subspace V = Subspace::zero(0);
    std::vector<mpq_class> height_ratios;
};

std::optional<DegeneracyReport> analyze_degeneracy(const Subspace& a, size_t j, size_t ell,
                                                   const IntMatrix& probe_vectors = {});

// tau_a(x) = sum_k a_k x^(k,ell).
IntegerVector tau_apply(const std::vector<long>& a, const IntegerVector& x, size_t ell);

// First coefficient vector (by increasing l1 norm, then components scanned
// from +s down to -s) making tau_a injective on A with tau_a(A) not inside
// V.  Requires dim(A) <= n-ell+1 and U^ell(A) not inside V.
std::vector<long> find_avoiding_map(const Subspace& a, size_t ell, const Subspace& v);

} // namespace simra
