#pragma once

#include "simra/lattice.hpp"
#include "simra/projections.hpp"

#include <optional>
#include <vector>

namespace simra {

// One minimal point x_i with exact squared norm and a certified L enclosure.
// in_I is meaningful for interior indices only (needs both neighbours).
struct MinimalPointRecord {
    size_t index = 0;
    IntegerVector x;
    mpz_class X_squared;
    Interval L;
    bool in_I = false;
};

struct EnumerateOptions {
    long max_bits = kDefaultMaxBits;
    unsigned shards = 1;
    // The theory's regime assumes [Q(xi):Q] > n.  The enumeration itself
    // stays meaningful for lower degree (ties then surface as
    // tie_unresolved), so by default we only enforce the degree check
    // when asked to.
    bool strict_degree = false;
};

// The rounding candidate (x0, round(x0*xi), ..., round(x0*xi^n)); every
// rounding is certified by interval separation from the half-integer grid.
IntegerVector candidate(const mpz_class& x0, const RealOracle& xi, size_t n,
                        long max_bits = kDefaultMaxBits);

// Certified minimal-point staircase for (xi, n) up to ||x|| <= X_max,
// restricted to L < 1/2 (every such point is a rounding candidate, which
// makes candidate enumeration complete).  Deterministic for any shard
// count.
std::vector<MinimalPointRecord> enumerate_minimal_points(const RealOracle& xi, size_t n,
                                                         const mpz_class& X_max,
                                                         const EnumerateOptions& opts = {});

// Independent oracle: per-x0 window scan with direct L_xi evaluation and
// certified record extraction.  Cost-guarded to X_max <= 1000.
std::vector<MinimalPointRecord> brute_force_minimal_points(const RealOracle& xi, size_t n,
                                                           const mpz_class& X_max,
                                                           long max_bits = kDefaultMaxBits);

constexpr size_t kUndefinedIndex = static_cast<size_t>(-1);

// Combinatorial structure of the sequence: the index set I, the tables
// sigma_j(i) / Y_j(i) of Definition 5.2-style spans, and ratio diagnostics
// for consecutive elements of I.
struct StructureIndex {
    size_t n = 0;
    std::vector<size_t> I;
    // sigma[j][i]; kUndefinedIndex where the plateau end lies beyond the
    // computed range.
    std::vector<std::vector<size_t>> sigma;
    // Y[j][i] = X_{sigma_j(i)+1}^2 (exact, squared); 0 where undefined.
    std::vector<std::vector<mpz_class>> Y_squared;
    // (X_j L_{j-1}) / (X_{i+1} L_i) for consecutive i < j in I.
    std::vector<std::pair<std::pair<size_t, size_t>, Interval>> consecutive_ratios;
};

StructureIndex build_structure(const std::vector<MinimalPointRecord>& records,
                               const RealOracle& xi, long frac_bits = 64);

// Property P(j, ell) on the computed range: for each i >= i0 and m <= j,
// dim U^ell(A_m(i)) >= m + ell + 1.
struct PCheckRow {
    size_t i = 0;
    bool pass = false;
    size_t fail_m = kUndefinedIndex; // first violated m
    size_t fail_dim = 0;
};

struct PCheckReport {
    size_t j = 0, ell = 0, i0 = 0;
    size_t i_last = 0;   // last index with all spans computable
    bool any_row = false;
    bool all_pass = false;
    std::vector<PCheckRow> rows;
};

PCheckReport check_P(const std::vector<MinimalPointRecord>& records, size_t j, size_t ell,
                     size_t i0);

// Running exponent data from the well-known limit formulas, plus two kinds
// of trailing-window summaries: the raw min/max of the quotients and the
// constant-cancelling secant slope of -log L against log X (the quotients
// themselves approach their limit only at rate 1/log X).
struct ExponentEstimate {
    std::vector<size_t> lambda_indices;
    std::vector<Interval> lambda_terms; // -log L_i / log X_i
    std::vector<size_t> lambda_hat_indices;
    std::vector<Interval> lambda_hat_terms; // -log L_i / log X_{i+1}
    size_t window = 0;
    std::optional<Interval> lambda_raw_max;
    std::optional<Interval> lambda_hat_raw_min;
    std::optional<Interval> lambda_window_slope;
    std::optional<Interval> lambda_hat_window_slope;
};

ExponentEstimate estimate_exponents(const std::vector<MinimalPointRecord>& records,
                                    const RealOracle& xi, long frac_bits = 96,
                                    size_t window = 8);

// C(V, x) of the determinant construction: V of dimension k in R^{k+1}
// with canonical basis z_1..z_k, x in Z^{n+1} with n = k + ell; the j-th
// coordinate is det(z_1, ..., z_k, x^(j,ell)).  Nonzero iff U^ell(x) is
// not contained in V; linear in x for fixed V.
IntegerVector construct_C(const Subspace& v, const IntegerVector& x, size_t k, size_t ell);

} // namespace simra
