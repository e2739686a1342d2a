#include "simra/proptest.hpp"

#include "simra/errors.hpp"
#include "simra/lattice.hpp"
#include "simra/minimal.hpp"
#include "simra/projections.hpp"
#include "simra/rng.hpp"

#include <functional>

namespace simra {

namespace {

IntegerVector random_vector(Rng& rng, size_t ambient) {
    std::vector<mpz_class> c(ambient);
    for (auto& x : c) x = rng.range(-9, 9);
    return IntegerVector(std::move(c));
}

IntMatrix random_vectors(Rng& rng, size_t ambient, size_t count) {
    IntMatrix rows;
    for (size_t i = 0; i < count; ++i) rows.push_back(random_vector(rng, ambient));
    return rows;
}

Subspace random_subspace(Rng& rng, size_t ambient, size_t max_gens) {
    return Subspace::from_spanning_set(random_vectors(rng, ambient, rng.below(max_gens + 1)),
                                       ambient);
}

struct Ctx {
    SuiteResult* res;
    void fail(const std::string& msg) {
        ++res->failures;
        if (res->messages.size() < 5) res->messages.push_back(msg);
    }
};

void suite_heights(Rng& rng, Ctx& ctx) {
    size_t m = 2 + rng.below(8); // ambient 2..9
    Subspace U = random_subspace(rng, m, m);
    Subspace V = random_subspace(rng, m, m);

    Subspace Up = orthogonal_complement(U);
    if (U.height_squared() != Up.height_squared())
        ctx.fail("duality H^2 mismatch: " + U.to_string());
    if (!(orthogonal_complement(Up) == U))
        ctx.fail("complement not involutive: " + U.to_string());
    if (Up.dim() + U.dim() != m) ctx.fail("complement dimension: " + U.to_string());

    Subspace S = sum(U, V);
    Subspace I = intersect(U, V);
    if (S.dim() + I.dim() != U.dim() + V.dim())
        ctx.fail("dim(U+V)+dim(U^V) != dim U + dim V");
    if (I.height_squared() * S.height_squared() > U.height_squared() * V.height_squared())
        ctx.fail("Schmidt inequality failed: U=" + U.to_string() + " V=" + V.to_string());
    if (!(Subspace::from_spanning_set(U.basis(), m) == U))
        ctx.fail("saturation not idempotent: " + U.to_string());

    // wedge bound: H(<x_1..x_k>)^2 <= ||x_1 ^ ... ^ x_k||^2 with a perfect
    // square quotient (the squared lattice index)
    IntMatrix xs = random_vectors(rng, m, 1 + rng.below(m));
    if (rank_of(xs) == xs.size() && !xs.empty()) {
        Subspace span = Subspace::from_spanning_set(xs, m);
        mpz_class w2 = wedge_norm_squared(xs);
        const mpz_class& h2 = span.height_squared();
        if (h2 > w2) ctx.fail("H^2 > wedge^2");
        mpz_class q, r;
        mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w2.get_mpz_t(), h2.get_mpz_t());
        if (r != 0) {
            ctx.fail("wedge^2 not a multiple of H^2");
        } else {
            mpz_class s;
            mpz_sqrt(s.get_mpz_t(), q.get_mpz_t());
            if (s * s != q) ctx.fail("wedge^2/H^2 not a perfect square");
        }
    }
}

void suite_profile(Rng& rng, Ctx& ctx) {
    size_t n = 1 + rng.below(8); // ambient n+1 in 2..9
    Subspace A = random_subspace(rng, n + 1, n + 1);
    DimensionProfile p = dimension_profile(A);
    if (p.values[0] != A.dim()) ctx.fail("f(0) != dim A");
    if (p.values[n + 1] != 0) ctx.fail("f(n+1) != 0");
    if (!p.concave()) ctx.fail("profile not concave: " + A.to_string());
    if (!p.tail_law()) ctx.fail("profile tail law failed: " + A.to_string());
    for (size_t ell = 1; ell <= n; ++ell) {
        size_t f_ell = p.values[ell], f_prev = p.values[ell - 1];
        if (std::min(f_ell, A.dim() + ell - 1) > f_prev)
            ctx.fail("corollary (i) failed at ell=" + std::to_string(ell));
        if (std::min(f_prev, n - ell + 1) > f_ell)
            ctx.fail("corollary (ii) failed at ell=" + std::to_string(ell));
    }
}

void suite_composition(Rng& rng, Ctx& ctx) {
    size_t n = 1 + rng.below(6); // compositions are O(n^2) subspace ops
    Subspace A = random_subspace(rng, n + 1, n + 1);
    for (size_t ell = 0; ell <= n + 1; ++ell) {
        Subspace direct = u_ell(A, ell);
        for (size_t k = 0; k <= ell; ++k) {
            if (ell - k > n + 1) continue;
            Subspace inner = u_ell(A, ell - k);
            if (inner.ambient_dim() == 0) continue; // U^(n+1): nothing left to project
            Subspace two_step = u_ell(inner, k);
            if (!(two_step == direct))
                ctx.fail("composition failed at n=" + std::to_string(n) +
                         " k=" + std::to_string(k) + " ell=" + std::to_string(ell));
        }
    }
}

void suite_avoid(Rng& rng, Ctx& ctx) {
    size_t n = 1 + rng.below(6);
    size_t ell = rng.below(std::min<size_t>(n, 3) + 1);
    Subspace A = random_subspace(rng, n + 1, n - ell + 1);
    if (A.dim() == 0 || A.dim() > n - ell + 1) return; // vacuous draw
    Subspace V = random_subspace(rng, n + 1 - ell, 2);
    if (V.contains(u_ell(A, ell))) {
        bool threw = false;
        try {
            find_avoiding_map(A, ell, V);
        } catch (const hypothesis_unmet&) {
            threw = true;
        }
        if (!threw) ctx.fail("hypothesis_unmet not raised");
        return;
    }
    std::vector<long> a = find_avoiding_map(A, ell, V);
    mpz_class l1 = 0;
    for (long v : a) l1 += std::labs(v);
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), n + 1, static_cast<unsigned long>(ell));
    if (l1 > bound) ctx.fail("avoiding map exceeds the (n+1)^ell bound");
    IntMatrix images;
    bool escapes = false;
    for (const auto& b : A.basis()) {
        IntegerVector img = tau_apply(a, b, ell);
        if (!V.contains(img)) escapes = true;
        images.push_back(std::move(img));
    }
    if (rank_of(images) != A.dim()) ctx.fail("avoiding map not injective on A");
    if (!escapes) ctx.fail("avoiding map image inside V");
}

void suite_construct(Rng& rng, Ctx& ctx) {
    size_t k = 1 + rng.below(4);
    size_t ell = 1 + rng.below(4);
    size_t n = k + ell;
    Subspace V = Subspace::from_spanning_set(random_vectors(rng, k + 1, k), k + 1);
    if (V.dim() != k) return; // need a hyperplane of R^(k+1)
    IntegerVector x = random_vector(rng, n + 1);
    IntegerVector C = construct_C(V, x, k, ell);
    bool inside = V.contains(u_ell(Subspace::from_spanning_set({x}, n + 1), ell));
    if (C.is_zero() != inside)
        ctx.fail("C zero/nonzero criterion mismatch: V=" + V.to_string() + " x=" + x.to_string());

    IntegerVector y = random_vector(rng, n + 1);
    mpz_class a = rng.range(-3, 3), b = rng.range(-3, 3);
    IntegerVector lhs = construct_C(V, a * x + b * y, k, ell);
    IntegerVector rhs = a * construct_C(V, x, k, ell) + b * construct_C(V, y, k, ell);
    if (!(lhs == rhs)) ctx.fail("C not linear in x");
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"heights", "profile", "composition", "avoid",
                                                   "construct"};
    return names;
}

SuiteResult run_suite(const std::string& name, uint64_t seed, size_t cases) {
    std::function<void(Rng&, Ctx&)> body;
    if (name == "heights")
        body = suite_heights;
    else if (name == "profile")
        body = suite_profile;
    else if (name == "composition")
        body = suite_composition;
    else if (name == "avoid")
        body = suite_avoid;
    else if (name == "construct")
        body = suite_construct;
    else
        throw std::invalid_argument("unknown suite: " + name);

    SuiteResult res;
    res.name = name;
    Ctx ctx{&res};
    uint64_t tag = 1469598103934665603ULL; // FNV-1a, stable across platforms
    for (char ch : name) tag = (tag ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
    Rng rng(seed ^ tag);
    for (size_t c = 0; c < cases; ++c) {
        ++res.cases;
        body(rng, ctx);
    }
    return res;
}

} // namespace simra
