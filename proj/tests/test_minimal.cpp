#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simra/errors.hpp"
#include "simra/minimal.hpp"

using namespace simra;

namespace {

IntegerVector vec(std::vector<long> v) {
    std::vector<mpz_class> c(v.begin(), v.end());
    return IntegerVector(std::move(c));
}

RealOracle sqrt2() { return RealOracle::parse("alg:-2,0,1:1,2"); }
RealOracle golden() { return RealOracle::parse("alg:-1,-1,1:1,2"); }

// --- exact Z[sqrt 2] arithmetic, the fully independent oracle for n=1 ---
// value a + b*sqrt(2)
struct Q2 {
    mpz_class a, b;
};
int sign_q2(const Q2& v) {
    int sa = sgn(v.a), sb = sgn(v.b);
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return (sa == 0 && sb == 0) ? 0 : 1;
    if (sa <= 0 && sb <= 0) return -1;
    // opposite signs: compare a^2 vs 2 b^2
    mpz_class a2 = v.a * v.a, b2 = 2 * v.b * v.b;
    int c = cmp(a2, b2);
    if (c == 0) return 0; // impossible for nonzero integers, kept for form
    return (c > 0) == (sa > 0) ? 1 : -1;
}
// |a1 + b1 s| < |a2 + b2 s| via squared values (squares live in Z[sqrt 2] too)
bool abs_less_q2(const Q2& x, const Q2& y) {
    Q2 x2{x.a * x.a + 2 * x.b * x.b, 2 * x.a * x.b};
    Q2 y2{y.a * y.a + 2 * y.b * y.b, 2 * y.a * y.b};
    return sign_q2({y2.a - x2.a, y2.b - x2.b}) > 0;
}

// Exhaustive staircase over every (x0, x1), x0 >= 1, ||x|| <= X, L < 1/2,
// using only exact integer arithmetic.
std::vector<std::pair<long, long>> exact_sqrt2_staircase(long X) {
    std::vector<std::pair<long, long>> out;
    Q2 best{0, 0};
    bool have = false;
    for (long x0 = 1; x0 * x0 <= X * X; ++x0) {
        long b = 0;
        while ((b + 1) * (b + 1) <= X * X - x0 * x0) ++b;
        for (long x1 = -b; x1 <= b; ++x1) {
            Q2 L{-x1, x0}; // x0 sqrt(2) - x1
            // |L| < 1/2  <=>  |2L| < 1
            Q2 twoL{-2 * x1, 2 * x0};
            if (!abs_less_q2(twoL, Q2{1, 0})) continue;
            if (have && !abs_less_q2(L, best)) continue;
            out.push_back({x0, x1});
            best = L;
            have = true;
        }
    }
    return out;
}

} // namespace

TEST_CASE("candidate rounding spec examples") {
    CHECK(candidate(2, sqrt2(), 2) == vec({2, 3, 4}));
    CHECK(candidate(1, sqrt2(), 1) == vec({1, 1}));
    CHECK(candidate(12, sqrt2(), 1) == vec({12, 17}));
    CHECK_THROWS(candidate(0, sqrt2(), 1));
}

TEST_CASE("candidate detects half-integer ties") {
    RealOracle half = RealOracle::parse("alg:-1,2:0,1"); // exactly 1/2
    CHECK_THROWS_AS(candidate(1, half, 1, 256), rounding_unresolved);
}

TEST_CASE("sqrt2 n=1 staircase matches the exact Z[sqrt2] scan") {
    auto records = enumerate_minimal_points(sqrt2(), 1, 60);
    auto exact = exact_sqrt2_staircase(60);
    REQUIRE(records.size() == exact.size());
    for (size_t i = 0; i < exact.size(); ++i) {
        CHECK(records[i].x[0] == exact[i].first);
        CHECK(records[i].x[1] == exact[i].second);
    }
    // convergent staircase: (1,1),(2,3),(5,7),(12,17),(29,41)
    REQUIRE(records.size() == 5);
    CHECK(records[4].x == vec({29, 41}));
    CHECK(records[3].X_squared == 433);
}

TEST_CASE("Euclidean norm bound is strict") {
    // ||(29,41)|| = sqrt(2522) = 50.22 > 50, so X_max = 50 keeps 4 records
    auto at50 = enumerate_minimal_points(sqrt2(), 1, 50);
    REQUIRE(at50.size() == 4);
    CHECK(at50.back().x == vec({12, 17}));
    auto at51 = enumerate_minimal_points(sqrt2(), 1, 51);
    CHECK(at51.size() == 5);
}

TEST_CASE("staircase laws and primitivity hold") {
    auto records = enumerate_minimal_points(sqrt2(), 2, 300);
    REQUIRE(records.size() >= 4);
    for (size_t i = 0; i < records.size(); ++i) {
        CHECK(records[i].x.content() == 1);
        CHECK(sgn(records[i].x[0]) > 0);
        if (i > 0) {
            CHECK(records[i].X_squared > records[i - 1].X_squared);
            CHECK(strictly_less(L_xi(records[i].x, sqrt2(), 80),
                                L_xi(records[i - 1].x, sqrt2(), 80)));
        }
    }
    // Lemma 5.1 exact part: H(<x_i, x_i+1>)^2 equals the wedge norm squared
    for (size_t i = 0; i + 1 < records.size(); ++i) {
        IntMatrix pair = {records[i].x, records[i + 1].x};
        Subspace span = Subspace::from_spanning_set(pair, 3);
        CHECK(span.dim() == 2);
        CHECK(span.height_squared() == wedge_norm_squared(pair));
    }
}

TEST_CASE("brute force agrees with enumeration across oracles and degrees") {
    struct Case {
        const char* lit;
        size_t n;
    };
    for (const auto& c : std::initializer_list<Case>{{"alg:-2,0,1:1,2", 1},
                                                     {"alg:-2,0,1:1,2", 2},
                                                     {"alg:-2,0,0,1:1,2", 2},
                                                     {"alg:-1,-1,1:1,2", 1}}) {
        RealOracle xi = RealOracle::parse(c.lit);
        auto fast = enumerate_minimal_points(xi, c.n, 60);
        auto slow = brute_force_minimal_points(xi, c.n, 60);
        REQUIRE(fast.size() == slow.size());
        for (size_t i = 0; i < fast.size(); ++i) {
            CHECK(fast[i].x == slow[i].x);
            CHECK(fast[i].X_squared == slow[i].X_squared);
            CHECK(fast[i].in_I == slow[i].in_I);
        }
    }
}

TEST_CASE("brute force spec examples") {
    auto r = brute_force_minimal_points(sqrt2(), 1, 10);
    REQUIRE(r.size() == 3);
    CHECK(r[0].x == vec({1, 1}));
    CHECK(r[1].x == vec({2, 3}));
    CHECK(r[2].x == vec({5, 7}));

    CHECK(brute_force_minimal_points(sqrt2(), 1, 0).empty());
    CHECK_THROWS(brute_force_minimal_points(sqrt2(), 1, 1001));

    // golden ratio staircase: Fibonacci pairs surviving the record filter
    auto g = brute_force_minimal_points(golden(), 1, 20);
    REQUIRE(g.size() == 5);
    CHECK(g[0].x == vec({1, 2}));
    CHECK(g[1].x == vec({2, 3}));
    CHECK(g[2].x == vec({3, 5}));
    CHECK(g[3].x == vec({5, 8}));
    CHECK(g[4].x == vec({8, 13}));
}

TEST_CASE("negative xi works throughout") {
    RealOracle neg = RealOracle::parse("alg:-2,0,1:-2,-1"); // -sqrt(2)
    auto fast = enumerate_minimal_points(neg, 1, 60);
    auto slow = brute_force_minimal_points(neg, 1, 60);
    REQUIRE(fast.size() == 5); // mirror of the sqrt(2) staircase
    CHECK(fast[1].x == vec({2, -3}));
    CHECK(fast[4].x == vec({29, -41}));
    REQUIRE(fast.size() == slow.size());
    for (size_t i = 0; i < fast.size(); ++i) CHECK(fast[i].x == slow[i].x);
}

TEST_CASE("strict degree check") {
    EnumerateOptions opts;
    opts.strict_degree = true;
    CHECK_THROWS_AS(enumerate_minimal_points(sqrt2(), 2, 30, opts), degenerate_xi);
    CHECK_NOTHROW(enumerate_minimal_points(sqrt2(), 1, 30, opts));
}

TEST_CASE("sharded enumeration is deterministic") {
    EnumerateOptions one;
    EnumerateOptions four;
    four.shards = 4;
    auto a = enumerate_minimal_points(sqrt2(), 2, 500, one);
    auto b = enumerate_minimal_points(sqrt2(), 2, 500, four);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].x == b[i].x);
        CHECK(a[i].in_I == b[i].in_I);
    }
}

TEST_CASE("structure tables") {
    auto records = enumerate_minimal_points(sqrt2(), 1, 600);
    auto st = build_structure(records, sqrt2());
    CHECK(st.I.empty()); // n = 1
    for (size_t i = 0; i + 1 < records.size(); ++i) {
        CHECK(st.sigma[0][i] == i); // sigma_0(i) = i
        CHECK(st.Y_squared[0][i] == records[i + 1].X_squared);
    }

    auto rec2 = enumerate_minimal_points(sqrt2(), 2, 600);
    auto st2 = build_structure(rec2, sqrt2());
    // consecutive minimal points are independent: sigma_0(i) = i again,
    // and every A_1(i) plateau ends strictly later
    for (size_t i = 0; i + 1 < rec2.size(); ++i) CHECK(st2.sigma[0][i] == i);
    for (size_t i = 0; i < rec2.size(); ++i) {
        if (st2.sigma[1][i] == kUndefinedIndex) continue;
        CHECK(st2.sigma[1][i] >= i + 1);
        IntMatrix rows;
        for (size_t q = i; q <= st2.sigma[1][i]; ++q) rows.push_back(rec2[q].x);
        CHECK(rank_of(rows) == 2); // dim A_1(i) = 2
    }
    // in_I consistency: i in I iff three consecutive points are independent
    for (size_t i = 1; i + 1 < rec2.size(); ++i) {
        IntMatrix rows = {rec2[i - 1].x, rec2[i].x, rec2[i + 1].x};
        bool indep = rank_of(rows) == 3;
        CHECK(rec2[i].in_I == indep);
        CHECK((std::find(st2.I.begin(), st2.I.end(), i) != st2.I.end()) == indep);
    }
}

TEST_CASE("check_P boundary behaviour") {
    // degree-3 value: the minimal points genuinely span R^3
    RealOracle cbrt2 = RealOracle::parse("alg:-2,0,0,1:1,2");
    auto rec = enumerate_minimal_points(cbrt2, 2, 900);
    REQUIRE(rec.size() >= 5);
    // P(n, 0) always holds: U^0(A_m(i)) = A_m(i) has dimension m+1
    auto alwaysPass = check_P(rec, 2, 0, 0);
    CHECK(alwaysPass.any_row);
    CHECK(alwaysPass.all_pass);
    // j=0, ell=n needs dim >= n+1 inside R^1: impossible
    auto alwaysFail = check_P(rec, 0, 2, 0);
    CHECK(alwaysFail.any_row);
    CHECK(!alwaysFail.all_pass);
    for (const auto& row : alwaysFail.rows) CHECK(!row.pass);
}

TEST_CASE("exponent terms and window estimates") {
    auto rec = enumerate_minimal_points(sqrt2(), 1, 1000);
    auto est = estimate_exponents(rec, sqrt2(), 96, 4);
    // record (2,3): -log(0.171572...) / log(sqrt(74)) = 0.81910...
    REQUIRE(est.lambda_hat_terms.size() >= 2);
    REQUIRE(est.lambda_hat_indices[1] == 1);
    Interval t = est.lambda_hat_terms[1];
    CHECK(floor_scaled_pow10(t.lo().to_mpq(), 4) == 8191);
    CHECK(floor_scaled_pow10(t.hi().to_mpq(), 4) == 8191);
    // lambda-hat term < lambda term (X_{i+1} > X_i)
    for (size_t k = 0; k < est.lambda_hat_terms.size(); ++k) {
        size_t i = est.lambda_hat_indices[k];
        for (size_t k2 = 0; k2 < est.lambda_terms.size(); ++k2)
            if (est.lambda_indices[k2] == i)
                CHECK(strictly_less(est.lambda_hat_terms[k], est.lambda_terms[k2]));
    }
    CHECK(est.lambda_hat_raw_min.has_value());
    CHECK(est.lambda_window_slope.has_value());
}

TEST_CASE("construct_C spec examples") {
    Subspace v = Subspace::from_spanning_set({vec({0, 1})}, 2);
    IntegerVector c = construct_C(v, vec({1, 2, 3}), 1, 1);
    CHECK(c == vec({-1, -2}));

    // window of x inside V: C = 0
    IntegerVector xin = vec({0, 0, 5}); // windows (0,0) and (0,5), both in <(0,1)>
    CHECK(construct_C(v, xin, 1, 1).is_zero());

    // linearity
    IntegerVector x = vec({1, 2, 3}), y = vec({4, -1, 0});
    IntegerVector lhs = construct_C(v, mpz_class(3) * x + mpz_class(-2) * y, 1, 1);
    IntegerVector rhs =
        mpz_class(3) * construct_C(v, x, 1, 1) + mpz_class(-2) * construct_C(v, y, 1, 1);
    CHECK(lhs == rhs);

    CHECK_THROWS(construct_C(v, vec({1, 2, 3, 4}), 1, 1)); // n mismatch
}

TEST_CASE("empty and tiny inputs") {
    CHECK(enumerate_minimal_points(sqrt2(), 1, 0).empty());
    auto rec = enumerate_minimal_points(sqrt2(), 1, 1);
    // ||(1,1)|| = sqrt(2) > 1: nothing fits
    CHECK(rec.empty());
    CHECK_THROWS(build_structure(rec, sqrt2()));
}
