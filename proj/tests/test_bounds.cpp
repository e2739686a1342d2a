#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "simra/bounds.hpp"
#include "simra/errors.hpp"

using namespace simra;

namespace {

// Independent ln 2 bracket (2*atanh(1/3) partial sums, exact rationals).
void ln2_bracket(mpq_class& lo, mpq_class& hi) {
    mpq_class z(1, 3), z2 = z * z, term = z, sum = 0;
    int K = 30;
    for (int j = 0; j < K; ++j) {
        sum += term / (2 * j + 1);
        term *= z2;
    }
    lo = 2 * sum;
    hi = 2 * (sum + term / ((2 * K + 1) * (mpq_class(1) - z2)));
}

} // namespace

TEST_CASE("descartes counting and isolation") {
    IntPolynomial p2 = poly_P(2); // 1 - 3x - 2x^2
    CHECK(p2.descartes_sign_changes() == 1);
    auto roots = isolate_positive_roots(p2);
    REQUIRE(roots.size() == 1);

    // 1 - 3x + 4x^3 - x^4 has three positive roots; isolation sees them all
    IntPolynomial quartic = IntPolynomial::parse("1,-3,0,4,-1");
    CHECK(isolate_positive_roots(quartic).size() == 3);
    CHECK_THROWS_AS(unique_positive_root(quartic, 30), ambiguous_root_count);

    CHECK_THROWS_AS(unique_positive_root(IntPolynomial::parse("1,0,1"), 20), no_positive_root);
}

TEST_CASE("root enclosures carry exact sign-change certificates") {
    for (unsigned m : {2u, 3u, 5u, 9u}) {
        Interval r = alpha(m, 80);
        IntPolynomial p = poly_P(m);
        CHECK(p.sign_at(r.lo().to_mpq()) * p.sign_at(r.hi().to_mpq()) < 0);
        Interval b = beta(m, 80);
        IntPolynomial q = poly_Q(m);
        CHECK(q.sign_at(b.lo().to_mpq()) * q.sign_at(b.hi().to_mpq()) < 0);
    }
}

TEST_CASE("alpha_2 agrees with the quadratic formula") {
    // alpha_2 = (-3 + sqrt(17))/4, so (4a + 3)^2 = 17 exactly
    Interval a = alpha(2, 80);
    Interval t = a * Interval::of_long(4) + Interval::of_long(3);
    Interval t2 = t * t;
    CHECK(t2.contains(mpq_class(17)));
    CHECK(certified_truncation([](long bits) { return alpha(2, bits); }, 4) == "0.2807");
}

TEST_CASE("table values from the literature") {
    CHECK(certified_truncation([](long b) { return alpha(3, b); }, 4) == "0.2152");
    CHECK(certified_truncation([](long b) { return beta(2, b); }, 4) == "0.3370");
    CHECK(certified_truncation([](long b) { return beta(3, b); }, 4) == "0.2444");
    // the quartic bound for n = 3 on its published interval
    IntPolynomial q3 = IntPolynomial::parse("1,-3,0,4,-1");
    CHECK(certified_truncation(
              [&](long b) { return unique_root_in(q3, mpq_class(1, 3), mpq_class(1, 2), b); }, 4) ==
          "0.4245");
}

TEST_CASE("P_m is positive at zero") {
    for (unsigned m = 2; m <= 40; ++m) {
        CHECK(poly_P(m).sign_at(0) == 1);
        CHECK(poly_Q(m).sign_at(0) == 1);
        CHECK(poly_R(m).sign_at(0) == 1);
    }
}

TEST_CASE("thm11 bound values against an exact ln2 bracket") {
    mpq_class l2lo, l2hi;
    ln2_bracket(l2lo, l2hi);

    // n = 100: denominator = 50 + 5(1 - ln2) + 1/3 exactly
    mpq_class den_lo = 50 + 5 * (1 - l2hi) + mpq_class(1, 3);
    mpq_class den_hi = 50 + 5 * (1 - l2lo) + mpq_class(1, 3);
    Interval b100 = thm11_bound(100, 64);
    CHECK(b100.hi().to_mpq() >= 1 / den_hi);
    CHECK(b100.lo().to_mpq() <= 1 / den_lo);
    CHECK(certified_truncation([](long b) { return thm11_bound(100, b); }, 6) == "0.019279");

    CHECK(certified_truncation([](long b) { return thm11_bound(12, b); }, 5) == "0.14567");

    // bound < 2/n since the denominator exceeds n/2
    for (unsigned n : {2u, 5u, 12u, 100u, 899u}) {
        Interval b = thm11_bound(n, 64);
        CHECK(b.hi().to_mpq() < mpq_class(2, n));
    }
}

TEST_CASE("verify_thm11 at n = 12") {
    Thm11Report r = verify_thm11(12);
    CHECK(r.ell == 5);
    CHECK(r.k == 2);
    CHECK(r.pass);
    CHECK(floor_scaled_pow10(r.theta_pow_k.lo().to_mpq(), 4) == 7268);
    CHECK(floor_scaled_pow10(r.theta_pow_k.hi().to_mpq(), 4) == 7268);
    // eta = 7.19901... > 1/lambda = 6.86481...
    CHECK(r.eta.lo().to_mpq() > mpq_class(71990, 10000));
    CHECK(r.eta.hi().to_mpq() < mpq_class(71992, 10000));
    CHECK(r.inv_lambda.lo().to_mpq() > mpq_class(68648, 10000));
    CHECK(r.inv_lambda.hi().to_mpq() < mpq_class(68649, 10000));
}

TEST_CASE("verify_thm11 precondition") {
    CHECK_THROWS(verify_thm11(11));
}

TEST_CASE("raising the bit budget never flips a certified pass") {
    for (unsigned n : {12u, 37u, 250u, 899u}) {
        Thm11Report base = verify_thm11(n);
        Thm11Report deep = verify_thm11(n, 1 << 15);
        CHECK(base.pass);
        CHECK(deep.pass == base.pass);
        CHECK(deep.ell == base.ell);
        CHECK(deep.k == base.k);
    }
}

TEST_CASE("bracket check worked example at m = 2") {
    // P_2(1/4) = 1 - 3/4 - 2/16 = 1/8 exactly
    CHECK(poly_P(2).eval(mpq_class(1, 4)) == mpq_class(1, 8));
    BracketReport r = bracket_check(2);
    CHECK(r.alpha_ok);
    CHECK(r.beta_ok);
    // alpha_2 = 0.2807... < 1/4 + 2/64 = 0.28125
    Interval a = alpha(2, 40);
    CHECK(a.hi().to_mpq() < mpq_class(28125, 100000));
    CHECK(a.lo().to_mpq() > mpq_class(1, 4));
}

TEST_CASE("alpha and beta decrease in m") {
    Interval prev_a = alpha(2, 64), prev_b = beta(2, 64);
    for (unsigned m = 3; m <= 20; ++m) {
        Interval a = alpha(m, 64), b = beta(m, 64);
        CHECK(strictly_less(a, prev_a));
        CHECK(strictly_less(b, prev_b));
        prev_a = a;
        prev_b = b;
    }
}

TEST_CASE("theorem 1.1 is weaker than the small-n theorems") {
    for (unsigned n = 4; n <= 11; ++n) {
        Interval t = thm11_bound(n, 64);
        Interval small = n % 2 == 1 ? alpha((n - 1) / 2, 64) : beta(n / 2, 64);
        CHECK(strictly_less(small, t));
    }
}

TEST_CASE("bound table rows") {
    auto rows = bound_table(64);
    REQUIRE(rows.size() == 10);
    CHECK(rows[0].n == 4);
    CHECK(rows[0].schleischitz == "0.3706");
    CHECK(rows[0].badziahin == "0.3660");
    CHECK(!rows[0].laurent.has_value());
    REQUIRE(rows[1].laurent.has_value());
    CHECK(*rows[1].laurent == mpq_class(1, 3));
    REQUIRE(rows[9].laurent.has_value());
    CHECK(*rows[9].laurent == mpq_class(1, 7)); // n = 13
    // tau_from_new = 1 + 1/new
    Interval check5 = Interval::div(Interval::of_long(1), rows[1].new_bound, 60);
    CHECK(rows[1].tau_from_new.hi().to_mpq() >= 1 + check5.lo().to_mpq());
    CHECK(rows[1].tau_from_new.lo().to_mpq() <= 1 + check5.hi().to_mpq());
}

TEST_CASE("certified truncation refuses decimal-boundary values") {
    // a strictly shrinking enclosure around 1/4: floor(lo*10^4) = 2499
    // and floor(hi*10^4) = 2500 never agree
    auto refine = [](long bits) {
        return Interval(Dyadic::from_mpq(mpq_class(1, 4), bits, RoundDir::Down) -
                            Dyadic::pow2(-bits - 1),
                        Dyadic::from_mpq(mpq_class(1, 4), bits, RoundDir::Up) +
                            Dyadic::pow2(-bits - 1));
    };
    CHECK_THROWS_AS(certified_truncation(refine, 4, 1 << 12), precision_exhausted);
}
