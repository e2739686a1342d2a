// Acceptance suite: one pass/fail line per criterion, nonzero exit when a
// hard criterion fails.  --include-longrun adds the informational
// large-X_max run (its outcome is reported but never gates).

#include "simra/bounds.hpp"
#include "simra/errors.hpp"
#include "simra/lattice.hpp"
#include "simra/minimal.hpp"
#include "simra/oracle.hpp"
#include "simra/proptest.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <sstream>
#include <vector>

using namespace simra;

namespace {

struct Gate {
    int failures = 0;

    void report(int criterion, const std::string& label, bool pass, double seconds,
                const std::string& detail = "", bool informational = false) {
        std::ostringstream line;
        line << (pass ? "PASS" : (informational ? "INFO-FAIL" : "FAIL")) << " criterion "
             << criterion << ": " << label << " (" << seconds << " s)";
        std::cout << line.str() << "\n";
        if (!detail.empty()) std::cout << "    " << detail << "\n";
        if (!pass && !informational) ++failures;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// criterion 1: the ten published "new" values and the Laurent column,
// exact to the printed truncation, under one second.
void criterion_table(Gate& gate) {
    auto t0 = std::chrono::steady_clock::now();
    static const char* expected_new[10] = {"0.3370", "0.2807", "0.2444", "0.2152", "0.1919",
                                           "0.1753", "0.1587", "0.1483", "0.1357", "0.1286"};
    static const char* expected_laurent[5] = {"0.3333", "0.2500", "0.2000", "0.1666", "0.1428"};
    bool ok = true;
    std::string detail;
    size_t li = 0;
    for (unsigned n = 4; n <= 13; ++n) {
        std::string got = certified_truncation(
            [n](long bits) { return n % 2 == 1 ? alpha((n - 1) / 2, bits) : beta(n / 2, bits); },
            4);
        if (got != expected_new[n - 4]) {
            ok = false;
            detail += "n=" + std::to_string(n) + " new=" + got +
                      " expected=" + expected_new[n - 4] + "; ";
        }
        if (n % 2 == 1) {
            std::string laurent = decimal_of_mpq(mpq_class(1, (n + 1) / 2), 4, RoundDir::Down);
            if (laurent != expected_laurent[li]) {
                ok = false;
                detail += "n=" + std::to_string(n) + " laurent=" + laurent + "; ";
            }
            ++li;
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 1.0) {
        ok = false;
        detail += "runtime exceeded 1 s";
    }
    gate.report(1, "Table 1 reproduction (10 new values + Laurent column)", ok, dt, detail);
}

// criterion 2: all 888 parameter certifications for 12 <= n < 900.
void criterion_thm11(Gate& gate) {
    auto t0 = std::chrono::steady_clock::now();
    size_t pass = 0, total = 0;
    std::string detail;
    for (unsigned n = 12; n <= 899; ++n) {
        ++total;
        Thm11Report r = verify_thm11(n);
        if (r.pass)
            ++pass;
        else
            detail += "n=" + std::to_string(n) + " failed; ";
    }
    double dt = seconds_since(t0);
    bool ok = pass == total && dt < 10.0;
    gate.report(2, "certified 1/2 <= theta^k < 1 and eta > 1/lambda for n in [12, 900)", ok, dt,
                detail.empty() ? std::to_string(pass) + "/" + std::to_string(total) + " certified"
                               : detail);
}

// criterion 3: exact bracketing of alpha_m and beta_m for m in [2, 100].
void criterion_bracket(Gate& gate) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (unsigned m = 2; m <= 100; ++m) {
        BracketReport r = bracket_check(m);
        if (!r.alpha_ok || !r.beta_ok) {
            ok = false;
            detail += "m=" + std::to_string(m) + "; ";
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 2.0) {
        ok = false;
        detail += "runtime exceeded 2 s";
    }
    gate.report(3, "1/(m+2) bracketing of alpha_m and beta_m for m in [2, 100]", ok, dt, detail);
}

// criterion 4: staircase equality of the two enumerators on the 3x3 grid.
void criterion_oracle_equivalence(Gate& gate) {
    auto t0 = std::chrono::steady_clock::now();
    const char* oracles[3] = {"alg:-2,0,1:1,2", "alg:-2,0,0,1:1,2", "alg:-1,-1,1:1,2"};
    bool ok = true;
    std::string detail;
    size_t compared = 0;
    for (const char* lit : oracles) {
        RealOracle xi = RealOracle::parse(lit);
        for (size_t n = 1; n <= 3; ++n) {
            auto fast = enumerate_minimal_points(xi, n, 200);
            auto slow = brute_force_minimal_points(xi, n, 200);
            bool same = fast.size() == slow.size();
            for (size_t i = 0; same && i < fast.size(); ++i)
                same = fast[i].x == slow[i].x && fast[i].X_squared == slow[i].X_squared;
            compared += fast.size();
            if (!same) {
                ok = false;
                detail += std::string(lit) + " n=" + std::to_string(n) + " mismatch; ";
            }
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 30.0) {
        ok = false;
        detail += "runtime exceeded 30 s";
    }
    gate.report(4, "enumerate == brute force for 3 oracles x n in {1,2,3}, ||x|| <= 200", ok, dt,
                detail.empty() ? std::to_string(compared) + " records matched point-for-point"
                               : detail);
}

// criterion 5: sqrt(2), n=1, X_max=10^6: trailing-window exponent
// estimates within 0.02 of 1.  The raw quotients approach 1 only at rate
// 1/log X (0.97 territory at this scale), so the window estimate is the
// constant-cancelling secant slope; raw proxies are reported alongside.
void criterion_exponents(Gate& gate) {
    auto t0 = std::chrono::steady_clock::now();
    RealOracle xi = RealOracle::parse("alg:-2,0,1:1,2");
    auto records = enumerate_minimal_points(xi, 1, mpz_class(1000000));
    auto est = estimate_exponents(records, xi, 96, 8);
    bool ok = est.lambda_hat_window_slope.has_value() && est.lambda_window_slope.has_value();
    std::string detail;
    mpq_class lo(98, 100), hi(102, 100);
    if (ok) {
        const Interval& lh = *est.lambda_hat_window_slope;
        const Interval& l = *est.lambda_window_slope;
        ok = lh.lo().to_mpq() >= lo && lh.hi().to_mpq() <= hi && l.lo().to_mpq() >= lo &&
             l.hi().to_mpq() <= hi;
        detail = "lambda_hat est " + lh.to_string(8) + ", lambda est " + l.to_string(8) +
                 "; raw window proxies " +
                 (est.lambda_hat_raw_min ? est.lambda_hat_raw_min->to_string(6) : "-") + " / " +
                 (est.lambda_raw_max ? est.lambda_raw_max->to_string(6) : "-") +
                 " converge only at rate 1/log X";
    }
    double dt = seconds_since(t0);
    if (dt >= 60.0) {
        ok = false;
        detail += "; runtime exceeded 60 s";
    }
    gate.report(5, "sqrt(2) n=1 X_max=10^6: window exponent estimates within 0.02 of 1", ok, dt,
                detail);
}

// criterion 6: the seeded structural suites, 500 cases each, zero failures.
void criterion_suites(Gate& gate) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    for (const auto& name : suite_names()) {
        SuiteResult r = run_suite(name, 0, 500);
        detail += name + ":" + std::to_string(r.failures) + " ";
        if (r.failures != 0) {
            ok = false;
            for (const auto& m : r.messages) detail += "[" + m + "] ";
        }
    }
    double dt = seconds_since(t0);
    if (dt >= 60.0) {
        ok = false;
        detail += "runtime exceeded 60 s";
    }
    gate.report(6, "structural property suites, 500 seeded cases each, zero failures", ok, dt,
                "failures per suite: " + detail);
}

// criterion 7 (optional, informational): Fibonacci-word continued
// fraction, n=2, X_max=10^8; trailing lambda-hat estimate near
// (sqrt(5)-1)/2 = 0.6180.
void criterion_longrun(Gate& gate) {
    auto t0 = std::chrono::steady_clock::now();
    // partial quotients from the fibonacci word on {1,2} (1 -> 12, 2 -> 1)
    std::string w = "1";
    while (w.size() < 900) {
        std::string next;
        for (char c : w) next += (c == '1') ? "12" : "1";
        w = next;
    }
    // convergents of [0; a_1, a_2, ...] until the error 1/q^2 < 10^-240
    mpz_class p_prev = 1, q_prev = 0, p = 0, q = 1;
    mpz_class bound10;
    mpz_ui_pow_ui(bound10.get_mpz_t(), 10, 120);
    for (char c : w) {
        long a = c - '0';
        mpz_class pn = a * p + p_prev, qn = a * q + q_prev;
        p_prev = p;
        q_prev = q;
        p = pn;
        q = qn;
        if (q > bound10) break;
    }
    // truncate to 200 decimals; the literal then carries xi to ~2^-600
    std::string digits = "0." + decimal_of_mpq(mpq_class(p, q), 200, RoundDir::Down).substr(2);
    RealOracle xi = RealOracle::decimal(digits, 600);

    EnumerateOptions opts;
    opts.shards = 4;
    auto records = enumerate_minimal_points(xi, 2, mpz_class(100000000), opts);
    auto est = estimate_exponents(records, xi, 96, 12);
    bool ok = est.lambda_hat_window_slope.has_value();
    std::string detail = std::to_string(records.size()) + " records";
    if (ok) {
        const Interval& lh = *est.lambda_hat_window_slope;
        // target (sqrt(5)-1)/2 = 0.61803...
        mpq_class lo(61803, 100000), hi(61804, 100000);
        ok = lh.lo().to_mpq() >= lo - mpq_class(5, 100) && lh.hi().to_mpq() <= hi + mpq_class(5, 100);
        detail += ", lambda_hat window estimate " + lh.to_string(8) +
                  (est.lambda_hat_raw_min ? ", raw min " + est.lambda_hat_raw_min->to_string(6) : "");
    }
    gate.report(7, "fibonacci-word xi, n=2, X_max=10^8: lambda_hat within 0.05 of 0.6180", ok,
                seconds_since(t0), detail, /*informational=*/true);
}

} // namespace

int main(int argc, char** argv) {
    bool longrun = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--include-longrun") == 0) longrun = true;

    Gate gate;
    try {
        criterion_table(gate);
        criterion_thm11(gate);
        criterion_bracket(gate);
        criterion_oracle_equivalence(gate);
        criterion_exponents(gate);
        criterion_suites(gate);
        if (longrun) criterion_longrun(gate);
    } catch (const std::exception& e) {
        std::cerr << "acceptance aborted: " << e.what() << "\n";
        return 2;
    }
    if (gate.failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << gate.failures << " criterion(s) failed\n";
    return 1;
}
