// simra: exact heights, window projections, certified minimal-point
// enumeration and bound tables for simultaneous rational approximation.
//
// Machine-readable output: JSON lines for streaming subcommands, JSON or
// CSV for tables.  Exit codes: 0 success, 1 usage/precision error,
// 2 mathematical contract violation (reproduction payload on stderr).

#include "simra/bounds.hpp"
#include "simra/errors.hpp"
#include "simra/io.hpp"
#include "simra/lattice.hpp"
#include "simra/minimal.hpp"
#include "simra/oracle.hpp"
#include "simra/projections.hpp"
#include "simra/proptest.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

using nlohmann::json;
using namespace simra;

namespace {

struct GlobalOpts {
    long max_bits = kDefaultMaxBits;
};

void cmd_bounds_table(int digits, const std::string& format) {
    auto rows = bound_table(32 + 8 * digits);
    std::vector<json> out;
    for (const auto& row : rows) {
        json j;
        j["n"] = row.n;
        if (row.laurent) {
            mpq_class q = *row.laurent;
            j["laurent"] = decimal_of_mpq(q, digits, RoundDir::Down); // exact truncation
        } else {
            j["laurent"] = nullptr;
        }
        j["schleischitz"] = row.schleischitz.empty() ? json(nullptr) : json(row.schleischitz);
        j["badziahin"] = row.badziahin.empty() ? json(nullptr) : json(row.badziahin);
        unsigned n = row.n;
        j["new"] = certified_truncation(
            [n](long bits) { return n % 2 == 1 ? alpha((n - 1) / 2, bits) : beta(n / 2, bits); },
            digits);
        j["tau_from_new"] = certified_truncation(
            [n](long bits) {
                Interval nb = n % 2 == 1 ? alpha((n - 1) / 2, bits + 8) : beta(n / 2, bits + 8);
                return (Interval::of_long(1) + Interval::div(Interval::of_long(1), nb, bits))
                    .round_out(bits);
            },
            digits);
        j["tau_thm11"] = certified_truncation(
            [n](long bits) {
                Interval a = thm11_a(bits + 8);
                Interval r = a * sqrt_interval(Interval(Dyadic(mpz_class(n))), bits + 8);
                return (r + Interval::of_mpq(mpq_class(n, 2) + mpq_class(4, 3), bits + 8))
                    .round_out(bits);
            },
            digits);
        out.push_back(std::move(j));
    }
    if (format == "csv") {
        std::cout << "n,laurent,schleischitz,badziahin,new,tau_from_new,tau_thm11\n";
        for (const auto& j : out) {
            auto cell = [&](const char* k) {
                return j[k].is_null() ? std::string() : j[k].get<std::string>();
            };
            std::cout << j["n"].get<unsigned>() << "," << cell("laurent") << ","
                      << cell("schleischitz") << "," << cell("badziahin") << "," << cell("new")
                      << "," << cell("tau_from_new") << "," << cell("tau_thm11") << "\n";
        }
    } else {
        for (const auto& j : out) std::cout << j.dump() << "\n";
    }
}

void cmd_bounds_verify(unsigned from, unsigned to, bool quiet) {
    size_t passes = 0;
    for (unsigned n = from; n <= to; ++n) {
        Thm11Report r = verify_thm11(n);
        if (r.pass) ++passes;
        if (!quiet) std::cout << thm11_json(r).dump() << "\n";
        if (!r.pass) {
            std::cerr << "FAIL at n=" << n << ": " << thm11_json(r).dump() << "\n";
            throw contract_violation("verify-thm11: certified failure at n=" + std::to_string(n));
        }
    }
    std::cout << json{{"from", from}, {"to", to}, {"pass", passes}, {"total", to - from + 1}}.dump()
              << "\n";
}

void cmd_bounds_root(const std::string& poly, const std::string& lo, const std::string& hi,
                     long bits, int digits) {
    IntPolynomial p = IntPolynomial::parse(poly);
    Interval r = lo.empty() ? unique_positive_root(p, bits)
                            : unique_root_in(p, mpq_class(lo, 10), mpq_class(hi, 10), bits);
    std::cout << json{{"poly", p.to_string()},
                      {"root_lo", r.lo().to_decimal(digits, RoundDir::Down)},
                      {"root_hi", r.hi().to_decimal(digits, RoundDir::Up)}}
                     .dump()
              << "\n";
}

void cmd_bounds_bracket(unsigned m_from, unsigned m_to) {
    size_t pass = 0;
    for (unsigned m = m_from; m <= m_to; ++m) {
        BracketReport r = bracket_check(m);
        bool ok = r.alpha_ok && r.beta_ok;
        if (ok) ++pass;
        std::cout << json{{"m", m}, {"alpha_ok", r.alpha_ok}, {"beta_ok", r.beta_ok}}.dump() << "\n";
        if (!ok) throw contract_violation("bracket check failed at m=" + std::to_string(m));
    }
    std::cout << json{{"pass", pass}, {"total", m_to - m_from + 1}}.dump() << "\n";
}

std::vector<MinimalPointRecord> run_enumeration(const GlobalOpts& g, const std::string& xi_lit,
                                                size_t n, const std::string& xmax,
                                                unsigned shards, bool strict_degree) {
    RealOracle xi = RealOracle::parse(xi_lit);
    if (!strict_degree && xi.kind() == RealOracle::Kind::Algebraic && xi.algebraic_degree() <= n)
        std::cerr << "warning: [Q(xi):Q] = " << xi.algebraic_degree() << " <= n = " << n
                  << "; uniqueness of minimizers is not guaranteed in this regime\n";
    EnumerateOptions opts;
    opts.max_bits = g.max_bits;
    opts.shards = shards;
    opts.strict_degree = strict_degree;
    return enumerate_minimal_points(xi, n, mpz_class(xmax, 10), opts);
}

void cmd_minimal_run(const GlobalOpts& g, const std::string& xi_lit, size_t n,
                     const std::string& xmax, unsigned shards, bool strict_degree,
                     const std::string& emit) {
    auto records = run_enumeration(g, xi_lit, n, xmax, shards, strict_degree);
    if (emit == "csv") {
        std::cout << "i,x,X_squared,L_lo,L_hi,in_I\n";
        for (const auto& r : records) std::cout << record_csv(r) << "\n";
    } else {
        for (const auto& r : records) std::cout << record_json(r).dump() << "\n";
    }
}

void cmd_minimal_exponents(const GlobalOpts& g, const std::string& xi_lit, size_t n,
                           const std::string& xmax, unsigned shards, size_t window) {
    auto records = run_enumeration(g, xi_lit, n, xmax, shards, false);
    RealOracle xi = RealOracle::parse(xi_lit);
    auto est = estimate_exponents(records, xi, 96, window);
    std::cout << exponents_json(est).dump() << "\n";
}

void cmd_minimal_structure(const GlobalOpts& g, const std::string& xi_lit, size_t n,
                           const std::string& xmax, unsigned shards) {
    auto records = run_enumeration(g, xi_lit, n, xmax, shards, false);
    RealOracle xi = RealOracle::parse(xi_lit);
    auto st = build_structure(records, xi);
    std::cout << structure_json(st).dump() << "\n";
}

void cmd_minimal_checkP(const GlobalOpts& g, const std::string& xi_lit, size_t n,
                        const std::string& xmax, unsigned shards, size_t j, size_t ell,
                        size_t i0) {
    auto records = run_enumeration(g, xi_lit, n, xmax, shards, false);
    auto rep = check_P(records, j, ell, i0);
    json rows = json::array();
    for (const auto& row : rep.rows) {
        json r = {{"i", row.i}, {"pass", row.pass}};
        if (!row.pass) {
            r["fail_m"] = row.fail_m;
            r["fail_dim"] = row.fail_dim;
        }
        rows.push_back(std::move(r));
    }
    std::cout << json{{"j", rep.j},           {"ell", rep.ell}, {"i0", rep.i0},
                      {"i_last", rep.i_last}, {"rows", rows},   {"all_pass_on_range", rep.all_pass},
                      {"note", "finite computed range only"}}
                     .dump()
              << "\n";
}

void cmd_uop_profile(const std::string& matrix, long n_flag) {
    IntMatrix rows = read_matrix_file(matrix);
    if (rows.empty()) throw std::invalid_argument("profile: empty matrix");
    size_t ambient = rows[0].ambient_dim();
    if (n_flag >= 0 && static_cast<size_t>(n_flag) + 1 != ambient)
        throw std::invalid_argument("profile: --n disagrees with row length");
    Subspace A = Subspace::from_spanning_set(rows, ambient);
    std::cout << profile_json(dimension_profile(A)).dump() << "\n";
}

void cmd_uop_avoid(const std::string& matrix, size_t ell, const std::string& avoid_matrix) {
    IntMatrix rows = read_matrix_file(matrix);
    if (rows.empty()) throw std::invalid_argument("avoid: empty matrix");
    size_t ambient = rows[0].ambient_dim();
    Subspace A = Subspace::from_spanning_set(rows, ambient);
    Subspace V = Subspace::zero(ambient - ell);
    if (!avoid_matrix.empty())
        V = Subspace::from_spanning_set(read_matrix_file(avoid_matrix), ambient - ell);
    auto a = find_avoiding_map(A, ell, V);
    long l1 = 0;
    for (long v : a) l1 += std::labs(v);
    std::cout << json{{"a", a}, {"l1", l1}, {"ell", ell}}.dump() << "\n";
}

Subspace subspace_from_file(const std::string& path) {
    IntMatrix rows = read_matrix_file(path);
    if (rows.empty()) throw std::invalid_argument("empty matrix file: " + path);
    return Subspace::from_spanning_set(rows, rows[0].ambient_dim());
}

void cmd_proptest(const std::string& suite, uint64_t seed, size_t cases) {
    std::vector<std::string> todo;
    if (suite == "all")
        todo = suite_names();
    else
        todo.push_back(suite);
    size_t total_failures = 0;
    for (const auto& name : todo) {
        SuiteResult r = run_suite(name, seed, cases);
        total_failures += r.failures;
        json j = {{"suite", r.name},
                  {"cases", r.cases},
                  {"failures", r.failures},
                  {"status", r.failures == 0 ? "PASS" : "FAIL"}};
        if (!r.messages.empty()) j["examples"] = r.messages;
        std::cout << j.dump() << "\n";
    }
    if (total_failures > 0)
        throw contract_violation("property suite failures: " + std::to_string(total_failures));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact machinery for simultaneous rational approximation to powers"};
    app.set_config("--config");
    app.fallthrough(); // lets --max-bits appear after the subcommand too
    GlobalOpts g;
    app.add_option("--max-bits", g.max_bits, "refinement budget in bits")
        ->envname("SIMRA_MAX_BITS")
        ->capture_default_str();
    app.require_subcommand(1);

    // bounds
    auto* sb = app.add_subcommand("bounds", "explicit bound computations");
    sb->require_subcommand(1);
    {
        auto* t = sb->add_subcommand("table", "upper bounds for the uniform exponent, n = 4..13");
        auto digits = std::make_shared<int>(4);
        auto format = std::make_shared<std::string>("json");
        t->add_option("--digits", *digits, "printed (truncated) decimals")->capture_default_str();
        t->add_option("--format", *format, "json|csv")->capture_default_str();
        t->callback([digits, format] { cmd_bounds_table(*digits, *format); });

        auto* v = sb->add_subcommand("verify-thm11", "certify the parameter conditions per n");
        auto from = std::make_shared<unsigned>(12);
        auto to = std::make_shared<unsigned>(899);
        auto quiet = std::make_shared<bool>(false);
        v->add_option("--from", *from)->capture_default_str();
        v->add_option("--to", *to)->capture_default_str();
        v->add_flag("--quiet", *quiet, "summary line only");
        v->callback([from, to, quiet] { cmd_bounds_verify(*from, *to, *quiet); });

        auto* r = sb->add_subcommand("root", "certified unique-root enclosure");
        auto poly = std::make_shared<std::string>();
        auto lo = std::make_shared<std::string>();
        auto hi = std::make_shared<std::string>();
        auto bits = std::make_shared<long>(96);
        auto digits2 = std::make_shared<int>(12);
        r->add_option("--poly", *poly, "dense integer coefficients, constant first")->required();
        r->add_option("--lo", *lo, "restrict to the open interval (lo, hi)");
        r->add_option("--hi", *hi);
        r->add_option("--bits", *bits)->capture_default_str();
        r->add_option("--digits", *digits2)->capture_default_str();
        r->callback([poly, lo, hi, bits, digits2] {
            cmd_bounds_root(*poly, *lo, *hi, *bits, *digits2);
        });

        auto* b = sb->add_subcommand("bracket", "certify 1/(m+2) bracketing of alpha_m, beta_m");
        auto mf = std::make_shared<unsigned>(2);
        auto mt = std::make_shared<unsigned>(100);
        b->add_option("--m-from", *mf)->capture_default_str();
        b->add_option("--m-to", *mt)->capture_default_str();
        b->callback([mf, mt] { cmd_bounds_bracket(*mf, *mt); });
    }

    // minimal
    auto* sm = app.add_subcommand("minimal", "certified minimal-point machinery");
    sm->require_subcommand(1);
    {
        auto xi = std::make_shared<std::string>();
        auto n = std::make_shared<size_t>(1);
        auto xmax = std::make_shared<std::string>("1000");
        auto shards = std::make_shared<unsigned>(1);
        auto strict = std::make_shared<bool>(false);
        auto add_common = [&](CLI::App* c) {
            c->add_option("--xi", *xi, "oracle literal (alg:...:lo,hi or dec:digits[:bits])")
                ->required();
            c->add_option("--n", *n, "number of powers")->required();
            c->add_option("--xmax", *xmax, "norm bound")->capture_default_str();
            c->add_option("--shards", *shards, "parallel candidate shards")->capture_default_str();
        };

        auto* run = sm->add_subcommand("run", "emit the minimal-point staircase");
        add_common(run);
        auto emit = std::make_shared<std::string>("jsonl");
        run->add_option("--emit", *emit, "jsonl|csv")->capture_default_str();
        run->add_flag("--strict-degree", *strict, "reject [Q(xi):Q] <= n");
        run->callback([&g, xi, n, xmax, shards, strict, emit] {
            cmd_minimal_run(g, *xi, *n, *xmax, *shards, *strict, *emit);
        });

        auto* ex = sm->add_subcommand("exponents", "running exponent data and window estimates");
        add_common(ex);
        auto window = std::make_shared<size_t>(8);
        ex->add_option("--window", *window)->capture_default_str();
        ex->callback([&g, xi, n, xmax, shards, window] {
            cmd_minimal_exponents(g, *xi, *n, *xmax, *shards, *window);
        });

        auto* st = sm->add_subcommand("structure", "index set I, sigma/Y tables, ratio diagnostics");
        add_common(st);
        st->callback([&g, xi, n, xmax, shards] {
            cmd_minimal_structure(g, *xi, *n, *xmax, *shards);
        });

        auto* cp = sm->add_subcommand("checkP", "property P(j,ell) on the computed range");
        add_common(cp);
        auto jj = std::make_shared<size_t>(0);
        auto ell = std::make_shared<size_t>(0);
        auto i0 = std::make_shared<size_t>(0);
        cp->add_option("--j", *jj)->required();
        cp->add_option("--ell", *ell)->required();
        cp->add_option("--i0", *i0)->capture_default_str();
        cp->callback([&g, xi, n, xmax, shards, jj, ell, i0] {
            cmd_minimal_checkP(g, *xi, *n, *xmax, *shards, *jj, *ell, *i0);
        });
    }

    // uop
    auto* su = app.add_subcommand("uop", "window-projection operator");
    su->require_subcommand(1);
    {
        auto* p = su->add_subcommand("profile", "dimension profile ell -> dim U^ell(A)");
        auto matrix = std::make_shared<std::string>();
        auto nn = std::make_shared<long>(-1);
        p->add_option("--matrix", *matrix, "spanning set, one vector per line")->required();
        p->add_option("--n", *nn, "check rows live in R^(n+1)");
        p->callback([matrix, nn] { cmd_uop_profile(*matrix, *nn); });

        auto* a = su->add_subcommand("avoid", "first injective window combination escaping V");
        auto matrix2 = std::make_shared<std::string>();
        auto ell = std::make_shared<size_t>(1);
        auto avoid = std::make_shared<std::string>();
        a->add_option("--matrix", *matrix2)->required();
        a->add_option("--ell", *ell)->required();
        a->add_option("--avoid-matrix", *avoid, "V (defaults to the zero subspace)");
        a->callback([matrix2, ell, avoid] { cmd_uop_avoid(*matrix2, *ell, *avoid); });
    }

    // subspace
    auto* ss = app.add_subcommand("subspace", "exact subspace arithmetic");
    ss->require_subcommand(1);
    {
        auto path = std::make_shared<std::string>();
        auto with = std::make_shared<std::string>();
        auto* info = ss->add_subcommand("info", "saturated basis and exact squared height");
        info->add_option("--matrix", *path)->required();
        info->callback([path] { std::cout << subspace_json(subspace_from_file(*path)).dump() << "\n"; });
        auto* comp = ss->add_subcommand("complement", "orthogonal complement");
        comp->add_option("--matrix", *path)->required();
        comp->callback([path] {
            std::cout << subspace_json(orthogonal_complement(subspace_from_file(*path))).dump()
                      << "\n";
        });
        auto* sum_ = ss->add_subcommand("sum", "U + V");
        sum_->add_option("--matrix", *path)->required();
        sum_->add_option("--with", *with)->required();
        sum_->callback([path, with] {
            std::cout << subspace_json(sum(subspace_from_file(*path), subspace_from_file(*with))).dump()
                      << "\n";
        });
        auto* inter = ss->add_subcommand("intersect", "U cap V");
        inter->add_option("--matrix", *path)->required();
        inter->add_option("--with", *with)->required();
        inter->callback([path, with] {
            std::cout << subspace_json(
                             intersect(subspace_from_file(*path), subspace_from_file(*with)))
                             .dump()
                      << "\n";
        });
    }

    // proptest
    {
        auto* pt = app.add_subcommand("proptest", "seeded structural property suites");
        auto suite = std::make_shared<std::string>("all");
        auto seed = std::make_shared<uint64_t>(0);
        auto cases = std::make_shared<size_t>(500);
        pt->add_option("--suite", *suite, "heights|profile|composition|avoid|construct|all")
            ->capture_default_str();
        pt->add_option("--seed", *seed)->capture_default_str();
        pt->add_option("--cases", *cases)->capture_default_str();
        pt->callback([suite, seed, cases] { cmd_proptest(*suite, *seed, *cases); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const contract_violation& e) {
        std::cerr << "contract violation: " << e.what() << "\n";
        return 2;
    } catch (const precision_exhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
