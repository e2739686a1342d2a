// End-to-end checks of the simra binary: output formats, determinism
// across reruns and shard counts, and exit-code conventions.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string g_binary;

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("bounds table reproduces the published digits") {
    RunResult r = run("bounds table --format csv --digits 4");
    CHECK(r.code == 0);
    for (const char* v : {"0.3370", "0.2807", "0.2444", "0.2152", "0.1919", "0.1753", "0.1587",
                          "0.1483", "0.1357", "0.1286", "0.3333", "0.1428"})
        CHECK(r.out.find(v) != std::string::npos);
}

TEST_CASE("deterministic output across reruns and shard counts") {
    RunResult a = run("proptest --suite heights --seed 7 --cases 40");
    RunResult b = run("proptest --suite heights --seed 7 --cases 40");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    RunResult s1 = run("minimal run --xi alg:-2,0,1:1,2 --n 2 --xmax 400 --shards 1");
    RunResult s4 = run("minimal run --xi alg:-2,0,1:1,2 --n 2 --xmax 400 --shards 4");
    CHECK(s1.code == 0);
    CHECK(s1.out == s4.out);
    CHECK(!s1.out.empty());
}

TEST_CASE("minimal run emits one record per line") {
    RunResult r = run("minimal run --xi alg:-2,0,1:1,2 --n 1 --xmax 10 --emit csv");
    CHECK(r.code == 0);
    CHECK(r.out.find("0,1 1,2,") != std::string::npos);
    CHECK(r.out.find("2,5 7,74,") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("minimal run --n 1").code == 1);           // missing --xi
    CHECK(run("no-such-command").code == 1);
    CHECK(run("bounds root --poly 1,0,1").code == 1);    // no positive root
}

TEST_CASE("precision exhaustion exits 1") {
    // an 8-digit-free literal capped at 8 bits cannot certify roundings
    // once x0 scales past its resolution
    RunResult r = run("minimal run --xi dec:1.5009:8 --n 1 --xmax 900");
    CHECK(r.code == 1);
}

TEST_CASE("verify-thm11 and bracket run clean on subranges") {
    RunResult v = run("bounds verify-thm11 --from 12 --to 40 --quiet");
    CHECK(v.code == 0);
    CHECK(v.out.find("\"pass\":29") != std::string::npos);
    RunResult b = run("bounds bracket --m-from 2 --m-to 10");
    CHECK(b.code == 0);
}

TEST_CASE("minimal structure, exponents and checkP emit their keys") {
    RunResult st = run("minimal structure --xi alg:-2,0,0,1:1,2 --n 2 --xmax 500");
    CHECK(st.code == 0);
    for (const char* k : {"\"I\":", "\"sigma\":", "\"Y_squared\":", "\"lemma54_ratios\":"})
        CHECK(st.out.find(k) != std::string::npos);

    RunResult ex = run("minimal exponents --xi alg:-2,0,1:1,2 --n 1 --xmax 2000 --window 4");
    CHECK(ex.code == 0);
    for (const char* k : {"\"lambda_terms\":", "\"lambda_hat_terms\":", "\"lambda_hat_raw_min\":",
                          "\"lambda_hat_window_slope\":"})
        CHECK(ex.out.find(k) != std::string::npos);

    RunResult cp = run("minimal checkP --xi alg:-2,0,0,1:1,2 --n 2 --xmax 500 --j 0 --ell 1");
    CHECK(cp.code == 0);
    CHECK(cp.out.find("\"all_pass_on_range\":") != std::string::npos);
}

TEST_CASE("max-bits is accepted after the subcommand and via config file") {
    RunResult r = run("minimal run --xi alg:-2,0,1:1,2 --n 1 --xmax 10 --max-bits 256");
    CHECK(r.code == 0);
    const char* cfg = "/tmp/simra_cli_cfg.ini";
    std::ofstream(cfg) << "max-bits=512\n";
    RunResult c = run(std::string("--config ") + cfg + " bounds bracket --m-from 2 --m-to 3");
    CHECK(c.code == 0);
    std::remove(cfg);
}

TEST_CASE("subspace and uop files round through JSON") {
    const char* path = "/tmp/simra_cli_mat.txt";
    std::ofstream(path) << "2 0\n0 2\n";
    RunResult info = run(std::string("subspace info --matrix ") + path);
    CHECK(info.code == 0);
    CHECK(info.out.find("\"height_squared\":\"1\"") != std::string::npos);
    RunResult prof = run(std::string("uop profile --matrix ") + path);
    CHECK(prof.code == 0);
    CHECK(prof.out.find("\"values\":[2,1,0]") != std::string::npos);
    std::remove(path);

    const char* apath = "/tmp/simra_cli_a.txt";
    const char* vpath = "/tmp/simra_cli_v.txt";
    std::ofstream(apath) << "1 1 1\n";
    std::ofstream(vpath) << "1 0\n";
    RunResult avoid = run(std::string("uop avoid --matrix ") + apath + " --ell 1 --avoid-matrix " +
                          vpath);
    CHECK(avoid.code == 0);
    CHECK(avoid.out.find("\"a\":[1,0]") != std::string::npos);
    // U^1(<e0>) = <(1,0)> sits inside V: hypotheses unmet, usage error
    std::ofstream(apath) << "1 0 0\n";
    RunResult unmet = run(std::string("uop avoid --matrix ") + apath + " --ell 1 --avoid-matrix " +
                          vpath);
    CHECK(unmet.code == 1);
    std::remove(apath);
    std::remove(vpath);
}

TEST_CASE("environment variable sets the refinement budget") {
    RunResult r = run("bounds root --poly \"-2,0,1\" --bits 40");
    CHECK(r.code == 0);
    std::string cmd = "SIMRA_MAX_BITS=2048 " + g_binary +
                      " minimal run --xi alg:-2,0,1:1,2 --n 1 --xmax 10 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf;
    std::string out;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), got);
    int status = pclose(p);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(out.find("\"X_squared\":\"74\"") != std::string::npos);
}

int main(int argc, char** argv) {
    if (argc > 1) g_binary = argv[1];
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}
