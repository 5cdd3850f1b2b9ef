// End-to-end tests for the recsum binary. The test runner does not build the
// tool itself; it expects RECSUM_CLI in the environment pointing at the built
// executable (ctest wires this up). Everything is checked through the public
// surface only: argv in, text/JSON + exit code out.

#include <catch2/catch_amalgamated.hpp>

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

using Catch::Matchers::ContainsSubstring;
using json = nlohmann::json;

namespace {

struct RunResult {
    int code = -1;
    std::string out;  // stdout and stderr interleaved
};

RunResult run_cli(const std::string& args) {
    const char* exe = std::getenv("RECSUM_CLI");
    REQUIRE(exe != nullptr);  // set RECSUM_CLI to the recsum binary to run these
    const std::string cmd = '"' + std::string(exe) + "\" " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    if (WIFEXITED(status)) r.code = WEXITSTATUS(status);
    return r;
}

json run_json(const std::string& args) {
    const RunResult r = run_cli(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

// The row of a text table whose first column is the number p.
std::string table_row(const std::string& out, int p) {
    char prefix[16];
    std::snprintf(prefix, sizeof prefix, "%3d  ", p);
    std::size_t pos = 0;
    while (pos < out.size()) {
        std::size_t end = out.find('\n', pos);
        if (end == std::string::npos) end = out.size();
        const std::string line = out.substr(pos, end - pos);
        if (line.rfind(prefix, 0) == 0) return line;
        pos = end + 1;
    }
    return {};
}

} // namespace

TEST_CASE("trick runs the classic ten-term instance", "[cli]") {
    const auto r = run_cli("trick --x0 1 --x1 1 --n 10");
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("rule: x[t+1] = 1*x[t] + 1*x[t-1]   (route: fibo)"));
    CHECK_THAT(r.out, ContainsSubstring("terms (n=10): 1 1 2 3 5 8 13 21 34 55"));
    CHECK_THAT(r.out, ContainsSubstring("S_10 = 143"));
    CHECK_THAT(r.out, ContainsSubstring("identity: S_n = A * x_m with m = 6, A = 11"));
    CHECK_THAT(r.out, ContainsSubstring("x_6 = 13"));
    CHECK_THAT(r.out, ContainsSubstring("A * x_6 = 143"));
    CHECK_THAT(r.out, ContainsSubstring("verdict: VERIFIED"));
}

TEST_CASE("trick routes by coefficient pair", "[cli]") {
    const auto neg = run_cli("trick --x0 1 --x1 1 --n 6 --a -1 --b 1");
    CHECK(neg.code == 0);
    CHECK_THAT(neg.out, ContainsSubstring("(route: negfibo)"));
    CHECK_THAT(neg.out, ContainsSubstring("terms (n=6): 1 1 0 1 -1 2"));
    CHECK_THAT(neg.out, ContainsSubstring("S_6 = 4"));
    CHECK_THAT(neg.out, ContainsSubstring("m = 1, A = 4"));
    CHECK_THAT(neg.out, ContainsSubstring("verdict: VERIFIED"));

    const auto pell = run_cli("trick --x0 1 --x1 1 --n 12 --a 2 --b 1");
    CHECK(pell.code == 0);
    CHECK_THAT(pell.out, ContainsSubstring("(route: pell)"));
    CHECK_THAT(pell.out, ContainsSubstring("S_12 = 13860"));
    CHECK_THAT(pell.out, ContainsSubstring("m = 6, A = 140"));
    CHECK_THAT(pell.out, ContainsSubstring("x_6 = 99"));
    CHECK_THAT(pell.out, ContainsSubstring("verdict: VERIFIED"));

    const auto cheb = run_cli("trick --x0 2 --x1 5 --n 7 --a 3 --b -1");
    CHECK(cheb.code == 0);
    CHECK_THAT(cheb.out, ContainsSubstring("(route: cheb)"));
    CHECK_THAT(cheb.out, ContainsSubstring("terms (n=7): 2 5 13 34 89 233 610"));
    CHECK_THAT(cheb.out, ContainsSubstring("S_7 = 986"));
    CHECK_THAT(cheb.out, ContainsSubstring("m = 3, A = 29"));
    CHECK_THAT(cheb.out, ContainsSubstring("verdict: VERIFIED"));
}

TEST_CASE("trick emits a parseable JSON document", "[cli]") {
    const json doc = run_json("trick --x0 1 --x1 1 --n 10 --json");
    CHECK(doc.at("schema_version") == "1");
    CHECK(doc.at("command") == "trick");
    CHECK(doc.at("inputs").at("n") == 10);
    CHECK(doc.at("inputs").at("x0") == "1");
    CHECK(doc.at("inputs").at("a") == "1");
    CHECK(doc.at("inputs").at("b") == "1");

    const json& res = doc.at("results");
    CHECK(res.at("route") == "fibo");
    REQUIRE(res.at("terms").size() == 10);
    CHECK(res.at("terms")[9] == "55");
    CHECK(res.at("sum") == "143");
    CHECK(res.at("m") == 6);
    CHECK(res.at("A") == "11");
    CHECK(res.at("x_m") == "13");
    CHECK(res.at("predicted") == "143");
    CHECK(res.at("verdict") == "VERIFIED");
}

TEST_CASE("trick output is deterministic", "[cli]") {
    const auto once = run_cli("trick --x0 3 --x1 -4 --n 10");
    const auto again = run_cli("trick --x0 3 --x1 -4 --n 10");
    CHECK(once.code == again.code);
    CHECK(once.out == again.out);

    const auto j1 = run_cli("trick --x0 3 --x1 -4 --n 10 --json");
    const auto j2 = run_cli("trick --x0 3 --x1 -4 --n 10 --json");
    CHECK(j1.out == j2.out);
}

TEST_CASE("trick rejects inadmissible input with exit 2", "[cli]") {
    CHECK(run_cli("trick --x0 1 --x1 1 --n 7").code == 2);   // fibo needs n == 2 (mod 4)
    CHECK(run_cli("trick --x0 1 --x1 1 --n 12").code == 2);  // 12 == 0 (mod 4)
    CHECK(run_cli("trick --x0 1 --x1 1 --n 8 --a 3 --b 2").code == 2);  // no such route
    CHECK(run_cli("trick --x0 1 --x1 1 --n 10 --b -1").code == 2);      // b=-1 needs odd n
    CHECK(run_cli("trick --x0 1 --x1 1 --n 2 --a -1 --b 1").code == 2); // negfibo needs n >= 6
    CHECK(run_cli("trick --x0 1.5 --x1 1 --n 10").code == 2);           // not an integer
    CHECK(run_cli("trick --x1 1 --n 10").code == 2);                    // missing --x0
    CHECK(run_cli("trick --x0 1 --x1 1 --n 0").code == 2);
}

TEST_CASE("trick verifies on randomized inputs across all routes", "[cli]") {
    std::mt19937_64 rng(20260819);
    std::uniform_int_distribution<int> init(-999, 999);
    std::uniform_int_distribution<int> route(0, 3);
    std::uniform_int_distribution<int> small_a(-5, 5);
    std::uniform_int_distribution<int> pick(0, 4);

    for (int rep = 0; rep < 20; ++rep) {
        std::string args = "trick --x0 " + std::to_string(init(rng)) + " --x1 " +
                           std::to_string(init(rng));
        switch (route(rng)) {
        case 0: args += " --n " + std::to_string(2 + 4 * pick(rng)); break;
        case 1:
            args += " --n " + std::to_string(6 + 4 * pick(rng)) + " --a -1 --b 1";
            break;
        case 2:
            args += " --n " + std::to_string(4 + 4 * pick(rng)) + " --a 2 --b 1";
            break;
        default:
            args += " --n " + std::to_string(2 * pick(rng) + 2 * pick(rng) + 1) + " --a " +
                    std::to_string(small_a(rng)) + " --b -1";
            break;
        }
        const auto r = run_cli(args);
        INFO(args << "\n" << r.out);
        CHECK(r.code == 0);
        CHECK_THAT(r.out, ContainsSubstring("verdict: VERIFIED"));
    }
}

TEST_CASE("verify prints exact symbolic combinations for fibo", "[cli]") {
    const auto r = run_cli("verify --family fibo --n 10");
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("family: fibo (a=1, b=1)"));
    CHECK_THAT(r.out, ContainsSubstring("n = 10, m = 6, A = 11"));
    CHECK_THAT(r.out, ContainsSubstring("S_10 = 55*x0 + 88*x1"));
    CHECK_THAT(r.out, ContainsSubstring("x_6 = 5*x0 + 8*x1"));
    CHECK_THAT(r.out, ContainsSubstring("verdict: VERIFIED (exact, all initial values)"));
}

TEST_CASE("verify handles the negated family symbolically", "[cli]") {
    const auto r = run_cli("verify --family negfibo --n 10");
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("n = 10, m = 3, A = 11"));
    CHECK_THAT(r.out, ContainsSubstring("S_10 = -11*x0 + 22*x1"));
    CHECK_THAT(r.out, ContainsSubstring("x_3 = -1*x0 + 2*x1"));
    CHECK_THAT(r.out, ContainsSubstring("verdict: VERIFIED"));
}

TEST_CASE("verify cheb is fully symbolic without --a", "[cli]") {
    const auto r = run_cli("verify --family cheb --n 11");
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("family: cheb (b=-1, a symbolic)"));
    CHECK_THAT(r.out, ContainsSubstring("n = 11, m = 5"));
    CHECK_THAT(r.out, ContainsSubstring("A = a^5 + a^4 - 4a^3 - 3a^2 + 3a + 1"));
    CHECK_THAT(r.out, ContainsSubstring("explicit binomial form of A agrees: yes"));
    CHECK_THAT(r.out, ContainsSubstring("verdict: VERIFIED (exact polynomial identity)"));

    const json doc = run_json("verify --family cheb --n 11 --json");
    const json& res = doc.at("results");
    CHECK(res.at("m") == 5);
    CHECK(res.at("A_coefficients") == json({"1", "3", "-3", "-4", "1", "1"}));
    CHECK(res.at("explicit_A_agrees") == true);
    CHECK(res.at("sum").at("x0") ==
          json({"0", "2", "6", "-7", "-11", "5", "6", "-1", "-1"}));
    CHECK(res.at("sum").at("x1") ==
          json({"1", "3", "-6", "-13", "11", "16", "-6", "-7", "1", "1"}));
    CHECK(res.at("target").at("x0") == json({"0", "2", "0", "-1"}));
    CHECK(res.at("target").at("x1") == json({"1", "0", "-3", "0", "1"}));
    CHECK(res.at("verdict") == "VERIFIED");
}

TEST_CASE("verify cheb at a rational point", "[cli]") {
    const auto deg = run_cli("verify --family cheb --n 9 --a 2");
    CHECK(deg.code == 0);
    CHECK_THAT(deg.out, ContainsSubstring("n = 9, m = 4, A = 9"));
    CHECK_THAT(deg.out, ContainsSubstring("verdict: VERIFIED"));

    const auto frac = run_cli("verify --family cheb --n 5 --a 7/3");
    CHECK(frac.code == 0);
    CHECK_THAT(frac.out, ContainsSubstring("n = 5, m = 2, A = 61/9"));
    CHECK_THAT(frac.out, ContainsSubstring("verdict: VERIFIED"));
}

TEST_CASE("verify fibpoly cross-checks the three A forms", "[cli]") {
    const auto r = run_cli("verify --family fibpoly --p 3 --n 6");
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("family: fibpoly (b=1, p=3)"));
    CHECK_THAT(r.out, ContainsSubstring("n = 6, m = 4"));
    CHECK_THAT(r.out, ContainsSubstring("three forms agree (rel 1e-8): yes"));
    CHECK_THAT(r.out, ContainsSubstring("basis check S_n = A*x_m (rel 1e-8): yes"));
    CHECK_THAT(r.out, ContainsSubstring("verdict: VERIFIED"));

    const json doc = run_json("verify --family fibpoly --p 3 --n 6 --json");
    const json& res = doc.at("results");
    CHECK(res.at("m") == 4);
    CHECK(std::abs(res.at("A_usum").get<double>() - 4.0) <= 1e-6);
    CHECK(res.at("ways_agree") == true);
    CHECK(res.at("basis_check") == true);
}

TEST_CASE("verify cross-validates its flags", "[cli]") {
    CHECK(run_cli("verify --family fibo --n 8").code == 2);
    CHECK(run_cli("verify --family fibo --n 10 --a 2").code == 2);
    CHECK(run_cli("verify --family cheb --n 11 --p 3").code == 2);
    CHECK(run_cli("verify --family cheb --n 10").code == 2);
    CHECK(run_cli("verify --family fibpoly --n 6").code == 2);
    CHECK(run_cli("verify --family fibpoly --p 4 --n 6").code == 2);
    CHECK(run_cli("verify --family negfibo --n 2").code == 2);
    CHECK(run_cli("verify --family nosuch --n 10").code == 2);
}

TEST_CASE("discover reports hits in plain text", "[cli]") {
    const auto hit = run_cli("discover --a 1 --b 1 --n 10 --m-max 20");
    CHECK(hit.code == 0);
    CHECK_THAT(hit.out,
               ContainsSubstring("search: a=1 b=1 n=10 m_max=20 (exact rational arithmetic)"));
    CHECK_THAT(hit.out, ContainsSubstring("hit: m=6 A=11"));

    const auto none = run_cli("discover --a 3 --b 2 --n 8 --m-max 30");
    CHECK(none.code == 0);  // an empty landscape is an answer, not an error
    CHECK_THAT(none.out, ContainsSubstring("no proportionality identity found"));

    const auto rat = run_cli("discover --a 1/2 --b -1 --n 5 --m-max 10");
    CHECK(rat.code == 0);
    CHECK_THAT(rat.out, ContainsSubstring("hit: m=2 A=-1/4"));

    // a negative denominator is folded into the numerator: -1/-2 == 1/2
    const auto folded = run_cli("discover --a -1/-2 --b -1 --n 5 --m-max 10");
    CHECK(folded.code == 0);
    CHECK_THAT(folded.out, ContainsSubstring("search: a=1/2 "));
    CHECK_THAT(folded.out, ContainsSubstring("hit: m=2 A=-1/4"));
}

TEST_CASE("discover JSON carries exact rational hits", "[cli]") {
    const json doc = run_json("discover --a 1 --b 1 --n 10 --m-max 20 --json");
    CHECK(doc.at("command") == "discover");
    CHECK(doc.at("inputs").at("m_max") == 20);
    const json& res = doc.at("results");
    CHECK(res.at("exact") == true);
    CHECK(res.at("hit_count") == 1);
    REQUIRE(res.at("hits").size() == 1);
    CHECK(res.at("hits")[0].at("m") == 6);
    CHECK(res.at("hits")[0].at("A") == "11");
    CHECK(res.at("hits")[0].at("unconstrained") == false);
}

TEST_CASE("discover rejects malformed input", "[cli]") {
    CHECK(run_cli("discover --a x --b 1 --n 10 --m-max 20").code == 2);
    CHECK(run_cli("discover --a 1 --b 1/0 --n 10 --m-max 20").code == 2);
    CHECK(run_cli("discover --a 1 --b 1 --n 0 --m-max 20").code == 2);
    CHECK(run_cli("discover --a 1 --b 1 --n 10 --m-max -1").code == 2);
}

TEST_CASE("table lists the b=1 catalogue", "[cli]") {
    const auto r = run_cli("table --p-max 19");
    CHECK(r.code == 0);

    const std::string row1 = table_row(r.out, 1);
    CHECK_THAT(row1, ContainsSubstring("2.414"));
    CHECK_THAT(row1, ContainsSubstring("2.000"));
    CHECK_THAT(row1, ContainsSubstring("n/2"));
    CHECK_THAT(row1, ContainsSubstring("2*u(n/2)"));

    const std::string row3 = table_row(r.out, 3);
    CHECK_THAT(row3, ContainsSubstring("1.618"));
    CHECK_THAT(row3, ContainsSubstring("1.000"));
    CHECK_THAT(row3, ContainsSubstring("n/2+1"));
    CHECK_THAT(row3, ContainsSubstring("v(n/2)"));

    const std::string row5 = table_row(r.out, 5);
    CHECK_THAT(row5, ContainsSubstring("1.420"));
    CHECK_THAT(row5, ContainsSubstring("0.715"));
    CHECK_THAT(row5, ContainsSubstring("n/2+2"));
    CHECK_THAT(row5, ContainsSubstring("(a^2 + 2)*u(n/2)"));

    const std::string row7 = table_row(r.out, 7);
    CHECK_THAT(row7, ContainsSubstring("1.325"));
    CHECK_THAT(row7, ContainsSubstring("0.570"));
    CHECK_THAT(row7, ContainsSubstring("n/2+3"));
    CHECK_THAT(row7, ContainsSubstring("(a^2 + 1)*v(n/2)"));
}

TEST_CASE("table JSON rows pin the numeric columns", "[cli]") {
    const json doc = run_json("table --p-max 19 --json");
    const json& rows = doc.at("results").at("rows");
    REQUIRE(rows.size() == 10);

    const double expected[10][2] = {
        {2.414, 2.000}, {1.618, 1.000}, {1.420, 0.715}, {1.325, 0.570}, {1.268, 0.479},
        {1.230, 0.416}, {1.202, 0.370}, {1.181, 0.334}, {1.164, 0.305}, {1.150, 0.281},
    };
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].at("p") == 2 * static_cast<int>(i) + 1);
        CHECK(std::abs(rows[i].at("rho").get<double>() - expected[i][0]) <= 1e-3);
        CHECK(std::abs(rows[i].at("a").get<double>() - expected[i][1]) <= 1e-3);
    }
    CHECK(rows[3].at("m_formula") == "n/2+3");
    CHECK(rows[3].at("A_formula") == "(a^2 + 1)*v(n/2)");
}

TEST_CASE("table validates p-max", "[cli]") {
    CHECK(run_cli("table --p-max 20").code == 2);
    CHECK(run_cli("table --p-max 101").code == 2);
    CHECK(run_cli("table --p-max 0").code == 2);
}

TEST_CASE("minpoly shows both constructions and their agreement", "[cli]") {
    const auto r = run_cli("minpoly --p 9");
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("p = 9 (q = 2, case plus, degree 5)"));
    CHECK_THAT(r.out, ContainsSubstring("closed: a^5 - a^4 + 5a^3 - 4a^2 + 5a - 2"));
    CHECK_THAT(r.out, ContainsSubstring("oracle: a^5 - a^4 + 5a^3 - 4a^2 + 5a - 2"));
    CHECK_THAT(r.out, ContainsSubstring("match: yes"));
    CHECK_THAT(r.out, ContainsSubstring("residual |P(a)| = "));

    const json doc = run_json("minpoly --p 9 --json");
    const json& res = doc.at("results");
    CHECK(res.at("q") == 2);
    CHECK(res.at("case") == "plus");
    CHECK(res.at("degree") == 5);
    CHECK(res.at("closed").at("coefficients") ==
          json({"-2", "5", "-4", "5", "-1", "1"}));
    CHECK(res.at("match") == true);
    CHECK(res.at("residual").get<double>() <= 1e-9);
}

TEST_CASE("minpoly honors --mode", "[cli]") {
    const auto closed = run_cli("minpoly --p 7 --mode closed");
    CHECK(closed.code == 0);
    CHECK_THAT(closed.out, ContainsSubstring("closed: a^3 - a^2 + 2a - 1"));
    CHECK(closed.out.find("match:") == std::string::npos);
    CHECK(closed.out.find("oracle:") == std::string::npos);

    const auto oracle = run_cli("minpoly --p 7 --mode oracle");
    CHECK(oracle.code == 0);
    CHECK_THAT(oracle.out, ContainsSubstring("oracle: a^3 - a^2 + 2a - 1"));
    CHECK(oracle.out.find("closed:") == std::string::npos);

    CHECK(run_cli("minpoly --p 1").code == 2);
    CHECK(run_cli("minpoly --p 8").code == 2);
    CHECK(run_cli("minpoly --p 9 --mode fancy").code == 2);
}

TEST_CASE("roots reports the two real roots and the mirror relation", "[cli]") {
    const auto r = run_cli("roots --p 5");
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("rho = 1.41963"));
    CHECK_THAT(r.out, ContainsSubstring("real roots in [-3, 3]: 2 ("));
    CHECK_THAT(r.out, ContainsSubstring("second real root equals -1/rho: yes"));

    const json doc = run_json("roots --p 5 --json");
    const json& res = doc.at("results");
    CHECK(res.at("root_count") == 2);
    CHECK(res.at("second_root_is_minus_inverse") == true);
    CHECK(res.at("residual").get<double>() <= 1e-12);
    CHECK(std::abs(res.at("rho").get<double>() - 1.41963) <= 1e-4);
    REQUIRE(res.at("real_roots_in_scan").size() == 2);
    CHECK(std::abs(res.at("real_roots_in_scan")[0].get<double>() + 0.704408) <= 1e-5);

    CHECK(run_cli("roots --p 4").code == 2);
}

TEST_CASE("polys prints family members", "[cli]") {
    const auto u5 = run_cli("polys --kind U --n 5");
    CHECK(u5.code == 0);
    CHECK_THAT(u5.out, ContainsSubstring("family: ChebTildeU"));
    CHECK_THAT(u5.out, ContainsSubstring("U~_5(x) = x^4 - 3x^2 + 1"));
    CHECK_THAT(u5.out, ContainsSubstring("degree: 4"));
    CHECK_THAT(u5.out, ContainsSubstring("explicit expansion agrees: yes"));

    const auto t4 = run_cli("polys --kind T --n 4");
    CHECK(t4.code == 0);
    CHECK_THAT(t4.out, ContainsSubstring("T~_4(x) = x^4 - 4x^2 + 2"));
    CHECK_THAT(t4.out, ContainsSubstring("explicit expansion: not available for this family"));

    const auto l4 = run_cli("polys --kind L --n 4");
    CHECK(l4.code == 0);
    CHECK_THAT(l4.out, ContainsSubstring("L_4(x) = x^4 + 4x^2 + 2"));

    const auto f6 = run_cli("polys --kind F --n 6");
    CHECK(f6.code == 0);
    CHECK_THAT(f6.out, ContainsSubstring("F_6(x) = x^5 + 4x^3 + 3x"));

    const auto u0 = run_cli("polys --kind U --n 0");
    CHECK(u0.code == 0);
    CHECK_THAT(u0.out, ContainsSubstring("U~_0(x) = 0"));
}

TEST_CASE("polys JSON includes ascending coefficients", "[cli]") {
    const json u5 = run_json("polys --kind U --n 5 --json");
    CHECK(u5.at("results").at("family") == "ChebTildeU");
    CHECK(u5.at("results").at("degree") == 4);
    CHECK(u5.at("results").at("coefficients") == json({"1", "0", "-3", "0", "1"}));
    CHECK(u5.at("results").at("explicit_agrees") == true);

    const json t4 = run_json("polys --kind T --n 4 --json");
    CHECK(t4.at("results").at("explicit_agrees").is_null());

    CHECK(run_cli("polys --kind Q --n 3").code == 2);
    CHECK(run_cli("polys --kind U --n -1").code == 2);
}

TEST_CASE("top-level usage behaves like a conventional tool", "[cli]") {
    const auto help = run_cli("--help");
    CHECK(help.code == 0);
    CHECK_THAT(help.out, ContainsSubstring("trick"));
    CHECK_THAT(help.out, ContainsSubstring("discover"));
    CHECK_THAT(help.out, ContainsSubstring("minpoly"));

    CHECK(run_cli("").code == 2);             // a subcommand is required
    CHECK(run_cli("frobnicate").code == 2);   // unknown subcommand
}

TEST_CASE("JSON output is deterministic across runs", "[cli]") {
    const auto a = run_cli("table --p-max 9 --json");
    const auto b = run_cli("table --p-max 9 --json");
    CHECK(a.code == 0);
    CHECK(a.out == b.out);

    const auto c = run_cli("verify --family cheb --n 21 --json");
    const auto d = run_cli("verify --family cheb --n 21 --json");
    CHECK(c.code == 0);
    CHECK(c.out == d.out);
}
