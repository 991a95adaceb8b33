#include "doctest.h"

#include "polyasym/special.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace polyasym;

namespace {

struct Run {
    int status;
    std::string out;
};

// Runs the CLI with the given arguments; stderr is folded into the output.
Run cli(const std::string& args)
{
    const std::string cmd = std::string(POLYASYM_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe))
        out.append(buf, got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string golden(const std::string& name)
{
    std::ifstream in(std::string(POLYASYM_GOLDEN_DIR) + "/" + name, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text)
{
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        std::vector<std::string> cells;
        std::istringstream fields(line);
        std::string cell;
        while (std::getline(fields, cell, ','))
            cells.push_back(cell);
        rows.push_back(cells);
    }
    return rows;
}

const struct {
    const char* file;
    const char* args;
} goldens[] = {
    {"table_charlier.csv", "table charlier --a 1 --x 0.25 --n 10,30,50,90 --N 5"},
    {"table_laguerre.csv", "table laguerre --alpha 1 --x 3.5 --n 10,30,50,90 --N 5"},
    {"table_jacobi.csv", "table jacobi --alpha 1.5 --beta 0.5 --x 0 --n 10,30,50,90 --N 5"},
    {"table_jacobi.md", "--format md table jacobi --alpha 1.5 --beta 0.5 --x 0 --n 10,30,50,90 --N 5"},
    {"zeros_charlier.csv", "zeros --a 1 --n 10"},
    {"figure_charlier.csv", "figure charlier --a 1 --n 20 --min 0.0125 --max 0.9875 --count 40"},
    {"figure_laguerre.csv", "figure laguerre --alpha 4 --n 10 --min 0.1 --max 4 --count 40"},
    {"figure_jacobi.csv", "figure jacobi --alpha 3 --beta 4 --n 10 --min -0.975 --max 0.975 --count 40"},
};

}  // namespace

TEST_CASE("output matches the golden files byte for byte and is repeatable")
{
    for (const auto& g : goldens) {
        INFO(g.args);
        const Run first = cli(g.args);
        CHECK(first.status == 0);
        CHECK(first.out == golden(g.file));
        CHECK(cli(g.args).out == first.out);
    }
    // Options placed after the subcommand are accepted as well.
    CHECK(cli("table jacobi --alpha 1.5 --beta 0.5 --x 0 --n 10,30,50,90 --N 5 --format md").out ==
          golden("table_jacobi.md"));
}

TEST_CASE("zeros reproduce the printed values")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    const auto rows = parse_csv(golden("zeros_charlier.csv"));
    REQUIRE(rows.size() == 11);
    CHECK(rows[0] == std::vector<std::string>{"index", "zero"});
    const char* printed[] = {"0.000000090", "0.100006223", "0.200157621", "0.301812498", "0.410358953",
                             "0.534449998", "0.680932968", "0.855641877", "1.068772397", "1.347867376"};
    for (int i = 0; i < 10; ++i)
        CHECK(abs(Real(rows[i + 1][1]) - Real(printed[i])) < Real("1e-8"));
    CHECK(cli("zeros --a 1 --n 1").out == "index,zero\n1,1.000000000\n");
    CHECK(cli("--bits 128 zeros --a 1 --n 10").out == golden("zeros_charlier.csv"));
}

TEST_CASE("table layout and values")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    const auto jac = parse_csv(golden("table_jacobi.csv"));
    REQUIRE(jac.size() == 5);
    CHECK(jac[0] == std::vector<std::string>{"view", "n", "exact", "S_0", "S_1", "S_2", "S_3", "S_4", "S_5"});
    const char* exact[] = {"-0.336376", "-0.201847", "-0.157618", "-0.118124"};
    for (int i = 0; i < 4; ++i) {
        CHECK(jac[i + 1][0] == "absolute");
        CHECK(abs(Real(jac[i + 1][2]) - Real(exact[i])) < Real("1e-6"));
    }

    // Charlier and Laguerre add a normalized copy of every row.
    for (const char* file : {"table_charlier.csv", "table_laguerre.csv"}) {
        INFO(file);
        const auto rows = parse_csv(golden(file));
        REQUIRE(rows.size() == 9);
        for (int i = 1; i <= 4; ++i) {
            CHECK(rows[i][0] == "absolute");
            CHECK(rows[i + 4][0] == "normalized");
            CHECK(rows[i + 4][1] == rows[i][1]);
            CHECK(rows[i + 4][2] == "1");
            const Real ratio = Real(rows[i][8]) / Real(rows[i][2]);
            CHECK(abs(Real(rows[i + 4][8]) - ratio) < Real("1e-5"));
        }
    }
    const auto lag = parse_csv(golden("table_laguerre.csv"));
    const Real l10 = laguerre_direct(Real(1), 10, Real(35));
    CHECK(abs(Real(lag[1][2]) / l10 - 1) < Real("1e-5"));

    // With a = 0 the expansion is its first term.
    const auto zero_a = parse_csv(cli("table charlier --a 0 --x 0.3 --n 5,8 --N 3").out);
    REQUIRE(zero_a.size() == 5);
    for (std::size_t i = 1; i < zero_a.size(); ++i)
        CHECK(zero_a[i][2] == zero_a[i][3]);
}

TEST_CASE("figure columns")
{
    PrecisionScope scope(PrecisionCtx::oracle());
    struct Case {
        const char* file;
        Real (*exact)(const Real& x);
    };
    const Case cases[] = {
        {"figure_charlier.csv", [](const Real& x) { return charlier_direct(Real(1), 20, 20 * x); }},
        {"figure_laguerre.csv",
         [](const Real& x) {
             PrecisionScope hi(1024);
             return laguerre_direct(Real(4), 10, 10 * at_working_precision(x));
         }},
        {"figure_jacobi.csv", [](const Real& x) { return jacobi_direct(Real(3), Real(4), 10, x); }},
    };
    for (const Case& c : cases) {
        INFO(c.file);
        const auto rows = parse_csv(golden(c.file));
        REQUIRE(rows.size() == 41);
        CHECK(rows[0] == std::vector<std::string>{"x", "exact", "first_order", "clipped"});
        unsigned clipped = 0;
        for (std::size_t i = 1; i < rows.size(); ++i) {
            REQUIRE(rows[i].size() == 4);
            const Real x(rows[i][0]);
            const Real ref = c.exact(x);
            CHECK(abs(Real(rows[i][1]) - ref) <= Real("1e-9") * abs(ref));
            CHECK((rows[i][3] == "0" || rows[i][3] == "1"));
            clipped += rows[i][3] == "1";
        }
        CHECK(clipped < rows.size() - 1);
    }
    // An explicit threshold flags exactly the rows above it.
    const auto rows = parse_csv(cli("figure jacobi --alpha 3 --beta 4 --n 10 --min -0.9 --max 0.9 --count 7 --clip 5").out);
    REQUIRE(rows.size() == 8);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const bool big = abs(Real(rows[i][1])) > 5 || abs(Real(rows[i][2])) > 5;
        CHECK((rows[i][3] == "1") == big);
    }
    // The endpoints are outside the expansion's domain but not the polynomial's.
    const auto ends = parse_csv(cli("figure jacobi --alpha 3 --beta 4 --n 10 --min -1 --max 1 --count 3").out);
    REQUIRE(ends.size() == 4);
    CHECK(ends[1][1] == "1001");
    CHECK(ends[1][2] == "nan");
    CHECK(ends[1][3] == "1");
    CHECK(ends[3][1] == "286");
}

TEST_CASE("usage and domain errors")
{
    Run r = cli("verify nope");
    CHECK(r.status != 0);
    CHECK(r.out.find("nope") != std::string::npos);

    r = cli("table jacobi --x 1.5 --n 10");
    CHECK(r.status == 2);
    CHECK(r.out.find("-1 < x < 1") != std::string::npos);

    r = cli("table laguerre --x 0.5 --n 10");
    CHECK(r.status == 2);
    CHECK(r.out.find("|x| > 1") != std::string::npos);

    r = cli("table charlier --x 1 --n 10");
    CHECK(r.status == 2);
    CHECK(r.out.find("x != 1") != std::string::npos);

    r = cli("zeros --a -1 --n 4");
    CHECK(r.status == 2);
    CHECK(r.out.find("a > 0") != std::string::npos);

    CHECK(cli("figure jacobi --n 10 --min 0.5 --max 0.1").status == 2);
    CHECK(cli("figure jacobi --n 10 --min 0 --max 0.5 --count 1").status != 0);
    CHECK(cli("--bits 32 zeros --n 3").status != 0);
    CHECK(cli("table hermite --x 1 --n 3").status != 0);
    CHECK(cli("").status != 0);
}
