#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include "prlab/coloring.hpp"

namespace {

std::string cli_path() {
    const char* p = std::getenv("PRLAB_CLI");
    REQUIRE_MESSAGE(p != nullptr, "PRLAB_CLI must point at the built binary");
    return p;
}

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

std::string tmp_file(const std::string& name) { return "/tmp/prlab-cli-test-" + name; }

} // namespace

TEST_CASE("compute: exact values and machine lines") {
    auto r = run("compute --n 5 --pattern C5 --mode pr");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("pr(K_5, C5) = 7") != std::string::npos);
    CHECK(r.out.find("value=7") != std::string::npos);
    CHECK(r.out.find("exact=true") != std::string::npos);

    auto ar = run("compute --n 5 --pattern P4 --mode ar");
    CHECK(ar.exit_code == 0);
    CHECK(ar.out.find("value=2") != std::string::npos);

    auto vac = run("compute --n 3 --pattern K4- --mode pr");
    CHECK(vac.exit_code == 0);
    CHECK(vac.out.find("value=3") != std::string::npos);
}

TEST_CASE("compute: bad token exits 2, budget exhaustion exits 3") {
    CHECK(run("compute --n 5 --pattern Q9").exit_code == 2);
    CHECK(run("compute --n 5").exit_code == 2);
    auto bracket = run("compute --n 6 --pattern C6 --node-limit 10");
    CHECK(bracket.exit_code == 3);
    CHECK(bracket.out.find("budget exhausted") != std::string::npos);
}

TEST_CASE("compute: witness file is a valid coloring") {
    auto path = tmp_file("witness.col");
    auto r = run("compute --n 5 --pattern C4 --witness " + path);
    CHECK(r.exit_code == 0);
    auto col = prlab::read_coloring_file(path);
    CHECK(col.n == 5);
    CHECK(col.color_count == 5);
    std::remove(path.c_str());
}

TEST_CASE("construct then verify round trips") {
    auto path = tmp_file("k4m.col");
    auto c = run("construct k4minus --n 7 -o " + path);
    CHECK(c.exit_code == 0);
    CHECK(c.out.find("colors=9") != std::string::npos);
    {
        std::ifstream side(path + ".report");
        REQUIRE(side.good());
        std::stringstream text;
        text << side.rdbuf();
        CHECK(text.str().find("claimed_colors=9") != std::string::npos);
    }
    auto v = run("verify " + path + " --pattern K4-");
    CHECK(v.exit_code == 0);
    CHECK(v.out.find("NO-PC-COPY k=9") != std::string::npos);
    std::remove(path.c_str());
    std::remove((path + ".report").c_str());
}

TEST_CASE("construct: path-join and k23 counts match the spec'd examples") {
    auto pj = run("construct path-join --n 10 --l 9 -o " + tmp_file("pj.col"));
    CHECK(pj.exit_code == 0);
    CHECK(pj.out.find("colors=18") != std::string::npos);
    auto k23 = run("construct k23 --n 13 -o " + tmp_file("k23.col"));
    CHECK(k23.exit_code == 0);
    CHECK(k23.out.find("colors=21") != std::string::npos);
    auto bad = run("construct path-join --n 5 --l 9 -o " + tmp_file("bad.col"));
    CHECK(bad.exit_code == 2);
    std::remove(tmp_file("pj.col").c_str());
    std::remove(tmp_file("pj.col.report").c_str());
    std::remove(tmp_file("k23.col").c_str());
    std::remove(tmp_file("k23.col.report").c_str());
}

TEST_CASE("verify: a rainbow K5 contains a C4 copy (exit 1)") {
    auto path = tmp_file("rainbow.col");
    prlab::write_coloring_file(path, prlab::EdgeColoring::rainbow(5));
    auto r = run("verify " + path + " --pattern C4");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("PC-COPY-FOUND") != std::string::npos);
    CHECK(r.out.find("copy:") != std::string::npos);

    prlab::write_coloring_file(path, prlab::EdgeColoring::monochromatic(5));
    CHECK(run("verify " + path + " --pattern P3").exit_code == 0);
    std::remove(path.c_str());
}

TEST_CASE("verify: malformed files exit 2") {
    auto path = tmp_file("broken.col");
    {
        std::ofstream out(path);
        out << "3 1\n0 1 0\n0 2 0\n"; // truncated
    }
    CHECK(run("verify " + path + " --pattern P3").exit_code == 2);
    {
        std::ofstream out(path);
        out << "nonsense\n";
    }
    CHECK(run("verify " + path + " --pattern P3").exit_code == 2);
    CHECK(run("verify /nonexistent.col --pattern P3").exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("atlas: small-n exact values appear in the CSV") {
    auto r = run("atlas --patterns C4,C5,C6,K4- --n-min 4 --n-max 6 --search-max 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("n,pattern,lower,upper,exact,provenance") != std::string::npos);
    CHECK(r.out.find("4,C4,4,4,true") != std::string::npos);
    CHECK(r.out.find("5,C5,7,7,true") != std::string::npos);
    CHECK(r.out.find("6,C6,11,11,true") != std::string::npos);
    CHECK(r.out.find("4,K4-,4,4,true") != std::string::npos);
    CHECK(r.out.find("5,K4-,6,6,true") != std::string::npos);
    CHECK(r.out.find("6,K4-,7,7,true") != std::string::npos);
    // vacuous rows are exact too
    CHECK(r.out.find("4,C5,6,6,true") != std::string::npos);
}

TEST_CASE("atlas: bracket row for K2,3 at n=5 without search") {
    auto r = run("atlas --patterns K2,3 --n-min 5 --n-max 5 --search-max 0");
    CHECK(r.exit_code == 0);
    // lower from the block construction, upper from the 2n-1 ceiling
    CHECK(r.out.find("5,\"K2,3\",7,9,false") != std::string::npos);
}

TEST_CASE("cnf: writes DIMACS with matching header") {
    auto path = tmp_file("out.cnf");
    auto r = run("cnf --n 5 --pattern C4 --k 6 -o " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("variables=") != std::string::npos);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string tag, kind;
    long long vars = 0, clauses = 0;
    in >> tag >> kind >> vars >> clauses;
    CHECK(tag == "p");
    CHECK(kind == "cnf");
    CHECK(vars > 0);
    long long zero_lines = 0;
    long long lit;
    while (in >> lit)
        if (lit == 0) ++zero_lines;
    CHECK(zero_lines == clauses);
    std::remove(path.c_str());
}
