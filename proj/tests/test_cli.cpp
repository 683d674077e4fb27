#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#ifndef BIGGL_CLI_PATH
#define BIGGL_CLI_PATH "biggl"
#endif
#ifndef BIGGL_GOLDEN_DIR
#define BIGGL_GOLDEN_DIR "tests/golden"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(BIGGL_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 512> buf;
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("generator dump") {
    RunResult r = run("gens --n 2 --r 1 --which F --p 1 --q 1 --cartan");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "t[2]*x[1][1]*d[1][1] + t[1]*x[2][1]*d[2][1]\n");
    // Vanishing when the derivative order exceeds the number of columns.
    CHECK(run("gens --n 3 --r 1 --which F --p 1 --q 2").out == "0\n");
    // Scalar case.
    RunResult c1 = run("gens --n 2 --r 1 --which M --p 1 --q 0");
    CHECK(c1.out == "y[1][1] + y[2][2]\n");
}

TEST_CASE("deterministic output") {
    std::string a = run("sympow present --n 3 --m 2 --basis M --algebra sl").out;
    std::string b = run("sympow present --n 3 --m 2 --basis M --algebra sl").out;
    CHECK(a == b);
    CHECK(!a.empty());
}

TEST_CASE("exit codes") {
    CHECK(run("check commute --n 2 --r 1 --cartan").exit_code == 0);
    CHECK(run("check commute --n 9 --r 1").exit_code == 2);   // size guard
    CHECK(run("gens --n 2 --r 1 --which F --p 9 --q 0").exit_code == 2);
    CHECK(run("check bogus").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
}

TEST_CASE("presentation goldens through the binary") {
    for (std::string name : {"present_n2_m2_M_sl", "present_n3_m2_P_gl", "present_n3_m3_M_sl"}) {
        // Name encodes the flags.
        int n = name[9] - '0';
        int m = name[12] - '0';
        std::string basis(1, name[14]);
        std::string algebra = name.substr(16, 2);
        RunResult r = run("sympow present --n " + std::to_string(n) + " --m " + std::to_string(m) +
                          " --basis " + basis + " --algebra " + algebra);
        CHECK(r.exit_code == 0);
        CHECK(r.out == read_file(std::string(BIGGL_GOLDEN_DIR) + "/" + name + ".txt"));
    }
}

TEST_CASE("verification subcommands") {
    CHECK(run("check capelli --n 2 --r 2").exit_code == 0);
    CHECK(run("check cauchy-binet --n 3 --r 2 --k 2").exit_code == 0);
    CHECK(run("check charpoly --n 3 --k 2").exit_code == 0);
    CHECK(run("check bethe --n 2 --r 1 --p 1").exit_code == 0);
    CHECK(run("check symdet --n 2 --r 2 --k 2").exit_code == 0);
    CHECK(run("check relations --n 2 --m 2").exit_code == 0);
    CHECK(run("sympow check-relations --n 3 --m 3").exit_code == 0);
    CHECK(run("sympow dhat --alphas 1,2 --n 2 --m 2").exit_code == 0);
    CHECK(run("sympow upsilon-rank --n 2 --m 2").exit_code == 0);
    RunResult json = run("check capelli --n 2 --r 2 --format json");
    CHECK(json.out.find("\"status\": \"pass\"") != std::string::npos);
}
