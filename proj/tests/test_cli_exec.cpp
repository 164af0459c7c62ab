// Exercises the installed CLI binary: exit-code contract and byte-identical
// reruns of machine output.

#include <doctest.h>

#include <array>
#include <cstdio>
#include <memory>
#include <string>

#ifndef MTHETA_CLI_PATH
#error "MTHETA_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(MTHETA_CLI_PATH) + " " + args + " 2>&1";
    std::unique_ptr<FILE, decltype(&pclose)> pipe(popen(cmd.c_str(), "r"), pclose);
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 512> buf{};
    while (fgets(buf.data(), buf.size(), pipe.get())) out += buf.data();
    int status = pclose(pipe.release());
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("exit code contract: 0 pass, 2 usage error") {
    CHECK(run("orbit --r 3 --twol 4").exit_code == 0);
    CHECK(run("orbit --r 4 --twol 4").exit_code == 2);   // even r
    CHECK(run("orbit --r 3 --twol 5").exit_code == 2);   // odd 2l
    CHECK(run("verify --suite nonsense").exit_code == 2);
    CHECK(run("cocycle --a 7 --b 3 --r 5 --p 7").exit_code == 2);  // r does not divide p-1
    CHECK(run("").exit_code == 2);
}

TEST_CASE("machine output is byte-identical across reruns") {
    std::string args = "--json --seed 11 --iters 15 verify --suite heisenberg";
    auto a = run(args);
    auto b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"seed\": 11") != std::string::npos);
}

TEST_CASE("reported values match the pinned examples") {
    auto orbit = run("orbit --r 5 --twol 4");
    CHECK(orbit.output.find("\"partition\":[4]") != std::string::npos);
    auto dim = run("dimeq --r 3 --k 4");
    CHECK(dim.exit_code == 0);
    CHECK(dim.output.find("\"lhs\":\"38\"") != std::string::npos);
    auto dual = run("dualgroup --family Sp --size 6 --r 3");
    CHECK(dual.output.find("SO_7(C)") != std::string::npos);
}
