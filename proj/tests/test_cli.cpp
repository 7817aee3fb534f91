// End-to-end checks of the command-line tool: output fixtures, exit codes
// and byte-for-byte determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output; // stdout only
};

RunResult run_cli(const std::string& args) {
    std::string command = std::string(CHROMACONF_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buffer{};
    std::string output;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    size_t got = 0;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    int status = pclose(pipe);
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {exit_code, output};
}

} // namespace

TEST_CASE("poincare fixture with substituted dimension") {
    RunResult r = run_cli("poincare --graph cycle:4 --dim 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1 + 4t^2 + 6t^4 + 3t^6\n");

    RunResult symbolic = run_cli("poincare --graph cycle:4 --dim 3 --symbolic");
    CHECK(symbolic.exit_code == 0);
    CHECK(symbolic.output == "1 + 4t^{N-1} + 6t^{2(N-1)} + 3t^{3(N-1)}\n");
}

TEST_CASE("chromatic fixture") {
    RunResult r = run_cli("chromatic --graph complete:4");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "lambda^4 - 6lambda^3 + 11lambda^2 - 6lambda\n");
}

TEST_CASE("verify single graph with the interval-homology route") {
    RunResult r = run_cli("verify --graph complete:4 --dim 2 --level gm");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("json output round trips and is deterministic") {
    RunResult a = run_cli("poincare --graph complete:5 --dim 2 --json");
    RunResult b = run_cli("poincare --graph complete:5 --dim 2 --json");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("\"x_coefficients\":[\"1\",\"10\",\"35\",\"50\",\"24\"]") !=
          std::string::npos);

    RunResult lattice_a = run_cli("bond-lattice --graph cycle:4 --json");
    RunResult lattice_b = run_cli("bond-lattice --graph cycle:4 --json");
    CHECK(lattice_a.output == lattice_b.output);
}

TEST_CASE("exit code 1 on user errors") {
    CHECK(run_cli("chromatic --graph wheel:5").exit_code == 1);
    CHECK(run_cli("chromatic --graph 'cycle:'").exit_code == 1);
    CHECK(run_cli("whitney --graph 'complete:0'").exit_code == 1);
    CHECK(run_cli("nonsense-verb").exit_code == 1);
    CHECK(run_cli("poincare --graph cycle:4 --dim 1").exit_code == 1);
    CHECK(run_cli("chromatic").exit_code == 1); // missing --graph
}

TEST_CASE("exit code 2 on guard refusals") {
    CHECK(run_cli("bond-lattice --graph complete:11").exit_code == 2);
    CHECK(run_cli("nbc-forests --graph complete:8").exit_code == 2);
    // guards are adjustable from the command line
    CHECK(run_cli("nbc-forests --graph complete:8 --guard-edges 28 --components 7").exit_code == 0);
}

TEST_CASE("environment variable overrides the guard defaults") {
    RunResult strict = run_cli("bond-lattice --graph complete:6");
    CHECK(strict.exit_code == 0);
    {
        std::string saved = "CHROMACONF_GUARDS=vertices=5 " + std::string(CHROMACONF_CLI_PATH) +
                            " bond-lattice --graph complete:6 2>/dev/null";
        FILE* pipe = popen(saved.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::array<char, 256> buf{};
        while (fread(buf.data(), 1, buf.size(), pipe) > 0) {}
        int status = pclose(pipe);
        CHECK(WEXITSTATUS(status) == 2);
    }
}

TEST_CASE("exit code 3 on an injected verification failure") {
    RunResult r = run_cli("verify --graph cycle:4 --dim 2 --self-test-corrupt");
    CHECK(r.exit_code == 3);
}

TEST_CASE("graph input from a file") {
    std::string path = "cli_test_square.txt";
    {
        std::ofstream out(path);
        out << "# a square\n4\n1 2\n2 3\n3 4\n1 4\n";
    }
    RunResult r = run_cli("whitney --graph " + path);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "a_1=3 a_2=6 a_3=4 a_4=1\n");
    std::remove(path.c_str());
}

TEST_CASE("obstacle spec from a file") {
    std::string path = "cli_test_spec.json";
    {
        std::ofstream out(path);
        out << R"({"n":2,"r":2,"collide":[[1,2]],"avoid":[[1,1],[2,2]]})";
    }
    RunResult r = run_cli("obstacles --spec " + path + " --dim 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("2 movers, 2 obstacles") != std::string::npos);
    CHECK(r.output.find("1 + 3t + 3t^2") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("betti and basis verbs") {
    RunResult b = run_cli("betti --graph complete:4 --dim 3 --degree 2");
    CHECK(b.exit_code == 0);
    CHECK(b.output == "6\n");
    RunResult basis = run_cli("basis --graph cycle:4 --dim 3 --degree 6 --json");
    CHECK(basis.exit_code == 0);
    CHECK(basis.output.find("[[1,2],[1,4],[2,3]]") != std::string::npos);
}

TEST_CASE("quick suite passes") {
    RunResult r = run_cli("verify --suite quick");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("FAIL") == std::string::npos);
}

TEST_CASE("euler verb") {
    CHECK(run_cli("euler --graph complete:2 --dim 2").output == "0\n");
    CHECK(run_cli("euler --graph complete:3 --dim 3").output == "6\n");
}

TEST_CASE("splitting verb lists wedge summands") {
    RunResult r = run_cli("splitting --graph complete:2 --dim 2 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output ==
          "[{\"multiplicity\":\"1\",\"sphere_dimension\":1},"
          "{\"multiplicity\":\"1\",\"sphere_dimension\":0}]\n");
}

TEST_CASE("interval-homology verb") {
    RunResult r = run_cli("interval-homology --graph complete:3 --element 123 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "[{\"element\":\"123\",\"reduced_betti\":[0,2]}]\n");
    CHECK(run_cli("interval-homology --graph complete:3 --element 999").exit_code == 1);
}

TEST_CASE("nbc-forests verb counts and lists") {
    RunResult r = run_cli("nbc-forests --graph cycle:4 --components 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.substr(0, r.output.find('\n')) == "3 forests");
    RunResult all = run_cli("nbc-forests --graph cycle:4 --json");
    CHECK(all.exit_code == 0);
    // 1 empty + 4 single edges + 6 pairs + 3 trees
    CHECK(all.output.find("[[],") == 0);
}

TEST_CASE("whitney json") {
    RunResult r = run_cli("whitney --graph cycle:4 --json");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "{\"a\":[\"3\",\"6\",\"4\",\"1\"]}\n");
}
