#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

using std::string;

namespace {

string bin() {
    const char* b = std::getenv("FSR_BIN");
    return b ? b : "";
}

int run(const string& args) {
    const string cmd = bin() + " " + args + " >/dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

string slurp(const string& path) {
    std::ifstream is(path);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

// Drop the wall_seconds column (the last field of each line).
string strip_wall(const string& csv) {
    std::stringstream in(csv), out;
    string line;
    while (std::getline(in, line)) {
        const auto pos = line.rfind(',');
        out << line.substr(0, pos) << "\n";
    }
    return out.str();
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("bad scheme and case names exit 1 and list valid names") {
    if (bin().empty()) return; // only meaningful under ctest
    CHECK(run("run --case burgers-steady --scheme nope --grids 32,64") == 1);
    CHECK(run("run --case not-a-case --scheme fsr3") == 1);
    CHECK(run("run --case burgers-steady --scheme qfsr5z --grids 32,64") == 1);
    CHECK(run("run --case burgers-steady --scheme fsr3 --grids 64,32") == 1);
    {
        const string cmd = bin() + " run --case burgers-steady --scheme nope 2>&1";
        FILE* p = popen(cmd.c_str(), "r");
        REQUIRE(p != nullptr);
        string text;
        char buf[256];
        while (fgets(buf, sizeof(buf), p)) text += buf;
        pclose(p);
        CHECK(text.find("fsr3") != string::npos);
        CHECK(text.find("qfsr5z") != string::npos);
    }
}

TEST_CASE("te-probe writes a csv and reruns are byte-identical modulo wall time") {
    if (bin().empty()) return;
    std::system("rm -rf /tmp/fsr_cli_a /tmp/fsr_cli_b");
    CHECK(run("te-probe --case burgers-steady --scheme fsr3 --grids 64,128 --out /tmp/fsr_cli_a") ==
          0);
    CHECK(run("te-probe --case burgers-steady --scheme fsr3 --grids 64,128 --out /tmp/fsr_cli_b") ==
          0);
    const string a = slurp("/tmp/fsr_cli_a/te.csv");
    const string b = slurp("/tmp/fsr_cli_b/te.csv");
    CHECK(!a.empty());
    CHECK(a.substr(0, a.find('\n')) == "grid,h,error,observed_order,iterations,wall_seconds");
    CHECK(strip_wall(a) == strip_wall(b));
}

TEST_CASE("run writes convergence.csv deterministically") {
    if (bin().empty()) return;
    std::system("rm -rf /tmp/fsr_cli_c /tmp/fsr_cli_d");
    const string args =
        "run --case burgers-steady --scheme fsr3 --grids 16,32 --drop 1e-9 --out ";
    // n = 16 is below the stencil minimum: exit 1
    CHECK(run("run --case burgers-steady --scheme fsr3 --grids 4,6") == 1);
    CHECK(run(args + "/tmp/fsr_cli_c") == 0);
    CHECK(run(args + "/tmp/fsr_cli_d") == 0);
    CHECK(strip_wall(slurp("/tmp/fsr_cli_c/convergence.csv")) ==
          strip_wall(slurp("/tmp/fsr_cli_d/convergence.csv")));
}

TEST_CASE("config file with command-line override") {
    if (bin().empty()) return;
    {
        std::ofstream os("/tmp/fsr_cli.conf");
        os << "case=burgers-steady\nscheme=fsr3\ngrids=64,128\n";
    }
    std::system("rm -rf /tmp/fsr_cli_e");
    CHECK(run("te-probe --config /tmp/fsr_cli.conf --out /tmp/fsr_cli_e") == 0);
    CHECK(!slurp("/tmp/fsr_cli_e/te.csv").empty());
}

TEST_CASE("mesh dump prints nodes and edges") {
    if (bin().empty()) return;
    const string cmd = bin() + " mesh-dump --family quad --n 3 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    string text;
    char buf[256];
    while (fgets(buf, sizeof(buf), p)) text += buf;
    pclose(p);
    CHECK(text.find("nodes 9") != string::npos);
    CHECK(text.find("edges 12") != string::npos);
}

TEST_SUITE_END();
