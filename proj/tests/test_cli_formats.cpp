#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef LWG_CLI_PATH
#define LWG_CLI_PATH "./lwg"
#endif

namespace {

int run_cli(const std::string& cmdline) {
    const std::string full = std::string(LWG_CLI_PATH) + " " + cmdline + " 2>/dev/null";
    return std::system(full.c_str());
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("identical command and seed give byte-identical json") {
    const char* a = "/tmp/lwg_cli_a.json";
    const char* b = "/tmp/lwg_cli_b.json";
    const std::string cmd =
        "bounds --family regular --params d=3,n=36 --eps 0.05 --seed 11 --quiet --out ";
    REQUIRE(run_cli(cmd + a) == 0);
    REQUIRE(run_cli(cmd + b) == 0);
    const std::string contents = slurp(a);
    CHECK(contents == slurp(b));
    CHECK(contents.find("\"alpha_min\"") != std::string::npos);
    std::remove(a);
    std::remove(b);
}

TEST_CASE("lewis on the triangle prints the symmetric weights") {
    const char* out = "/tmp/lwg_cli_tri.edges";
    {
        std::ofstream f(out);
        f << "0 1\n1 2\n0 2\n";
    }
    const char* res = "/tmp/lwg_cli_tri.json";
    REQUIRE(run_cli(std::string("lewis --graph ") + out + " --eps 0.01 --quiet --out " + res) ==
            0);
    const std::string text = slurp(res);
    CHECK(text.find("0.6666666666666666") != std::string::npos);
    std::remove(out);
    std::remove(res);
}

TEST_CASE("exit codes distinguish input errors") {
    CHECK(run_cli("bounds --graph /nonexistent/file --quiet") != 0);
    CHECK(run_cli("bounds --family nosuch --quiet") != 0);
}

TEST_CASE("csv and json sweep outputs parse back to the same rows") {
    const char* cj = "/tmp/lwg_sweep.json";
    const char* cc = "/tmp/lwg_sweep.csv";
    const std::string base =
        "sweep --family lollipop --n 8,12 --eps 0.05 --runs 1 --seed 5 --quiet ";
    REQUIRE(run_cli(base + "--out " + cj) == 0);
    REQUIRE(run_cli(base + "--format csv --out " + cc) == 0);
    const std::string js = slurp(cj), cs = slurp(cc);
    CHECK(js.find("\"rows\"") != std::string::npos);
    CHECK(cs.rfind("family,", 0) == 0);
    // both carry two rows
    CHECK(cs.find("lollipop") != std::string::npos);
    std::remove(cj);
    std::remove(cc);
}

} // TEST_SUITE
