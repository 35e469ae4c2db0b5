#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "dickson/report.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("gen prints the frame") {
    auto r = run_cli("gen -p 2 -n 2");
    CHECK(r.code == 0);
    CHECK(r.output.find("x1^2 + x1x2 + x2^2") != std::string::npos);
    CHECK(r.output.find("degree 3") != std::string::npos);
}

TEST_CASE("gen refuses oversized frames") {
    auto r = run_cli("gen -p 2 -n 5");
    CHECK(r.code == 2);
    CHECK(r.output.find("estimated") != std::string::npos);
}

TEST_CASE("gen rejects composite characteristics") {
    auto r = run_cli("gen -p 4 -n 1");
    CHECK(r.code == 2);
}

TEST_CASE("st in both coordinate systems") {
    auto r = run_cli("st -p 2 -n 2 -i 2 Q1");
    CHECK(r.code == 0);
    CHECK(r.output.find("Q: Q0*Q1") != std::string::npos);

    auto r1 = run_cli("st -p 3 -n 1 -i 2 Q0");
    CHECK(r1.code == 0);
    CHECK(r1.output.find("2x1^10") != std::string::npos);
}

TEST_CASE("st reports parse errors with the offset") {
    auto r = run_cli("st -p 2 -n 2 -i 1 \"Q0^3 +\"");
    CHECK(r.code == 2);
    CHECK(r.output.find("offset 6") != std::string::npos);
}

TEST_CASE("extract prints all four coefficients") {
    auto r = run_cli("extract -p 2 -n 2 -i 2");
    CHECK(r.code == 0);
    CHECK(r.output.find("B  = 1") != std::string::npos);
    CHECK(r.output.find("A0 = 0") != std::string::npos);
}

TEST_CASE("verify single cell and exit code") {
    auto r = run_cli("verify -p 3 -n 1 -i 1 --seeds 5");
    CHECK(r.code == 0);
    CHECK(r.output.find("status: pass") != std::string::npos);
    CHECK(r.output.find("cell p=3 n=1 i=1") != std::string::npos);
}

TEST_CASE("verify json output round-trips") {
    auto r = run_cli("verify -p 2 -n 2 --seeds 9 --format json");
    CHECK(r.code == 0);
    nlohmann::json j = nlohmann::json::parse(r.output);
    CHECK(j.at("schema") == "1");
    CHECK(j.at("status") == "pass");
    dickson::Report report = dickson::Report::from_json(j);
    CHECK(report.to_json() == j);
}

TEST_CASE("verify usage errors") {
    CHECK(run_cli("verify --bogus").code == 2);
    CHECK(run_cli("verify -p 7").code == 2);
    CHECK(run_cli("verify -p 2 -n 1 -i 1 -m 13").code == 2);
    CHECK(run_cli("nonsense").code == 2);
}

TEST_CASE("verify writes the report to a file") {
    auto path = temp_file("dickson_cli_report.json");
    std::filesystem::remove(path);
    auto r = run_cli("verify -p 2 -n 1 -i 1 --format json --out " + path.string());
    CHECK(r.code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    nlohmann::json j = nlohmann::json::parse(in);
    CHECK(j.at("cells").size() == 1);
    std::filesystem::remove(path);
}

TEST_CASE("koszul tuan table") {
    auto r = run_cli("koszul tuan -p 2 -n 2 -j 1 -D 8");
    CHECK(r.code == 0);
    CHECK(r.output.find("1 3 4 4 4 4 4 4 4") != std::string::npos);
    CHECK(r.output.find("H_0 matches expected: yes") != std::string::npos);
}

TEST_CASE("koszul tuan boundary dump") {
    auto r = run_cli("koszul tuan -p 2 -n 1 -j 1 --dump 1 2");
    CHECK(r.code == 0);
    CHECK(r.output.find("1 2 3 1") != std::string::npos);
}

TEST_CASE("koszul dickson reports the degenerate cell") {
    auto r = run_cli("koszul dickson -p 2 -n 2 -i 1 -D 6");
    CHECK(r.code == 0);
    CHECK(r.output.find("regularity fails: zero coefficient") != std::string::npos);
    CHECK(r.output.find("zero-coefficient witness") != std::string::npos);
}

TEST_CASE("koszul custom from a file") {
    auto path = temp_file("dickson_cli_coeffs.txt");
    {
        std::ofstream out(path);
        out << "# two independent linear forms\n";
        out << "1:1,0\n";
        out << "1:0,1\n";
    }
    auto r = run_cli("koszul custom -p 3 --file " + path.string() + " -D 4");
    CHECK(r.code == 0);
    CHECK(r.output.find("H_0 matches expected: yes") != std::string::npos);
    CHECK(r.output.find("jacobian: 1") != std::string::npos);

    {
        std::ofstream out(path);
        out << "1:1,0 oops\n";
    }
    CHECK(run_cli("koszul custom -p 3 --file " + path.string()).code == 2);
    std::filesystem::remove(path);

    CHECK(run_cli("koszul custom -p 3 --file /nonexistent/c.txt").code == 2);
}
