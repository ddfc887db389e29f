#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "picard/analysis.hpp"

namespace {

int run(const std::string& args, const std::string& log = "/dev/null") {
    const std::string cmd = std::string(CLI_BINARY) + " " + args + " >" + log + " 2>&1";
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(tok);
    return out;
}

}  // namespace

TEST_CASE("solve writes a well-formed solution CSV and report") {
    const int rc = run(
        "solve --problem duffing --h 0.1 --iterations 3 --degree 3 "
        "--ref-step 0.01 --out cli_sol.csv --report cli_rep.json");
    CHECK(rc == 0);
    const auto lines = read_lines("cli_sol.csv");
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "x,y1,y2");
    CHECK(lines.size() == 2802);  // 400 samples per unit on [0,7], inclusive
    const auto first = split_csv(lines[1]);
    REQUIRE(first.size() == 3);
    CHECK(std::stod(first[0]) == doctest::Approx(0.0));
    CHECK(std::stod(first[1]) == doctest::Approx(1.0));
    CHECK(std::stod(first[2]) == doctest::Approx(0.0));
    const auto last = split_csv(lines.back());
    CHECK(std::stod(last[0]) == doctest::Approx(7.0));

    const auto rep = read_lines("cli_rep.json");
    bool has_error = false, has_convergence = false;
    for (const auto& l : rep) {
        if (l.find("\"error\"") != std::string::npos) has_error = true;
        if (l.find("\"convergence\"") != std::string::npos) has_convergence = true;
    }
    CHECK(has_error);
    CHECK(has_convergence);
}

TEST_CASE("invalid configuration exits with code 2") {
    CHECK(run("solve --problem duffing --degree 2") == 2);
    CHECK(run("solve --problem nosuch") == 2);
    CHECK(run("solve --problem duffing --backend fancy") == 2);
    CHECK(run("solve --problem duffing --interval 1 0") == 2);
    CHECK(run("table T99") == 2);
}

TEST_CASE("divergence exits with code 3") {
    CHECK(run("solve --problem duffing --y0 100,0 --h 7 --iterations 5 --ref-step 0.5",
              "cli_div.log") == 3);
    const auto lines = read_lines("cli_div.log");
    bool mentions_segment = false;
    for (const auto& l : lines)
        if (l.find("segment") != std::string::npos) mentions_segment = true;
    CHECK(mentions_segment);
}

TEST_CASE("JSON config round trip with flag override") {
    {
        std::ofstream cfg("cli_cfg.json");
        cfg << R"({
  "problem": "duffing",
  "params": {"a": 0.5},
  "interval": [0.0, 2.0],
  "y0": [1.0, 0.0],
  "h": 0.1,
  "iterations": 3,
  "degree": 3,
  "reference": {"method": "rk8", "step": 0.01}
})";
    }
    CHECK(run("solve --config cli_cfg.json --out cli_cfg_sol.csv") == 0);
    const auto lines = read_lines("cli_cfg_sol.csv");
    CHECK(lines.size() == 802);  // [0,2] at 400 samples per unit
    // a flag overrides the config file value
    CHECK(run("solve --config cli_cfg.json --degree 2") == 2);
}

TEST_CASE("table subcommand matches the in-process reproduction") {
    const int rc = run("table T1 --ref-step 0.01 --out cli_t1.csv");
    CHECK(rc == 0);
    const auto lines = read_lines("cli_t1.csv");
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == "method,h,iterations,degree,error");

    picard::TableOverrides ov;
    ov.ref_step = 0.01;
    const picard::ErrorTable expected = picard::reproduce_table("T1", ov);
    REQUIRE(lines.size() == expected.rows.size() + 1);
    for (std::size_t i = 0; i < expected.rows.size(); ++i) {
        const auto cells = split_csv(lines[i + 1]);
        REQUIRE(cells.size() == 5);
        CHECK(cells[0] == expected.rows[i].method);
        CHECK(std::stod(cells[1]) == doctest::Approx(expected.rows[i].h));
        CHECK(std::stoi(cells[2]) == expected.rows[i].iterations);
        CHECK(std::stoi(cells[3]) == expected.rows[i].degree);
        // 17 significant digits round-trip bit-exactly
        CHECK(std::stod(cells[4]) == expected.rows[i].error);
    }
}

TEST_CASE("mathieu-eigen subcommand") {
    const int rc = run("mathieu-eigen --q 0.1 --iterations 1 --count 2 --out cli_eig.csv");
    CHECK(rc == 0);
    const auto lines = read_lines("cli_eig.csv");
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "index,r,series,percent_deviation");
    const auto row1 = split_csv(lines[1]);
    REQUIRE(row1.size() == 4);
    CHECK(std::stoi(row1[0]) == 1);
    CHECK(std::stod(row1[1]) == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(std::stod(row1[3]) == doctest::Approx(11.264).epsilon(1e-3));
}

TEST_CASE("bratu subcommand") {
    const int rc = run("bratu --alpha 1.0 --iterations 2 --out cli_bratu.csv", "cli_bratu.log");
    CHECK(rc == 0);
    const auto log = read_lines("cli_bratu.log");
    bool has_u = false, has_theta = false;
    for (const auto& l : log) {
        if (l.rfind("u ", 0) == 0) has_u = true;
        if (l.rfind("theta_roots", 0) == 0) has_theta = true;
    }
    CHECK(has_u);
    CHECK(has_theta);
    CHECK(read_lines("cli_bratu.csv").size() == 402);
}

TEST_CASE("sweep subcommand") {
    const int rc = run(
        "sweep --problem duffing --h-list 0.5 --iter-list 2,3 --degree-list 3 "
        "--out cli_sweep.csv");
    CHECK(rc == 0);
    const auto lines = read_lines("cli_sweep.csv");
    REQUIRE(lines.size() == 3);
    CHECK(lines[0] == "method,h,iterations,degree,error");
    CHECK(split_csv(lines[1])[0] == "ep");
}
