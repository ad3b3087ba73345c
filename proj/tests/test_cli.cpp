#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args) {
    const std::string cmd = std::string(PHOTON_SCATTER_CLI) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<std::vector<double>> parse_csv(const std::string& text, std::vector<std::string>* header) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<double>> rows;
    bool first = true;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string cell;
        std::vector<double> row;
        std::vector<std::string> names;
        while (std::getline(ls, cell, ',')) {
            if (first)
                names.push_back(cell);
            else
                row.push_back(std::stod(cell));
        }
        if (first) {
            if (header) *header = names;
            first = false;
        } else {
            rows.push_back(row);
        }
    }
    return rows;
}

std::string temp_path(const std::string& name) { return std::string(PHOTON_SCATTER_TEST_DIR) + "/" + name; }

}  // namespace

TEST_CASE("bound-states json") {
    const auto r = run("bound-states --omega 3.1415926536 --omega0 3.1415926536 --J 1 --V 1 --format json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["upper"].get<double>() - 3.1415926536 == doctest::Approx(2.058171).epsilon(1e-6));
    CHECK(j["lower"].get<double>() - 3.1415926536 == doctest::Approx(-2.058171).epsilon(1e-6));
    CHECK(j.contains("kappa_lower"));
    CHECK(j.contains("kappa_upper"));
}

TEST_CASE("h-single reproduces the resonance zero of t11") {
    const auto r = run("h-single --vbar1 2 --vbar2 2 --grid k:0:2:401");
    REQUIRE(r.status == 0);
    std::vector<std::string> header;
    const auto rows = parse_csv(r.out, &header);
    REQUIRE(rows.size() == 401);
    CHECK(header.at(0) == "k[Omega]");
    CHECK(header.at(1) == "|t11|^2[1]");
    CHECK(rows[200][0] == 1.0);
    CHECK(rows[200][1] == 0.0);
    for (const auto& row : rows) CHECK(row[1] + row[2] == doctest::Approx(1.0).epsilon(1e-11));
}

TEST_CASE("correlation peaks at x = 0") {
    const auto r = run("correlation --pair 11 --vbar1 2 --vbar2 2 --E 2 --dk 0 --grid x:-10:10:801");
    REQUIRE(r.status == 0);
    const auto rows = parse_csv(r.out, nullptr);
    REQUIRE(rows.size() == 801);
    std::size_t arg = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i][1] > rows[arg][1]) arg = i;
    CHECK(rows[arg][0] == 0.0);
}

TEST_CASE("outputs are byte-identical across runs") {
    for (const std::string args : {"fluorescence3 --k1 1 --k2 1 --k3 1 --gamma 1 --grid p1:-1:4:21",
                                   "three-photon-wf --k1 1 --k2 1 --k3 1 --gamma 1 --grid x1:-3:3:7 --format json",
                                   "two-photon-wf --k1 1 --k2 0.5 --gamma 1 --grid x:-5:5:51"}) {
        const auto a = run(args), b = run(args);
        CHECK(a.status == 0);
        CHECK(a.out == b.out);
    }
    const std::string path = temp_path("cli_out.csv");
    REQUIRE(run("wg-transmit --gamma 1 --grid k:0:2:11 --output " + path).status == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == run("wg-transmit --gamma 1 --grid k:0:2:11").out);
}

TEST_CASE("config file overrides flags") {
    const std::string path = temp_path("cli_config.txt");
    std::ofstream(path) << "# H-type couplings\nvbar1 = 1\nvbar2=2\n";
    const auto r = run("h-single --vbar1 5 --grid k:1:1:2 --config " + path + " --format json");
    REQUIRE(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["t11_abs2"][0].get<double>() == doctest::Approx(0.36).epsilon(1e-12));
    CHECK(j["parameters"]["vbar1"].get<double>() == 1.0);
}

TEST_CASE("errors are single-line records with exit codes") {
    auto check_error = [](const Run& r, int status, const std::string& kind) {
        CHECK(r.status == status);
        CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 1);
        const auto j = nlohmann::json::parse(r.out);
        CHECK(j["error"] == kind);
    };
    check_error(run("h-single --vbar1 1 --vbar2 1 --grid k:0:1:1"), 2, "config_error");
    check_error(run("h-single --vbar1 1 --vbar2 1 --grid q:0:1:5"), 2, "config_error");
    check_error(run("h-single --vbar1 1 --vbar2 1 --bogus 3 --grid k:0:1:5"), 2, "config_error");
    check_error(run("t-reflect --omega 0 --omega0 0 --J 1 --V 1 --grid k:0:1:3"), 2, "domain_error");
    check_error(run("oracle scatter --omega 0 --omega0 0 --J 1 --V 1 --L 801 --width 40 --k0 1.5707963 --L 401"), 2,
                "contract_violation");
    const auto v = run("validate --criteria 7");
    CHECK(v.status == 3);
    CHECK(v.out.rfind("[FAIL] 7 ", 0) == 0);
    const auto last = v.out.substr(v.out.find('\n') + 1);
    CHECK(nlohmann::json::parse(last)["error"] == "tolerance_error");
}

TEST_CASE("validate reports one line per criterion") {
    const auto r = run("validate --criteria 1 4 8");
    CHECK(r.status == 0);
    CHECK(r.out.find("[PASS] 1 ") != std::string::npos);
    CHECK(r.out.find("[PASS] 4 ") != std::string::npos);
    CHECK(r.out.find("[PASS] 8 ") != std::string::npos);
}
