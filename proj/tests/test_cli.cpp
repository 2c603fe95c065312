// Copyright 2026 The fluxmacro Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "fluxmacro/cli.hpp"
#include "fluxmacro/reproduce.hpp"

using namespace fluxmacro;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "fluxmacro");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch() {
    const auto d = fs::temp_directory_path() / "fluxmacro_cli_test";
    fs::create_directories(d);
    return d;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

} // namespace

TEST_CASE("macro from a config file") {
    const auto f = scratch() / "sup.json";
    std::ofstream(f) << R"({"overlaps": [[0.5, 0], [0.5, 0]]})";
    const auto r = run({"macro", "--config", f.string()});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["M"].get<double>() == doctest::Approx(1.6).epsilon(1e-15));
    CHECK(j.contains("lambda"));
    CHECK(j.contains("upper_bound"));
    CHECK(j.contains("normalization"));
}

TEST_CASE("macro with the oracle") {
    const auto r = run({"macro", "--z", "0,0,0", "--oracle", "--seed", "3"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["oracle_max_variance"].get<double>() == doctest::Approx(9.0).epsilon(1e-6));
}

TEST_CASE("crb") {
    const auto r = run({"crb", "--M", "1", "--modes", "1"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["bound_theta"].get<double>() == 0.5);
    const auto csv = run({"crb", "--M", "4", "--modes", "100", "--format", "csv"});
    CHECK(csv.out == "bound_theta,bound_flux_over_Phi0,regime\n0.025,0.025,Intermediate\n");
    CHECK(run({"crb", "--M", "5", "--modes", "2"}).code == cli::kExitDomain);
    CHECK(run({"crb", "--M", "1"}).code == cli::kExitConfig);
}

TEST_CASE("instanton presets and overrides") {
    const auto r = run({"instanton", "--preset", "lukens"});
    REQUIRE(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["M"].get<double>() == doctest::Approx(481.610885619998).epsilon(1e-9));
    const auto k = run({"instanton", "--preset", "lukens", "--kappa", "645"});
    CHECK(nlohmann::json::parse(k.out)["M"].get<double>() == doctest::Approx(674.134762380561).epsilon(1e-9));
    const auto sw = run({"instanton", "--convention", "shifted_wells"});
    CHECK(nlohmann::json::parse(sw.out)["convention"] == "shifted_wells");
    // Single-well shape error maps to the domain exit code.
    CHECK(run({"instanton", "--preset", "wilhelm", "--convention", "shifted_wells"}).code ==
          cli::kExitDomain);
    CHECK(run({"instanton", "--convention", "bogus"}).code == cli::kExitConfig);
}

TEST_CASE("bcs-grid default output") {
    const auto r = run({"bcs-grid"});
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("eps_over_Delta,qe_over_Delta,c_z,c_x,degenerate\n", 0) == 0);
    std::size_t lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == 61 * 31 + 1);
}

TEST_CASE("hybrid-scan") {
    const auto r = run({"hybrid-scan", "--coupling-scale", "quoted", "--NB", "2e6"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("561.554") != std::string::npos);
    CHECK(run({"hybrid-scan", "--coupling-scale", "lots"}).code == cli::kExitConfig);
}

TEST_CASE("kernels-check report") {
    const auto r = run({"kernels-check"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["all_pass"].get<bool>());
    CHECK(j["checks"].size() >= 8);
}

TEST_CASE("usage and config errors") {
    const auto none = run({});
    CHECK(none.code == cli::kExitConfig);
    CHECK(none.err.find("Usage") != std::string::npos);
    CHECK(run({"frobnicate"}).code == cli::kExitConfig);
    CHECK(run({"reproduce", "--format", "xml"}).code == cli::kExitConfig);
    CHECK(run({"reproduce", "--rel-tol", "0.5"}).code == cli::kExitConfig);

    const auto bad = scratch() / "bad.json";
    std::ofstream(bad) << "{\"overlaps\": [0.5,\n 0.5,,]}";
    const auto r = run({"macro", "--config", bad.string()});
    CHECK(r.code == cli::kExitConfig);
    CHECK(r.err.find(":2:") != std::string::npos);
    CHECK(run({"macro", "--config", (scratch() / "absent.toml").string()}).code == cli::kExitConfig);
}

TEST_CASE("reproduce writes atomically and matches the library") {
    const auto out = scratch() / "rep.csv";
    fs::remove(out);
    const auto r = run({"reproduce", "--format", "csv", "--out", out.string()});
    const auto rep = reproduce::run();
    CHECK(r.code == (rep.gated_pass() ? 0 : 1));
    CHECK(slurp(out) == reproduce::to_csv(rep));
    for (const auto& entry : fs::directory_iterator(scratch())) {
        CHECK(entry.path().string().find(".tmp.") == std::string::npos);
    }
}

TEST_CASE("reproduce table contents") {
    const auto rep = reproduce::run();
    std::vector<std::string> ids;
    for (const auto& row : rep.rows) ids.push_back(row.claim);
    for (const char* want : {"C2_scale", "M_lukens", "M_wilhelm", "M_hybrid", "amplification",
                             "EL_renorm_K", "M_extreme"}) {
        CHECK(std::find(ids.begin(), ids.end(), want) != ids.end());
    }
    for (const auto& row : rep.rows) {
        if (row.claim == "M_extreme") CHECK(row.flagged);
        if (row.claim == "M_lukens") CHECK(row.pass);
        if (row.claim == "M_wilhelm") CHECK(row.pass);
    }
    const auto j = nlohmann::json::parse(reproduce::to_json(rep));
    CHECK(j["rows"].size() == rep.rows.size());
    CHECK(j["gated_pass"].get<bool>() == rep.gated_pass());
}

TEST_CASE("installed binary exit codes") {
    const std::string bin = FLUXMACRO_CLI_PATH;
    const auto code = [](const std::string& cmd) {
        const int s = std::system((cmd + " >/dev/null 2>&1").c_str());
        return WEXITSTATUS(s);
    };
    CHECK(code(bin + " crb --M 1 --modes 1") == 0);
    CHECK(code(bin + " nonsense") == 2);
    CHECK(code(bin + " crb --M 0.5 --modes 1") == 1);
}
