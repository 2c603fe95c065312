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

#include <filesystem>
#include <fstream>

#include "fluxmacro/config.hpp"
#include "fluxmacro/constants.hpp"
#include "fluxmacro/errors.hpp"
#include "fluxmacro/registry.hpp"

using namespace fluxmacro;
using namespace fluxmacro::config;

namespace {

std::string error_of(auto&& f) {
    try {
        f();
    } catch (const ConfigError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("superposition from JSON") {
    const auto s = superposition_from(parse_json(R"({"overlaps": [[0.5, 0], [0.25, -0.5], 0.9]})"));
    REQUIRE(s.mode_count() == 3);
    CHECK(s.overlaps[1] == std::complex<double>(0.25, -0.5));
    CHECK(s.overlaps[2] == std::complex<double>(0.9, 0.0));

    CHECK(error_of([] { (void)superposition_from(parse_json("{}")); }) == "field 'overlaps': missing");
    CHECK(error_of([] { (void)superposition_from(parse_json(R"({"overlaps": [[1, 2, 3]]})")); })
              .find("overlaps[0]") != std::string::npos);
    CHECK(error_of([] { (void)superposition_from(parse_json(R"({"overlaps": ["a"]})")); })
              .find("expected a number") != std::string::npos);
}

TEST_CASE("JSON syntax errors carry line and column") {
    const std::string msg = error_of([] { (void)parse_json("{\n  \"a\": 1,\n  oops\n}", "in.json"); });
    CHECK(msg.find("in.json:3:") == 0);
}

TEST_CASE("TOML input") {
    const auto doc = parse_toml(R"(
preset = "lukens"
kappa_K = 645.0
convention = "literal"
mode_count = 12

[material]
gap_J = 3e-23
)");
    const auto inst = instanton_from(doc);
    CHECK(inst.params.E_J == doctest::Approx(kelvin_to_joule(76.0)));
    CHECK(inst.params.kappa_energy == doctest::Approx(kelvin_to_joule(645.0)));
    CHECK(inst.params.mode_count == std::optional<std::uint64_t>(12));
    CHECK(material_from(doc).gap_Delta == 3e-23);
    CHECK(material_from(doc).debye_energy == registry::aluminium().debye_energy);

    const std::string msg = error_of([] { (void)parse_toml("a = \n", "c.toml"); });
    CHECK(msg.find("c.toml:1:") == 0);
}

TEST_CASE("instanton config requires energies without a preset") {
    CHECK(error_of([] { (void)instanton_from(parse_json(R"({"E_J_K": 1, "E_L_K": 2})")); }) ==
          "field 'E_C_K': missing (no preset given)");
    const auto c = instanton_from(parse_json(R"({"E_J_K": 76, "E_L_K": 645, "E_C_K": 0.009,
                                                 "convention": "shifted_wells", "rel_tol": 1e-9})"));
    CHECK(c.convention == instanton::Convention::ShiftedWells);
    CHECK(*c.rel_tol == 1e-9);
    CHECK(error_of([] { (void)instanton_from(parse_json(R"({"preset": "nope"})")); })
              .find("unknown parameter set") != std::string::npos);
}

TEST_CASE("scan and grid configs") {
    const auto grid = scan_from(parse_json(R"({"N_B": [1e6, 2e6], "Rs_over_D": [0.5, 1], "D": 2e-6})"));
    REQUIRE(grid.grid.size() == 4);
    CHECK(grid.grid[1].R_S == doctest::Approx(2e-6));
    CHECK_FALSE(grid.coupling_scale.has_value());

    const auto list = scan_from(parse_json(
        R"({"coupling_scale_J": 1.57e-31, "geometries": [{"N_B": 5, "R_S": 1e-6, "D": 3e-6}]})"));
    REQUIRE(list.grid.size() == 1);
    CHECK(list.grid[0].g_f == 2.0);
    CHECK(*list.coupling_scale == 1.57e-31);
    CHECK(error_of([] { (void)scan_from(parse_json(R"({"geometries": [{"N_B": 1, "R_S": 1}]})")); }) ==
          "field 'geometries[0].D': missing");

    const auto g = grid_from(parse_json(R"({"eps_over_Delta": {"min": -1, "max": 1, "step": 0.5}})"));
    CHECK(g.eps_over_Delta.values() == std::vector<double>{-1.0, -0.5, 0.0, 0.5, 1.0});
    CHECK(g.qe_over_Delta.values().size() == 31);
    CHECK(grid_from(parse_json("{}")).eps_over_Delta.values().size() == 61);
}

TEST_CASE("file loading by extension") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "fluxmacro_config_test";
    fs::create_directories(dir);
    {
        std::ofstream(dir / "a.json") << R"({"overlaps": [0.5, 0.5]})";
        std::ofstream(dir / "a.toml") << "overlaps = [0.5, 0.5]\n";
        std::ofstream(dir / "a.yaml") << "overlaps: [0.5]\n";
    }
    CHECK(superposition_from(load_file(dir / "a.json")).mode_count() == 2);
    CHECK(superposition_from(load_file(dir / "a.toml")).mode_count() == 2);
    CHECK_THROWS_AS((void)load_file(dir / "a.yaml"), ConfigError);
    CHECK_THROWS_AS((void)load_file(dir / "missing.json"), ConfigError);
    fs::remove_all(dir);
}
