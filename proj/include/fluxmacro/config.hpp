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

#pragma once

#include <filesystem>
#include <json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fluxmacro/bcs.hpp"
#include "fluxmacro/hybrid.hpp"
#include "fluxmacro/instanton.hpp"
#include "fluxmacro/macro.hpp"

// Input files. JSON or TOML, chosen by extension; both are normalized to a
// JSON tree so the readers below serve either. All failures are ConfigError
// naming the file position or the offending field.
namespace fluxmacro::config {

using Json = nlohmann::json;

/// Parses `.json` or `.toml`. Syntax errors report "path:line:column".
[[nodiscard]] Json load_file(const std::filesystem::path& path);
[[nodiscard]] Json parse_json(std::string_view text, std::string_view origin = "<input>");
[[nodiscard]] Json parse_toml(std::string_view text, std::string_view origin = "<input>");

/// {"overlaps": [0.5, [re, im], ...]}: real numbers or [re, im] pairs.
[[nodiscard]] macro::SuperpositionSpec superposition_from(const Json& doc);

struct InstantonConfig {
    instanton::SfqParams params;
    instanton::Convention convention = instanton::Convention::Literal;
    std::optional<double> rel_tol;
};

/// {"preset": "lukens", "E_J_K", "E_L_K", "E_C_K", "kappa_K", "mode_count",
/// "convention", "rel_tol"}. Explicit energies (kelvin) override the preset;
/// without a preset E_J_K, E_L_K and E_C_K are required.
[[nodiscard]] InstantonConfig instanton_from(const Json& doc);

/// Optional "material" table {gap_J, fermi_energy_J, dos_at_fermi, debye_energy_J}
/// overriding the built-in aluminium entries field by field.
[[nodiscard]] bcs::MaterialParams material_from(const Json& doc);

struct ScanConfig {
    instanton::SfqParams bare;
    bcs::MaterialParams material;
    std::vector<hybrid::HybridGeometry> grid;
    std::optional<double> coupling_scale;  ///< J; empty = from the material
};

/// {"preset", "material", "coupling_scale_J",
///  "geometries": [{N_B, R_S, D, g_f}] | "N_B": [..], "Rs_over_D": [..], "D": x}.
[[nodiscard]] ScanConfig scan_from(const Json& doc);

struct Axis {
    double lo;
    double hi;
    double step;
    [[nodiscard]] std::vector<double> values() const;  ///< lo, lo + step, ..., <= hi
};

struct GridConfig {
    bcs::MaterialParams material;
    Axis eps_over_Delta{-3.0, 3.0, 0.1};
    Axis qe_over_Delta{0.0, 3.0, 0.1};
};

/// {"material", "eps_over_Delta": {min, max, step}, "qe_over_Delta": {...}}.
[[nodiscard]] GridConfig grid_from(const Json& doc);

} // namespace fluxmacro::config
