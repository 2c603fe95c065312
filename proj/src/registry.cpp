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

#include "fluxmacro/registry.hpp"

#include <string>

#include "fluxmacro/constants.hpp"
#include "fluxmacro/errors.hpp"

namespace fluxmacro::registry {

namespace {

constexpr double kLukensEC_K = 9e-3;

} // namespace

bcs::MaterialParams aluminium() {
    return {
        .gap_Delta = 1.764 * kelvin_to_joule(1.2),
        .fermi_energy = 11.7 * kSI.e_charge,
        .dos_at_fermi = 4.58e46,
        .debye_energy = 3.21e-20,
    };
}

instanton::SfqParams lukens() {
    instanton::SfqParams p;
    p.E_J = kelvin_to_joule(76.0);
    p.E_L = kelvin_to_joule(645.0);
    p.E_C = kelvin_to_joule(kLukensEC_K);
    return p;
}

instanton::SfqParams wilhelm() {
    instanton::SfqParams p;
    p.E_C = kelvin_to_joule(kLukensEC_K);
    p.E_J = 38.0 * p.E_C;
    p.E_L = 2e4 * p.E_C;
    return p;
}

hybrid::HybridGeometry baseline_geometry() {
    return {.N_B = 2e6, .R_S = 1e-6, .D = 3e-6, .g_f = kAluminiumGFactor};
}

hybrid::HybridGeometry extreme_geometry() {
    return {.N_B = 5e6, .R_S = 3e-6, .D = 3e-6, .g_f = kAluminiumGFactor};
}

std::vector<NamedSfq> all_sfq() { return {{"lukens", lukens()}, {"wilhelm", wilhelm()}}; }

instanton::SfqParams sfq_by_name(std::string_view name) {
    for (auto& entry : all_sfq()) {
        if (entry.name == name) {
            return entry.params;
        }
    }
    throw ConfigError("unknown parameter set '" + std::string(name) +
                      "' (known: lukens, wilhelm)");
}

} // namespace fluxmacro::registry
