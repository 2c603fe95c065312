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

#include <string>
#include <string_view>
#include <vector>

#include "fluxmacro/bcs.hpp"
#include "fluxmacro/hybrid.hpp"
#include "fluxmacro/instanton.hpp"

// Built-in parameter sets. Every value here can be overridden from a config
// file; these are what `reproduce` uses.
namespace fluxmacro::registry {

/// Coupling scale pi hbar C_2 / 2^5 as quoted for aluminium, J. Not derivable
/// from coupling_c2 (see README, "Known discrepancies").
inline constexpr double kQuotedCouplingScale = 1.57e-31;

/// Aluminium: weak-coupling gap 1.764 k_B T_c with T_c = 1.2 K, E_F = 11.7 eV,
/// rho(E_F) = 4.58e46 / (J m^3), hbar omega_D = 3.21e-20 J.
[[nodiscard]] bcs::MaterialParams aluminium();

inline constexpr double kAluminiumGFactor = 2.0;

/// rf-SQUID of the Lukens group: I_c = 152 pi k_B / Phi0 so E_J / k_B = 76 K,
/// E_L / k_B = 645 K, E_C / k_B = 9e-3 K.
[[nodiscard]] instanton::SfqParams lukens();

/// Delft-style qubit: E_J = 38 E_C, E_L = 2e4 E_C (E_C / k_B = 9e-3 K; only the
/// ratios matter for the action).
[[nodiscard]] instanton::SfqParams wilhelm();

/// Condensate 3 um above a 1 um wire with 2e6 atoms.
[[nodiscard]] hybrid::HybridGeometry baseline_geometry();

/// R_S = D, N_B = 5e6.
[[nodiscard]] hybrid::HybridGeometry extreme_geometry();

struct NamedSfq {
    std::string name;
    instanton::SfqParams params;
};

/// Lookup by name ("lukens", "wilhelm"); ConfigError otherwise.
[[nodiscard]] instanton::SfqParams sfq_by_name(std::string_view name);
[[nodiscard]] std::vector<NamedSfq> all_sfq();

} // namespace fluxmacro::registry
