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

#include <numbers>

namespace fluxmacro {

/**
 * Physical constants in SI units (CODATA 2018 exact or recommended values).
 */
struct PhysConsts {
    double hbar;     ///< J s
    double e_charge; ///< C
    double m_e;      ///< kg
    double mu_B;     ///< J/T
    double mu_0;     ///< T m/A
    double k_B;      ///< J/K
    double Phi0;     ///< Wb, pi hbar / e (superconducting flux quantum)
};

inline constexpr double kHbar = 1.054571817e-34;
inline constexpr double kElementaryCharge = 1.602176634e-19;

inline constexpr PhysConsts kSI{
    .hbar = kHbar,
    .e_charge = kElementaryCharge,
    .m_e = 9.1093837015e-31,
    .mu_B = 9.2740100783e-24,
    .mu_0 = 1.25663706212e-6,
    .k_B = 1.380649e-23,
    .Phi0 = std::numbers::pi * kHbar / kElementaryCharge,
};

[[nodiscard]] double kelvin_to_joule(double energy_K);
[[nodiscard]] double joule_to_kelvin(double energy_J);

/// C = e^2 / (2 E_C). Throws DomainError for E_C <= 0.
[[nodiscard]] double charging_energy_to_capacitance(double E_C);
[[nodiscard]] double capacitance_to_charging_energy(double C);

/// L = Phi0^2 / (2 E_L).
[[nodiscard]] double inductive_energy_to_inductance(double E_L);
/// I_c = 2 pi E_J / Phi0.
[[nodiscard]] double josephson_energy_to_critical_current(double E_J);

} // namespace fluxmacro
