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

#include "fluxmacro/constants.hpp"

#include <cmath>
#include <numbers>

#include "fluxmacro/errors.hpp"

namespace fluxmacro {

double kelvin_to_joule(double energy_K) { return energy_K * kSI.k_B; }

double joule_to_kelvin(double energy_J) { return energy_J / kSI.k_B; }

double charging_energy_to_capacitance(double E_C) {
    if (!(E_C > 0.0)) {
        throw DomainError("charging energy must be positive");
    }
    return kSI.e_charge * kSI.e_charge / (2.0 * E_C);
}

double capacitance_to_charging_energy(double C) {
    if (!(C > 0.0)) {
        throw DomainError("capacitance must be positive");
    }
    return kSI.e_charge * kSI.e_charge / (2.0 * C);
}

double inductive_energy_to_inductance(double E_L) {
    if (!(E_L > 0.0)) {
        throw DomainError("inductive energy must be positive");
    }
    return kSI.Phi0 * kSI.Phi0 / (2.0 * E_L);
}

double josephson_energy_to_critical_current(double E_J) {
    return 2.0 * std::numbers::pi * E_J / kSI.Phi0;
}

} // namespace fluxmacro
