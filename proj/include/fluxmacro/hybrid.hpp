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

#include <span>
#include <string>
#include <vector>

#include "fluxmacro/bcs.hpp"
#include "fluxmacro/instanton.hpp"

namespace fluxmacro::hybrid {

/// Condensate placed at standoff D above a loop of wire radius R_S.
struct HybridGeometry {
    double N_B;  ///< condensed atoms
    double R_S;  ///< m
    double D;    ///< m
    double g_f;  ///< atomic g-factor

    /// Throws DomainError on N_B < 0 or nonpositive lengths.
    void validate() const;
    /// R_S > D is allowed but outside the intended geometry.
    [[nodiscard]] bool unusual_aspect() const { return R_S > D; }
};

struct CouplingConstant {
    double c2;     ///< (g_f mu_B mu_0 e)^2 rho(E_F)^2 hbar omega_D / 8 pi^4
    double scale;  ///< pi hbar C_2 / 2^5, J
};

[[nodiscard]] CouplingConstant coupling_c2(const bcs::MaterialParams& mat, double g_f);

struct InductanceRenormalization {
    double kappa;         ///< J/Wb^2
    double kappa_energy;  ///< Phi0^2 kappa, J
};

/// kappa_energy = scale (R_S/D)^4 N_B^2.
[[nodiscard]] InductanceRenormalization
inductance_renormalization(const bcs::MaterialParams& mat, const HybridGeometry& geom);

/// Same, from an explicit coupling scale pi hbar C_2 / 2^5 in joules.
[[nodiscard]] InductanceRenormalization inductance_from_scale(double scale,
                                                              const HybridGeometry& geom);

struct ScanRow {
    double N_B;
    double Rs_over_D;
    double kappa_energy;  ///< J
    double lambda;
    double M;
    double amplification;
};

/// One row per geometry, in input order, Literal convention.
[[nodiscard]] std::vector<ScanRow> hybrid_scan(const instanton::SfqParams& bare,
                                               const bcs::MaterialParams& mat,
                                               std::span<const HybridGeometry> grid,
                                               double rel_tol = instanton::kDefaultRelTol);

/// Scan with the coupling scale supplied directly instead of from `mat`.
[[nodiscard]] std::vector<ScanRow> hybrid_scan_with_scale(
    const instanton::SfqParams& bare, double scale, std::span<const HybridGeometry> grid,
    double rel_tol = instanton::kDefaultRelTol);

/// Header `N_B,Rs_over_D,kappa_energy_K,lambda,M,amplification`; kappa energy
/// in kelvin with 6 significant digits.
[[nodiscard]] std::string scan_csv(std::span<const ScanRow> rows);

} // namespace fluxmacro::hybrid
