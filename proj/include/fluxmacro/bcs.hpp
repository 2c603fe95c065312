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

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace fluxmacro::bcs {

/// Superconductor constants, all energies in joules.
struct MaterialParams {
    double gap_Delta;     ///< J
    double fermi_energy;  ///< J
    double dos_at_fermi;  ///< 1/(J m^3)
    double debye_energy;  ///< hbar omega_D, J

    /// Throws DomainError unless every field is positive and gap < debye.
    void validate() const;
};

/// Sampled pairing modes: single-particle energies relative to E_F, the
/// pair-momentum energy hbar^2 Q^2 / 2 m_e, and the mode count |Lambda|.
struct MomentumShell {
    std::vector<double> epsilons;
    double pair_momentum_energy = 0.0;
    std::size_t mode_count = 1;
};

struct PairAmplitudes {
    double u;
    double v;
};

/// Pairing angle theta with (u, v) = (cos theta, sin theta); theta = atan(v/u).
[[nodiscard]] double pairing_angle(double xi, double gap);

/// Closed-form BCS amplitudes at xi = eps + qe.
[[nodiscard]] PairAmplitudes pair_amplitudes(double eps, double qe,
                                             const MaterialParams& mat);

/// z_k = u^Q u^0 + v^Q v^0, the overlap of the Q and 0 pair states.
[[nodiscard]] double mode_overlap(double eps, double qe, const MaterialParams& mat);

struct OverlapExponent {
    double lambda;          ///< -sum_k ln z_k
    std::vector<double> x;  ///< x_k = 1 - z_k^2
};

/// Exact overlap exponent of a shell. Throws DomainError on z_k <= 0.
[[nodiscard]] OverlapExponent lambda_from_shell(const MomentumShell& shell,
                                                const MaterialParams& mat);

/// Same, from precomputed overlaps.
[[nodiscard]] OverlapExponent lambda_from_overlaps(std::span<const double> overlaps);

/// n equally spaced energies on [-hbar omega_D, +hbar omega_D], mode_count = n.
[[nodiscard]] MomentumShell uniform_shell(std::size_t n, double qe,
                                          const MaterialParams& mat);

/// Coefficients of the maximal-variance single-mode observable
/// c_z sigma_z + c_x sigma_x. Empty when the two branches coincide.
struct MaxVarCoefficients {
    double c_z;
    double c_x;
};

[[nodiscard]] std::optional<MaxVarCoefficients>
maxvar_coefficients(double eps, double qe, const MaterialParams& mat);

struct SurfaceCell {
    double eps_over_Delta;
    double qe_over_Delta;
    std::optional<MaxVarCoefficients> coefficients; ///< empty = degenerate
};

/// Row-major over (eps_grid, qe_grid).
[[nodiscard]] std::vector<SurfaceCell> fig2_surface(std::span<const double> eps_grid,
                                                    std::span<const double> qe_grid,
                                                    const MaterialParams& mat);

/// CSV with header `eps_over_Delta,qe_over_Delta,c_z,c_x,degenerate`.
/// Degenerate cells leave c_z and c_x empty.
[[nodiscard]] std::string surface_csv(std::span<const SurfaceCell> cells);

} // namespace fluxmacro::bcs
