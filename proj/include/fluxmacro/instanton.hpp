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

#include <optional>
#include <string>
#include <string_view>

#include "fluxmacro/macro.hpp"

namespace fluxmacro::instanton {

/// Flux-qubit energies in joules: E_J = I_c Phi0 / 2pi, E_L = Phi0^2 / 2L,
/// E_C = e^2 / 2C, kappa_energy = Phi0^2 K (inductance renormalization).
struct SfqParams {
    double E_J;
    double E_L;
    double E_C;
    double kappa_energy = 0.0;
    macro::ModeCount mode_count = macro::kUnboundedModes;

    void validate() const;

    [[nodiscard]] double critical_current() const;
    [[nodiscard]] double capacitance() const;
    [[nodiscard]] double inductance() const;
};

/// Integration path and reference energy for the instanton action.
enum class Convention {
    /// sqrt(2 C V) over [-Phi0/2, Phi0/2] with V unshifted.
    Literal,
    /// sqrt(2 C (V - V_min)) between the two symmetric minima of V.
    ShiftedWells,
};

[[nodiscard]] std::string_view to_string(Convention c);
/// Accepts "literal" / "shifted_wells" (case-insensitive, '-' or '_').
[[nodiscard]] Convention parse_convention(std::string_view name);

struct InstantonResult {
    double S_over_hbar;
    double lambda;
    double M;
    Convention convention;
    std::optional<double> well_position;   ///< f_min > 0, units of Phi0
    std::optional<double> barrier_height;  ///< V(0) - V(f_min), J
};

inline constexpr double kDefaultRelTol = 1e-8;

/// V(f) = E_J cos(2 pi f) + (E_L + kappa_energy) f^2 with f = Phi / Phi0.
[[nodiscard]] double flux_potential(double f, const SfqParams& p);
/// dV/df.
[[nodiscard]] double flux_potential_slope(double f, const SfqParams& p);

/// pi * integral of sqrt(V/E_C) over [f_lo, f_hi] (the Literal integrand).
/// Throws DomainError if V < 0 anywhere on the segment.
[[nodiscard]] double literal_action_segment(const SfqParams& p, double f_lo, double f_hi,
                                            double rel_tol);

/// Positive minimum of V located by a 1e-3 scan of V' and bisection.
/// Throws ShapeError if V''(0) >= 0 (single well).
[[nodiscard]] double locate_well(const SfqParams& p);

/// S/hbar, lambda = S/hbar (log prefactor dropped) and M from the upper bound.
[[nodiscard]] InstantonResult instanton_action(const SfqParams& p,
                                               Convention convention = Convention::Literal,
                                               double rel_tol = kDefaultRelTol);

/// M(bare + kappa_energy) / M(bare).
[[nodiscard]] double amplification_factor(const SfqParams& bare, double kappa_energy,
                                          Convention convention = Convention::Literal,
                                          double rel_tol = kDefaultRelTol);

} // namespace fluxmacro::instanton
