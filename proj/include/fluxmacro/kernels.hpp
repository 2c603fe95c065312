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
#include <functional>
#include <optional>
#include <string_view>

#include "fluxmacro/bcs.hpp"

namespace fluxmacro::kernels {

enum class TraceChannel { Identity, TauZ };

/// Nambu trace of the free Gor'kov function without delta and phase-space
/// factors: Identity gives the imaginary coefficient 2 hbar w / (hbar^2 w^2
/// + eps^2 + Delta^2), TauZ gives -2 eps / (same). Units 1/J.
[[nodiscard]] double gorkov_trace(double omega_n, double eps, const bcs::MaterialParams& mat,
                                  TraceChannel channel);

struct VanishingCheck {
    double residual;
    double control;  ///< same integral with the absolute value of the integrand
    bool vanishes;   ///< |residual| <= 1e-12 * control
};

inline constexpr double kVanishingRelTol = 1e-12;

enum class EnergyNumerator { Linear, Absolute, Cubic };

/// Integral over [-hbar omega_D, hbar omega_D] of rho(E_F) * num(eps) /
/// (hbar^2 omega_m^2 + eps^2 + Delta^2) with an n-point Gauss-Legendre rule.
[[nodiscard]] VanishingCheck
first_order_vanishing(double omega_m, const bcs::MaterialParams& mat, std::size_t n_points,
                      EnergyNumerator numerator = EnergyNumerator::Linear);

/// Integral of k g(k) over [k_lo, k_hi] and its |k g| control.
[[nodiscard]] VanishingCheck odd_moment_check(const std::function<double(double)>& g,
                                              double k_lo, double k_hi, std::size_t n_points);

/// Radial form of the odd-parity cancellation: g(k) is the even factor
/// TauZ(w, eps_k) Id(w, eps_k) + Id(w, eps_k) TauZ(w, eps_k) at hbar w = Delta,
/// with eps_k = E_F ((k/k_F)^2 - 1), integrated for k/k_F in
/// [-k_max, k_max], k_max = sqrt(1 + hbar omega_D / E_F).
[[nodiscard]] VanishingCheck parity_vanishing_check(const bcs::MaterialParams& mat,
                                                    std::size_t n_points);

enum class Method { ClosedForm, DirectSum, Quadrature };

[[nodiscard]] std::string_view to_string(Method m);

struct KernelEval {
    double value;
    Method method;
    std::optional<std::size_t> truncation;
    std::optional<double> beta_hbar;  ///< s
};

/**
 * (1/(beta hbar))^2 sum over fermionic (n, r) of
 * (hbar^2 w_n w_r + Delta^2 - eps^2) e^{-i w_n tau} e^{i w_r tau} / (D_n D_r),
 * D = hbar^2 w^2 + eps^2 + Delta^2, in 1/(J^2 s^2).
 *
 * ClosedForm is the zero-temperature limit
 * (1/4hbar^2)(1 + (Delta^2 - eps^2)/(Delta^2 + eps^2)) exp(-2 E |tau| / hbar)
 * with E = sqrt(eps^2 + Delta^2); at tau = 0 it is the one-sided limit.
 *
 * DirectSum factorizes into two single sums over w_k = (2k+1) pi / beta hbar,
 * k = 0..truncation. The 1/w and 1/w^2 parts are summed exactly on the
 * lattice (square-wave and parabola Fourier series) and only the absolutely
 * convergent remainders are truncated. Requires |tau| < beta hbar.
 */
[[nodiscard]] KernelEval matsubara_double_sum(double tau, double eps,
                                              const bcs::MaterialParams& mat, Method method,
                                              std::size_t truncation = 0,
                                              double beta_hbar = 0.0);

struct ArctanIdentity {
    double quadrature_value;  ///< 1/hbar^2-scaled, 1/(J s^2)
    double closed_form;       ///< (Delta / hbar^2) atan(hbar omega_D / Delta)
    bool agrees;              ///< relative difference <= 1e-10
    bool positive;
};

[[nodiscard]] ArctanIdentity eps_integral_identities(const bcs::MaterialParams& mat);

/// Modified Bessel K_0 (Boost.Math).
[[nodiscard]] double bessel_k0(double t);

/// Bickley function Ki_1(x) = integral_x^inf K_0(t) dt, evaluated as
/// integral_0^inf exp(-x cosh u) / cosh u du by adaptive quadrature.
[[nodiscard]] double bickley_ki1(double x, double rel_tol = 1e-12);

/// Ki_1(x) = pi/2 - integral_0^x K_0, with the K_0 power series integrated
/// term by term. Accurate for 0 <= x <~ 8.
[[nodiscard]] double bickley_ki1_series(double x);

/// hbar omega_D / Delta = sinh(V_0 rho(E_F)). RangeError above 700.
[[nodiscard]] double gap_equation_ratio(double V0_rho);
/// Inverse: asinh(hbar omega_D / Delta).
[[nodiscard]] double gap_equation_coupling(double debye_over_gap);

} // namespace fluxmacro::kernels
