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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace fluxmacro::macro {

/// |Lambda| for the (1 - 1/|Lambda|) factor of the upper bound; empty means
/// the unbounded limit where the factor is 1.
using ModeCount = std::optional<std::uint64_t>;
inline constexpr ModeCount kUnboundedModes = std::nullopt;

/// Two-branch product-state superposition, described by per-mode overlaps
/// z_j = <phi_j|psi_j>.
struct SuperpositionSpec {
    std::vector<std::complex<double>> overlaps;

    [[nodiscard]] std::size_t mode_count() const { return overlaps.size(); }
    /// Throws DomainError on an empty list or |z_j| > 1.
    void validate() const;
};

struct MacroReport {
    double M;
    double lambda;        ///< -ln |prod z_j|
    double upper_bound;   ///< bound(lambda, |J|)
    double normalization; ///< 2 + 2 Re prod z_j
};

/// M = 1 + sum_{j != k} sqrt((1-|z_j|^2)(1-|z_k|^2)) / (|J| (1 + Re prod z)).
[[nodiscard]] MacroReport macroscopicity_closed_form(const SuperpositionSpec& sup);

/// Variance of H = sum_j (|phi_j><phi_j| - |psi_j><psi_j|) / sqrt(1 - |z_j|^2).
[[nodiscard]] double variance_of_canonical_H(const SuperpositionSpec& sup);

struct BlochAngles {
    double polar;
    double azimuth;
};

struct BruteForceResult {
    double max_variance;
    std::vector<BlochAngles> angles; ///< per mode, maximizing direction
};

struct BruteForceOptions {
    int starts = 16;
    double tol = 1e-10;
    std::uint64_t seed = 0;
};

inline constexpr std::size_t kMaxBruteForceModes = 6;

/**
 * Maximal variance of sum_j n_j . sigma^(j) over unit Bloch vectors n_j,
 * computed on the explicit 2^|J| state vector with branches
 * |phi_j> = |0>, |psi_j> = z_j |0> + sqrt(1 - |z_j|^2) |1>.
 *
 * Multi-start coordinate ascent over the two angles of each mode. Each
 * coordinate update scans the period and refines the best bracket by
 * golden-section search. Stops when a sweep gains less than `tol`.
 */
[[nodiscard]] BruteForceResult brute_force_max_variance(const SuperpositionSpec& sup,
                                                        const BruteForceOptions& opts);

/// 2 lambda / (1 + e^-lambda) (1 - 1/|Lambda|) + 1.
[[nodiscard]] double macroscopicity_upper_bound(double lambda, ModeCount mode_count);

struct TightnessReport {
    double M;
    double bound;
    double gap;        ///< bound - M
    double spread;     ///< max x_k - min x_k
    bool tight;        ///< spread < 1 / |Lambda|
    bool claim_holds;  ///< !tight || gap < 1
};

/// Bound-vs-exact comparison for real overlaps z_k = sqrt(1 - x_k).
[[nodiscard]] TightnessReport bound_tightness_check(std::span<const double> x_list);

struct TwoLevelGap {
    double gap;             ///< J
    double expected_energy; ///< <L|H_d|L>, J
    bool underflow;         ///< e^-lambda underflowed to zero
};

/**
 * Spectrum of H_d = (gamma/2)(|L><L| + |R><R|) for <L|R> = e^-lambda,
 * solved numerically: the Gram matrix [[1, s], [s, 1]] is factored
 * analytically (Cholesky), H_d is assembled in that orthonormal frame and
 * the shifted matrix H_d - gamma/2 diagonalized.
 */
[[nodiscard]] TwoLevelGap two_level_gap(double gamma, double lambda);

} // namespace fluxmacro::macro
