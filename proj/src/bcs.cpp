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

#include "fluxmacro/bcs.hpp"

#include <cmath>
#include <sstream>

#include "fluxmacro/errors.hpp"
#include "fluxmacro/format.hpp"

namespace fluxmacro::bcs {

void MaterialParams::validate() const {
    if (!(gap_Delta > 0.0) || !(fermi_energy > 0.0) || !(dos_at_fermi > 0.0) ||
        !(debye_energy > 0.0)) {
        throw DomainError("material parameters must be strictly positive");
    }
    if (!(gap_Delta < debye_energy)) {
        throw DomainError("gap must be smaller than the Debye energy");
    }
}

double pairing_angle(double xi, double gap) { return 0.5 * std::atan2(gap, xi); }

PairAmplitudes pair_amplitudes(double eps, double qe, const MaterialParams& mat) {
    const double gap = mat.gap_Delta;
    const double xi = eps + qe;
    const double quasi = std::hypot(xi, gap);
    // xi + sqrt(xi^2 + gap^2), rationalized for xi < 0.
    const double w = xi >= 0.0 ? xi + quasi : gap * gap / (quasi - xi);
    const double norm = std::hypot(gap, w);
    return {w / norm, gap / norm};
}

namespace {

// theta(eps) - theta(eps + qe); nonnegative for qe >= 0.
double branch_angle(double eps, double qe, double gap) {
    return pairing_angle(eps, gap) - pairing_angle(eps + qe, gap);
}

} // namespace

double mode_overlap(double eps, double qe, const MaterialParams& mat) {
    // u^Q u^0 + v^Q v^0 = cos(theta_0 - theta_Q)
    return std::cos(branch_angle(eps, qe, mat.gap_Delta));
}

OverlapExponent lambda_from_shell(const MomentumShell& shell, const MaterialParams& mat) {
    OverlapExponent out{0.0, {}};
    out.x.reserve(shell.epsilons.size());
    for (const double eps : shell.epsilons) {
        const double delta = branch_angle(eps, shell.pair_momentum_energy, mat.gap_Delta);
        const double z = std::cos(delta);
        if (!(z > 0.0)) {
            throw DomainError("mode overlap is not positive at eps = " +
                              fmt::shortest(eps) + " J");
        }
        const double s = std::sin(0.5 * delta);
        out.lambda -= std::log1p(-2.0 * s * s);
        const double sd = std::sin(delta);
        out.x.push_back(sd * sd);
    }
    return out;
}

OverlapExponent lambda_from_overlaps(std::span<const double> overlaps) {
    OverlapExponent out{0.0, {}};
    out.x.reserve(overlaps.size());
    for (const double z : overlaps) {
        if (!(z > 0.0)) {
            throw DomainError("mode overlap must be positive, got " + fmt::shortest(z));
        }
        out.lambda -= std::log(z);
        out.x.push_back((1.0 - z) * (1.0 + z));
    }
    return out;
}

MomentumShell uniform_shell(std::size_t n, double qe, const MaterialParams& mat) {
    if (n == 0) {
        throw DomainError("a momentum shell needs at least one mode");
    }
    MomentumShell shell;
    shell.pair_momentum_energy = qe;
    shell.mode_count = n;
    shell.epsilons.resize(n);
    const double w = mat.debye_energy;
    for (std::size_t i = 0; i < n; ++i) {
        shell.epsilons[i] =
            n == 1 ? 0.0
                   : -w + 2.0 * w * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    return shell;
}

std::optional<MaxVarCoefficients> maxvar_coefficients(double eps, double qe,
                                                      const MaterialParams& mat) {
    const double a = pairing_angle(eps, mat.gap_Delta);
    const double b = pairing_angle(eps + qe, mat.gap_Delta);
    const double sd = std::sin(a - b);
    if (sd == 0.0) {
        return std::nullopt;
    }
    // (u^2 - uQ^2, u v - uQ vQ) / sqrt(1 - z^2) with u = cos a, uQ = cos b:
    // numerators are (-sin(a+b) sin(a-b), cos(a+b) sin(a-b)), denominator |sin(a-b)|.
    const double sign = sd > 0.0 ? 1.0 : -1.0;
    return MaxVarCoefficients{-std::sin(a + b) * sign, std::cos(a + b) * sign};
}

std::vector<SurfaceCell> fig2_surface(std::span<const double> eps_grid,
                                      std::span<const double> qe_grid,
                                      const MaterialParams& mat) {
    std::vector<SurfaceCell> cells;
    cells.reserve(eps_grid.size() * qe_grid.size());
    for (const double eps : eps_grid) {
        for (const double qe : qe_grid) {
            cells.push_back({eps / mat.gap_Delta, qe / mat.gap_Delta,
                             maxvar_coefficients(eps, qe, mat)});
        }
    }
    return cells;
}

std::string surface_csv(std::span<const SurfaceCell> cells) {
    std::ostringstream os;
    os << "eps_over_Delta,qe_over_Delta,c_z,c_x,degenerate\n";
    for (const auto& cell : cells) {
        os << fmt::shortest(cell.eps_over_Delta) << ',' << fmt::shortest(cell.qe_over_Delta)
           << ',';
        if (cell.coefficients) {
            os << fmt::shortest(cell.coefficients->c_z) << ','
               << fmt::shortest(cell.coefficients->c_x) << ",0\n";
        } else {
            os << ",,1\n";
        }
    }
    return os.str();
}

} // namespace fluxmacro::bcs
