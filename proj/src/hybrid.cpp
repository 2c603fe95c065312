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

#include "fluxmacro/hybrid.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fluxmacro/constants.hpp"
#include "fluxmacro/errors.hpp"
#include "fluxmacro/format.hpp"

namespace fluxmacro::hybrid {

void HybridGeometry::validate() const {
    if (!(N_B >= 0.0) || !std::isfinite(N_B)) {
        throw DomainError("atom number must be finite and nonnegative");
    }
    if (!(R_S > 0.0) || !(D > 0.0)) {
        throw DomainError("wire radius and standoff must be positive");
    }
}

CouplingConstant coupling_c2(const bcs::MaterialParams& mat, double g_f) {
    mat.validate();
    constexpr double pi = std::numbers::pi;
    const double moment = g_f * kSI.mu_B * kSI.mu_0 * kSI.e_charge;
    const double rho = mat.dos_at_fermi;
    const double c2 = moment * moment * rho * rho * mat.debye_energy / (8.0 * pi * pi * pi * pi);
    return {c2, pi * kSI.hbar * c2 / 32.0};
}

InductanceRenormalization inductance_from_scale(double scale, const HybridGeometry& geom) {
    geom.validate();
    const double ratio = geom.R_S / geom.D;
    const double r2 = ratio * ratio;
    const double energy = scale * r2 * r2 * geom.N_B * geom.N_B;
    return {energy / (kSI.Phi0 * kSI.Phi0), energy};
}

InductanceRenormalization inductance_renormalization(const bcs::MaterialParams& mat,
                                                     const HybridGeometry& geom) {
    return inductance_from_scale(coupling_c2(mat, geom.g_f).scale, geom);
}

namespace {

template <class ScaleOf>
std::vector<ScanRow> scan(const instanton::SfqParams& bare, std::span<const HybridGeometry> grid,
                          double rel_tol, ScaleOf&& scale_of) {
    instanton::SfqParams base = bare;
    base.kappa_energy = 0.0;
    const double m_bare =
        instanton::instanton_action(base, instanton::Convention::Literal, rel_tol).M;
    std::vector<ScanRow> rows;
    rows.reserve(grid.size());
    for (const auto& geom : grid) {
        const auto k = inductance_from_scale(scale_of(geom), geom);
        instanton::SfqParams p = base;
        p.kappa_energy = k.kappa_energy;
        const auto res = instanton::instanton_action(p, instanton::Convention::Literal, rel_tol);
        rows.push_back({geom.N_B, geom.R_S / geom.D, k.kappa_energy, res.lambda, res.M,
                        res.M / m_bare});
    }
    return rows;
}

} // namespace

std::vector<ScanRow> hybrid_scan(const instanton::SfqParams& bare, const bcs::MaterialParams& mat,
                                 std::span<const HybridGeometry> grid, double rel_tol) {
    return scan(bare, grid, rel_tol,
                [&mat](const HybridGeometry& g) { return coupling_c2(mat, g.g_f).scale; });
}

std::vector<ScanRow> hybrid_scan_with_scale(const instanton::SfqParams& bare, double scale,
                                            std::span<const HybridGeometry> grid,
                                            double rel_tol) {
    return scan(bare, grid, rel_tol, [scale](const HybridGeometry&) { return scale; });
}

std::string scan_csv(std::span<const ScanRow> rows) {
    std::ostringstream os;
    os << "N_B,Rs_over_D,kappa_energy_K,lambda,M,amplification\n";
    for (const auto& r : rows) {
        os << fmt::shortest(r.N_B) << ',' << fmt::shortest(r.Rs_over_D) << ','
           << fmt::significant(joule_to_kelvin(r.kappa_energy), 6) << ','
           << fmt::shortest(r.lambda) << ',' << fmt::shortest(r.M) << ','
           << fmt::shortest(r.amplification) << '\n';
    }
    return os.str();
}

} // namespace fluxmacro::hybrid
