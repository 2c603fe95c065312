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

#include "fluxmacro/instanton.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>

#include "fluxmacro/constants.hpp"
#include "fluxmacro/errors.hpp"
#include "fluxmacro/format.hpp"
#include "fluxmacro/quadrature.hpp"

namespace fluxmacro::instanton {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kScanStep = 1e-3;
constexpr double kBisectWidth = 1e-12;
constexpr double kPathScanStep = 1e-4;

void check_rel_tol(double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-2)) {
        throw DomainError("rel_tol must lie in (0, 1e-2]");
    }
}

} // namespace

void SfqParams::validate() const {
    if (!(E_J > 0.0) || !(E_L > 0.0) || !(E_C > 0.0)) {
        throw DomainError("E_J, E_L and E_C must be positive");
    }
    if (!(kappa_energy >= 0.0) || !std::isfinite(kappa_energy)) {
        throw DomainError("kappa energy must be finite and nonnegative");
    }
}

double SfqParams::critical_current() const { return josephson_energy_to_critical_current(E_J); }
double SfqParams::capacitance() const { return charging_energy_to_capacitance(E_C); }
double SfqParams::inductance() const { return inductive_energy_to_inductance(E_L); }

std::string_view to_string(Convention c) {
    return c == Convention::Literal ? "literal" : "shifted_wells";
}

Convention parse_convention(std::string_view name) {
    std::string key;
    for (const char ch : name) {
        key.push_back(ch == '-' ? '_' : static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
    }
    if (key == "literal") {
        return Convention::Literal;
    }
    if (key == "shifted_wells" || key == "shiftedwells") {
        return Convention::ShiftedWells;
    }
    throw ConfigError("unknown convention '" + std::string(name) + "'");
}

double flux_potential(double f, const SfqParams& p) {
    return p.E_J * std::cos(kTwoPi * f) + (p.E_L + p.kappa_energy) * f * f;
}

double flux_potential_slope(double f, const SfqParams& p) {
    return -kTwoPi * p.E_J * std::sin(kTwoPi * f) + 2.0 * (p.E_L + p.kappa_energy) * f;
}

double literal_action_segment(const SfqParams& p, double f_lo, double f_hi, double rel_tol) {
    p.validate();
    check_rel_tol(rel_tol);
    const auto steps = static_cast<long>(std::ceil((f_hi - f_lo) / kPathScanStep));
    for (long i = 0; i <= steps; ++i) {
        const double f = std::min(f_hi, f_lo + static_cast<double>(i) * kPathScanStep);
        if (flux_potential(f, p) < 0.0) {
            throw DomainError("V(f) < 0 on the integration path at f = " + fmt::shortest(f));
        }
    }
    auto integrand = [&p](double f) {
        const double v = flux_potential(f, p);
        if (v < 0.0) {
            throw DomainError("V(f) < 0 on the integration path at f = " + fmt::shortest(f));
        }
        return std::sqrt(v / p.E_C);
    };
    return std::numbers::pi * quad::integrate(integrand, f_lo, f_hi, rel_tol).value;
}

double locate_well(const SfqParams& p) {
    p.validate();
    const double curvature = -kTwoPi * kTwoPi * p.E_J + 2.0 * (p.E_L + p.kappa_energy);
    if (!(curvature < 0.0)) {
        throw ShapeError("V''(0) >= 0: flux potential has a single well");
    }
    // V' < 0 just right of 0; its first sign change lies below f = 1/2.
    double lo = 0.0;
    double hi = 0.0;
    bool bracketed = false;
    for (int k = 1; k * kScanStep <= 0.5 + 1e-12; ++k) {
        const double f = k * kScanStep;
        if (flux_potential_slope(f, p) > 0.0) {
            lo = f - kScanStep;
            hi = f;
            bracketed = true;
            break;
        }
        lo = f;
    }
    if (!bracketed) {
        throw ShapeError("no minimum of V found in (0, 1/2]");
    }
    if (lo == 0.0) {
        lo = 0.5 * hi;
        while (flux_potential_slope(lo, p) >= 0.0) {
            lo *= 0.5;
        }
    }
    while (hi - lo > kBisectWidth) {
        const double mid = 0.5 * (lo + hi);
        (flux_potential_slope(mid, p) > 0.0 ? hi : lo) = mid;
    }
    return 0.5 * (lo + hi);
}

InstantonResult instanton_action(const SfqParams& p, Convention convention, double rel_tol) {
    p.validate();
    check_rel_tol(rel_tol);
    InstantonResult out{};
    out.convention = convention;
    if (convention == Convention::Literal) {
        out.S_over_hbar = literal_action_segment(p, -0.5, 0.5, rel_tol);
    } else {
        const double f_min = locate_well(p);
        const double v_min = flux_potential(f_min, p);
        // f = f_min sin t: the integrand vanishes at the turning points.
        auto integrand = [&](double t) {
            const double f = f_min * std::sin(t);
            const double dv = std::max(0.0, flux_potential(f, p) - v_min);
            return std::sqrt(dv / p.E_C) * f_min * std::cos(t);
        };
        out.S_over_hbar =
            std::numbers::pi *
            quad::integrate(integrand, -0.5 * std::numbers::pi, 0.5 * std::numbers::pi, rel_tol)
                .value;
        out.well_position = f_min;
        out.barrier_height = flux_potential(0.0, p) - v_min;
    }
    out.lambda = out.S_over_hbar;
    out.M = macro::macroscopicity_upper_bound(out.lambda, p.mode_count);
    return out;
}

double amplification_factor(const SfqParams& bare, double kappa_energy, Convention convention,
                            double rel_tol) {
    SfqParams bare_only = bare;
    bare_only.kappa_energy = 0.0;
    SfqParams hybrid = bare;
    hybrid.kappa_energy = kappa_energy;
    return instanton_action(hybrid, convention, rel_tol).M /
           instanton_action(bare_only, convention, rel_tol).M;
}

} // namespace fluxmacro::instanton
