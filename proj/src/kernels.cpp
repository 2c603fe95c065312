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

#include "fluxmacro/kernels.hpp"

#include <boost/math/special_functions/bessel.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "fluxmacro/constants.hpp"
#include "fluxmacro/errors.hpp"
#include "fluxmacro/quadrature.hpp"

namespace fluxmacro::kernels {

namespace {

constexpr std::size_t kMinPoints = 16;

void require_points(std::size_t n_points) {
    if (n_points < kMinPoints) {
        std::ostringstream os;
        os << "vanishing checks need at least " << kMinPoints << " quadrature points, got "
           << n_points;
        throw DomainError(os.str());
    }
}

double denominator(double hbar_omega, double eps, double gap) {
    return hbar_omega * hbar_omega + eps * eps + gap * gap;
}

VanishingCheck finish(double residual, double control) {
    return {residual, control, std::abs(residual) <= kVanishingRelTol * control};
}

} // namespace

double gorkov_trace(double omega_n, double eps, const bcs::MaterialParams& mat,
                    TraceChannel channel) {
    mat.validate();
    const double hw = kSI.hbar * omega_n;
    const double d = denominator(hw, eps, mat.gap_Delta);
    return channel == TraceChannel::Identity ? 2.0 * hw / d : -2.0 * eps / d;
}

VanishingCheck first_order_vanishing(double omega_m, const bcs::MaterialParams& mat,
                                     std::size_t n_points, EnergyNumerator numerator) {
    mat.validate();
    require_points(n_points);
    const double hw = kSI.hbar * omega_m;
    const double rho = mat.dos_at_fermi;
    const auto weight = [&](double eps) { return rho / denominator(hw, eps, mat.gap_Delta); };
    const auto num = [numerator](double eps) {
        switch (numerator) {
        case EnergyNumerator::Linear:
            return eps;
        case EnergyNumerator::Absolute:
            return std::abs(eps);
        case EnergyNumerator::Cubic:
            return eps * eps * eps;
        }
        return eps;
    };
    const auto rule = quad::gauss_legendre(n_points);
    const double w = mat.debye_energy;
    const double residual = quad::apply(rule, [&](double e) { return num(e) * weight(e); }, -w, w);
    const double control =
        quad::apply(rule, [&](double e) { return std::abs(num(e)) * weight(e); }, -w, w);
    return finish(residual, control);
}

VanishingCheck odd_moment_check(const std::function<double(double)>& g, double k_lo,
                                double k_hi, std::size_t n_points) {
    require_points(n_points);
    const auto rule = quad::gauss_legendre(n_points);
    const double residual = quad::apply(rule, [&](double k) { return k * g(k); }, k_lo, k_hi);
    const double control =
        quad::apply(rule, [&](double k) { return std::abs(k * g(k)); }, k_lo, k_hi);
    return finish(residual, control);
}

VanishingCheck parity_vanishing_check(const bcs::MaterialParams& mat, std::size_t n_points) {
    mat.validate();
    const double omega = mat.gap_Delta / kSI.hbar;
    const auto g = [&](double k) {
        const double eps = mat.fermi_energy * (k * k - 1.0);
        const double id = gorkov_trace(omega, eps, mat, TraceChannel::Identity);
        const double tz = gorkov_trace(omega, eps, mat, TraceChannel::TauZ);
        return tz * id + id * tz;
    };
    const double k_max = std::sqrt(1.0 + mat.debye_energy / mat.fermi_energy);
    return odd_moment_check(g, -k_max, k_max, n_points);
}

std::string_view to_string(Method m) {
    switch (m) {
    case Method::ClosedForm:
        return "closed_form";
    case Method::DirectSum:
        return "direct_sum";
    case Method::Quadrature:
        return "quadrature";
    }
    return "unknown";
}

KernelEval matsubara_double_sum(double tau, double eps, const bcs::MaterialParams& mat,
                                Method method, std::size_t truncation, double beta_hbar) {
    mat.validate();
    if (!std::isfinite(tau) || !std::isfinite(eps)) {
        throw DomainError("tau and eps must be finite");
    }
    const double hbar = kSI.hbar;
    const double gap2 = mat.gap_Delta * mat.gap_Delta;
    const double energy2 = eps * eps + gap2;
    if (method == Method::ClosedForm) {
        const double energy = std::sqrt(energy2);
        const double value = (1.0 + (gap2 - eps * eps) / energy2) / (4.0 * hbar * hbar) *
                             std::exp(-2.0 * energy * std::abs(tau) / hbar);
        return {value, method, std::nullopt, std::nullopt};
    }
    if (method != Method::DirectSum) {
        throw DomainError("matsubara_double_sum supports ClosedForm and DirectSum only");
    }
    if (truncation < 1 || !(beta_hbar > 0.0)) {
        throw DomainError("DirectSum needs truncation >= 1 and beta_hbar > 0");
    }
    const double t = std::abs(tau);
    if (!(t < beta_hbar)) {
        throw DomainError("DirectSum needs |tau| < beta_hbar");
    }
    // Frequencies w_k = c (2k+1); the n < 0 half mirrors k >= 0, leaving
    // A = (2/T) sum cos(w t)/(hbar^2 w^2 + E^2) and
    // B = (2/T) sum w sin(w t)/(hbar^2 w^2 + E^2).
    const double c = std::numbers::pi / beta_hbar;
    const double x = c * t;
    const double a2 = energy2 / (hbar * hbar);
    double rem_a = 0.0;
    double rem_b = 0.0;
    // Reverse order: smallest terms first.
    for (std::size_t i = truncation; i-- > 0;) {
        const double odd = 2.0 * static_cast<double>(i) + 1.0;
        const double w = c * odd;
        const double w2 = w * w;
        const double tail = 1.0 / (w2 + a2);
        rem_a += std::cos(odd * x) / w2 * tail;
        rem_b += std::sin(odd * x) / w * tail;
    }
    const double pi = std::numbers::pi;
    // sum cos((2k+1)x)/(2k+1)^2 = (pi/8)(pi - 2x); sum sin((2k+1)x)/(2k+1) = pi/4.
    const double lattice_a = pi / 8.0 * (pi - 2.0 * x) / (c * c);
    const double lattice_b = x > 0.0 ? pi / 4.0 / c : 0.0;
    const double pref = 2.0 / (beta_hbar * hbar * hbar);
    const double big_a = pref * (lattice_a - a2 * rem_a);
    const double big_b = pref * (lattice_b - a2 * rem_b);
    const double value = hbar * hbar * big_b * big_b + (gap2 - eps * eps) * big_a * big_a;
    if (!std::isfinite(value) || !std::isfinite(lattice_a)) {
        throw RangeError("Matsubara direct sum overflowed; beta_hbar * Delta out of range");
    }
    return {value, method, truncation, beta_hbar};
}

ArctanIdentity eps_integral_identities(const bcs::MaterialParams& mat) {
    mat.validate();
    const double hbar2 = kSI.hbar * kSI.hbar;
    const double gap = mat.gap_Delta;
    const double ymax = mat.debye_energy / gap;
    // eps = gap * y; the integrand is even, so integrate [0, ymax] twice.
    const auto f = [](double y) { return 0.25 * (1.0 + (1.0 - y * y) / (1.0 + y * y)); };
    const double integral = quad::integrate(f, 0.0, ymax, 1e-13).value;
    const double lhs = 2.0 * gap / hbar2 * integral;
    const double rhs = gap / hbar2 * std::atan(ymax);
    const bool agrees = std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs);
    return {lhs, rhs, agrees, lhs > 0.0};
}

double bessel_k0(double t) {
    if (!(t > 0.0)) {
        throw DomainError("K_0 needs t > 0");
    }
    return boost::math::cyl_bessel_k(0, t);
}

double bickley_ki1(double x, double rel_tol) {
    if (!(x >= 0.0)) {
        throw DomainError("Ki_1 needs x >= 0");
    }
    if (!(rel_tol > 0.0)) {
        throw DomainError("rel_tol must be positive");
    }
    // Fubini on K_0(t) = int_0^inf exp(-t cosh u) du.
    const auto f = [x](double u) {
        const double ch = std::cosh(u);
        return std::isfinite(ch) ? std::exp(-x * ch) / ch : 0.0;
    };
    return quad::integrate(f, 0.0, std::numeric_limits<double>::infinity(), rel_tol).value;
}

double bickley_ki1_series(double x) {
    if (!(x >= 0.0)) {
        throw DomainError("Ki_1 needs x >= 0");
    }
    if (x == 0.0) {
        return std::numbers::pi / 2.0;
    }
    const double h = 0.5 * x;
    const double log_h = std::log(h);
    const double h2 = h * h;
    double coeff = 1.0;  // h^{2k} / (k!)^2
    double harmonic = 0.0;
    double sum = 0.0;
    for (int k = 0; k < 300; ++k) {
        if (k > 0) {
            coeff *= h2 / (static_cast<double>(k) * static_cast<double>(k));
            harmonic += 1.0 / k;
        }
        const double odd = 2.0 * k + 1.0;
        const double term = coeff * 2.0 * h / odd *
                            (harmonic - std::numbers::egamma - log_h + 1.0 / odd);
        sum += term;
        if (k > 2 && std::abs(term) <= 1e-17 * std::abs(sum)) {
            break;
        }
    }
    return std::numbers::pi / 2.0 - sum;
}

double gap_equation_ratio(double V0_rho) {
    if (!(V0_rho > 0.0)) {
        throw DomainError("V0 rho must be positive");
    }
    if (V0_rho > 700.0) {
        throw RangeError("sinh(V0 rho) overflows for V0 rho > 700");
    }
    return std::sinh(V0_rho);
}

double gap_equation_coupling(double debye_over_gap) {
    if (!(debye_over_gap > 0.0)) {
        throw DomainError("hbar omega_D / Delta must be positive");
    }
    return std::asinh(debye_over_gap);
}

} // namespace fluxmacro::kernels
