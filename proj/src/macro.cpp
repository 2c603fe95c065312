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

#include "fluxmacro/macro.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "fluxmacro/errors.hpp"
#include "fluxmacro/format.hpp"

namespace fluxmacro::macro {

namespace {

constexpr double kOverlapSlack = 1e-12;

// 1 - |z|^2, clamped at zero inside the slack.
double infidelity(std::complex<double> z) {
    const double a = std::abs(z);
    return std::max(0.0, (1.0 - a) * (1.0 + a));
}

struct ClosedFormParts {
    double cross;       // sum_{j != k} sqrt(x_j x_k)
    double re_product;  // Re prod z_j
    double lambda;      // -sum ln |z_j|
};

ClosedFormParts closed_form_parts(const SuperpositionSpec& sup) {
    double s1 = 0.0;
    double s2 = 0.0;
    double lambda = 0.0;
    std::complex<double> product{1.0, 0.0};
    for (const auto z : sup.overlaps) {
        const double x = infidelity(z);
        s1 += std::sqrt(x);
        s2 += x;
        // |z| may exceed 1 by the validation slack; clip so lambda >= 0.
        lambda -= std::log(std::min(std::abs(z), 1.0));
        product *= z;
    }
    return {std::max(0.0, s1 * s1 - s2), product.real(), lambda};
}

} // namespace

void SuperpositionSpec::validate() const {
    if (overlaps.empty()) {
        throw DomainError("a superposition needs at least one mode");
    }
    for (const auto z : overlaps) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) ||
            std::abs(z) > 1.0 + kOverlapSlack) {
            throw DomainError("overlap magnitude exceeds 1: " + fmt::shortest(std::abs(z)));
        }
    }
}

MacroReport macroscopicity_closed_form(const SuperpositionSpec& sup) {
    sup.validate();
    const auto parts = closed_form_parts(sup);
    const double denom = 1.0 + parts.re_product;
    if (!(denom > 0.0)) {
        throw DomainError("1 + Re prod z_j <= 0: superposition is not normalizable");
    }
    const auto n = static_cast<double>(sup.mode_count());
    const double M = 1.0 + parts.cross / (n * denom);
    return {M, parts.lambda, macroscopicity_upper_bound(parts.lambda, sup.mode_count()),
            2.0 * denom};
}

double variance_of_canonical_H(const SuperpositionSpec& sup) {
    sup.validate();
    for (const auto z : sup.overlaps) {
        if (!(infidelity(z) > 0.0)) {
            throw DomainError("|z_j| = 1: canonical observable undefined");
        }
    }
    const auto parts = closed_form_parts(sup);
    const double denom = 1.0 + parts.re_product;
    if (!(denom > 0.0)) {
        throw DomainError("1 + Re prod z_j <= 0: superposition is not normalizable");
    }
    return static_cast<double>(sup.mode_count()) + parts.cross / denom;
}

namespace {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

// First and second moments of the Pauli operators in the explicit state.
struct PauliMoments {
    std::size_t n = 0;
    std::vector<Vec3> mean;                    // <sigma_a^(j)>
    std::vector<std::array<Vec3, 3>> corr;     // <sigma_a^(j) sigma_b^(k)>, j*n + k
};

PauliMoments pauli_moments(const SuperpositionSpec& sup) {
    const std::size_t n = sup.mode_count();
    const std::size_t dim = std::size_t{1} << n;

    // (|0...0> + prod_j (z_j|0> + s_j|1>)) / norm, qubit j is bit j.
    std::vector<Complex> psi(dim);
    for (std::size_t idx = 0; idx < dim; ++idx) {
        Complex amp{1.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) {
            amp *= (idx >> j) & 1U ? Complex{std::sqrt(infidelity(sup.overlaps[j])), 0.0}
                                   : sup.overlaps[j];
        }
        psi[idx] = amp;
    }
    psi[0] += 1.0;
    double norm2 = 0.0;
    for (const auto& a : psi) {
        norm2 += std::norm(a);
    }
    if (!(norm2 > 1e-300)) {
        throw DomainError("branches cancel: superposition is not normalizable");
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& a : psi) {
        a *= inv;
    }

    // chi[j][a] = sigma_a^(j) |psi>
    std::vector<std::array<std::vector<Complex>, 3>> chi(n);
    const Complex I{0.0, 1.0};
    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t bit = std::size_t{1} << j;
        for (auto& v : chi[j]) {
            v.resize(dim);
        }
        for (std::size_t idx = 0; idx < dim; ++idx) {
            const std::size_t flip = idx ^ bit;
            const bool one = (idx & bit) != 0;
            chi[j][0][idx] = psi[flip];
            // sigma_y |0> = i|1>, sigma_y |1> = -i|0>
            chi[j][1][idx] = one ? I * psi[flip] : -I * psi[flip];
            chi[j][2][idx] = one ? -psi[idx] : psi[idx];
        }
    }

    auto inner = [dim](const std::vector<Complex>& a, const std::vector<Complex>& b) {
        Complex s{0.0, 0.0};
        for (std::size_t i = 0; i < dim; ++i) {
            s += std::conj(a[i]) * b[i];
        }
        return s;
    };

    PauliMoments m;
    m.n = n;
    m.mean.resize(n);
    m.corr.resize(n * n);
    for (std::size_t j = 0; j < n; ++j) {
        for (int a = 0; a < 3; ++a) {
            m.mean[j][a] = inner(psi, chi[j][a]).real();
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) {
                continue;
            }
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    m.corr[j * n + k][a][b] = inner(chi[j][a], chi[k][b]).real();
                }
            }
        }
    }
    return m;
}

Vec3 bloch(const BlochAngles& t) {
    const double s = std::sin(t.polar);
    return {s * std::cos(t.azimuth), s * std::sin(t.azimuth), std::cos(t.polar)};
}

double variance(const PauliMoments& m, const std::vector<BlochAngles>& angles) {
    const std::size_t n = m.n;
    std::vector<Vec3> dirs(n);
    for (std::size_t j = 0; j < n; ++j) {
        dirs[j] = bloch(angles[j]);
    }
    double second = static_cast<double>(n);
    double first = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        for (int a = 0; a < 3; ++a) {
            first += dirs[j][a] * m.mean[j][a];
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (k == j) {
                continue;
            }
            const auto& c = m.corr[j * n + k];
            for (int a = 0; a < 3; ++a) {
                for (int b = 0; b < 3; ++b) {
                    second += dirs[j][a] * c[a][b] * dirs[k][b];
                }
            }
        }
    }
    return second - first * first;
}

// Uniform double in [0, 1) from the top 53 bits; portable across standard
// libraries, unlike std::uniform_real_distribution.
double unit_draw(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

constexpr int kScanPoints = 24;
constexpr double kAngleTol = 1e-10;

// Maximize f over one periodic angle: coarse scan, then golden section
// on the bracket around the best sample.
template <class F>
std::pair<double, double> maximize_periodic(F&& f, double current, double current_value) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    constexpr double h = two_pi / kScanPoints;
    double best_t = current;
    double best_v = current_value;
    for (int i = 0; i < kScanPoints; ++i) {
        const double t = current + h * i;
        const double v = f(t);
        if (v > best_v) {
            best_v = v;
            best_t = t;
        }
    }
    const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = best_t - h;
    double hi = best_t + h;
    double x1 = hi - invphi * (hi - lo);
    double x2 = lo + invphi * (hi - lo);
    double f1 = f(x1);
    double f2 = f(x2);
    while (hi - lo > kAngleTol) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + invphi * (hi - lo);
            f2 = f(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - invphi * (hi - lo);
            f1 = f(x1);
        }
    }
    const double t = 0.5 * (lo + hi);
    const double v = f(t);
    if (v > best_v) {
        best_v = v;
        best_t = t;
    }
    return {std::remainder(best_t, two_pi), best_v};
}

} // namespace

BruteForceResult brute_force_max_variance(const SuperpositionSpec& sup,
                                          const BruteForceOptions& opts) {
    sup.validate();
    if (sup.mode_count() > kMaxBruteForceModes) {
        throw CapacityError("brute-force oracle supports at most 6 modes");
    }
    if (!(opts.tol > 0.0)) {
        throw DomainError("tolerance must be positive");
    }
    if (opts.starts < 1) {
        throw DomainError("at least one start is required");
    }
    const auto moments = pauli_moments(sup);
    const std::size_t n = sup.mode_count();

    std::mt19937_64 rng(opts.seed);
    BruteForceResult best{-std::numeric_limits<double>::infinity(), {}};
    for (int start = 0; start < opts.starts; ++start) {
        std::vector<BlochAngles> angles(n);
        for (auto& a : angles) {
            a.polar = std::numbers::pi * unit_draw(rng);
            a.azimuth = 2.0 * std::numbers::pi * unit_draw(rng);
        }
        double value = variance(moments, angles);
        for (int sweep = 0; sweep < 10000; ++sweep) {
            const double before = value;
            for (std::size_t j = 0; j < n; ++j) {
                for (double BlochAngles::*coord : {&BlochAngles::polar, &BlochAngles::azimuth}) {
                    auto trial = angles;
                    auto f = [&](double t) {
                        trial[j].*coord = t;
                        return variance(moments, trial);
                    };
                    const auto [t, v] = maximize_periodic(f, angles[j].*coord, value);
                    angles[j].*coord = t;
                    value = v;
                }
            }
            if (value - before < opts.tol) {
                break;
            }
        }
        if (value > best.max_variance) {
            best.max_variance = value;
            best.angles = angles;
        }
    }
    return best;
}

double macroscopicity_upper_bound(double lambda, ModeCount mode_count) {
    if (!(lambda >= 0.0)) {
        throw DomainError("lambda must be nonnegative");
    }
    if (mode_count && *mode_count == 0) {
        throw DomainError("mode count must be at least 1");
    }
    const double finite_size =
        mode_count ? 1.0 - 1.0 / static_cast<double>(*mode_count) : 1.0;
    if (std::isinf(lambda)) {
        return finite_size > 0.0 ? lambda : 1.0;
    }
    return 2.0 * lambda / (1.0 + std::exp(-lambda)) * finite_size + 1.0;
}

TightnessReport bound_tightness_check(std::span<const double> x_list) {
    if (x_list.empty()) {
        return {1.0, 1.0, 0.0, 0.0, true, true};
    }
    SuperpositionSpec sup;
    sup.overlaps.reserve(x_list.size());
    double lo = x_list.front();
    double hi = x_list.front();
    double lambda = 0.0;
    for (const double x : x_list) {
        if (!(x >= 0.0 && x < 1.0)) {
            throw DomainError("x_k must lie in [0, 1)");
        }
        sup.overlaps.emplace_back(std::sqrt(1.0 - x), 0.0);
        lambda -= 0.5 * std::log1p(-x);
        lo = std::min(lo, x);
        hi = std::max(hi, x);
    }
    const double M = macroscopicity_closed_form(sup).M;
    const double bound = macroscopicity_upper_bound(lambda, sup.mode_count());
    const double gap = bound - M;
    const double spread = hi - lo;
    const bool tight = spread < 1.0 / static_cast<double>(x_list.size());
    return {M, bound, gap, spread, tight, !tight || gap < 1.0};
}

TwoLevelGap two_level_gap(double gamma, double lambda) {
    if (!(gamma > 0.0)) {
        throw DomainError("gamma must be positive");
    }
    if (!(lambda >= 0.0)) {
        throw DomainError("lambda must be nonnegative");
    }
    const double s = std::exp(-lambda);
    if (s == 0.0) {
        return {0.0, 0.5 * gamma, true};
    }
    // Cholesky factor of the Gram matrix: |L> = (1, 0), |R> = (s, c).
    // H_d = (gamma/2)(|L><L| + |R><R|); the shift by gamma/2 is applied
    // entrywise with c^2 - 1 = -s^2 so small gaps keep full relative precision.
    const double c = std::sqrt(-std::expm1(-2.0 * lambda));
    const Eigen::Vector2d left(1.0, 0.0);
    Eigen::Matrix2d shifted;
    shifted << s * s, s * c, s * c, -s * s;
    shifted *= 0.5 * gamma;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(shifted);
    if (solver.info() != Eigen::Success) {
        throw RangeError("two-level eigensolve failed");
    }
    const auto& ev = solver.eigenvalues();
    const double expected = 0.5 * gamma + left.dot(shifted * left);
    return {ev(1) - ev(0), expected, false};
}

} // namespace fluxmacro::macro
