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

#include <doctest.h>

#include <cmath>

#include "fluxmacro/constants.hpp"
#include "fluxmacro/errors.hpp"
#include "fluxmacro/instanton.hpp"
#include "fluxmacro/registry.hpp"

using namespace fluxmacro;
using namespace fluxmacro::instanton;

// Reference actions from 30-digit quadrature of pi * sqrt(V / E_C).
TEST_CASE("Literal action: frozen values") {
    const auto lk = instanton_action(registry::lukens());
    CHECK(lk.S_over_hbar == doctest::Approx(240.305442809999).epsilon(1e-10));
    CHECK(lk.lambda == lk.S_over_hbar);
    CHECK(lk.M == doctest::Approx(481.610885619998).epsilon(1e-10));
    CHECK(lk.convention == Convention::Literal);
    CHECK_FALSE(lk.well_position.has_value());

    CHECK(instanton_action(registry::wilhelm()).S_over_hbar ==
          doctest::Approx(112.775954457146).epsilon(1e-10));

    auto doubled = registry::lukens();
    doubled.kappa_energy = kelvin_to_joule(645.0);
    CHECK(instanton_action(doubled).S_over_hbar == doctest::Approx(336.56738119028).epsilon(1e-10));
}

TEST_CASE("ShiftedWells action: frozen values") {
    const auto r = instanton_action(registry::lukens(), Convention::ShiftedWells);
    REQUIRE(r.well_position.has_value());
    CHECK(*r.well_position == doctest::Approx(0.327330125189289).epsilon(1e-11));
    CHECK(joule_to_kelvin(*r.barrier_height) == doctest::Approx(42.3824234769512).epsilon(1e-10));
    CHECK(r.S_over_hbar == doctest::Approx(92.5924812751258).epsilon(1e-8));
    CHECK(r.S_over_hbar <= instanton_action(registry::lukens()).S_over_hbar);
}

TEST_CASE("flux potential") {
    const auto p = registry::lukens();
    CHECK(flux_potential(0.0, p) == p.E_J);
    CHECK(joule_to_kelvin(flux_potential(0.5, p)) == doctest::Approx(85.25).epsilon(1e-13));
    CHECK(flux_potential(0.25, p) == doctest::Approx(p.E_L / 16.0).epsilon(1e-13));
    const double h = 1e-6;
    for (double f : {-0.4, -0.1, 0.2, 0.33}) {
        const double fd = (flux_potential(f + h, p) - flux_potential(f - h, p)) / (2.0 * h);
        CHECK(flux_potential_slope(f, p) == doctest::Approx(fd).epsilon(1e-7));
    }
}

TEST_CASE("wells are symmetric stationary points") {
    const auto p = registry::lukens();
    const double f = locate_well(p);
    CHECK(std::abs(flux_potential(f, p) - flux_potential(-f, p)) <= 1e-10 * p.E_J);
    CHECK(std::abs(flux_potential_slope(f, p)) <= 1e-9 * p.E_J);
    CHECK(std::abs(flux_potential_slope(-f, p)) <= 1e-9 * p.E_J);
    CHECK_THROWS_AS((void)locate_well(registry::wilhelm()), ShapeError);
    CHECK_THROWS_AS((void)instanton_action(registry::wilhelm(), Convention::ShiftedWells), ShapeError);
}

TEST_CASE("Literal integrand is symmetric") {
    const auto p = registry::lukens();
    const double left = literal_action_segment(p, -0.5, 0.0, 1e-12);
    const double right = literal_action_segment(p, 0.0, 0.5, 1e-12);
    CHECK(left == doctest::Approx(right).epsilon(1e-12));
    CHECK(left + right == doctest::Approx(240.305442809999).epsilon(1e-10));
}

TEST_CASE("negative potential is a domain error naming f") {
    SfqParams p = registry::lukens();
    p.E_L = kelvin_to_joule(10.0);  // V(0.5) = E_L/4 - E_J < 0
    try {
        (void)instanton_action(p);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("f =") != std::string::npos);
    }
}

TEST_CASE("quadrature tolerance contract") {
    const auto p = registry::lukens();
    double prev_tol = 1e-3;
    double prev = instanton_action(p, Convention::Literal, prev_tol).S_over_hbar;
    for (double tol = 5e-4; tol > 1e-10; tol *= 0.5) {
        const double s = instanton_action(p, Convention::Literal, tol).S_over_hbar;
        CHECK(std::abs(s - prev) < prev_tol * prev);
        prev = s;
        prev_tol = tol;
    }
    CHECK_THROWS_AS((void)instanton_action(p, Convention::Literal, 0.0), DomainError);
    CHECK_THROWS_AS((void)instanton_action(p, Convention::Literal, 0.05), DomainError);
}

TEST_CASE("M composes with the macroscopicity bound") {
    SfqParams p = registry::lukens();
    p.mode_count = 1000;
    const auto r = instanton_action(p);
    CHECK(r.M == macro::macroscopicity_upper_bound(r.lambda, 1000));
}

TEST_CASE("amplification") {
    const auto p = registry::lukens();
    CHECK(amplification_factor(p, 0.0) == doctest::Approx(1.0));
    CHECK(amplification_factor(p, kelvin_to_joule(645.0)) ==
          doctest::Approx(674.134762380561 / 481.610885619998).epsilon(1e-9));
    double prev = 1.0;
    for (double k : {10.0, 100.0, 645.0, 2000.0, 1e4}) {
        const double a = amplification_factor(p, kelvin_to_joule(k));
        CHECK(a >= prev);
        prev = a;
    }
}

TEST_CASE("parameter validation and conventions") {
    SfqParams p = registry::lukens();
    p.E_C = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = registry::lukens();
    p.kappa_energy = -1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    CHECK(parse_convention("Shifted-Wells") == Convention::ShiftedWells);
    CHECK(parse_convention("literal") == Convention::Literal);
    CHECK_THROWS_AS((void)parse_convention("wkb"), ConfigError);
    CHECK(to_string(Convention::ShiftedWells) == "shifted_wells");
    // Derived circuit quantities.
    const auto l = registry::lukens();
    CHECK(l.capacitance() == doctest::Approx(charging_energy_to_capacitance(l.E_C)));
    CHECK(l.inductance() == doctest::Approx(inductive_energy_to_inductance(l.E_L)));
}
