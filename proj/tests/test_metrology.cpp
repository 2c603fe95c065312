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
#include <random>

#include "fluxmacro/errors.hpp"
#include "fluxmacro/macro.hpp"
#include "fluxmacro/metrology.hpp"

using namespace fluxmacro;
using namespace fluxmacro::metrology;

TEST_CASE("phase bound endpoints") {
    const auto sql = phase_crb(1.0, 100);
    CHECK(sql.bound_theta == doctest::Approx(1.0 / std::sqrt(400.0)).epsilon(1e-15));
    CHECK(sql.regime == Regime::SQL);
    const auto hl = phase_crb(100.0, 100);
    CHECK(hl.bound_theta == doctest::Approx(1.0 / 200.0).epsilon(1e-15));
    CHECK(hl.regime == Regime::Heisenberg);
    CHECK(phase_crb(10.0, 100).regime == Regime::Intermediate);
    CHECK(phase_crb(1.0 + 5e-7, 100).regime == Regime::SQL);
    CHECK(phase_crb(1.0, 1).regime == Regime::SQL);
    CHECK(phase_crb(481.0, 10'000'000'000ULL).bound_theta ==
          doctest::Approx(2.2797775e-7).epsilon(1e-7));
}

TEST_CASE("phase bound domain") {
    CHECK_THROWS_AS((void)phase_crb(0.5, 10), DomainError);
    CHECK_THROWS_AS((void)phase_crb(11.0, 10), DomainError);
    CHECK_THROWS_AS((void)phase_crb(1.0, 0), DomainError);
}

TEST_CASE("phase bound decreases in both arguments") {
    for (std::uint64_t n = 2; n < 50; ++n) {
        CHECK(phase_crb(1.5, n + 1).bound_theta < phase_crb(1.5, n).bound_theta);
    }
    for (double M = 1.0; M < 20.0; M += 0.5) {
        CHECK(phase_crb(M + 0.5, 20).bound_theta < phase_crb(M, 20).bound_theta);
    }
}

TEST_CASE("flux bound") {
    CHECK(flux_crb(1.0, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(flux_crb(4.0, 100) == doctest::Approx(0.025).epsilon(1e-15));
    CHECK(flux_crb(677.0, 1000) / flux_crb(481.0, 1000) ==
          doctest::Approx(0.84290).epsilon(1e-5));
    for (double M : {1.0, 3.0, 481.0, 1e4}) {
        CHECK(flux_crb(M, 64) * std::sqrt(M) == doctest::Approx(flux_crb(1.0, 64)).epsilon(1e-15));
    }
    CHECK_THROWS_AS((void)flux_crb(0.9, 10), DomainError);
    CHECK_THROWS_AS((void)flux_crb(2.0, 0), DomainError);
}

TEST_CASE("phase bound matches the canonical generator variance") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> d(0.0, 0.99);
    for (int t = 0; t < 100; ++t) {
        macro::SuperpositionSpec s;
        const std::size_t n = 1 + t % 6;
        for (std::size_t i = 0; i < n; ++i) s.overlaps.emplace_back(d(rng), 0.0);
        const double M = macro::macroscopicity_closed_form(s).M;
        const double b = phase_crb(std::min(std::max(M, 1.0), double(n)), n).bound_theta;
        CHECK(1.0 / (b * b) == doctest::Approx(4.0 * macro::variance_of_canonical_H(s)).epsilon(1e-9));
    }
}
