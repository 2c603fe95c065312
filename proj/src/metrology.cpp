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

#include "fluxmacro/metrology.hpp"

#include <cmath>

#include "fluxmacro/errors.hpp"
#include "fluxmacro/format.hpp"

namespace fluxmacro::metrology {

namespace {
constexpr double kRegimeTol = 1e-6;
constexpr double kRangeSlack = 1e-12;
} // namespace

std::string_view to_string(Regime r) {
    switch (r) {
    case Regime::SQL:
        return "SQL";
    case Regime::Intermediate:
        return "Intermediate";
    case Regime::Heisenberg:
        return "Heisenberg";
    }
    return "?";
}

CrbReport phase_crb(double M, std::uint64_t mode_count) {
    const auto n = static_cast<double>(mode_count);
    if (mode_count == 0 || !(M >= 1.0 - kRangeSlack) || !(M <= n * (1.0 + kRangeSlack))) {
        throw DomainError("M = " + fmt::shortest(M) + " outside [1, |J|]");
    }
    Regime regime = Regime::Intermediate;
    if (std::abs(M - 1.0) <= kRegimeTol) {
        regime = Regime::SQL;
    } else if (std::abs(M - n) <= kRegimeTol * n) {
        regime = Regime::Heisenberg;
    }
    return {1.0 / std::sqrt(4.0 * M * n), flux_crb(M, mode_count), regime};
}

double flux_crb(double M, std::uint64_t modes_in_cutoff) {
    if (!(M >= 1.0 - kRangeSlack) || modes_in_cutoff == 0) {
        throw DomainError("flux bound needs M >= 1 and at least one mode");
    }
    return 1.0 / std::sqrt(M) / std::sqrt(4.0 * static_cast<double>(modes_in_cutoff));
}

} // namespace fluxmacro::metrology
