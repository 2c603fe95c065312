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

#include <cstdint>
#include <string_view>

namespace fluxmacro::metrology {

enum class Regime { SQL, Intermediate, Heisenberg };

[[nodiscard]] std::string_view to_string(Regime r);

struct CrbReport {
    double bound_theta;           ///< (4 M |J|)^{-1/2}
    double bound_flux_over_Phi0;  ///< flux bound with all |J| modes inside the cutoff
    Regime regime;
};

/// Phase-estimation bound for the maximal-variance generator.
/// Regime endpoints use relative tolerance 1e-6; M = 1 = |J| is SQL.
[[nodiscard]] CrbReport phase_crb(double M, std::uint64_t mode_count);

/// (1/sqrt(M)) * 1/sqrt(4 n) for n modes inside the momentum cutoff.
[[nodiscard]] double flux_crb(double M, std::uint64_t modes_in_cutoff);

} // namespace fluxmacro::metrology
