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

#include <string>
#include <vector>

#include "fluxmacro/instanton.hpp"

namespace fluxmacro::reproduce {

/// One published number against its recomputation. A row passes when the
/// computed value lies in [accept_lo, accept_hi]. Flagged rows are reported
/// but never gate the exit status.
struct ClaimRow {
    std::string claim;
    double published_value;
    double computed_value;
    double rel_deviation;  ///< (computed - published) / |published|
    double accept_lo;
    double accept_hi;
    bool pass;
    bool flagged;
    std::string note;
};

struct Report {
    std::vector<ClaimRow> rows;
    /// True iff every non-flagged row passes.
    [[nodiscard]] bool gated_pass() const;
};

/// Recomputes every claim from the built-in registry. Deterministic.
/// A failure inside a claim is rethrown with the claim id prefixed.
[[nodiscard]] Report run(double rel_tol = instanton::kDefaultRelTol);

[[nodiscard]] std::string to_json(const Report& report);
/// Header `claim,published_value,computed_value,rel_deviation,accept_lo,accept_hi,pass,flagged,note`.
[[nodiscard]] std::string to_csv(const Report& report);

} // namespace fluxmacro::reproduce
