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

namespace fluxmacro::fmt {

/// Shortest decimal string that round-trips to the same double.
/// Locale independent; non-finite values print as inf, -inf, nan.
[[nodiscard]] std::string shortest(double x);

/// Scientific or fixed notation with `digits` significant digits ("%.*g").
[[nodiscard]] std::string significant(double x, int digits);

} // namespace fluxmacro::fmt
