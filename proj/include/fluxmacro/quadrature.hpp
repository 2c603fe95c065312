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

#include <cstddef>
#include <functional>
#include <vector>

namespace fluxmacro::quad {

struct Estimate {
    double value;
    double error; ///< absolute error estimate
};

/// Adaptive 15-point Gauss-Kronrod on [a, b]; either limit may be infinite.
/// Converges when the error estimate falls below rel_tol times the L1 norm.
Estimate integrate(const std::function<double(double)>& f, double a, double b,
                   double rel_tol);

/// n-point Gauss-Legendre rule on [-1, 1]. Nodes are ascending and exactly
/// antisymmetric (x[n-1-i] == -x[i]) so odd integrands cancel pairwise.
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

Rule gauss_legendre(std::size_t n);

/// Fixed-rule integral over [a, b]; for a == -b, terms are accumulated in
/// mirror pairs.
double apply(const Rule& rule, const std::function<double(double)>& f, double a,
             double b);

} // namespace fluxmacro::quad
