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

#include <stdexcept>
#include <string>

namespace fluxmacro {

/// Input outside the domain where a quantity is defined (log of a
/// nonpositive overlap, unnormalizable superposition, negative potential...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Result not representable in double precision.
class RangeError : public std::range_error {
  public:
    using std::range_error::range_error;
};

/// Problem size beyond what an explicit construction supports.
class CapacityError : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Potential does not have the shape an algorithm requires.
class ShapeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed configuration or input file.
class ConfigError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace fluxmacro
