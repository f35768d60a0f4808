// This file is part of levyfp, a spectral toolkit for the radial Levy
// Fokker--Planck operator and the fractional heat equation.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEVYFP_ERRORS_HPP
#define LEVYFP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace levyfp {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Evaluation at (or too close to) a pole of a Gamma factor.
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& msg) : Error(msg) {}
};

// A series or quadrature failed to reach the requested tolerance.
class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& msg) : Error(msg) {}
};

// Arguments outside the supported parameter region.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Evaluation outside a sampled grid (extrapolation) or a substitution
// leaving the computed range.
class RangeError : public Error {
 public:
  explicit RangeError(const std::string& msg) : Error(msg) {}
};

}  // namespace levyfp

#endif  // LEVYFP_ERRORS_HPP
