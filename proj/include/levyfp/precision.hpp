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

#ifndef LEVYFP_PRECISION_HPP
#define LEVYFP_PRECISION_HPP

#include <complex>

#include "levyfp/errors.hpp"

namespace levyfp {

using Complex = std::complex<double>;

// Tolerances shared by series summation and quadrature.
//
// Series stop when |term| < rel_tol*|sum| + abs_tol for three consecutive
// terms (alternating series plateau before converging, a single small term
// is not a reliable stopping signal).
struct PrecisionPolicy {
  double rel_tol = 1e-12;
  double abs_tol = 1e-300;
  int max_terms = 10000;

  void validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("PrecisionPolicy: rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw DomainError("PrecisionPolicy: abs_tol must be >= 0");
    if (max_terms < 1) throw DomainError("PrecisionPolicy: max_terms must be >= 1");
  }
};

}  // namespace levyfp

#endif  // LEVYFP_PRECISION_HPP
