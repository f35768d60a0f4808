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

#ifndef LEVYFP_PARAMS_HPP
#define LEVYFP_PARAMS_HPP

#include "levyfp/errors.hpp"

namespace levyfp {

// Problem parameters: fractional order s in (0,1] and ambient dimension n.
//
// n = 1 is supported in a restricted mode: the eigenbasis statements hold
// only for integer spectral index there, and we additionally need n >= 2s.
struct Params {
  double s = 1.0;
  int n = 2;

  Params() = default;
  Params(double s_, int n_) : s(s_), n(n_) { validate(); }

  void validate() const {
    if (!(s > 0.0 && s <= 1.0)) throw DomainError("Params: s must lie in (0,1]");
    if (n < 1) throw DomainError("Params: n must be a positive integer");
  }

  bool restricted_n1() const { return n == 1; }

  // Bessel order of the radial Fourier (Hankel) transform.
  double hankel_order() const { return 0.5 * (n - 2); }

  double half_n() const { return 0.5 * n; }
};

}  // namespace levyfp

#endif  // LEVYFP_PARAMS_HPP
