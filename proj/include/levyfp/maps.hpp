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

#ifndef LEVYFP_MAPS_HPP
#define LEVYFP_MAPS_HPP

#include "levyfp/hankel.hpp"
#include "levyfp/params.hpp"
#include "levyfp/radial_function.hpp"

namespace levyfp {

// u^dag: inverse Hankel transform of theta -> \hat u(theta^{1/s}).
// The substitution theta = zeta^s conjugates L_s to the classical L_1.
RadialFunction dagger_map(const RadialFunction& u, const Params& p,
                          const RadialGrid& rho_grid,
                          const PrecisionPolicy& pol = {},
                          TransformReport* rep = nullptr);
RadialFunction dagger_map(const RadialFunction& u, const Params& p,
                          const PrecisionPolicy& pol = {},
                          TransformReport* rep = nullptr);

// Phi_s^{-1} u(r) = (r^{2s}/4)^{n/2 - n/(2s)} u^dag(r^s).
RadialFunction phi_inverse_map(const RadialFunction& u, const Params& p,
                               const RadialGrid& r_grid,
                               const PrecisionPolicy& pol = {},
                               TransformReport* rep = nullptr);
RadialFunction phi_inverse_map(const RadialFunction& u, const Params& p,
                               const PrecisionPolicy& pol = {},
                               TransformReport* rep = nullptr);

// w^ddag: inverse Hankel transform of theta -> theta^{n/s-n} \hat w(theta^{1/s}).
RadialFunction ddagger_map(const RadialFunction& w, const Params& p,
                           const RadialGrid& rho_grid,
                           const PrecisionPolicy& pol = {},
                           TransformReport* rep = nullptr);
RadialFunction ddagger_map(const RadialFunction& w, const Params& p,
                           const PrecisionPolicy& pol = {},
                           TransformReport* rep = nullptr);

// (Phi_s^*)^{-1} w(r) = w^ddag(r^s).
RadialFunction phi_star_inverse_map(const RadialFunction& w, const Params& p,
                                    const RadialGrid& r_grid,
                                    const PrecisionPolicy& pol = {},
                                    TransformReport* rep = nullptr);

}  // namespace levyfp

#endif  // LEVYFP_MAPS_HPP
