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

#ifndef LEVYFP_OPERATORS_HPP
#define LEVYFP_OPERATORS_HPP

#include "levyfp/hankel.hpp"
#include "levyfp/params.hpp"
#include "levyfp/radial_function.hpp"

namespace levyfp {

// du/d(log r) on the sample grid: 6th-order centered differences on a
// log-uniform grid; the boundary stencils are one-sided unless the
// function carries an evaluator (then ghost values are sampled).
std::vector<double> log_derivative_samples(const GridFunction& u);

// (-Delta)^s u as the Hankel multiplier zeta^{2s}. Functions carrying an
// analytic spectral profile use it directly; sampled inputs go through a
// numeric forward transform first.
RadialFunction fractional_laplacian(const RadialFunction& u, const Params& p,
                                    const PrecisionPolicy& pol = {},
                                    TransformReport* rep = nullptr);

// L_s u  = (-Delta)^s u - (1/2s) r u' - (n/2s) u
RadialFunction apply_Ls(const RadialFunction& u, const Params& p,
                        const PrecisionPolicy& pol = {},
                        TransformReport* rep = nullptr);

// L*_s w = (-Delta)^s w + (1/2s) r w'
RadialFunction apply_Ls_star(const RadialFunction& w, const Params& p,
                             const PrecisionPolicy& pol = {},
                             TransformReport* rep = nullptr);

}  // namespace levyfp

#endif  // LEVYFP_OPERATORS_HPP
