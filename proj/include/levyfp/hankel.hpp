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

#ifndef LEVYFP_HANKEL_HPP
#define LEVYFP_HANKEL_HPP

#include "levyfp/params.hpp"
#include "levyfp/radial_function.hpp"

namespace levyfp {

// Diagnostics accumulated over a whole-grid transform.
struct TransformReport {
  bool tail_truncated = false;       // input had not decayed at its grid end
  bool quadrature_truncated = false; // an oscillatory tail never settled
  int max_panels = 0;
};

// The radial Fourier transform in n dimensions (self-inverse):
//   F f(k) = k^{(2-n)/2} \int_0^\infty J_{(n-2)/2}(k x) x^{n/2} f(x) dx.
// Point evaluation against an arbitrary integrand function.
double hankel_point(const RealFn& f, const Params& p, double k,
                    const PrecisionPolicy& pol = {}, TransformReport* rep = nullptr);

SpectralRadialFunction hankel_forward(const RadialFunction& u,
                                      const RadialGrid& zeta_grid,
                                      const Params& p,
                                      const PrecisionPolicy& pol = {},
                                      TransformReport* rep = nullptr);

RadialFunction hankel_inverse(const SpectralRadialFunction& w,
                              const RadialGrid& r_grid, const Params& p,
                              const PrecisionPolicy& pol = {},
                              TransformReport* rep = nullptr);

// Convenience: inverse transform of an analytic spectral profile; the
// result carries the profile as its attached spectral evaluator.
RadialFunction hankel_inverse_fn(const RealFn& what, const RadialGrid& r_grid,
                                 const Params& p, const PrecisionPolicy& pol = {},
                                 TransformReport* rep = nullptr);

}  // namespace levyfp

#endif  // LEVYFP_HANKEL_HPP
