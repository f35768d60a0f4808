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

#ifndef LEVYFP_MELLIN_HPP
#define LEVYFP_MELLIN_HPP

#include <vector>

#include "levyfp/params.hpp"
#include "levyfp/precision.hpp"
#include "levyfp/radial_function.hpp"

namespace levyfp {

// Samples of Im z along a fixed vertical line Re z = sigma.
struct VerticalLine {
  double sigma = 0.0;
  std::vector<double> lambda;

  // uniform, symmetric about 0
  static VerticalLine symmetric(double sigma, double lambda_max, int count);
  void validate() const;
  double spacing() const;
};

struct MellinLineSamples {
  VerticalLine line;
  std::vector<Complex> values;
};

struct MellinReport {
  bool tail_not_decayed = false;  // integrand alive at the grid ends
  bool aliasing_risk = false;     // lambda grid coarse for the target r range
  double imag_residual = 0.0;     // leftover Im after a real inversion
};

// Mellin symbol of the fractional Laplacian on radial functions:
//   Theta_s(z) = 2^{2s} G(z/2) G((n+2s-z)/2) / [ G((n-z)/2) G((z-2s)/2) ].
Complex theta_symbol(const Params& p, Complex z);

// The conjugating multiplier and its adjoint counterpart; both equal 1
// at s = 1, and Lambda*_s(n-z) Lambda_s(z) = 2^{n-n/s}.
Complex lambda_multiplier(const Params& p, Complex z);
Complex lambda_star_multiplier(const Params& p, Complex z);

// \int_0^\infty r^{z-1} u(r) dr along the line, by quadrature in log r.
MellinLineSamples mellin_transform_numeric(const GridFunction& u,
                                           const VerticalLine& line,
                                           const PrecisionPolicy& pol = {},
                                           MellinReport* rep = nullptr);

Complex mellin_transform_point(const GridFunction& u, Complex z,
                               const PrecisionPolicy& pol = {},
                               MellinReport* rep = nullptr);

// (1/2pi) \int r^{-sigma-i lambda} values(lambda) dlambda on the r grid
// (trapezoid over the sampled line; real part returned).
RadialFunction inverse_mellin_numeric(const MellinLineSamples& samples,
                                      const RadialGrid& r_grid, int dim,
                                      MellinReport* rep = nullptr);

// Closed-form residue evaluation of the Barnes-type inverse transform
//   I_{sigma,nu,b}(rho) = M^{-1}_sigma{ G(nu+b-z) G(z) / G(b-z) }(rho).
double residue_inverse_I(double sigma, double nu, double b, double rho,
                         const PrecisionPolicy& pol = {});

// Same integral by direct vertical-line quadrature (oracle route).
double contour_inverse_I(double sigma, double nu, double b, double rho,
                         double lambda_max = 80.0, int count = 16001);

}  // namespace levyfp

#endif  // LEVYFP_MELLIN_HPP
