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

#ifndef LEVYFP_HEAT_HPP
#define LEVYFP_HEAT_HPP

#include <vector>

#include "levyfp/eigenbasis.hpp"
#include "levyfp/hankel.hpp"
#include "levyfp/params.hpp"

namespace levyfp {

// Change of variables between physical (t, x) and self-similar
// (t~, x~): x~ = x/(1+t)^{1/2s}, t~ = log(1+t), and the solution scales
// as phi(t,x) = (1+t)^{-n/2s} u(t~, x~). The n/(2s) amplitude exponent is
// forced by the scaling of the fractional Laplacian.
struct SelfSimilarMap {
  Params params;

  double t_tilde(double t) const;
  double t_physical(double t_tilde) const;
  double x_tilde(double t, double x) const;
  double x_physical(double t, double x_tilde) const;
  double amplitude(double t) const;
};

// Spectral solution data: canonical-basis coefficients plus cached
// eigenfunction samples on the snapshot grid.
struct HeatSolution {
  Params params;
  RadialGrid grid;
  std::vector<double> coefficients;          // a_k, canonical basis
  std::vector<std::vector<double>> modes;    // e_k sampled on grid
  PrecisionPolicy policy;

  int mode_count() const { return static_cast<int>(coefficients.size()); }
};

// Fundamental solution, mass-normalized: G_s(t,.) integrates to 1 over
// R^n, i.e. (2 pi)^{-n/2} IH{ e^{-t zeta^{2s}} }.
RadialFunction greens_function(const Params& p, double t, const RadialGrid& grid,
                               const PrecisionPolicy& pol = {});

// Expansion coefficients a_k = <phi0, e_k>_dag / <e_k, e_k>_dag.
std::vector<double> project(const RadialFunction& phi0, const Params& p, int K,
                            const PrecisionPolicy& pol = {});

HeatSolution make_heat_solution(const RadialFunction& phi0, const Params& p,
                                int K, const RadialGrid& grid,
                                const PrecisionPolicy& pol = {});

// sum_k a_k e^{-k t~} e_k on the snapshot grid (self-similar variables).
RadialFunction evolve_spectral(const HeatSolution& sol, double t_tilde,
                               double* truncation_indicator = nullptr);

// The same solution mapped to physical variables on a physical grid.
RadialFunction evolve_physical_spectral(const HeatSolution& sol, double t,
                                        const RadialGrid& phys_grid);

// Direct multiplier evolution e^{-t zeta^{2s}} in physical variables;
// this is the oracle the spectral route is checked against.
RadialFunction evolve_fourier_oracle(const RadialFunction& phi0, const Params& p,
                                     double t, const PrecisionPolicy& pol = {},
                                     TransformReport* rep = nullptr);

}  // namespace levyfp

#endif  // LEVYFP_HEAT_HPP
