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

#ifndef LEVYFP_QUADRATURE_HPP
#define LEVYFP_QUADRATURE_HPP

#include <functional>

#include "levyfp/precision.hpp"

namespace levyfp {

using RealFn = std::function<double(double)>;

// 15-point Gauss--Kronrod rule on [a,b]; err is the |G7-K15| estimate.
double gauss_kronrod_15(const RealFn& f, double a, double b, double* err);

// Adaptive bisection driven by the GK15 error estimate.
double integrate(const RealFn& f, double a, double b,
                 const PrecisionPolicy& pol = {}, int max_intervals = 4000);

// tanh-sinh rule on [a,b]; tolerates integrable endpoint singularities.
double integrate_tanh_sinh(const RealFn& f, double a, double b,
                           const PrecisionPolicy& pol = {});

// \int_a^\infty f, for f decaying fast enough for the map t -> a + t/(1-t).
double integrate_to_inf(const RealFn& f, double a, const PrecisionPolicy& pol = {});

// Wynn's epsilon algorithm: limit of a sequence of partial sums.
class EpsilonAccelerator {
 public:
  // feed a new partial sum; returns current best extrapolation
  double push(double partial_sum);
  double estimate() const { return estimate_; }
  int count() const { return n_; }

 private:
  static constexpr int kMax = 64;
  double table_[kMax] = {};
  int n_ = 0;
  double estimate_ = 0.0;
};

// \int_0^\infty g(x) J_alpha(omega x) dx for smooth g (integrable
// singularity at 0 allowed). Panels between consecutive Bessel zeros,
// epsilon acceleration once the partial sums alternate.
struct OscillatoryResult {
  double value = 0.0;
  bool accelerated = false;
  bool tail_truncated = false;  // tail not decayed and not accelerated
  int panels = 0;
};
OscillatoryResult bessel_oscillatory_integral(const RealFn& g, double alpha,
                                              double omega,
                                              const PrecisionPolicy& pol = {});

}  // namespace levyfp

#endif  // LEVYFP_QUADRATURE_HPP
