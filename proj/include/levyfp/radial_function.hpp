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

#ifndef LEVYFP_RADIAL_FUNCTION_HPP
#define LEVYFP_RADIAL_FUNCTION_HPP

#include <functional>
#include <utility>
#include <vector>

#include "levyfp/grid.hpp"
#include "levyfp/quadrature.hpp"

namespace levyfp {

// Samples of a function on a RadialGrid, with an optional analytic
// evaluator. Evaluation prefers the evaluator; without one, points off
// the grid are cubic-interpolated in log r and extrapolation throws.
class GridFunction {
 public:
  GridFunction(RadialGrid grid, std::vector<double> values, int dim);
  GridFunction(RadialGrid grid, const RealFn& fn, int dim);

  double operator()(double r) const;
  double interpolate(double r) const;

  const RadialGrid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }
  int dim() const { return dim_; }

  bool has_evaluator() const { return static_cast<bool>(evaluator_); }
  const RealFn& evaluator() const { return evaluator_; }
  void attach_evaluator(RealFn f) { evaluator_ = std::move(f); }

 private:
  RadialGrid grid_;
  std::vector<double> values_;
  int dim_;
  RealFn evaluator_;
};

// u(r) in physical radial variable. May carry analytic side data:
// its Hankel transform, and its dagger / double-dagger profiles.
class RadialFunction : public GridFunction {
 public:
  using GridFunction::GridFunction;

  bool has_spectral() const { return static_cast<bool>(spectral_); }
  const RealFn& spectral() const { return spectral_; }
  void attach_spectral(RealFn f) { spectral_ = std::move(f); }

  bool has_dagger_profile() const { return static_cast<bool>(dagger_); }
  const RealFn& dagger_profile() const { return dagger_; }
  void attach_dagger_profile(RealFn f) { dagger_ = std::move(f); }

  bool has_ddagger_profile() const { return static_cast<bool>(ddagger_); }
  const RealFn& ddagger_profile() const { return ddagger_; }
  void attach_ddagger_profile(RealFn f) { ddagger_ = std::move(f); }

 private:
  RealFn spectral_;
  RealFn dagger_;
  RealFn ddagger_;
};

// \hat u(zeta) in the radial Fourier (Hankel) variable.
class SpectralRadialFunction : public GridFunction {
 public:
  using GridFunction::GridFunction;
};

// Trapezoid in log r of f(r) r^{power} dr over the sample grid.
double grid_integral(const GridFunction& f, double power);

// sqrt( \int f^2 r^{n-1} dr ) over the sample grid.
double grid_l2_norm(const GridFunction& f);

// Relative L^2(r^{n-1} dr) distance of two functions sharing a grid.
double grid_l2_relative_diff(const GridFunction& f, const GridFunction& g);

}  // namespace levyfp

#endif  // LEVYFP_RADIAL_FUNCTION_HPP
