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

#ifndef LEVYFP_GRID_HPP
#define LEVYFP_GRID_HPP

#include <vector>

#include "levyfp/errors.hpp"

namespace levyfp {

// Strictly increasing positive abscissae; log-spaced by default.
class RadialGrid {
 public:
  explicit RadialGrid(std::vector<double> points);

  static RadialGrid log_spaced(double rmin, double rmax, int count);
  static RadialGrid linear(double rmin, double rmax, int count);
  // default grid used by the transforms: log-spaced 1e-3..1e2, 2048 points
  static RadialGrid standard();

  const std::vector<double>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  double operator[](std::size_t i) const { return points_[i]; }
  double front() const { return points_.front(); }
  double back() const { return points_.back(); }

  bool log_uniform(double tol = 1e-9) const;

 private:
  std::vector<double> points_;
};

}  // namespace levyfp

#endif  // LEVYFP_GRID_HPP
