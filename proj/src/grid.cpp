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

#include "levyfp/grid.hpp"

#include <cmath>

namespace levyfp {

RadialGrid::RadialGrid(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) throw DomainError("RadialGrid: need at least 2 points");
  if (!(points_.front() > 0.0)) throw DomainError("RadialGrid: points must be positive");
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (!(points_[i] > points_[i - 1]))
      throw DomainError("RadialGrid: points must be strictly increasing");
  }
}

RadialGrid RadialGrid::log_spaced(double rmin, double rmax, int count) {
  if (!(rmin > 0.0 && rmax > rmin) || count < 2)
    throw DomainError("RadialGrid::log_spaced: invalid range");
  std::vector<double> pts(count);
  double la = std::log(rmin), lb = std::log(rmax);
  for (int i = 0; i < count; ++i)
    pts[i] = std::exp(la + (lb - la) * i / (count - 1));
  pts.front() = rmin;
  pts.back() = rmax;
  return RadialGrid(std::move(pts));
}

RadialGrid RadialGrid::linear(double rmin, double rmax, int count) {
  if (!(rmin > 0.0 && rmax > rmin) || count < 2)
    throw DomainError("RadialGrid::linear: invalid range");
  std::vector<double> pts(count);
  for (int i = 0; i < count; ++i)
    pts[i] = rmin + (rmax - rmin) * i / (count - 1);
  return RadialGrid(std::move(pts));
}

RadialGrid RadialGrid::standard() { return log_spaced(1e-3, 1e2, 2048); }

bool RadialGrid::log_uniform(double tol) const {
  double h = std::log(points_[1] / points_[0]);
  for (std::size_t i = 1; i + 1 < points_.size(); ++i) {
    double hi = std::log(points_[i + 1] / points_[i]);
    if (std::abs(hi - h) > tol * std::abs(h)) return false;
  }
  return true;
}

}  // namespace levyfp
