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

#include "levyfp/radial_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace levyfp {

GridFunction::GridFunction(RadialGrid grid, std::vector<double> values, int dim)
    : grid_(std::move(grid)), values_(std::move(values)), dim_(dim) {
  if (values_.size() != grid_.size())
    throw DomainError("GridFunction: values and grid size mismatch");
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("GridFunction: non-finite sample");
  }
  if (dim_ < 1) throw DomainError("GridFunction: dim must be >= 1");
}

GridFunction::GridFunction(RadialGrid grid, const RealFn& fn, int dim)
    : grid_(std::move(grid)), dim_(dim), evaluator_(fn) {
  values_.resize(grid_.size());
  for (std::size_t i = 0; i < grid_.size(); ++i) values_[i] = fn(grid_[i]);
  for (double v : values_) {
    if (!std::isfinite(v)) throw DomainError("GridFunction: non-finite sample");
  }
}

double GridFunction::operator()(double r) const {
  if (evaluator_) return evaluator_(r);
  return interpolate(r);
}

double GridFunction::interpolate(double r) const {
  const auto& pts = grid_.points();
  if (r < pts.front() || r > pts.back()) {
    std::ostringstream os;
    os << "GridFunction: r = " << r << " outside the sampled range ["
       << pts.front() << ", " << pts.back() << "]";
    throw RangeError(os.str());
  }
  auto it = std::upper_bound(pts.begin(), pts.end(), r);
  std::size_t hi = static_cast<std::size_t>(it - pts.begin());
  if (hi == 0) hi = 1;
  if (hi >= pts.size()) hi = pts.size() - 1;
  std::size_t i1 = hi - 1;
  // 4-point Lagrange stencil in x = log r, clamped at the ends
  std::size_t m = std::min<std::size_t>(4, pts.size());
  std::size_t base = (i1 >= 1) ? i1 - 1 : 0;
  if (base + m > pts.size()) base = pts.size() - m;
  double x = std::log(r);
  double acc = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    double lj = 1.0;
    double xj = std::log(pts[base + j]);
    for (std::size_t k = 0; k < m; ++k) {
      if (k == j) continue;
      double xk = std::log(pts[base + k]);
      lj *= (x - xk) / (xj - xk);
    }
    acc += values_[base + j] * lj;
  }
  return acc;
}

double grid_integral(const GridFunction& f, double power) {
  // \int f r^{power} dr = \int f(e^x) e^{(power+1) x} dx
  const auto& pts = f.grid().points();
  const auto& v = f.values();
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double x0 = std::log(pts[i]), x1 = std::log(pts[i + 1]);
    double g0 = v[i] * std::pow(pts[i], power + 1.0);
    double g1 = v[i + 1] * std::pow(pts[i + 1], power + 1.0);
    acc += 0.5 * (g0 + g1) * (x1 - x0);
  }
  return acc;
}

double grid_l2_norm(const GridFunction& f) {
  const auto& pts = f.grid().points();
  const auto& v = f.values();
  double acc = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double x0 = std::log(pts[i]), x1 = std::log(pts[i + 1]);
    double g0 = v[i] * v[i] * std::pow(pts[i], static_cast<double>(f.dim()));
    double g1 = v[i + 1] * v[i + 1] * std::pow(pts[i + 1], static_cast<double>(f.dim()));
    acc += 0.5 * (g0 + g1) * (x1 - x0);
  }
  return std::sqrt(acc);
}

double grid_l2_relative_diff(const GridFunction& f, const GridFunction& g) {
  if (f.grid().size() != g.grid().size())
    throw DomainError("grid_l2_relative_diff: grids differ");
  const auto& pts = f.grid().points();
  const auto& a = f.values();
  const auto& b = g.values();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double dx = std::log(pts[i + 1] / pts[i]);
    double w0 = std::pow(pts[i], static_cast<double>(f.dim()));
    double w1 = std::pow(pts[i + 1], static_cast<double>(f.dim()));
    double d0 = a[i] - b[i], d1 = a[i + 1] - b[i + 1];
    num += 0.5 * (d0 * d0 * w0 + d1 * d1 * w1) * dx;
    den += 0.5 * (b[i] * b[i] * w0 + b[i + 1] * b[i + 1] * w1) * dx;
  }
  return std::sqrt(num / den);
}

}  // namespace levyfp
