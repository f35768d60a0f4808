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

#include "levyfp/maps.hpp"

#include <cmath>
#include <memory>

namespace levyfp {

namespace {

// The spectral profile of u: the attached analytic transform when
// present, otherwise a numeric forward transform sampled on the
// standard grid (values outside it are treated as zero; a RangeError is
// raised when the data had not decayed there).
RealFn spectral_profile(const RadialFunction& u, const Params& p,
                        const PrecisionPolicy& pol, TransformReport* rep) {
  if (u.has_spectral()) return u.spectral();
  RadialGrid zg = RadialGrid::standard();
  TransformReport local;
  auto what = std::make_shared<SpectralRadialFunction>(
      hankel_forward(u, zg, p, pol, &local));
  if (rep) {
    rep->tail_truncated |= local.tail_truncated;
    rep->quadrature_truncated |= local.quadrature_truncated;
  }
  double peak = 0.0;
  for (double v : what->values()) peak = std::max(peak, std::abs(v));
  double edge = std::max(std::abs(what->values().front()),
                         std::abs(what->values().back()));
  if (peak > 0.0 && edge > 1e-8 * peak)
    throw RangeError(
        "dagger/ddagger map: numeric transform not resolved at the grid ends; "
        "the theta -> theta^{1/s} substitution would leave the computed range");
  double lo = zg.front(), hi = zg.back();
  return [what, lo, hi](double z) {
    if (z < lo || z > hi) return 0.0;
    return what->interpolate(z);
  };
}

}  // namespace

RadialFunction dagger_map(const RadialFunction& u, const Params& p,
                          const RadialGrid& rho_grid, const PrecisionPolicy& pol,
                          TransformReport* rep) {
  RealFn uh = spectral_profile(u, p, pol, rep);
  const double inv_s = 1.0 / p.s;
  RealFn sub = [uh, inv_s](double theta) { return uh(std::pow(theta, inv_s)); };
  RadialFunction out = hankel_inverse_fn(sub, rho_grid, p, pol, rep);
  Params pc = p;
  PrecisionPolicy pl = pol;
  out.attach_evaluator(
      [sub, pc, pl](double rho) { return hankel_point(sub, pc, rho, pl, nullptr); });
  return out;
}

RadialFunction dagger_map(const RadialFunction& u, const Params& p,
                          const PrecisionPolicy& pol, TransformReport* rep) {
  return dagger_map(u, p, u.grid(), pol, rep);
}

RadialFunction phi_inverse_map(const RadialFunction& u, const Params& p,
                               const RadialGrid& r_grid,
                               const PrecisionPolicy& pol, TransformReport* rep) {
  RealFn uh = spectral_profile(u, p, pol, rep);
  const double inv_s = 1.0 / p.s;
  RealFn sub = [uh, inv_s](double theta) { return uh(std::pow(theta, inv_s)); };
  const double s = p.s;
  const double expo = 0.5 * p.n - 0.5 * p.n / p.s;
  Params pc = p;
  PrecisionPolicy pl = pol;
  RealFn eval = [sub, pc, pl, s, expo](double r) {
    double udag = hankel_point(sub, pc, std::pow(r, s), pl, nullptr);
    return std::pow(std::pow(r, 2.0 * s) / 4.0, expo) * udag;
  };
  RadialFunction out(r_grid, eval, p.n);
  return out;
}

RadialFunction phi_inverse_map(const RadialFunction& u, const Params& p,
                               const PrecisionPolicy& pol, TransformReport* rep) {
  return phi_inverse_map(u, p, u.grid(), pol, rep);
}

RadialFunction ddagger_map(const RadialFunction& w, const Params& p,
                           const RadialGrid& rho_grid, const PrecisionPolicy& pol,
                           TransformReport* rep) {
  RealFn wh = spectral_profile(w, p, pol, rep);
  const double inv_s = 1.0 / p.s;
  const double power = p.n / p.s - p.n;
  RealFn sub = [wh, inv_s, power](double theta) {
    return std::pow(theta, power) * wh(std::pow(theta, inv_s));
  };
  RadialFunction out = hankel_inverse_fn(sub, rho_grid, p, pol, rep);
  Params pc = p;
  PrecisionPolicy pl = pol;
  out.attach_evaluator(
      [sub, pc, pl](double rho) { return hankel_point(sub, pc, rho, pl, nullptr); });
  return out;
}

RadialFunction ddagger_map(const RadialFunction& w, const Params& p,
                           const PrecisionPolicy& pol, TransformReport* rep) {
  return ddagger_map(w, p, w.grid(), pol, rep);
}

RadialFunction phi_star_inverse_map(const RadialFunction& w, const Params& p,
                                    const RadialGrid& r_grid,
                                    const PrecisionPolicy& pol,
                                    TransformReport* rep) {
  RealFn wh = spectral_profile(w, p, pol, rep);
  const double inv_s = 1.0 / p.s;
  const double power = p.n / p.s - p.n;
  RealFn sub = [wh, inv_s, power](double theta) {
    return std::pow(theta, power) * wh(std::pow(theta, inv_s));
  };
  const double s = p.s;
  Params pc = p;
  PrecisionPolicy pl = pol;
  RealFn eval = [sub, pc, pl, s](double r) {
    return hankel_point(sub, pc, std::pow(r, s), pl, nullptr);
  };
  return RadialFunction(r_grid, eval, p.n);
}

}  // namespace levyfp
