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

#include "levyfp/operators.hpp"

#include <cmath>

namespace levyfp {

namespace {

// 6th-order first-derivative stencils on a uniform grid.
const double kCentered7[7] = {-1.0 / 60, 9.0 / 60, -45.0 / 60, 0.0,
                              45.0 / 60, -9.0 / 60, 1.0 / 60};
const double kForward7[7] = {-49.0 / 20, 6.0, -15.0 / 2, 20.0 / 3,
                             -15.0 / 4,  6.0 / 5, -1.0 / 6};

}  // namespace

std::vector<double> log_derivative_samples(const GridFunction& u) {
  const auto& pts = u.grid().points();
  const std::size_t n = pts.size();
  if (n < 7)
    throw DomainError("log_derivative_samples: need at least 7 grid points");
  if (!u.grid().log_uniform(1e-7))
    throw DomainError("log_derivative_samples: grid must be log-uniform");
  const double h = std::log(pts[1] / pts[0]);
  const auto& v = u.values();
  std::vector<double> d(n);

  if (u.has_evaluator()) {
    // centered stencil everywhere, sampling ghosts through the evaluator
    auto at = [&](std::ptrdiff_t i) -> double {
      if (i >= 0 && i < static_cast<std::ptrdiff_t>(n)) return v[i];
      double x = std::log(pts[0]) + h * static_cast<double>(i);
      return u.evaluator()(std::exp(x));
    };
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (int j = 0; j < 7; ++j)
        acc += kCentered7[j] * at(static_cast<std::ptrdiff_t>(i) + j - 3);
      d[i] = acc / h;
    }
    return d;
  }

  for (std::size_t i = 3; i + 3 < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 7; ++j) acc += kCentered7[j] * v[i + j - 3];
    d[i] = acc / h;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 7; ++j) acc += kForward7[j] * v[i + j];
    d[i] = acc / h;
  }
  for (std::size_t i = n - 3; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < 7; ++j) acc += -kForward7[j] * v[i - j];
    d[i] = acc / h;
  }
  return d;
}

RadialFunction fractional_laplacian(const RadialFunction& u, const Params& p,
                                    const PrecisionPolicy& pol,
                                    TransformReport* rep) {
  const double two_s = 2.0 * p.s;
  if (u.has_spectral()) {
    RealFn uh = u.spectral();
    RealFn mult = [uh, two_s](double z) { return std::pow(z, two_s) * uh(z); };
    RadialFunction out = hankel_inverse_fn(mult, u.grid(), p, pol, rep);
    Params pc = p;
    PrecisionPolicy pl = pol;
    out.attach_evaluator(
        [mult, pc, pl](double r) { return hankel_point(mult, pc, r, pl, nullptr); });
    return out;
  }
  RadialGrid zg = RadialGrid::standard();
  SpectralRadialFunction what = hankel_forward(u, zg, p, pol, rep);
  std::vector<double> scaled(what.values().size());
  for (std::size_t i = 0; i < scaled.size(); ++i)
    scaled[i] = std::pow(zg[i], two_s) * what.values()[i];
  SpectralRadialFunction mul(zg, std::move(scaled), p.n);
  return hankel_inverse(mul, u.grid(), p, pol, rep);
}

namespace {

// zeta d/dzeta of an analytic spectral profile, 4th-order differences in
// log zeta. Used to carry the exact Fourier image of the drift term.
RealFn spectral_log_derivative(const RealFn& f) {
  return [f](double z) {
    const double h = 5e-3;
    double fp1 = f(z * std::exp(h)), fm1 = f(z * std::exp(-h));
    double fp2 = f(z * std::exp(2 * h)), fm2 = f(z * std::exp(-2 * h));
    return (8.0 * (fp1 - fm1) - (fp2 - fm2)) / (12.0 * h);
  };
}

}  // namespace

RadialFunction apply_Ls(const RadialFunction& u, const Params& p,
                        const PrecisionPolicy& pol, TransformReport* rep) {
  RadialFunction flap = fractional_laplacian(u, p, pol, rep);
  std::vector<double> drift = log_derivative_samples(u);
  const double inv2s = 1.0 / (2.0 * p.s);
  const double c0 = p.n * inv2s;
  std::vector<double> vals(u.grid().size());
  for (std::size_t i = 0; i < vals.size(); ++i)
    vals[i] = flap.values()[i] - inv2s * drift[i] - c0 * u.values()[i];
  RadialFunction out(u.grid(), std::move(vals), p.n);
  if (u.has_spectral()) {
    // F{L_s u} = zeta^{2s} \hat u + (1/2s) zeta d\hat u/dzeta
    RealFn uh = u.spectral();
    RealFn duh = spectral_log_derivative(uh);
    double two_s = 2.0 * p.s;
    out.attach_spectral([uh, duh, two_s, inv2s](double z) {
      return std::pow(z, two_s) * uh(z) + inv2s * duh(z);
    });
  }
  return out;
}

RadialFunction apply_Ls_star(const RadialFunction& w, const Params& p,
                             const PrecisionPolicy& pol, TransformReport* rep) {
  RadialFunction flap = fractional_laplacian(w, p, pol, rep);
  std::vector<double> drift = log_derivative_samples(w);
  const double inv2s = 1.0 / (2.0 * p.s);
  std::vector<double> vals(w.grid().size());
  for (std::size_t i = 0; i < vals.size(); ++i)
    vals[i] = flap.values()[i] + inv2s * drift[i];
  RadialFunction out(w.grid(), std::move(vals), p.n);
  if (w.has_spectral()) {
    // F{L*_s w} = zeta^{2s} \hat w - (1/2s) (n \hat w + zeta d\hat w/dzeta)
    RealFn wh = w.spectral();
    RealFn dwh = spectral_log_derivative(wh);
    double two_s = 2.0 * p.s;
    double nn = static_cast<double>(p.n);
    out.attach_spectral([wh, dwh, two_s, inv2s, nn](double z) {
      return std::pow(z, two_s) * wh(z) - inv2s * (nn * wh(z) + dwh(z));
    });
  }
  return out;
}

}  // namespace levyfp
