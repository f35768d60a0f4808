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

#include "levyfp/heat.hpp"

#include <cmath>

#include "levyfp/maps.hpp"
#include "levyfp/specfun.hpp"

namespace levyfp {

double SelfSimilarMap::t_tilde(double t) const { return std::log1p(t); }
double SelfSimilarMap::t_physical(double t_tilde) const { return std::expm1(t_tilde); }
double SelfSimilarMap::x_tilde(double t, double x) const {
  return x / std::pow(1.0 + t, 0.5 / params.s);
}
double SelfSimilarMap::x_physical(double t, double x_tilde) const {
  return x_tilde * std::pow(1.0 + t, 0.5 / params.s);
}
double SelfSimilarMap::amplitude(double t) const {
  return std::pow(1.0 + t, -0.5 * params.n / params.s);
}

RadialFunction greens_function(const Params& p, double t, const RadialGrid& grid,
                               const PrecisionPolicy& pol) {
  if (!(t > 0.0)) throw DomainError("greens_function: t > 0 required");
  const double two_s = 2.0 * p.s;
  const double mass_norm = std::pow(2.0 * 3.14159265358979323846, -0.5 * p.n);
  RealFn prof = [two_s, t, mass_norm](double z) {
    return mass_norm * std::exp(-t * std::pow(z, two_s));
  };
  return hankel_inverse_fn(prof, grid, p, pol, nullptr);
}

std::vector<double> project(const RadialFunction& phi0, const Params& p, int K,
                            const PrecisionPolicy& pol) {
  if (K < 0) throw DomainError("project: K >= 0");
  RealFn phi_dag;
  if (phi0.has_dagger_profile()) {
    phi_dag = phi0.dagger_profile();
  } else {
    RadialFunction ud = dagger_map(phi0, p, pol);
    phi_dag = ud.evaluator();
  }
  std::vector<double> a(K + 1);
  for (int k = 0; k <= K; ++k) {
    Params pc = p;
    int kk = k;
    RealFn ek_dag = [pc, kk](double rho) {
      return eigen_dagger_profile(pc, kk, rho);
    };
    double num = inner_dagger_profiles(phi_dag, ek_dag, p, pol);
    double den = inner_dagger_profiles(ek_dag, ek_dag, p, pol);
    a[k] = num / den;
  }
  return a;
}

HeatSolution make_heat_solution(const RadialFunction& phi0, const Params& p,
                                int K, const RadialGrid& grid,
                                const PrecisionPolicy& pol) {
  HeatSolution sol{p, grid, project(phi0, p, K, pol), {}, pol};
  sol.modes.resize(K + 1);
  for (int k = 0; k <= K; ++k) {
    RadialFunction ek = make_eigenfunction(p, k, grid, pol);
    sol.modes[k] = ek.values();
  }
  return sol;
}

RadialFunction evolve_spectral(const HeatSolution& sol, double t_tilde,
                               double* truncation_indicator) {
  if (t_tilde < 0.0) throw DomainError("evolve_spectral: t~ >= 0 required");
  std::vector<double> vals(sol.grid.size(), 0.0);
  int K = sol.mode_count() - 1;
  for (int k = 0; k <= K; ++k) {
    double w = sol.coefficients[k] * std::exp(-static_cast<double>(k) * t_tilde);
    for (std::size_t i = 0; i < vals.size(); ++i)
      vals[i] += w * sol.modes[k][i];
  }
  RadialFunction out(sol.grid, std::move(vals), sol.params.n);
  if (truncation_indicator) {
    double last = 0.0, total = 0.0;
    for (std::size_t i = 0; i < out.values().size(); ++i) {
      last = std::max(last, std::abs(sol.coefficients[K] *
                                     std::exp(-static_cast<double>(K) * t_tilde) *
                                     sol.modes[K][i]));
      total = std::max(total, std::abs(out.values()[i]));
    }
    *truncation_indicator = (total > 0.0) ? last / total : last;
  }
  return out;
}

RadialFunction evolve_physical_spectral(const HeatSolution& sol, double t,
                                        const RadialGrid& phys_grid) {
  SelfSimilarMap map{sol.params};
  double tt = map.t_tilde(t);
  double amp = map.amplitude(t);
  int K = sol.mode_count() - 1;
  const Params& p = sol.params;
  std::vector<double> vals(phys_grid.size(), 0.0);
  // evaluate the canonical modes at the rescaled abscissae
  std::vector<double> scaled(phys_grid.size());
  for (std::size_t i = 0; i < phys_grid.size(); ++i)
    scaled[i] = map.x_tilde(t, phys_grid[i]);
  for (int k = 0; k <= K; ++k) {
    double w = amp * sol.coefficients[k] * std::exp(-k * tt);
    if (w == 0.0) continue;
    Params pc = p;
    double nu = k;
    RealFn prof = [pc, nu](double z) { return eigen_fourier(pc, nu, z); };
    for (std::size_t i = 0; i < phys_grid.size(); ++i)
      vals[i] += w * hankel_point(prof, p, scaled[i], sol.policy, nullptr);
  }
  return RadialFunction(phys_grid, std::move(vals), p.n);
}

RadialFunction evolve_fourier_oracle(const RadialFunction& phi0, const Params& p,
                                     double t, const PrecisionPolicy& pol,
                                     TransformReport* rep) {
  if (t < 0.0) throw DomainError("evolve_fourier_oracle: t >= 0 required");
  const double two_s = 2.0 * p.s;
  if (phi0.has_spectral()) {
    RealFn f0 = phi0.spectral();
    RealFn evolved = [f0, t, two_s](double z) {
      return std::exp(-t * std::pow(z, two_s)) * f0(z);
    };
    return hankel_inverse_fn(evolved, phi0.grid(), p, pol, rep);
  }
  RadialGrid zg = RadialGrid::standard();
  SpectralRadialFunction what = hankel_forward(phi0, zg, p, pol, rep);
  std::vector<double> damped(what.values().size());
  for (std::size_t i = 0; i < damped.size(); ++i)
    damped[i] = std::exp(-t * std::pow(zg[i], two_s)) * what.values()[i];
  SpectralRadialFunction mul(zg, std::move(damped), p.n);
  return hankel_inverse(mul, phi0.grid(), p, pol, rep);
}

}  // namespace levyfp
