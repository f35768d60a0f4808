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

#ifndef LEVYFP_EIGENBASIS_HPP
#define LEVYFP_EIGENBASIS_HPP

#include <vector>

#include "levyfp/mellin.hpp"
#include "levyfp/params.hpp"
#include "levyfp/radial_function.hpp"

namespace levyfp {

// ---------------------------------------------------------------------------
// Normalization ledger.
//
// The canonical eigenfunction of L_s is fixed on the Fourier side:
//     \hat e_nu(zeta) = zeta^{2 s nu} e^{-zeta^{2s}},
// so e_nu = IH{\hat e_nu} (IH = inverse Hankel). The closed-form series,
// the Mellin inversion of u~_nu, and the explicit U_nu / script-L family
// all produce the SAME function multiplied by
//     hankel_factor = 2^{n/2+1} s,
// i.e. u_nu = hankel_factor * e_nu. Routines below that return the
// "series-normalized" value are marked as such; divide by
// eigen_hankel_factor(p) for the canonical function.
//
// The adjoint eigenfunction omega_k is represented by its profiles only
// (it has no well-behaved pointwise materialization):
//   - ddagger profile (canonical):  omega_k^ddag(rho) = L_k^{(a)}(rho^2/4),
//   - duality profile:              frak_L_k(r) = 2s/Gamma(k+n/2) L_k^{(a)}(r^{2s}/4),
// with a = (n-2)/2.
// ---------------------------------------------------------------------------

enum class EigenRoute { Fourier, Series, Mellin };

// Canonical Fourier-side profile zeta^{2 s nu} e^{-zeta^{2s}}.
double eigen_fourier(const Params& p, double nu, double zeta);

// Conversion constant between the canonical and series normalizations.
double eigen_hankel_factor(const Params& p);

// Series-normalized u_nu(r) from the explicit three-regime formulas:
// Fox--Wright series for s > 1/2, a Gauss-hypergeometric/Legendre closed
// form at s = 1/2, and a large-r Puiseux series for s < 1/2 (which
// throws DomainError below its accuracy threshold; fall back to the
// Fourier route there).
double eigen_series(const Params& p, double nu, double r,
                    const PrecisionPolicy& pol = {});

// Series-normalized u_nu(r) = 2^{n/2+1} s IH{\hat e_nu}(r) by quadrature.
double eigen_hankel(const Params& p, double nu, double r,
                    const PrecisionPolicy& pol = {});

// Series-normalized u_nu(r) by numeric Mellin inversion of u~_nu along
// the default line (abscissa 0.25*min(1, s*nu + n/2), doubled per the
// regime convention).
double eigen_mellin_inversion(const Params& p, double nu, double r,
                              const PrecisionPolicy& pol = {});

// Mellin transform u~_nu(z) = 2^z G(nu+(n-z)/2s) G(z/2) / G((n-z)/2)
// and its multiplier-free part  U~_nu(z) = u~_nu(z)/Lambda_s(z).
Complex eigen_mellin_transform(const Params& p, double nu, Complex z);
Complex eigen_mellin_U(const Params& p, double nu, Complex z);

// U_nu(r): closed-form inverse Mellin transform of eigen_mellin_U; equals
// script_L_k at integer nu = k.
double U_nu(const Params& p, double nu, double r, const PrecisionPolicy& pol = {});

// script-L_k(r) = 2s k! (r^{2s}/4)^{n/2-n/2s} e^{-r^{2s}/4} L_k^{(a)}(r^{2s}/4)
double script_L(const Params& p, int k, double r);
// frak-L_k(r) = 2s/Gamma(k+n/2) L_k^{(a)}(r^{2s}/4)
double frak_L(const Params& p, int k, double r);

// Closed-form I_{sigma,nu,b} lives in mellin.hpp (residue_inverse_I).

// Eigenpair descriptor with route-tagged evaluation.
struct EigenFunction {
  Params params;
  double nu = 0.0;
  EigenRoute route = EigenRoute::Fourier;
  PrecisionPolicy policy;

  // series-normalized value via the chosen route
  double operator()(double r) const;
  // canonical value (series-normalized / hankel factor)
  double canonical(double r) const;
  double fourier_side(double zeta) const { return eigen_fourier(params, nu, zeta); }
};

// Canonical e_k sampled on a grid, carrying its analytic Fourier profile
// and its dagger profile 2^{-n/2} k! e^{-rho^2/4} L_k^{(a)}(rho^2/4).
RadialFunction make_eigenfunction(const Params& p, int k, const RadialGrid& grid,
                                  const PrecisionPolicy& pol = {});

// dagger profile of the canonical e_k (a classical Laguerre function).
double eigen_dagger_profile(const Params& p, int k, double rho);
// ddagger profile of the canonical omega_k.
double adjoint_ddagger_profile(const Params& p, int k, double rho);
// dagger profile of the series-normalized u_k: 2s k! e^{-rho^2/4} L_k^{(a)}(rho^2/4).
double eigen_dagger_profile_series(const Params& p, int k, double rho);

// ---------------------------------------------------------------------------
// Inner products. Everything is expressed through the dagger / ddagger
// profiles; the fixed prefactors make the eigenbasis Gram diagonals come
// out as
//   <u_j, u_k>_dag   = 2s k! 2^{n/s} G(k+n/2)/G(n/2) delta_jk   (series norm.)
//   <om_j, om_k>_ddag = 2^n G(k+n/2)/(k! G(n/2)) delta_jk        (canonical)
// ---------------------------------------------------------------------------

// (2^{n/s-n}/s) \int f(rho) g(rho) e^{rho^2/4} rho^{n-1} drho
double inner_dagger_profiles(const RealFn& f, const RealFn& g, const Params& p,
                             const PrecisionPolicy& pol = {});
// 2 \int f(rho) g(rho) e^{-rho^2/4} rho^{n-1} drho
double inner_ddagger_profiles(const RealFn& f, const RealFn& g, const Params& p,
                              const PrecisionPolicy& pol = {});

// RadialFunction-level products; attached profiles are used when present,
// otherwise the dagger/ddagger maps are evaluated numerically.
double inner_dagger(const RadialFunction& u1, const RadialFunction& u2,
                    const Params& p, const PrecisionPolicy& pol = {});
double inner_ddagger(const RadialFunction& w1, const RadialFunction& w2,
                     const Params& p, const PrecisionPolicy& pol = {});

struct InnerProductReport {
  std::vector<std::vector<double>> gram;
  std::vector<double> diagonal_expected;
  double max_offdiag_rel = 0.0;  // |G_jk| / sqrt(G_jj G_kk), j != k
  double max_diag_rel_err = 0.0;
};

InnerProductReport gram_dagger(const Params& p, int kmax,
                               const PrecisionPolicy& pol = {});
InnerProductReport gram_ddagger(const Params& p, int kmax,
                                const PrecisionPolicy& pol = {});

// Duality pairing (u,w)_* = 2^{n/s-n} \int u w r^{n-1} dr, with the
// multiplier route \int Phi^{-1}u (Phi*)^{-1}w r^{n-1} dr as cross-check.
struct PairingResult {
  double value = 0.0;
  double route_a = 0.0;  // multiplier route
  double route_b = 0.0;  // direct weighted integral
  double mismatch = 0.0;
};
PairingResult duality_pairing(const RadialFunction& u, const RadialFunction& w,
                              const Params& p, const PrecisionPolicy& pol = {});

// (u_j, omega_k)_* at the profile level: \int script_L_j frak_L_k r^{n-1} dr.
// Equals (2s 2^{n/s}/G(n/2)) delta_jk.
double duality_pairing_eigen(const Params& p, int j, int k,
                             const PrecisionPolicy& pol = {});

// K_s(z1,z2) = (1/2) (z1 z2)^{-n/2} e^{-(z1^2+z2^2)} I_{(n-2)/2}(2 z1 z2),
// assembled from the scaled Bessel function so the e^{-(z1-z2)^2}
// cancellation never overflows.
double adjoint_kernel_K(const Params& p, double zeta1, double zeta2);

}  // namespace levyfp

#endif  // LEVYFP_EIGENBASIS_HPP
