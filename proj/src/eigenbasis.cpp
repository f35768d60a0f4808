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

#include "levyfp/eigenbasis.hpp"

#include <cmath>
#include <sstream>

#include "levyfp/hankel.hpp"
#include "levyfp/maps.hpp"
#include "levyfp/specfun.hpp"

namespace levyfp {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
}

double eigen_fourier(const Params& p, double nu, double zeta) {
  if (zeta < 0.0) throw DomainError("eigen_fourier: zeta >= 0 required");
  if (!(nu > -0.5 * p.n / p.s))
    throw DomainError("eigen_fourier: need nu > -n/(2s)");
  if (zeta == 0.0) return (nu == 0.0) ? 1.0 : (nu > 0.0 ? 0.0 : INFINITY);
  double zs = std::pow(zeta, 2.0 * p.s);
  return std::pow(zeta, 2.0 * p.s * nu) * std::exp(-zs);
}

double eigen_hankel_factor(const Params& p) {
  return std::pow(2.0, 0.5 * p.n + 1.0) * p.s;
}

double eigen_hankel(const Params& p, double nu, double r,
                    const PrecisionPolicy& pol) {
  Params pc = p;
  double nuc = nu;
  RealFn prof = [pc, nuc](double z) { return eigen_fourier(pc, nuc, z); };
  return eigen_hankel_factor(p) * hankel_point(prof, p, r, pol, nullptr);
}

namespace {

// s = 1/2 closed form, dispatched on r for series conditioning: the
// hypergeometric argument -r^2 is fine below 1, while the Legendre form
// keeps the argument small for large r.
double eigen_series_critical(const Params& p, double nu, double r,
                             const PrecisionPolicy& pol) {
  double n = p.n;
  if (r < 1.0) {
    double pref = std::pow(2.0, -0.5 * (n - 2.0)) * gamma_ratio(n + nu, 0.5 * n);
    return pref * gauss_2f1(0.5 * (n + nu), 0.5 * (n + nu + 1.0), 0.5 * n,
                            -r * r, pol);
  }
  double root = std::sqrt(r * r + 1.0);
  double mu = -0.5 * (n - 2.0);
  double deg = 0.5 * n + nu;
  double val = legendre_p(mu, deg, 1.0 / root, pol);
  return std::exp(std::lgamma(n + nu)) * std::pow(r, -0.5 * (n - 2.0)) *
         std::pow(root, -(0.5 * n + 1.0 + nu)) * val;
}

}  // namespace

double eigen_series(const Params& p, double nu, double r,
                    const PrecisionPolicy& pol) {
  if (!(nu > -0.5 * p.n / p.s))
    throw DomainError("eigen_series: need nu > -n/(2s)");
  if (r < 0.0) throw DomainError("eigen_series: r >= 0 required");
  const double s = p.s, n = p.n;
  if (s > 0.5) {
    // entire Fox--Wright series in -r^2/4
    return 2.0 * fox_wright_1psi1(nu + 0.5 * n / s, 1.0 / s, 0.5 * n, 1.0,
                                  -0.25 * r * r, pol);
  }
  if (s == 0.5) {
    return eigen_series_critical(p, nu, r, pol);
  }
  // s < 1/2: Puiseux expansion in (2/r)^{2s}; diverges numerically at
  // small r where the alternating terms outgrow the sum.
  if (r == 0.0)
    throw DomainError("eigen_series: the s<1/2 series is a large-r expansion");
  double q = 2.0 / r;
  SeriesValue sv = fox_wright_1psi1_detail(s * nu + 0.5 * n, s, -s * nu, -s,
                                           -std::pow(q, 2.0 * s), pol);
  double val = -2.0 * s * std::pow(q, 2.0 * s * nu + n) * sv.value;
  double cancel = sv.max_term * 1e-16;
  if (std::abs(sv.value) < cancel / pol.rel_tol) {
    std::ostringstream os;
    os << "eigen_series: s<1/2 series loses " << cancel / std::abs(sv.value)
       << " of relative accuracy at r = " << r
       << "; evaluate via the Fourier route instead";
    throw DomainError(os.str());
  }
  return val;
}

Complex eigen_mellin_transform(const Params& p, double nu, Complex z) {
  const double n = p.n, s = p.s;
  return std::exp(z * std::log(2.0) + log_gamma(nu + (n - z) / (2.0 * s)) +
                  log_gamma(0.5 * z) - log_gamma(0.5 * (n - z)));
}

Complex eigen_mellin_U(const Params& p, double nu, Complex z) {
  const double n = p.n, s = p.s;
  return std::exp((z / s) * std::log(2.0) + log_gamma(nu + (n - z) / (2.0 * s)) +
                  log_gamma(0.5 * n - 0.5 * n / s + z / (2.0 * s)) -
                  log_gamma((n - z) / (2.0 * s)));
}

double eigen_mellin_inversion(const Params& p, double nu, double r,
                              const PrecisionPolicy& pol) {
  if (!(r > 0.0)) throw DomainError("eigen_mellin_inversion: r > 0 required");
  const double s = p.s, n = p.n;
  double sigma0 = 0.25 * std::min(1.0, s * nu + 0.5 * n);
  double abscissa = (s >= 0.5) ? 2.0 * sigma0 : 2.0 * s * sigma0;
  // integrand decays like e^{-pi |lambda| / (4s)}
  double lmax = (4.0 * s / kPi) * (45.0 + 12.0 * std::log(2.0 + std::abs(nu))) + 12.0;
  double dl = 0.3 / std::max(1.0, std::abs(std::log(r)));
  dl = std::min(dl, 0.05);
  int half = static_cast<int>(lmax / dl);
  double lr = std::log(r);
  // integrand is conjugate-symmetric; sum lambda >= 0 and double
  double acc = 0.0;
  for (int m = 0; m <= half; ++m) {
    double lam = m * dl;
    Complex z(abscissa, lam);
    Complex val = eigen_mellin_transform(p, nu, z) *
                  std::exp(Complex(-abscissa * lr, -lam * lr));
    double w = (m == 0) ? 0.5 : 1.0;
    acc += w * 2.0 * val.real();
  }
  (void)pol;
  return acc * dl / (2.0 * kPi);
}

double U_nu(const Params& p, double nu, double r, const PrecisionPolicy& pol) {
  if (!(r > 0.0)) throw DomainError("U_nu: r > 0 required");
  const double s = p.s, n = p.n;
  if (detail::pole_distance(nu + 0.5 * n) < detail::kPoleGuard)
    throw DomainError("U_nu: nu + n/2 is a non-positive integer");
  double rho = 0.25 * std::pow(r, 2.0 * s);
  double expo = 0.5 * n - 0.5 * n / s;
  double main_term = 2.0 * s * gamma_ratio(nu + 0.5 * n, 0.5 * n) *
                     std::pow(rho, expo) * std::exp(-rho) *
                     kummer_m(-nu, 0.5 * n, rho, pol);
  int lmax = static_cast<int>(std::floor(-nu - 0.5 * n));
  if (lmax < 0) return main_term;
  // left-pole residues enter with +, matching the contour quadrature
  double sp = std::sin(kPi * nu) / kPi;
  double lfact = 0.0;
  double lrho = std::log(rho);
  double tail = 0.0;
  for (int l = 0; l <= lmax; ++l) {
    if (l > 0) lfact += std::log(static_cast<double>(l));
    SignedLog g1 = signed_log_gamma_real(nu + 1.0 + l);
    SignedLog g2 = signed_log_gamma_real(nu + 0.5 * n + l);
    if (g1.sign == 0 || g2.sign == 0)
      throw PoleError("U_nu: residue factor at a Gamma pole");
    tail += g1.sign * g2.sign *
            std::exp(g1.log_abs + g2.log_abs - lfact +
                     (-nu - 0.5 * n / s - l) * lrho);
  }
  return main_term + 2.0 * s * sp * tail;
}

double script_L(const Params& p, int k, double r) {
  if (k < 0) throw DomainError("script_L: k >= 0");
  const double s = p.s, n = p.n;
  double rho = 0.25 * std::pow(r, 2.0 * s);
  double expo = 0.5 * n - 0.5 * n / s;
  return 2.0 * s * std::tgamma(k + 1.0) * std::pow(rho, expo) * std::exp(-rho) *
         laguerre(k, 0.5 * (n - 2.0), rho);
}

double frak_L(const Params& p, int k, double r) {
  if (k < 0) throw DomainError("frak_L: k >= 0");
  const double s = p.s, n = p.n;
  double rho = 0.25 * std::pow(r, 2.0 * s);
  return 2.0 * s / std::tgamma(k + 0.5 * n) * laguerre(k, 0.5 * (n - 2.0), rho);
}

double EigenFunction::operator()(double r) const {
  switch (route) {
    case EigenRoute::Fourier:
      return eigen_hankel(params, nu, r, policy);
    case EigenRoute::Series:
      return eigen_series(params, nu, r, policy);
    case EigenRoute::Mellin:
      return eigen_mellin_inversion(params, nu, r, policy);
  }
  throw DomainError("EigenFunction: unknown route");
}

double EigenFunction::canonical(double r) const {
  return (*this)(r) / eigen_hankel_factor(params);
}

double eigen_dagger_profile(const Params& p, int k, double rho) {
  double q = 0.25 * rho * rho;
  return std::pow(2.0, -0.5 * p.n) * std::tgamma(k + 1.0) * std::exp(-q) *
         laguerre(k, 0.5 * (p.n - 2.0), q);
}

double eigen_dagger_profile_series(const Params& p, int k, double rho) {
  return eigen_hankel_factor(p) * eigen_dagger_profile(p, k, rho);
}

double adjoint_ddagger_profile(const Params& p, int k, double rho) {
  return laguerre(k, 0.5 * (p.n - 2.0), 0.25 * rho * rho);
}

RadialFunction make_eigenfunction(const Params& p, int k, const RadialGrid& grid,
                                  const PrecisionPolicy& pol) {
  if (k < 0) throw DomainError("make_eigenfunction: k >= 0");
  Params pc = p;
  double nu = k;
  RealFn fourier = [pc, nu](double z) { return eigen_fourier(pc, nu, z); };
  RadialFunction out = hankel_inverse_fn(fourier, grid, p, pol, nullptr);
  int kk = k;
  out.attach_dagger_profile(
      [pc, kk](double rho) { return eigen_dagger_profile(pc, kk, rho); });
  return out;
}

namespace {

// \int_0^\infty f(rho) drho for profiles that die out by rho ~ 60; we
// first locate the live window on a coarse log scan so the adaptive rule
// is not wasted on dead regions.
double profile_integral(const RealFn& f, const PrecisionPolicy& pol,
                        const char* what) {
  double peak = 0.0;
  double grow_at_end = 0.0;
  const double hi = 64.0;
  for (int i = 0; i <= 128; ++i) {
    double rho = hi * (i + 0.5) / 129.0;
    double v = std::abs(f(rho));
    peak = std::max(peak, v);
    if (i >= 124) grow_at_end = std::max(grow_at_end, v);
  }
  if (peak == 0.0) return 0.0;
  if (grow_at_end > 1e-6 * peak) {
    std::ostringstream os;
    os << what << ": weighted integrand has not decayed at rho = " << hi
       << " (weight overflow for inadmissible data)";
    throw DomainError(os.str());
  }
  // shrink the window to where the integrand is alive
  double top = hi;
  for (int i = 128; i >= 1; --i) {
    double rho = hi * (i + 0.5) / 129.0;
    if (std::abs(f(rho)) > 1e-18 * peak) {
      top = std::min(hi, hi * (i + 1.5) / 129.0);
      break;
    }
  }
  return integrate(f, 0.0, top, pol, 20000);
}

}  // namespace

double inner_dagger_profiles(const RealFn& f, const RealFn& g, const Params& p,
                             const PrecisionPolicy& pol) {
  const double n = p.n;
  auto integrand = [&](double rho) {
    return f(rho) * g(rho) * std::exp(0.25 * rho * rho) * std::pow(rho, n - 1.0);
  };
  double raw = profile_integral(integrand, pol, "inner_dagger");
  return std::pow(2.0, n / p.s - n) / p.s * raw;
}

double inner_ddagger_profiles(const RealFn& f, const RealFn& g, const Params& p,
                              const PrecisionPolicy& pol) {
  const double n = p.n;
  auto integrand = [&](double rho) {
    return f(rho) * g(rho) * std::exp(-0.25 * rho * rho) * std::pow(rho, n - 1.0);
  };
  double raw = profile_integral(integrand, pol, "inner_ddagger");
  return 2.0 * raw;
}

namespace {

RealFn dagger_profile_of(const RadialFunction& u, const Params& p,
                         const PrecisionPolicy& pol) {
  if (u.has_dagger_profile()) return u.dagger_profile();
  RadialFunction ud = dagger_map(u, p, pol);
  return ud.evaluator();
}

RealFn ddagger_profile_of(const RadialFunction& w, const Params& p,
                          const PrecisionPolicy& pol) {
  if (w.has_ddagger_profile()) return w.ddagger_profile();
  RadialFunction wd = ddagger_map(w, p, pol);
  return wd.evaluator();
}

}  // namespace

double inner_dagger(const RadialFunction& u1, const RadialFunction& u2,
                    const Params& p, const PrecisionPolicy& pol) {
  return inner_dagger_profiles(dagger_profile_of(u1, p, pol),
                               dagger_profile_of(u2, p, pol), p, pol);
}

double inner_ddagger(const RadialFunction& w1, const RadialFunction& w2,
                     const Params& p, const PrecisionPolicy& pol) {
  return inner_ddagger_profiles(ddagger_profile_of(w1, p, pol),
                                ddagger_profile_of(w2, p, pol), p, pol);
}

namespace {

InnerProductReport gram_from(const Params& p, int kmax,
                             const std::vector<RealFn>& profiles,
                             const std::vector<double>& expected, bool dagger,
                             const PrecisionPolicy& pol) {
  InnerProductReport rep;
  int m = kmax + 1;
  rep.gram.assign(m, std::vector<double>(m, 0.0));
  rep.diagonal_expected = expected;
  for (int j = 0; j < m; ++j) {
    for (int k = j; k < m; ++k) {
      double v = dagger ? inner_dagger_profiles(profiles[j], profiles[k], p, pol)
                        : inner_ddagger_profiles(profiles[j], profiles[k], p, pol);
      rep.gram[j][k] = rep.gram[k][j] = v;
    }
  }
  for (int j = 0; j < m; ++j) {
    rep.max_diag_rel_err =
        std::max(rep.max_diag_rel_err,
                 std::abs(rep.gram[j][j] - expected[j]) / std::abs(expected[j]));
    for (int k = 0; k < m; ++k) {
      if (j == k) continue;
      double denom = std::sqrt(rep.gram[j][j] * rep.gram[k][k]);
      rep.max_offdiag_rel =
          std::max(rep.max_offdiag_rel, std::abs(rep.gram[j][k]) / denom);
    }
  }
  return rep;
}

}  // namespace

InnerProductReport gram_dagger(const Params& p, int kmax,
                               const PrecisionPolicy& pol) {
  std::vector<RealFn> profiles;
  std::vector<double> expected;
  for (int k = 0; k <= kmax; ++k) {
    Params pc = p;
    int kk = k;
    profiles.push_back(
        [pc, kk](double rho) { return eigen_dagger_profile_series(pc, kk, rho); });
    expected.push_back(2.0 * p.s * std::tgamma(k + 1.0) *
                       std::pow(2.0, p.n / p.s) *
                       gamma_ratio(k + 0.5 * p.n, 0.5 * p.n));
  }
  return gram_from(p, kmax, profiles, expected, true, pol);
}

InnerProductReport gram_ddagger(const Params& p, int kmax,
                                const PrecisionPolicy& pol) {
  std::vector<RealFn> profiles;
  std::vector<double> expected;
  for (int k = 0; k <= kmax; ++k) {
    Params pc = p;
    int kk = k;
    profiles.push_back(
        [pc, kk](double rho) { return adjoint_ddagger_profile(pc, kk, rho); });
    expected.push_back(std::pow(2.0, p.n) *
                       gamma_ratio(k + 0.5 * p.n, 0.5 * p.n) /
                       std::tgamma(k + 1.0));
  }
  return gram_from(p, kmax, profiles, expected, false, pol);
}

PairingResult duality_pairing(const RadialFunction& u, const RadialFunction& w,
                              const Params& p, const PrecisionPolicy& pol) {
  PairingResult res;
  const double n = p.n;
  // route (b): direct weighted integral
  auto fb = [&](double r) { return u(r) * w(r) * std::pow(r, n - 1.0); };
  double lo = std::max(u.grid().front(), w.grid().front());
  double hi = std::min(u.grid().back(), w.grid().back());
  res.route_b = std::pow(2.0, n / p.s - n) * integrate(fb, lo, hi, pol, 20000);
  // route (a): multiplier route through the dagger/ddagger profiles
  RadialGrid probe = RadialGrid::log_spaced(lo, hi, 33);
  RadialFunction phi_u = phi_inverse_map(u, p, probe, pol);
  RadialFunction phi_w = phi_star_inverse_map(w, p, probe, pol);
  auto fa = [&](double r) { return phi_u(r) * phi_w(r) * std::pow(r, n - 1.0); };
  PrecisionPolicy rough = pol;
  rough.rel_tol = std::max(pol.rel_tol, 1e-10);
  res.route_a = integrate(fa, lo, hi, rough, 4000);
  res.mismatch = std::abs(res.route_a - res.route_b);
  res.value = res.route_b;
  return res;
}

double duality_pairing_eigen(const Params& p, int j, int k,
                             const PrecisionPolicy& pol) {
  auto f = [&](double r) {
    return script_L(p, j, r) * frak_L(p, k, r) * std::pow(r, p.n - 1.0);
  };
  // integrand dies off once r^{2s}/4 leaves the Laguerre weight support
  double top = std::pow(4.0 * 80.0, 0.5 / p.s);
  return integrate(f, 0.0, top, pol, 20000);
}

double adjoint_kernel_K(const Params& p, double zeta1, double zeta2) {
  if (!(zeta1 > 0.0 && zeta2 > 0.0))
    throw DomainError("adjoint_kernel_K: zeta1, zeta2 > 0");
  double d = zeta1 - zeta2;
  double x = 2.0 * zeta1 * zeta2;
  return 0.5 * std::pow(zeta1 * zeta2, -0.5 * p.n) * std::exp(-d * d) *
         bessel_i_scaled(p.hankel_order(), x);
}

}  // namespace levyfp
