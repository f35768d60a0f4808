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

#ifndef LEVYFP_SPECFUN_HPP
#define LEVYFP_SPECFUN_HPP

#include <complex>

#include "levyfp/precision.hpp"

namespace levyfp {

// Principal-branch log Gamma on the cut plane. Throws PoleError at (or
// within pole_guard of) the non-positive integers.
Complex log_gamma(Complex z);

// |Gamma(z)| without forming Gamma itself; safe for large |Im z|.
double abs_gamma(Complex z);

// log|Gamma(x)| and the sign of Gamma(x) for real x off the poles.
// Needed wherever a Gamma factor of a possibly negative real argument
// enters a log-space product.
struct SignedLog {
  double log_abs;
  int sign;  // +1, -1, or 0 (0 encodes 1/Gamma = 0 at a pole)
};
SignedLog signed_log_gamma_real(double x);

// exp(log_gamma(a) - log_gamma(b)) for real a, b, sign handled.
double gamma_ratio(double a, double b);

// Kummer's confluent hypergeometric M(a,b;x).
double kummer_m(double a, double b, double x, const PrecisionPolicy& pol = {});

// Gauss hypergeometric 2F1(a,b;c;x) for x < 1. Arguments x <= -1/2 are
// routed through the Pfaff transformation.
double gauss_2f1(double a, double b, double c, double x,
                 const PrecisionPolicy& pol = {});

// Fox--Wright  1Psi1[(a,A);(b,B); x] = sum_j Gamma(a+Aj)/Gamma(b+Bj) x^j/j!.
// Convergence requires A - B < 1, or A - B = 1 with |x| < 1. B may be
// negative; terms where 1/Gamma(b+Bj) vanishes contribute zero.
double fox_wright_1psi1(double a, double A, double b, double B, double x,
                        const PrecisionPolicy& pol = {});

// Like fox_wright_1psi1 but also reports the largest term magnitude,
// so callers can bound the cancellation error of the alternating sum.
struct SeriesValue {
  double value;
  double max_term;
  int terms;
};
SeriesValue fox_wright_1psi1_detail(double a, double A, double b, double B,
                                    double x, const PrecisionPolicy& pol = {});

// Bessel functions of real order nu >= -1/2 on x >= 0.
double bessel_j(double nu, double x, const PrecisionPolicy& pol = {});
double bessel_i(double nu, double x, const PrecisionPolicy& pol = {});
// exp(-x) I_nu(x); finite for all x where I_nu overflows.
double bessel_i_scaled(double nu, double x, const PrecisionPolicy& pol = {});

// m-th positive zero of J_nu (McMahon expansion; exact for nu = +-1/2).
double bessel_j_zero(double nu, int m);

// Generalized Laguerre polynomial L_k^{(alpha)}(x), three-term recurrence.
double laguerre(int k, double alpha, double x);

// Physicists' Hermite polynomial H_k(x).
double hermite_h(int k, double x);

// Associated Legendre function of the first kind P^mu_nu(x), |x| < 1.
double legendre_p(double mu, double nu, double x,
                  const PrecisionPolicy& pol = {});

namespace detail {
// Distance from x to the nearest non-positive integer.
double pole_distance(double x);
constexpr double kPoleGuard = 1e-6;
}  // namespace detail

}  // namespace levyfp

#endif  // LEVYFP_SPECFUN_HPP
