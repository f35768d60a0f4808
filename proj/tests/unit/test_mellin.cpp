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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "levyfp/mellin.hpp"
#include "levyfp/specfun.hpp"

using namespace levyfp;

namespace {
constexpr double kPi = 3.14159265358979323846;

GridFunction exp_decay(int n) {
  return GridFunction(RadialGrid::log_spaced(1e-3, 60.0, 257),
                      [](double r) { return std::exp(-r); }, n);
}

GridFunction gaussian(int n) {
  return GridFunction(RadialGrid::log_spaced(1e-3, 20.0, 257),
                      [](double r) { return std::exp(-r * r); }, n);
}
}  // namespace

TEST_CASE("theta symbol reduces to the classical radial symbol at s = 1") {
  std::mt19937 rng(7771);
  std::uniform_real_distribution<double> re(0.3, 4.0), im(-8.0, 8.0);
  for (int n : {2, 3}) {
    Params p(1.0, n);
    for (int i = 0; i < 20; ++i) {
      Complex z(re(rng), im(rng));
      Complex expected = (z - 2.0) * (static_cast<double>(n) - z);
      Complex got = theta_symbol(p, z);
      CHECK(std::abs(got - expected) <= 1e-10 * std::abs(expected));
    }
  }
}

TEST_CASE("classical Mellin identity M{-Lap u} = (z-2)(n-z) M u(z-2) by quadrature") {
  // independent of theta_symbol: both Mellin transforms and the radial
  // Laplacian of the Gaussian evaluated in closed form
  int n = 3;
  GridFunction u(RadialGrid::log_spaced(1e-3, 20.0, 257),
                 [](double r) { return std::exp(-r * r); }, n);
  GridFunction lap(RadialGrid::log_spaced(1e-3, 20.0, 257),
                   [n](double r) {
                     return (2.0 * n - 4.0 * r * r) * std::exp(-r * r);
                   },
                   n);
  for (Complex z : {Complex(2.5, 0.0), Complex(3.0, 1.5)}) {
    Complex lhs = mellin_transform_point(lap, z);
    Complex rhs = (z - 2.0) * (3.0 - z) * mellin_transform_point(u, z - 2.0);
    CHECK(std::abs(lhs - rhs) <= 1e-8 * std::abs(rhs));
  }
}

TEST_CASE("theta symbol asymptotics |Theta| ~ |lambda|^{2s}") {
  Params p(0.6, 3);
  double sigma = 1.4;
  double r1 = std::abs(theta_symbol(p, {sigma, 1e2})) / std::pow(1e2, 1.2);
  double r2 = std::abs(theta_symbol(p, {sigma, 1e3})) / std::pow(1e3, 1.2);
  double r3 = std::abs(theta_symbol(p, {sigma, 1e4})) / std::pow(1e4, 1.2);
  CHECK(r2 == doctest::Approx(r1).epsilon(0.05));
  CHECK(r3 == doctest::Approx(r2).epsilon(0.005));
}

TEST_CASE("theta doubling identity") {
  Params p(0.6, 3);
  Params ph(0.3, 3);
  double lam = 2.7;
  Complex lhs = theta_symbol(ph, {1.5, lam}) * theta_symbol(ph, {1.5, -lam});
  Complex rhs = theta_symbol(p, {1.5 + 0.6, lam});
  CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
}

TEST_CASE("theta pole guard") {
  Params p(0.6, 3);
  CHECK_THROWS_AS(theta_symbol(p, {0.0, 0.0}), PoleError);         // G(z/2) pole
  CHECK_THROWS_AS(theta_symbol(p, {3.0 + 1.2, 0.0}), PoleError);   // G((n+2s-z)/2) pole
}

TEST_CASE("lambda multiplier properties") {
  for (int n : {2, 3}) {
    Params p1(1.0, n);
    for (Complex z : {Complex(0.7, 0.0), Complex(1.3, 2.0), Complex(0.4, -5.0)}) {
      CHECK(std::abs(lambda_multiplier(p1, z) - 1.0) < 1e-12);
      CHECK(std::abs(lambda_star_multiplier(p1, z) - 1.0) < 1e-12);
    }
  }
  // duality product identity
  Params p(0.4, 2);
  Complex z(1.1, 3.0);
  Complex prod = lambda_star_multiplier(p, 2.0 - z) * lambda_multiplier(p, z);
  double expected = std::pow(2.0, 2.0 - 2.0 / 0.4);
  CHECK(std::abs(prod - expected) <= 1e-12 * expected);
}

TEST_CASE("lambda multiplier asymptotics on the critical line") {
  Params p(0.5, 2);
  double sigma = 1.0, lam = 1e3;
  double lhs = std::abs(lambda_multiplier(p, {sigma, lam}));
  double rhs = std::pow(2.0, -(1.0 / p.s - 1.0) * p.n) *
               std::pow(p.s, 0.5 * p.n - (p.n - sigma) / p.s) *
               std::pow(lam, (1.0 / p.s - 1.0) * (p.n - sigma));
  CHECK(lhs / rhs == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("lambda quasi-isometry exponent bounded on the n/2 line") {
  Params p(0.7, 3);
  double expo = 0.5 * p.n / p.s - 0.5 * p.n;
  double lo = 1e300, hi = 0.0;
  for (double lam : {1e2, 1e3, 1e4}) {
    double q = std::abs(lambda_multiplier(p, {0.5 * p.n, lam})) / std::pow(lam, expo);
    lo = std::min(lo, q);
    hi = std::max(hi, q);
  }
  CHECK(hi / lo < 1.1);
  CHECK(lo > 0.0);
}

TEST_CASE("numeric Mellin transform examples") {
  GridFunction u = exp_decay(2);
  // M{e^{-r}}(2.5) = Gamma(2.5)
  Complex v = mellin_transform_point(u, {2.5, 0.0});
  CHECK(v.real() == doctest::Approx(std::tgamma(2.5)).epsilon(1e-10));
  CHECK(std::abs(v.imag()) < 1e-12);

  // differentiation: M{r u'}(z) = -z M u(z) for u = e^{-r^2}
  GridFunction g = gaussian(2);
  GridFunction rg(RadialGrid::log_spaced(1e-3, 20.0, 257),
                  [](double r) { return -2.0 * r * r * std::exp(-r * r); }, 2);
  Complex z(1.5, 2.0);
  Complex lhs = mellin_transform_point(rg, z);
  Complex rhs = -z * mellin_transform_point(g, z);
  CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));

  // rescaling: M u(z) = a M{u(r^a)}(a z) at a = 2, u = e^{-r}
  GridFunction u2(RadialGrid::log_spaced(1e-3, 12.0, 257),
                  [](double r) { return std::exp(-r * r); }, 2);
  Complex z2(1.0, 1.0);
  Complex left = mellin_transform_point(u, z2);
  Complex right = 2.0 * mellin_transform_point(u2, 2.0 * z2);
  CHECK(std::abs(left - right) <= 1e-10 * std::abs(left));
}

TEST_CASE("Mellin inversion round trips") {
  // e^{-r} along sigma = 2
  GridFunction u = exp_decay(2);
  VerticalLine line = VerticalLine::symmetric(2.0, 40.0, 3201);
  MellinLineSamples samples = mellin_transform_numeric(u, line);
  RadialGrid rg = RadialGrid::log_spaced(0.1, 10.0, 41);
  MellinReport rep;
  RadialFunction back = inverse_mellin_numeric(samples, rg, 2, &rep);
  for (std::size_t i = 0; i < rg.size(); ++i) {
    CHECK(back.values()[i] == doctest::Approx(std::exp(-rg[i])).epsilon(1e-8));
  }
  CHECK(rep.imag_residual < 1e-10);

  // e^{-r^2} along sigma = 1.5
  GridFunction g = gaussian(2);
  VerticalLine line2 = VerticalLine::symmetric(1.5, 40.0, 3201);
  MellinLineSamples s2 = mellin_transform_numeric(g, line2);
  RadialFunction back2 = inverse_mellin_numeric(s2, rg, 2);
  for (std::size_t i = 0; i < rg.size(); ++i) {
    CHECK(back2.values()[i] ==
          doctest::Approx(std::exp(-rg[i] * rg[i])).epsilon(1e-7));
  }
}

TEST_CASE("inverting Gamma on the shifted strip gives e^{-r} - 1") {
  VerticalLine line = VerticalLine::symmetric(-0.5, 40.0, 3201);
  MellinLineSamples samples;
  samples.line = line;
  samples.values.resize(line.lambda.size());
  for (std::size_t i = 0; i < line.lambda.size(); ++i)
    samples.values[i] = std::exp(log_gamma(Complex(-0.5, line.lambda[i])));
  RadialGrid rg = RadialGrid::log_spaced(0.1, 5.0, 31);
  RadialFunction back = inverse_mellin_numeric(samples, rg, 2);
  for (std::size_t i = 0; i < rg.size(); ++i) {
    CHECK(back.values()[i] ==
          doctest::Approx(std::exp(-rg[i]) - 1.0).epsilon(1e-7));
  }
}

TEST_CASE("Plancherel identity on the n/2 line") {
  // with M u(z) = \int r^{z-1} u dr the isometry carries the Fourier 2 pi:
  //   \int |M u(n/2 + i lam)|^2 dlam = 2 pi \int |u|^2 r^{n-1} dr
  int n = 3;
  GridFunction g = gaussian(n);
  VerticalLine line = VerticalLine::symmetric(0.5 * n, 40.0, 2401);
  MellinLineSamples samples = mellin_transform_numeric(g, line);
  double lhs = 0.0;
  double dl = line.spacing();
  for (std::size_t i = 0; i < samples.values.size(); ++i) {
    double w = (i == 0 || i + 1 == samples.values.size()) ? 0.5 : 1.0;
    lhs += w * dl * std::norm(samples.values[i]);
  }
  // \int e^{-2 r^2} r^{n-1} dr = Gamma(n/2) / (2 (2)^{n/2})
  double rhs = 2.0 * kPi * 0.5 * std::tgamma(0.5 * n) * std::pow(2.0, -0.5 * n);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-8));
}

TEST_CASE("residue_inverse_I reduces to Laguerre at integer nu") {
  // nu = 2, b = 1.5, sigma = 0.5, rho = 1
  double got = residue_inverse_I(0.5, 2.0, 1.5, 1.0);
  double expected = 2.0 * std::exp(-1.0) * laguerre(2, 0.5, 1.0);
  CHECK(got == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("residue_inverse_I pure Kummer regime") {
  // both finite sums empty
  double got = residue_inverse_I(0.5, 0.3, 1.5, 2.0);
  double expected = gamma_ratio(1.8, 1.5) * kummer_m(1.8, 1.5, -2.0);
  CHECK(got == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("residue_inverse_I against contour quadrature") {
  double got = residue_inverse_I(0.5, -2.3, 1.5, 2.0);
  double oracle = contour_inverse_I(0.5, -2.3, 1.5, 2.0);
  CHECK(got == doctest::Approx(oracle).epsilon(1e-6));

  std::mt19937 rng(424242);
  std::uniform_real_distribution<double> nus(-3.0, 3.0), bs(0.5, 3.0),
      sigmas(0.2, 0.9), rhos(0.5, 4.0);
  int done = 0;
  while (done < 8) {
    double nu = nus(rng), b = bs(rng), sigma = sigmas(rng), rho = rhos(rng);
    if (detail::pole_distance(nu + b) < 1e-2) continue;
    if (detail::pole_distance(nu + b - sigma) < 1e-2) continue;
    if (std::abs(nu - std::round(nu)) < 1e-2) continue;
    double a = residue_inverse_I(sigma, nu, b, rho);
    double c = contour_inverse_I(sigma, nu, b, rho);
    CHECK(a == doctest::Approx(c).epsilon(1e-6));
    ++done;
  }
}

TEST_CASE("inverse_mellin error paths") {
  // undecayed samples must be rejected
  VerticalLine line = VerticalLine::symmetric(0.5, 5.0, 101);
  MellinLineSamples samples;
  samples.line = line;
  samples.values.assign(line.lambda.size(), Complex(1.0, 0.0));
  RadialGrid rg = RadialGrid::log_spaced(0.5, 2.0, 11);
  CHECK_THROWS_AS(inverse_mellin_numeric(samples, rg, 2), ConvergenceError);
}
