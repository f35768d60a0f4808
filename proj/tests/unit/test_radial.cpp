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

#include "levyfp/eigenbasis.hpp"
#include "levyfp/hankel.hpp"
#include "levyfp/maps.hpp"
#include "levyfp/mellin.hpp"
#include "levyfp/operators.hpp"
#include "levyfp/specfun.hpp"

using namespace levyfp;

namespace {
constexpr double kPi = 3.14159265358979323846;

// Gaussian e^{-a r^2} with its exact transform (2a)^{-n/2} e^{-z^2/(4a)}
RadialFunction gaussian_with_spectral(double a, int n, const RadialGrid& grid) {
  RadialFunction u(grid, [a](double r) { return std::exp(-a * r * r); }, n);
  double pref = std::pow(2.0 * a, -0.5 * n);
  u.attach_spectral([a, pref](double z) {
    return pref * std::exp(-z * z / (4.0 * a));
  });
  return u;
}
}  // namespace

TEST_CASE("Gaussian self-duality of the Hankel transform") {
  for (int n : {1, 2, 3}) {
    Params p(1.0, n);
    RadialFunction u(RadialGrid::log_spaced(1e-3, 12.0, 129),
                     [](double r) { return std::exp(-0.5 * r * r); }, n);
    for (double z : {0.0, 0.4, 1.0, 2.5, 5.0}) {
      double got = hankel_point(u.evaluator(), p, z);
      CHECK(got == doctest::Approx(std::exp(-0.5 * z * z)).epsilon(1e-10));
    }
  }
}

TEST_CASE("Hankel round trip, analytic and sampled paths") {
  for (int n : {1, 2, 3}) {
    Params p(1.0, n);
    RadialGrid grid = RadialGrid::log_spaced(1e-3, 30.0, 257);
    RadialFunction u(grid, [](double r) { return r * r * std::exp(-r * r); }, n);
    RadialGrid zg = RadialGrid::log_spaced(1e-3, 30.0, 257);
    // analytic path
    SpectralRadialFunction what = hankel_forward(u, zg, p);
    RadialFunction back = hankel_inverse(what, grid, p);
    CHECK(grid_l2_relative_diff(back, u) < 1e-8);
    // sampled path: strip the evaluator so interpolation is exercised
    RadialFunction us(grid, u.values(), n);
    SpectralRadialFunction what2 = hankel_forward(us, zg, p);
    RadialFunction back2 = hankel_inverse(what2, grid, p);
    CHECK(grid_l2_relative_diff(back2, u) < 1e-6);
  }
}

TEST_CASE("closed Laguerre form of the Gaussian-weighted Bessel moment") {
  // r^{-(n-2)/2} \int z^{2k+n/2} e^{-z^2} J_{(n-2)/2}(r z) dz
  //   = 2^{-n/2} k! e^{-r^2/4} L_k^{((n-2)/2)}(r^2/4)
  int n = 2, k = 3;
  Params p(1.0, n);
  for (double r : {0.5, 2.0, 5.0}) {
    double alpha = p.hankel_order();
    auto g = [&](double z) {
      return std::pow(z, 2.0 * k + 0.5 * n) * std::exp(-z * z);
    };
    OscillatoryResult res = bessel_oscillatory_integral(g, alpha, r);
    double lhs = std::pow(r, -0.5 * (n - 2.0)) * res.value;
    double q = 0.25 * r * r;
    double rhs = std::pow(2.0, -0.5 * n) * std::tgamma(k + 1.0) * std::exp(-q) *
                 laguerre(k, alpha, q);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-6));
  }
}

TEST_CASE("n = 1 transform reduces to the cosine transform") {
  Params p(0.5, 1);
  auto f = [](double r) { return std::exp(-r * r); };
  for (double z : {0.3, 1.0, 4.0}) {
    double got = hankel_point(f, p, z);
    auto cosint = [&](double r) { return std::cos(z * r) * f(r); };
    double expected = std::sqrt(2.0 / kPi) * integrate(cosint, 0.0, 12.0);
    CHECK(got == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("fractional Laplacian reduces to the radial Laplacian at s = 1") {
  int n = 3;
  Params p(1.0, n);
  RadialGrid grid = RadialGrid::log_spaced(1e-2, 8.0, 129);
  RadialFunction u = gaussian_with_spectral(1.0, n, grid);
  RadialFunction lap = fractional_laplacian(u, p);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double r = grid[i];
    double expected = (2.0 * n - 4.0 * r * r) * std::exp(-r * r);
    CHECK(lap.values()[i] == doctest::Approx(expected).epsilon(1e-8).scale(1.0));
  }
}

TEST_CASE("Mellin symbol identity for the fractional Laplacian on the Gaussian") {
  Params p(0.6, 2);
  RadialGrid grid = RadialGrid::log_spaced(1e-3, 50.0, 257);
  RadialFunction u = gaussian_with_spectral(1.0, p.n, grid);
  RadialFunction flap = fractional_laplacian(u, p);
  // sample the identity at a few points on the line Re z = n/2 + s
  double sigma = 0.5 * p.n + p.s;
  GridFunction uf(grid, u.evaluator(), p.n);
  for (double lam : {0.0, 0.7, 2.0}) {
    Complex z(sigma, lam);
    Complex lhs = mellin_transform_point(flap, z);
    Complex rhs = theta_symbol(p, z) * mellin_transform_point(uf, z - 2.0 * p.s);
    CHECK(std::abs(lhs - rhs) <= 1e-6 * std::abs(rhs));
  }
}

TEST_CASE("fractional seminorm via the symbol on the half-shifted lines") {
  // \int |(-Lap)^{s/2} u|^2 r^{n-1} dr
  //   = (1/2pi) \int Theta_s(n/2+s+i lam) |M u(n/2-s+i lam)|^2 dlam
  Params p(0.8, 2);
  Params ph(0.4, 2);
  RadialGrid grid = RadialGrid::log_spaced(1e-3, 50.0, 513);
  RadialFunction u = gaussian_with_spectral(1.0, p.n, grid);
  RadialFunction half = fractional_laplacian(u, ph);  // exponent s/2
  double lhs = grid_l2_norm(half);
  lhs *= lhs;
  GridFunction uf(grid, u.evaluator(), p.n);
  VerticalLine line = VerticalLine::symmetric(0.5 * p.n - p.s, 40.0, 1601);
  MellinLineSamples mu = mellin_transform_numeric(uf, line);
  double acc = 0.0;
  double dl = line.spacing();
  for (std::size_t i = 0; i < mu.values.size(); ++i) {
    Complex th = theta_symbol(p, Complex(0.5 * p.n + p.s, line.lambda[i]));
    double w = (i == 0 || i + 1 == mu.values.size()) ? 0.5 : 1.0;
    acc += w * dl * th.real() * std::norm(mu.values[i]);
  }
  double rhs = acc / (2.0 * kPi);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-5));
}

TEST_CASE("multiplier composition: half powers compose to the full power") {
  Params p(0.9, 2);
  Params ph(0.45, 2);
  RadialGrid grid = RadialGrid::log_spaced(1e-2, 20.0, 129);
  RadialFunction u = gaussian_with_spectral(1.0, p.n, grid);
  RadialFunction once = fractional_laplacian(u, p);
  RadialFunction half = fractional_laplacian(u, ph);
  RadialFunction twice = fractional_laplacian(half, ph);
  CHECK(grid_l2_relative_diff(twice, once) < 1e-6);
}

TEST_CASE("stationary Gaussian of the classical Fokker-Planck operator") {
  int n = 3;
  Params p(1.0, n);
  RadialGrid grid = RadialGrid::log_spaced(1e-2, 25.0, 513);
  RadialFunction u = gaussian_with_spectral(0.25, n, grid);
  RadialFunction lsu = apply_Ls(u, p);
  CHECK(grid_l2_norm(lsu) / grid_l2_norm(u) < 1e-8);
}

TEST_CASE("eigen residual for the fractional Fokker-Planck operator") {
  Params p(0.75, 2);
  RadialGrid grid = RadialGrid::log_spaced(1e-2, 30.0, 769);
  for (int k : {0, 1, 2, 3}) {
    RadialFunction ek = make_eigenfunction(p, k, grid);
    RadialFunction lsek = apply_Ls(ek, p);
    std::vector<double> resid(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      resid[i] = lsek.values()[i] - k * ek.values()[i];
    RadialFunction rf(grid, std::move(resid), p.n);
    CHECK(grid_l2_norm(rf) / grid_l2_norm(ek) < 1e-6);
  }
}

TEST_CASE("conjugation to the classical operator through the dagger map") {
  // L_s u = f implies L_1 u^dag = f^dag
  Params p(0.6, 2);
  Params p1(1.0, 2);
  RadialGrid grid = RadialGrid::log_spaced(1e-2, 20.0, 513);
  RadialFunction u = gaussian_with_spectral(1.0, p.n, grid);
  RadialFunction f = apply_Ls(u, p);
  RadialFunction udag = dagger_map(u, p, grid);
  RadialFunction fdag = dagger_map(f, p, grid);
  RadialFunction l1udag = apply_Ls(udag, p1);
  CHECK(grid_l2_relative_diff(l1udag, fdag) < 1e-5);
}

TEST_CASE("adjoint conjugation through the double-dagger map") {
  // L*_s w = g implies L*_1 w^ddag = g^ddag
  Params p(0.6, 2);
  Params p1(1.0, 2);
  RadialGrid grid = RadialGrid::log_spaced(1e-2, 20.0, 513);
  RadialFunction w = gaussian_with_spectral(1.0, p.n, grid);
  RadialFunction g = apply_Ls_star(w, p);
  RadialFunction wdd = ddagger_map(w, p, grid);
  RadialFunction gdd = ddagger_map(g, p, grid);
  RadialFunction l1wdd = apply_Ls_star(wdd, p1);
  CHECK(grid_l2_relative_diff(l1wdd, gdd) < 1e-5);
}

TEST_CASE("discrete duality of L_s and its adjoint") {
  Params p(0.7, 2);
  RadialGrid grid = RadialGrid::log_spaced(1e-3, 25.0, 513);
  RadialFunction u = gaussian_with_spectral(1.0, p.n, grid);
  RadialFunction w = gaussian_with_spectral(0.5, p.n, grid);
  RadialFunction lsu = apply_Ls(u, p);
  RadialFunction lsw = apply_Ls_star(w, p);
  // \int (L_s u) w r^{n-1} dr = \int u (L*_s w) r^{n-1} dr
  auto pair = [&](const RadialFunction& a, const RadialFunction& b) {
    std::vector<double> prod(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i)
      prod[i] = a.values()[i] * b.values()[i];
    return grid_integral(GridFunction(grid, std::move(prod), p.n), p.n - 1.0);
  };
  double lhs = pair(lsu, w);
  double rhs = pair(u, lsw);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-5));
}

TEST_CASE("dagger map identities") {
  Params p1(1.0, 2);
  RadialGrid grid = RadialGrid::log_spaced(1e-2, 15.0, 129);
  // s = 1: the substitution is trivial, u^dag = u
  RadialFunction u = gaussian_with_spectral(1.0, 2, grid);
  RadialFunction ud = dagger_map(u, p1, grid);
  CHECK(grid_l2_relative_diff(ud, u) < 1e-9);

  // (e_k)^dag is the classical Laguerre eigenfunction
  Params p(0.6, 2);
  RadialFunction e2 = make_eigenfunction(p, 2, grid);
  RadialFunction e2d = dagger_map(e2, p, grid);
  RadialFunction classical(
      grid, [&p](double rho) { return eigen_dagger_profile(p, 2, rho); }, 2);
  CHECK(grid_l2_relative_diff(e2d, classical) < 1e-7);
}

TEST_CASE("phi inverse map identities") {
  // s = 1: identity map
  Params p1(1.0, 2);
  RadialGrid grid = RadialGrid::log_spaced(1e-2, 12.0, 65);
  RadialFunction u = gaussian_with_spectral(1.0, 2, grid);
  RadialFunction pu = phi_inverse_map(u, p1, grid);
  CHECK(grid_l2_relative_diff(pu, u) < 1e-9);

  // Phi_s^{-1} e_k = script_L_k / (2^{n/2+1} s)
  Params p(0.5, 2);
  RadialGrid window = RadialGrid::log_spaced(0.2, 4.0, 33);
  RadialFunction e1 = make_eigenfunction(p, 1, RadialGrid::log_spaced(1e-2, 30.0, 129));
  RadialFunction pe1 = phi_inverse_map(e1, p, window);
  double c = eigen_hankel_factor(p);
  for (std::size_t i = 0; i < window.size(); ++i) {
    double expected = script_L(p, 1, window[i]) / c;
    CHECK(pe1.values()[i] == doctest::Approx(expected).epsilon(1e-7));
  }
}

TEST_CASE("phi inverse is the inverse multiplier on the Mellin side") {
  // M{Phi_s^{-1} u}(z) = Lambda_s(z)^{-1} M u(z) on the Gaussian
  Params p(0.6, 2);
  double sigma = 0.5 * p.n * (2.0 - p.s);
  RadialGrid grid = RadialGrid::log_spaced(1e-2, 30.0, 129);
  RadialFunction u = gaussian_with_spectral(1.0, p.n, grid);
  RadialFunction pu = phi_inverse_map(u, p, grid);
  GridFunction uf(grid, u.evaluator(), p.n);
  for (double lam : {0.4, 1.5}) {
    Complex z(sigma, lam);
    Complex lhs = mellin_transform_point(pu, z);
    Complex rhs = mellin_transform_point(uf, z) / lambda_multiplier(p, z);
    CHECK(std::abs(lhs - rhs) <= 2e-6 * std::abs(rhs));
  }
}

TEST_CASE("ddagger map at s = 1 is the identity") {
  Params p1(1.0, 2);
  RadialGrid grid = RadialGrid::log_spaced(1e-2, 12.0, 65);
  RadialFunction w = gaussian_with_spectral(1.0, 2, grid);
  RadialFunction wd = ddagger_map(w, p1, grid);
  CHECK(grid_l2_relative_diff(wd, w) < 1e-9);
}

TEST_CASE("sampled transform flags an undecayed tail") {
  // a function with a fat tail cut off by the grid must be reported
  int n = 2;
  Params p(0.5, n);
  RadialGrid grid = RadialGrid::log_spaced(1e-2, 50.0, 129);
  std::vector<double> vals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    vals[i] = 1.0 / (1.0 + grid[i]);
  RadialFunction u(grid, std::move(vals), n);
  TransformReport rep;
  hankel_forward(u, RadialGrid::log_spaced(0.1, 1.0, 5), p, {}, &rep);
  CHECK(rep.tail_truncated);
}

TEST_CASE("log-grid derivative accuracy") {
  RadialGrid grid = RadialGrid::log_spaced(1e-2, 10.0, 513);
  GridFunction u(grid, [](double r) { return std::exp(-r * r); }, 2);
  std::vector<double> d = log_derivative_samples(u);
  for (std::size_t i = 0; i < grid.size(); i += 37) {
    double r = grid[i];
    double expected = -2.0 * r * r * std::exp(-r * r);  // r u'(r)
    CHECK(d[i] == doctest::Approx(expected).epsilon(1e-9).scale(1.0));
  }
}
