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

#include "levyfp/quadrature.hpp"
#include "levyfp/specfun.hpp"

using namespace levyfp;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("adaptive integration of smooth functions") {
  auto f = [](double x) { return std::exp(-x * x); };
  CHECK(integrate(f, -8.0, 8.0) == doctest::Approx(std::sqrt(kPi)).epsilon(1e-12));
  auto g = [](double x) { return std::sin(40.0 * x); };
  CHECK(integrate(g, 0.0, kPi) ==
        doctest::Approx((1.0 - std::cos(40.0 * kPi)) / 40.0).epsilon(1e-10));
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  auto f = [](double x) { return 1.0 / std::sqrt(x); };
  CHECK(integrate_tanh_sinh(f, 0.0, 1.0) == doctest::Approx(2.0).epsilon(1e-10));
  auto g = [](double x) { return std::log(x); };
  CHECK(integrate_tanh_sinh(g, 0.0, 1.0) == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("semi-infinite integrals") {
  auto f = [](double x) { return std::exp(-x); };
  CHECK(integrate_to_inf(f, 0.0) == doctest::Approx(1.0).epsilon(1e-11));
  auto g = [](double x) { return std::exp(-0.5 * x * x); };
  CHECK(integrate_to_inf(g, 0.0) ==
        doctest::Approx(std::sqrt(0.5 * kPi)).epsilon(1e-11));
}

TEST_CASE("epsilon acceleration of a slowly alternating series") {
  // log(2) = sum (-1)^{k+1}/k, partial sums converge like 1/n
  EpsilonAccelerator eps;
  double s = 0.0;
  double est = 0.0;
  for (int k = 1; k <= 24; ++k) {
    s += ((k % 2) ? 1.0 : -1.0) / k;
    est = eps.push(s);
  }
  CHECK(est == doctest::Approx(std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("oscillatory Bessel integral with exponential decay") {
  // \int_0^inf e^{-x^2} x J_0(w x) dx = e^{-w^2/4}/2
  for (double w : {0.3, 2.0, 9.0}) {
    auto g = [](double x) { return std::exp(-x * x) * x; };
    OscillatoryResult r = bessel_oscillatory_integral(g, 0.0, w);
    CHECK(r.value == doctest::Approx(0.5 * std::exp(-0.25 * w * w)).epsilon(1e-10));
  }
}

TEST_CASE("oscillatory Bessel integral with algebraic tail") {
  // \int_0^inf J_0(w x)/(1+x^2) dx = pi/2 * (I_0(w) - L_0(w))-type value;
  // cross-check against the identity \int_0^inf J_1(x) dx = 1 and the
  // classical \int_0^inf J_0(x) dx = 1 instead (pure oscillatory tails).
  auto one = [](double) { return 1.0; };
  OscillatoryResult r0 = bessel_oscillatory_integral(one, 0.0, 1.0);
  CHECK(r0.accelerated);
  CHECK(r0.value == doctest::Approx(1.0).epsilon(1e-9));
  OscillatoryResult r1 = bessel_oscillatory_integral(one, 1.0, 2.5);
  CHECK(r1.value == doctest::Approx(1.0 / 2.5).epsilon(1e-9));
  // slowly decaying amplitude: \int_0^inf J_0(x) x^{-1/2} dx
  //   = Gamma(1/4) / (sqrt(2) Gamma(3/4))
  auto g = [](double x) { return 1.0 / std::sqrt(x); };
  OscillatoryResult r2 = bessel_oscillatory_integral(g, 0.0, 1.0);
  double expected = std::tgamma(0.25) / (std::sqrt(2.0) * std::tgamma(0.75));
  CHECK(r2.value == doctest::Approx(expected).epsilon(1e-9));
}
