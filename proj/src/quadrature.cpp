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

#include "levyfp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "levyfp/errors.hpp"
#include "levyfp/specfun.hpp"

namespace levyfp {

namespace {

// QUADPACK 15-point Kronrod abscissae/weights with the embedded 7-point
// Gauss weights (zero entries mark Kronrod-only nodes).
const double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
const double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
const double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

}  // namespace

double gauss_kronrod_15(const RealFn& f, double a, double b, double* err) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double fc = f(c);
  double k15 = kWgk[7] * fc;
  double g7 = kWg[3] * fc;
  for (int i = 0; i < 7; ++i) {
    double dx = h * kXgk[i];
    double fsum = f(c - dx) + f(c + dx);
    k15 += kWgk[i] * fsum;
    if (i % 2 == 1) g7 += kWg[i / 2] * fsum;
  }
  k15 *= h;
  g7 *= h;
  if (err) {
    double d = std::abs(k15 - g7);
    *err = std::min(d, 200.0 * d * std::sqrt(std::max(d, 0.0)));
    if (*err == 0.0) *err = d;
  }
  return k15;
}

double integrate(const RealFn& f, double a, double b, const PrecisionPolicy& pol,
                 int max_intervals) {
  pol.validate();
  if (a == b) return 0.0;
  struct Piece {
    double err, a, b, val;
    bool operator<(const Piece& o) const { return err < o.err; }
  };
  double err0 = 0.0;
  double v0 = gauss_kronrod_15(f, a, b, &err0);
  std::priority_queue<Piece> q;
  q.push({err0, a, b, v0});
  double total = v0, total_err = err0;
  int used = 1;
  while (total_err > pol.rel_tol * std::abs(total) + pol.abs_tol &&
         used < max_intervals) {
    Piece p = q.top();
    q.pop();
    double mid = 0.5 * (p.a + p.b);
    double e1 = 0.0, e2 = 0.0;
    double v1 = gauss_kronrod_15(f, p.a, mid, &e1);
    double v2 = gauss_kronrod_15(f, mid, p.b, &e2);
    total += (v1 + v2) - p.val;
    total_err += (e1 + e2) - p.err;
    q.push({e1, p.a, mid, v1});
    q.push({e2, mid, p.b, v2});
    ++used;
    if (mid == p.a || mid == p.b) break;  // interval exhausted
  }
  return total;
}

double integrate_tanh_sinh(const RealFn& f, double a, double b,
                           const PrecisionPolicy& pol) {
  pol.validate();
  if (a == b) return 0.0;
  const double half = 0.5 * (b - a);
  const double pi_2 = 1.5707963267948966;
  // Work with exact distances from the nearer endpoint so that nodes
  // crowding a singular endpoint keep full precision.
  auto node = [&](double t, double& delta, double& w) {
    double u = pi_2 * std::sinh(t);  // t >= 0
    double e2u = std::exp(-2.0 * u);
    delta = half * 2.0 * e2u / (1.0 + e2u);
    double sech2 = 4.0 * e2u / ((1.0 + e2u) * (1.0 + e2u));
    w = half * pi_2 * std::cosh(t) * sech2;
  };
  double h = 1.0;
  double delta, w;
  node(0.0, delta, w);
  double sum = w * f(a + delta);  // center node (delta = half)
  double prev = 16.0 * sum;
  int stable = 0;
  for (int level = 0; level < 11; ++level) {
    // add the new nodes at spacing h (odd multiples after first level)
    double add = 0.0;
    int step = (level == 0) ? 1 : 2;
    for (int k = 1;; k += step) {
      double t = k * h;
      if (t > 6.8) break;
      node(t, delta, w);
      if (w == 0.0 || delta == 0.0) continue;
      add += w * (f(a + delta) + f(b - delta));
    }
    sum += add;
    // the rule value with spacing h is h * sum
    double val = h * sum;
    if (level > 1 &&
        std::abs(val - prev) < 0.25 * (pol.rel_tol * std::abs(val) + pol.abs_tol)) {
      if (++stable >= 2) return val;
    } else {
      stable = 0;
    }
    prev = val;
    h *= 0.5;
  }
  return 2.0 * h * sum;
}

double integrate_to_inf(const RealFn& f, double a, const PrecisionPolicy& pol) {
  auto g = [&](double t) {
    double om = 1.0 - t;
    double x = a + t / om;
    return f(x) / (om * om);
  };
  return integrate(g, 0.0, 1.0, pol);
}

double EpsilonAccelerator::push(double partial_sum) {
  if (n_ == kMax) n_ = 0;  // table full; restart from recent sums
  // table_ holds the previous anti-diagonal eps_k^{(n-1-k)}, k = 0..n-1.
  double prev[kMax];
  std::copy(table_, table_ + n_, prev);
  table_[0] = partial_sum;
  for (int k = 1; k <= n_; ++k) {
    double denom = table_[k - 1] - prev[k - 1];
    double lower = (k >= 2) ? prev[k - 2] : 0.0;
    if (std::abs(denom) < 1e-300) {
      table_[k] = (k >= 2) ? lower : partial_sum;
    } else {
      table_[k] = lower + 1.0 / denom;
    }
  }
  ++n_;
  // even columns carry the sequence estimates
  int top = n_ - 1;
  estimate_ = (top % 2 == 0) ? table_[top] : table_[top - 1];
  return estimate_;
}

OscillatoryResult bessel_oscillatory_integral(const RealFn& g, double alpha,
                                              double omega,
                                              const PrecisionPolicy& pol) {
  pol.validate();
  OscillatoryResult out;
  if (omega < 0.0) throw DomainError("bessel_oscillatory_integral: omega >= 0");
  if (omega == 0.0) {
    if (alpha == 0.0) {
      out.value = integrate_to_inf(g, 0.0, pol);
    } else if (alpha > 0.0) {
      out.value = 0.0;
    } else {
      throw DomainError("bessel_oscillatory_integral: J_alpha(0) singular for alpha < 0");
    }
    return out;
  }
  auto f = [&](double x) { return g(x) * bessel_j(alpha, omega * x, pol); };

  // Panels between consecutive zeros of J_alpha(omega x); the opening
  // panel gets a full adaptive pass since g may have structure there.
  PrecisionPolicy panel_pol = pol;
  panel_pol.abs_tol = std::max(pol.abs_tol, 1e-307);
  const int max_panels = std::max(256, pol.max_terms);

  double z_prev = 0.0;
  double z1 = bessel_j_zero(alpha, 1) / omega;
  double sum = integrate(f, 0.0, z1, panel_pol, 2000);
  z_prev = z1;
  out.panels = 1;

  EpsilonAccelerator eps;
  double eps_prev = 0.0;
  int eps_stable = 0;
  int small_panels = 0;
  int sign_alternations = 0;
  double last_u = 0.0;
  double scale = std::abs(sum);

  for (int m = 2; m <= max_panels; ++m) {
    double z = bessel_j_zero(alpha, m) / omega;
    double perr = 0.0;
    double u = gauss_kronrod_15(f, z_prev, z, &perr);
    if (perr > 1e-3 * (std::abs(u) + pol.abs_tol) && perr > 1e-14 * scale) {
      u = integrate(f, z_prev, z, panel_pol, 200);
    }
    sum += u;
    z_prev = z;
    ++out.panels;
    scale = std::max(scale, std::abs(sum));

    // plain convergence: integrand has genuinely decayed
    if (std::abs(u) < pol.rel_tol * scale + pol.abs_tol) {
      if (++small_panels >= 3) {
        out.value = sum;
        return out;
      }
    } else {
      small_panels = 0;
    }

    // acceleration once the panel sums alternate in sign
    if (m >= 3 && last_u != 0.0 && u * last_u < 0.0)
      ++sign_alternations;
    else if (u * last_u > 0.0)
      sign_alternations = 0;
    last_u = u;

    if (sign_alternations >= 3) {
      double est = eps.push(sum);
      if (eps.count() >= 4) {
        if (std::abs(est - eps_prev) < pol.rel_tol * std::abs(est) + pol.abs_tol) {
          if (++eps_stable >= 2) {
            out.value = est;
            out.accelerated = true;
            return out;
          }
        } else {
          eps_stable = 0;
        }
      }
      eps_prev = est;
    }
  }
  out.tail_truncated = true;
  out.value = (eps.count() >= 6) ? eps.estimate() : sum;
  out.accelerated = eps.count() >= 6;
  return out;
}

}  // namespace levyfp
