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

#include "levyfp/mellin.hpp"

#include <cmath>
#include <sstream>

#include "levyfp/parallel.hpp"
#include "levyfp/specfun.hpp"

namespace levyfp {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kLog2 = 0.69314718055994530941723212145818;

bool near_gamma_pole(Complex w) {
  return std::abs(w.imag()) < detail::kPoleGuard &&
         detail::pole_distance(w.real()) < detail::kPoleGuard;
}

void require_off_pole(Complex w, const char* factor) {
  if (near_gamma_pole(w)) {
    std::ostringstream os;
    os << "Gamma factor " << factor << " evaluated within 1e-6 of a pole (arg = "
       << w.real() << " + " << w.imag() << "i)";
    throw PoleError(os.str());
  }
}

}  // namespace

VerticalLine VerticalLine::symmetric(double sigma, double lambda_max, int count) {
  if (count < 3 || !(lambda_max > 0.0))
    throw DomainError("VerticalLine::symmetric: invalid grid");
  VerticalLine line;
  line.sigma = sigma;
  line.lambda.resize(count);
  for (int i = 0; i < count; ++i)
    line.lambda[i] = -lambda_max + 2.0 * lambda_max * i / (count - 1);
  return line;
}

void VerticalLine::validate() const {
  if (lambda.empty()) throw DomainError("VerticalLine: empty grid");
  for (std::size_t i = 1; i < lambda.size(); ++i)
    if (!(lambda[i] > lambda[i - 1]))
      throw DomainError("VerticalLine: lambda grid must be strictly increasing");
}

double VerticalLine::spacing() const {
  return (lambda.back() - lambda.front()) / (lambda.size() - 1);
}

Complex theta_symbol(const Params& p, Complex z) {
  const double n = p.n, s = p.s;
  Complex a1 = 0.5 * z;
  Complex a2 = 0.5 * (n + 2.0 * s - z);
  Complex b1 = 0.5 * (n - z);
  Complex b2 = 0.5 * (z - 2.0 * s);
  require_off_pole(a1, "Gamma(z/2)");
  require_off_pole(a2, "Gamma((n+2s-z)/2)");
  // poles of the denominator factors are zeros of Theta
  if (near_gamma_pole(b1) || near_gamma_pole(b2)) return Complex(0.0, 0.0);
  return std::exp(2.0 * s * kLog2 + log_gamma(a1) + log_gamma(a2) -
                  log_gamma(b1) - log_gamma(b2));
}

Complex lambda_multiplier(const Params& p, Complex z) {
  const double n = p.n, s = p.s;
  Complex a1 = 0.5 * z;
  Complex a2 = (n - z) / (2.0 * s);
  Complex b1 = 0.5 * (n - z);
  Complex b2 = 0.5 * n - 0.5 * n / s + z / (2.0 * s);
  require_off_pole(a1, "Gamma(z/2)");
  require_off_pole(a2, "Gamma((n-z)/(2s))");
  if (near_gamma_pole(b1) || near_gamma_pole(b2)) return Complex(0.0, 0.0);
  return std::exp((z - z / s) * kLog2 + log_gamma(a1) + log_gamma(a2) -
                  log_gamma(b1) - log_gamma(b2));
}

Complex lambda_star_multiplier(const Params& p, Complex z) {
  const double n = p.n, s = p.s;
  Complex a1 = 0.5 * z;
  Complex a2 = 0.5 * n - z / (2.0 * s);
  Complex b1 = 0.5 * (n - z);
  Complex b2 = z / (2.0 * s);
  require_off_pole(a1, "Gamma(z/2)");
  require_off_pole(a2, "Gamma(n/2 - z/(2s))");
  if (near_gamma_pole(b1) || near_gamma_pole(b2)) return Complex(0.0, 0.0);
  return std::exp((z - z / s) * kLog2 + log_gamma(a1) + log_gamma(a2) -
                  log_gamma(b1) - log_gamma(b2));
}

namespace {

// The Mellin transform along Re z = sigma is a Fourier integral of the
// weighted profile w(x) = e^{sigma x} u(e^x). We tabulate w once on a
// uniform x grid whose window covers the live part of w, then evaluate
// every lambda with a trapezoid sum. With w decayed at the window ends
// the trapezoid rule is spectrally accurate, so the step only needs to
// resolve the largest requested frequency.
struct MellinWindow {
  double x_lo = 0.0;
  double h = 0.0;
  std::vector<double> w;
  // exponential tail models w(x) ~ amp e^{-rate (x - edge)} outside the
  // window; they capture the algebraic decay of the original function,
  // which no finite window can exhaust
  bool tail_hi = false, tail_lo = false;
  double hi_amp = 0.0, hi_rate = 0.0, x_hi = 0.0;
  double lo_amp = 0.0, lo_rate = 0.0;
};

MellinWindow build_window(const GridFunction& u, double sigma, double lambda_max,
                          MellinReport* rep) {
  double x_lo = std::log(u.grid().front());
  double x_hi = std::log(u.grid().back());
  auto weighted = [&](double x) -> double {
    double r = std::exp(x);
    if (!u.has_evaluator() && (r < u.grid().front() || r > u.grid().back()))
      return 0.0;
    return std::exp(sigma * x) * u(r);
  };
  double peak = 0.0;
  for (int i = 0; i <= 64; ++i) {
    double x = x_lo + (x_hi - x_lo) * i / 64.0;
    peak = std::max(peak, std::abs(weighted(x)));
  }
  MellinWindow win;
  if (peak == 0.0) {
    win.x_lo = x_lo;
    win.h = x_hi - x_lo;
    win.w = {0.0, 0.0};
    return win;
  }
  double floor = peak * 1e-17;
  if (u.has_evaluator()) {
    int guard = 0;
    while (std::abs(weighted(x_lo)) > floor && guard++ < 8) x_lo -= 0.5;
    guard = 0;
    while (std::abs(weighted(x_hi)) > floor && guard++ < 8) x_hi += 0.5;
  }

  // fit an exponential tail model where the window could not be closed
  auto fit_tail = [&](double edge, double direction, double& amp, double& rate) {
    double w0 = weighted(edge);
    if (std::abs(w0) < 1e-13 * peak) return false;
    double w1 = weighted(edge - direction * 0.5);
    double w2 = weighted(edge - direction * 1.0);
    if (w0 == 0.0 || w1 == 0.0 || w2 == 0.0) return false;
    if (w0 * w1 < 0.0 || w1 * w2 < 0.0) return false;  // oscillating, no model
    double q1 = 2.0 * std::log(std::abs(w1 / w0));
    double q2 = std::log(std::abs(w2 / w0));
    if (!(q1 > 0.0 && q2 > 0.0)) return false;                 // not decaying
    if (std::abs(q1 - q2) > 0.05 * std::max(q1, q2)) return false;  // not power-like
    amp = w0;
    rate = q1;
    return true;
  };
  win.tail_hi = fit_tail(x_hi, +1.0, win.hi_amp, win.hi_rate);
  win.tail_lo = fit_tail(x_lo, -1.0, win.lo_amp, win.lo_rate);
  if (rep) {
    bool hi_open = std::abs(weighted(x_hi)) > 1e-8 * peak && !win.tail_hi;
    bool lo_open = std::abs(weighted(x_lo)) > 1e-8 * peak && !win.tail_lo;
    rep->tail_not_decayed = hi_open || lo_open;
  }

  // 10 points per period of the fastest oscillation, and never coarser
  // than the sampling of the input itself
  double h = std::min(0.02, 0.62 / std::max(1.0, lambda_max));
  std::size_t count = static_cast<std::size_t>((x_hi - x_lo) / h) + 2;
  win.x_lo = x_lo;
  win.x_hi = x_lo + h * static_cast<double>(count - 1);
  win.h = h;
  win.w.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    win.w[i] = weighted(win.x_lo + win.h * static_cast<double>(i));
  if (win.tail_hi) win.hi_amp = win.w.back();
  if (win.tail_lo) win.lo_amp = win.w.front();
  return win;
}

Complex window_fourier(const MellinWindow& win, double lambda) {
  double re = 0.0, im = 0.0;
  double c0 = std::cos(lambda * win.x_lo), s0 = std::sin(lambda * win.x_lo);
  double ch = std::cos(lambda * win.h), sh = std::sin(lambda * win.h);
  for (std::size_t i = 0; i < win.w.size(); ++i) {
    re += win.w[i] * c0;
    im += win.w[i] * s0;
    // rotate the phase by lambda h
    double c1 = c0 * ch - s0 * sh;
    s0 = s0 * ch + c0 * sh;
    c0 = c1;
  }
  double xe = win.x_hi;
  re -= 0.5 * (win.w.front() * std::cos(lambda * win.x_lo) +
               win.w.back() * std::cos(lambda * xe));
  im -= 0.5 * (win.w.front() * std::sin(lambda * win.x_lo) +
               win.w.back() * std::sin(lambda * xe));
  Complex acc(re * win.h, im * win.h);
  if (win.tail_hi) {
    // \int_{x_hi}^inf amp e^{-q (x-x_hi)} e^{i lam x} dx
    Complex phase(std::cos(lambda * xe), std::sin(lambda * xe));
    acc += win.hi_amp * phase / Complex(win.hi_rate, -lambda);
  }
  if (win.tail_lo) {
    Complex phase(std::cos(lambda * win.x_lo), std::sin(lambda * win.x_lo));
    acc += win.lo_amp * phase / Complex(win.lo_rate, lambda);
  }
  return acc;
}

}  // namespace

Complex mellin_transform_point(const GridFunction& u, Complex z,
                               const PrecisionPolicy& pol, MellinReport* rep) {
  (void)pol;
  MellinWindow win = build_window(u, z.real(), std::abs(z.imag()), rep);
  return window_fourier(win, z.imag());
}

MellinLineSamples mellin_transform_numeric(const GridFunction& u,
                                           const VerticalLine& line,
                                           const PrecisionPolicy& pol,
                                           MellinReport* rep) {
  (void)pol;
  line.validate();
  double lmax = std::max(std::abs(line.lambda.front()), std::abs(line.lambda.back()));
  MellinWindow win = build_window(u, line.sigma, lmax, rep);
  MellinLineSamples out;
  out.line = line;
  out.values.resize(line.lambda.size());
  parallel_for(line.lambda.size(), [&](std::size_t i) {
    out.values[i] = window_fourier(win, line.lambda[i]);
  });
  return out;
}

RadialFunction inverse_mellin_numeric(const MellinLineSamples& samples,
                                      const RadialGrid& r_grid, int dim,
                                      MellinReport* rep) {
  samples.line.validate();
  const auto& lam = samples.line.lambda;
  const auto& val = samples.values;
  if (val.size() != lam.size())
    throw DomainError("inverse_mellin_numeric: samples/line size mismatch");
  double vmax = 0.0;
  for (const auto& v : val) vmax = std::max(vmax, std::abs(v));
  double edge = std::max(std::abs(val.front()), std::abs(val.back()));
  if (vmax > 0.0 && edge > 1e-4 * vmax)
    throw ConvergenceError(
        "inverse_mellin_numeric: line samples have not decayed at the grid ends");
  // aliasing check: points per oscillation of r^{-i lambda} at the extreme r
  double max_logr = std::max(std::abs(std::log(r_grid.front())),
                             std::abs(std::log(r_grid.back())));
  double dl = samples.line.spacing();
  bool aliasing = dl * max_logr > 1.0;
  if (rep) rep->aliasing_risk = aliasing;

  const double sigma = samples.line.sigma;
  std::vector<double> out(r_grid.size());
  std::vector<double> imres(r_grid.size());
  parallel_for(r_grid.size(), [&](std::size_t i) {
    double r = r_grid[i];
    double lr = std::log(r);
    Complex acc(0.0, 0.0);
    for (std::size_t m = 0; m < lam.size(); ++m) {
      double wgt = (m == 0 || m + 1 == lam.size()) ? 0.5 : 1.0;
      double hm = (m + 1 < lam.size()) ? (lam[m + 1] - lam[m]) : (lam[m] - lam[m - 1]);
      // phase r^{-sigma - i lambda}
      Complex ph = std::exp(Complex(-sigma * lr, -lam[m] * lr));
      acc += wgt * hm * ph * val[m];
    }
    acc /= (2.0 * kPi);
    out[i] = acc.real();
    imres[i] = std::abs(acc.imag());
  });
  if (rep) {
    double mx = 0.0, sc = 0.0;
    for (std::size_t i = 0; i < out.size(); ++i) {
      mx = std::max(mx, imres[i]);
      sc = std::max(sc, std::abs(out[i]));
    }
    rep->imag_residual = (sc > 0.0) ? mx / sc : mx;
  }
  return RadialFunction(r_grid, std::move(out), dim);
}

double residue_inverse_I(double sigma, double nu, double b, double rho,
                         const PrecisionPolicy& pol) {
  if (!(rho > 0.0)) throw DomainError("residue_inverse_I: rho > 0 required");
  if (detail::pole_distance(sigma) < detail::kPoleGuard)
    throw DomainError("residue_inverse_I: sigma is a non-positive integer");
  if (detail::pole_distance(nu + b) < detail::kPoleGuard)
    throw DomainError("residue_inverse_I: nu + b is a non-positive integer");
  if (detail::pole_distance(nu + b - sigma) < detail::kPoleGuard)
    throw DomainError("residue_inverse_I: nu + b - sigma is a non-positive integer");

  double total = gamma_ratio(nu + b, b) * kummer_m(nu + b, b, -rho, pol);

  // poles of Gamma(z) to the right of the contour (sigma < 0)
  int jmax = static_cast<int>(std::floor(-sigma));
  double fj = 1.0;  // (-1)^j / j! * rho^j
  for (int j = 0; j <= jmax; ++j) {
    if (j > 0) fj *= -rho / j;
    total -= gamma_ratio(nu + b + j, b + j) * fj;
  }

  // poles of Gamma(nu+b-z) to the left of the contour; their residues
  // carry + [sin(pi nu)/pi] G(nu+1+l) G(nu+b+l) / l! (checked against the
  // vertical-line quadrature)
  int lmax = static_cast<int>(std::floor(-nu - b + sigma));
  if (lmax >= 0) {
    double sp = std::sin(kPi * nu) / kPi;
    double lfact = 0.0;
    double lrho = std::log(rho);
    for (int l = 0; l <= lmax; ++l) {
      if (l > 0) lfact += std::log(static_cast<double>(l));
      SignedLog g1 = signed_log_gamma_real(nu + 1.0 + l);
      SignedLog g2 = signed_log_gamma_real(nu + b + l);
      if (g1.sign == 0 || g2.sign == 0)
        throw PoleError("residue_inverse_I: residue factor at a Gamma pole");
      double mag = std::exp(g1.log_abs + g2.log_abs - lfact + (-nu - b - l) * lrho);
      total += sp * g1.sign * g2.sign * mag;
    }
  }
  return total;
}

double contour_inverse_I(double sigma, double nu, double b, double rho,
                         double lambda_max, int count) {
  // trapezoid along z = sigma + i lambda of rho^{-z} G(nu+b-z) G(z) / G(b-z)
  double h = 2.0 * lambda_max / (count - 1);
  double lrho = std::log(rho);
  double acc_re = 0.0;
  for (int m = 0; m < count; ++m) {
    double lam = -lambda_max + m * h;
    Complex z(sigma, lam);
    Complex lg = log_gamma(nu + b - z) + log_gamma(z) - log_gamma(b - z) - z * lrho;
    Complex f = std::exp(lg);
    double w = (m == 0 || m == count - 1) ? 0.5 : 1.0;
    acc_re += w * f.real();
  }
  return acc_re * h / (2.0 * kPi);
}

}  // namespace levyfp
