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

#include "levyfp/hankel.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <thread>
#include <vector>

#include "levyfp/parallel.hpp"
#include "levyfp/specfun.hpp"

namespace levyfp {

int worker_count() {
  if (const char* env = std::getenv("LEVYFP_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body) {
  int workers = worker_count();
  if (workers <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lk(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers - 1; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

namespace {

// Integrand value for x beyond a sampled grid is zero; inside, the
// interpolant. Functions with an attached evaluator use it everywhere.
RealFn integrand_from(const GridFunction& f) {
  if (f.has_evaluator()) return f.evaluator();
  const GridFunction* ptr = &f;
  double lo = f.grid().front(), hi = f.grid().back();
  return [ptr, lo, hi](double x) {
    if (x < lo || x > hi) return 0.0;
    return ptr->interpolate(x);
  };
}

}  // namespace

double hankel_point(const RealFn& f, const Params& p, double k,
                    const PrecisionPolicy& pol, TransformReport* rep) {
  const double alpha = p.hankel_order();
  const double half_n = 0.5 * p.n;
  auto g = [&](double x) { return std::pow(x, half_n) * f(x); };
  if (k == 0.0) {
    // J_alpha(kx) -> (kx/2)^alpha / Gamma(alpha+1) makes the prefactor finite:
    // F f(0) = 2^{-alpha}/Gamma(alpha+1) * \int x^{n-1} f(x) dx.
    double mass = integrate_to_inf([&](double x) { return std::pow(x, p.n - 1.0) * f(x); }, 0.0, pol);
    return std::pow(2.0, -alpha) / std::tgamma(alpha + 1.0) * mass;
  }
  OscillatoryResult r = bessel_oscillatory_integral(g, alpha, k, pol);
  if (rep) {
    if (r.tail_truncated) rep->quadrature_truncated = true;
    if (r.panels > rep->max_panels) rep->max_panels = r.panels;
  }
  return std::pow(k, 0.5 * (2.0 - p.n)) * r.value;
}

namespace {

// Shared body of the forward/inverse transforms (the kernel is symmetric).
std::vector<double> transform_values(const GridFunction& in,
                                     const RadialGrid& out_grid, const Params& p,
                                     const PrecisionPolicy& pol,
                                     TransformReport* rep) {
  RealFn f = integrand_from(in);
  // decay check at the far end of a sampled input
  if (!in.has_evaluator()) {
    double edge = std::abs(in.values().back()) *
                  std::pow(in.grid().back(), 0.5 * p.n);
    double scale = 0.0;
    for (std::size_t i = 0; i < in.values().size(); ++i)
      scale = std::max(scale, std::abs(in.values()[i]) * std::pow(in.grid()[i], 0.5 * p.n));
    if (rep && edge > 1e-10 * scale) rep->tail_truncated = true;
  }
  std::vector<double> out(out_grid.size());
  std::vector<TransformReport> reps(out_grid.size());
  parallel_for(out_grid.size(), [&](std::size_t i) {
    out[i] = hankel_point(f, p, out_grid[i], pol, &reps[i]);
  });
  if (rep) {
    for (const auto& r : reps) {
      rep->quadrature_truncated |= r.quadrature_truncated;
      rep->max_panels = std::max(rep->max_panels, r.max_panels);
    }
  }
  return out;
}

}  // namespace

SpectralRadialFunction hankel_forward(const RadialFunction& u,
                                      const RadialGrid& zeta_grid, const Params& p,
                                      const PrecisionPolicy& pol,
                                      TransformReport* rep) {
  return SpectralRadialFunction(zeta_grid, transform_values(u, zeta_grid, p, pol, rep),
                                p.n);
}

RadialFunction hankel_inverse(const SpectralRadialFunction& w,
                              const RadialGrid& r_grid, const Params& p,
                              const PrecisionPolicy& pol, TransformReport* rep) {
  RadialFunction out(r_grid, transform_values(w, r_grid, p, pol, rep), p.n);
  if (w.has_evaluator()) out.attach_spectral(w.evaluator());
  return out;
}

RadialFunction hankel_inverse_fn(const RealFn& what, const RadialGrid& r_grid,
                                 const Params& p, const PrecisionPolicy& pol,
                                 TransformReport* rep) {
  std::vector<double> vals(r_grid.size());
  std::vector<TransformReport> reps(r_grid.size());
  parallel_for(r_grid.size(), [&](std::size_t i) {
    vals[i] = hankel_point(what, p, r_grid[i], pol, &reps[i]);
  });
  if (rep) {
    for (const auto& r : reps) {
      rep->quadrature_truncated |= r.quadrature_truncated;
      rep->max_panels = std::max(rep->max_panels, r.max_panels);
    }
  }
  RadialFunction out(r_grid, std::move(vals), p.n);
  out.attach_spectral(what);
  return out;
}

}  // namespace levyfp
