#include "conindex/radial_ode.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace conindex {

std::size_t radial_step_count(double mu, int n, double t_span, double rel_accuracy) {
  // RK4 keeps the eigenvectors of the linear system; per step the growth factor
  // of an eigenmode e^{z t} is off by about (z h)^5 / 120. Over |T| / h steps the
  // relative error is |T| |z|^5 h^4 / 120.
  const double h2 = (n - 2) / 2.0;
  const std::complex<double> disc = std::sqrt(std::complex<double>(h2 * h2 + mu, 0.0));
  const double rho = std::max({std::abs(-h2 + disc), std::abs(-h2 - disc), 1e-3});
  const double T = std::max(std::abs(t_span), 1e-12);
  const double h = std::min(0.25 / rho, std::pow(120.0 * rel_accuracy * 0.1 / (T * std::pow(rho, 5)), 0.25));
  return std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(T / h)));
}

RadialTrajectory radial_ode_solve(double mu, int n, std::pair<double, double> r_span, std::pair<double, double> initial,
                                  double rel_accuracy) {
  const auto [r0, r1] = r_span;
  if (!(r0 > 0.0) || !(r1 > 0.0)) throw std::invalid_argument("radial_ode_solve: the span must not reach r = 0");
  if (!std::isfinite(r0) || !std::isfinite(r1) || !std::isfinite(mu)) {
    throw std::invalid_argument("radial_ode_solve: non-finite input");
  }
  if (n < 2) throw std::invalid_argument("radial_ode_solve: n must be >= 2");
  if (!(rel_accuracy > 0.0)) throw std::invalid_argument("radial_ode_solve: accuracy must be positive");

  const double t0 = std::log(r0);
  const double T = std::log(r1) - t0;
  const std::size_t steps = r0 == r1 ? 0 : radial_step_count(mu, n, T, rel_accuracy);
  const double dt = steps == 0 ? 0.0 : T / static_cast<double>(steps);
  const double damp = n - 2.0;

  // state (f, g = f_t)
  auto rhs = [&](double f, double g) { return std::pair{g, mu * f - damp * g}; };

  RadialTrajectory out;
  out.steps = steps;
  out.step = std::abs(dt);
  out.r.reserve(steps + 1);
  out.f.reserve(steps + 1);
  out.df.reserve(steps + 1);

  double f = initial.first;
  double g = initial.second * r0;
  out.r.push_back(r0);
  out.f.push_back(f);
  out.df.push_back(initial.second);
  auto record = [&](std::size_t k) {
    const double r = k == steps ? r1 : std::exp(t0 + dt * static_cast<double>(k));
    out.r.push_back(r);
    out.f.push_back(f);
    out.df.push_back(g / r);
  };

  // With well separated roots each characteristic mode is stepped on its own.
  // RK4 applied to the coupled system is the same map, but rounding would then
  // feed the mode that grows along the integration direction, which can outrun
  // the mode carried by the data by many orders of magnitude.
  const std::complex<double> disc = std::sqrt(std::complex<double>(damp * damp / 4.0 + mu, 0.0));
  const std::complex<double> zp = -damp / 2.0 + disc, zm = -damp / 2.0 - disc;
  if (std::abs(zp - zm) > 1e-2) {
    auto rk4_factor = [&](std::complex<double> z) {
      const std::complex<double> x = z * dt;
      return 1.0 + x * (1.0 + x * (0.5 + x * (1.0 / 6.0 + x / 24.0)));
    };
    const std::complex<double> gp = rk4_factor(zp), gm = rk4_factor(zm);
    std::complex<double> a = (g - zm * f) / (zp - zm), b = (zp * f - g) / (zp - zm);
    for (std::size_t k = 1; k <= steps; ++k) {
      a *= gp;
      b *= gm;
      f = (a + b).real();
      g = (zp * a + zm * b).real();
      record(k);
    }
    return out;
  }

  for (std::size_t k = 1; k <= steps; ++k) {
    const auto [k1f, k1g] = rhs(f, g);
    const auto [k2f, k2g] = rhs(f + 0.5 * dt * k1f, g + 0.5 * dt * k1g);
    const auto [k3f, k3g] = rhs(f + 0.5 * dt * k2f, g + 0.5 * dt * k2g);
    const auto [k4f, k4g] = rhs(f + dt * k3f, g + dt * k3g);
    f += dt / 6.0 * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
    g += dt / 6.0 * (k1g + 2.0 * k2g + 2.0 * k3g + k4g);
    record(k);
  }
  return out;
}

}  // namespace conindex
