#include <doctest.h>

#include <cmath>
#include <limits>

#include "conindex/asymptotic_rate.hpp"
#include "conindex/oscillatory.hpp"
#include "conindex/radial_ode.hpp"
#include "oracles.hpp"

using namespace conindex;

TEST_CASE("power solution r^1 for mu = 2, n = 3") {
  const auto tr = radial_ode_solve(2.0, 3, {1.0, 0.01}, {1.0, 1.0});
  CHECK(tr.r.back() == 0.01);
  for (std::size_t i = 0; i < tr.r.size(); ++i) {
    CHECK(std::abs(tr.f[i] - tr.r[i]) <= 1e-8 * tr.r[i]);
    CHECK(std::abs(tr.df[i] - 1.0) <= 1e-8);
  }
}

TEST_CASE("both power roots over two decades") {
  for (const double g : {1.0, -2.0, 0.0, -1.0, 2.0, 0.7}) {
    const double mu = g * g + g;  // n = 3
    const auto tr = radial_ode_solve(mu, 3, {1.0, 0.01}, {1.0, g});
    double worst = 0.0;
    for (std::size_t i = 0; i < tr.r.size(); ++i) {
      worst = std::max(worst, std::abs(tr.f[i] / std::pow(tr.r[i], g) - 1.0));
    }
    CHECK(worst < 1e-8);
  }
}

TEST_CASE("oscillatory solution r^{-1/2} cos") {
  const double alpha = std::sqrt(7.0) / 2.0, phi = 0.3;
  auto f = [&](double r) { return std::pow(r, -0.5) * std::cos(alpha * std::log(r) + phi); };
  auto df = [&](double r) {
    return std::pow(r, -1.5) * (-0.5 * std::cos(alpha * std::log(r) + phi) - alpha * std::sin(alpha * std::log(r) + phi));
  };
  const auto tr = radial_ode_solve(-2.0, 3, {1.0, 0.01}, {f(1.0), df(1.0)});
  for (std::size_t i = 0; i < tr.r.size(); ++i) {
    CHECK(std::abs(tr.f[i] - f(tr.r[i])) <= 1e-8 * std::pow(tr.r[i], -0.5));
  }
}

TEST_CASE("property: random Euler problems match the exact solution") {
  oracle::Rng rng(51);
  for (int i = 0; i < 200; ++i) {
    const int n = rng.integer(2, 7);
    const double mu = rng.uniform(-10.0, 15.0);
    const double r0 = rng.log_uniform(0.01, 1.0), r1 = rng.log_uniform(0.01, 1.0);
    const double f0 = rng.normal(), g0 = rng.normal();
    const auto tr = radial_ode_solve(mu, n, {r0, r1}, {f0, g0});
    double scale = 0.0;
    std::vector<double> exact;
    for (const double r : tr.r) {
      exact.push_back(oracle::euler_exact(mu, n, std::log(r0), f0, g0 * r0, std::log(r)));
      scale = std::max(scale, std::abs(exact.back()));
    }
    for (std::size_t k = 0; k < tr.r.size(); ++k) CHECK(std::abs(tr.f[k] - exact[k]) <= 1e-8 * scale);
  }
}

TEST_CASE("ode edge cases") {
  const auto z = radial_ode_solve(3.0, 4, {1.0, 0.01}, {0.0, 0.0});
  for (const double v : z.f) CHECK(v == 0.0);
  CHECK_THROWS(radial_ode_solve(1.0, 3, {1.0, 0.0}, {1.0, 0.0}));
  CHECK_THROWS(radial_ode_solve(1.0, 3, {-1.0, 1.0}, {1.0, 0.0}));
  const auto same = radial_ode_solve(1.0, 3, {0.5, 0.5}, {2.0, 1.0});
  CHECK(same.r.size() == 1);
}

namespace {

// annular integral over A(s, 2s) of |v|^2 rho^{-n} for v = rho^g on an n-cone (unit link)
std::vector<std::pair<double, double>> power_samples(double g, double c, int count, double ratio) {
  std::vector<std::pair<double, double>> out;
  double s = 1.0;
  for (int k = 0; k < count; ++k, s *= ratio) {
    out.emplace_back(s, c * c * oracle::integrate([&](double x) { return std::exp(2 * g * x); }, std::log(s), std::log(2 * s)));
  }
  return out;
}

}  // namespace

TEST_CASE("rate of pure power data") {
  for (const double g : {0.7, -0.3, 2.0, -1.5}) {
    const auto s = power_samples(g, 1.0, 12, 0.7);
    CHECK(estimate_asymptotic_rate(s, 3) == doctest::Approx(g).epsilon(1e-10));
    const auto scaled = power_samples(g, 13.0, 12, 0.7);
    CHECK(estimate_asymptotic_rate(scaled, 3) == doctest::Approx(estimate_asymptotic_rate(s, 3)).epsilon(1e-12));
  }
}

TEST_CASE("rate of an oscillatory mode uses the envelope") {
  // v = rho^{-1/2} cos(alpha log rho + theta): annular integral is I_2(s) with beta = -1/2
  const double alpha = std::sqrt(7.0) / 2.0;
  std::vector<std::pair<double, double>> s;
  double x = 1.0;
  for (int k = 0; k < 80; ++k, x *= 0.88) {
    const double v = oracle::integrate(
        [&](double t) {
          const double c = std::cos(alpha * t + 0.4);
          return c * c * std::exp(-t);
        },
        std::log(x), std::log(2 * x), 1e-13, 0.0, 4);
    s.emplace_back(x, v);
  }
  const auto fit = fit_asymptotic_rate(s, 3);
  CHECK(fit.rate == doctest::Approx(-0.5).epsilon(0.02 / 0.5));
  CHECK(std::abs(fit.rate + 0.5) < 0.02);
}

TEST_CASE("rate input validation") {
  CHECK(std::isinf(estimate_asymptotic_rate({{1.0, 0.0}, {0.5, 0.0}, {0.25, 0.0}, {0.125, 0.0}}, 3)));
  CHECK_THROWS(estimate_asymptotic_rate({{1.0, 1.0}, {0.5, 1.0}, {0.25, 1.0}}, 3));
  CHECK_THROWS(estimate_asymptotic_rate({{1.0, 1.0}, {0.5, 1.0}, {0.5, 1.0}, {0.1, 1.0}}, 3));
  CHECK_THROWS(estimate_asymptotic_rate({{1.0, 1.0}, {2.0, 1.0}, {0.5, 1.0}, {0.1, 1.0}}, 3));
}
