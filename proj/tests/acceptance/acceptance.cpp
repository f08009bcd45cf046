// Acceptance suite: one PASS/FAIL line per criterion, with wall time.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "conindex/asymptotic_rate.hpp"
#include "conindex/kernels/kernels.hpp"
#include "conindex/eigensolver.hpp"
#include "conindex/fredholm.hpp"
#include "conindex/geometry.hpp"
#include "conindex/growth.hpp"
#include "conindex/indicial.hpp"
#include "conindex/oscillatory.hpp"
#include "conindex/radial_ode.hpp"
#include "conindex/spectra.hpp"
#include "conindex/veronese.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace conindex;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = dt < budget_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %2d %-28s %8.3f s (budget %g s)  %s%s\n", pass ? "PASS" : "FAIL", id, name, dt, budget_s,
              o.detail.c_str(), in_time ? "" : "  [over time budget]");
  std::fflush(stdout);
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

Outcome clifford_spectrum() {
  const auto spec = clifford_torus_spectrum(5.0);
  std::vector<Rational> listed;
  for (const auto& e : spec.eigenvalues()) {
    for (int i = 0; i < e.multiplicity; ++i) listed.push_back(*e.exact);
  }
  const std::vector<Rational> want{-4, -2, -2, -2, -2, 0, 0, 0, 0};
  bool ok = listed.size() >= 9 && std::equal(want.begin(), want.end(), listed.begin());
  const auto lattice = oracle::clifford_lattice_spectrum(4);
  ok = ok && lattice.at(-4) == 1 && lattice.at(-2) == 4 && lattice.at(0) == 4;
  ok = ok && morse_index(spec) == 5;
  return {ok, "lambda_1..9 = -4, -2 x4, 0 x4 (exact); morse index 5"};
}

Outcome discrete_oracle() {
  const auto r = richardson_clifford_eigenvalues(32, 9);
  const std::vector<double> exact{-4, -2, -2, -2, -2, 0, 0, 0, 0};
  double worst = 0.0, min_order = 1e300;
  for (std::size_t i = 0; i < 9; ++i) {
    worst = std::max(worst, std::abs(r.extrapolated[i] - exact[i]));
    const double ec = std::abs(r.coarse[i] - exact[i]), ef = std::abs(r.fine[i] - exact[i]);
    if (ec > 1e-12) min_order = std::min(min_order, std::log2(ec / ef));
  }
  return {worst <= 1e-3 && min_order >= 1.8,
          fmt("max |extrapolated - catalog| = %.3e", worst) + fmt(", min order %.4f", min_order)};
}

Outcome indicial_fixture() {
  const auto roots = indicial_roots(clifford_torus_spectrum(5.0));
  const double s7 = std::sqrt(7.0) / 2.0;
  double err = 0.0;
  err = std::max(err, std::abs(roots[0].gamma_plus - std::complex<double>(-0.5, s7)));
  err = std::max(err, std::abs(roots[0].gamma_minus - std::complex<double>(-0.5, -s7)));
  err = std::max(err, std::abs(roots[1].gamma_plus - 0.0));
  err = std::max(err, std::abs(roots[1].gamma_minus + 1.0));
  err = std::max(err, std::abs(roots[2].gamma_plus - 1.0));
  err = std::max(err, std::abs(roots[2].gamma_minus + 2.0));
  const bool mult = roots[1].eigen_multiplicity == 4 && roots[2].eigen_multiplicity == 4;
  const double gm = asymptotic_spectrum(clifford_torus_spectrum(5.0)).gamma_minus_of_cone;
  return {err <= 1e-12 && mult && gm == 0.0, fmt("max root error %.1e", err) + fmt(", gamma_-(C) = %g", gm)};
}

Outcome football() {
  const auto msi = clifford_football();
  const std::vector<double> taus{-1.5, -0.75, -0.25, 0.5, 1.5};
  const std::vector<int> want{10, 2, -2, -10, -18};
  std::vector<int> got;
  for (const double t : taus) got.push_back(fredholm_index(msi, t).index);
  std::vector<int> jumps;
  for (std::size_t i = 1; i < got.size(); ++i) jumps.push_back(got[i - 1] - got[i]);
  const auto at_half = fredholm_index(msi, 0.5);
  const auto at_upper = fredholm_index(msi, 1.5);
  const bool ok = got == want && jumps == std::vector<int>{8, 4, 8, 8} && at_half.hat_index == -2 &&
                  at_half.per_cone_I == std::vector<int>{1, 1} && at_upper.index == -18 &&
                  classify_generic(msi) == Classification::generically_excluded;
  std::string seq;
  for (const int v : got) seq += (seq.empty() ? "" : ", ") + std::to_string(v);
  return {ok, "index sequence (" + seq + "), hat_index " + std::to_string(at_half.hat_index) + ", I = 1 per cone"};
}

Outcome duality() {
  oracle::Rng rng(20240501);
  int checked = 0, bad = 0;
  while (checked < 1000) {
    const auto msi = gen::msi_model(rng);
    const auto tau = gen::weight(rng, msi);
    if (!tau) continue;
    ++checked;
    if (fredholm_index(msi, 2.0 - *tau - msi.n).index != -fredholm_index(msi, *tau).index) ++bad;
  }
  return {bad == 0, std::to_string(checked) + " random models, " + std::to_string(bad) + " violations"};
}

double osc_quad(double alpha, double beta, double theta, double K, double r) {
  const double a = std::log(r), b = a + std::log(K);
  const int pieces = 1 + static_cast<int>(alpha * (b - a) / std::numbers::pi);
  return oracle::integrate(
      [&](double x) {
        const double c = std::cos(alpha * x + theta);
        return c * c * std::exp(2.0 * beta * x);
      },
      a, b, 1e-13, 0.0, std::min(pieces, 4000));
}

Outcome three_circle() {
  oracle::Rng rng(6);
  // residual sign on random admissible fields
  int fields = 0, negative = 0, not_strict = 0, at_k0_negative = 0;
  for (const double sigma : {0.3, 0.5, 0.9}) {
    const auto tk = three_circle_K(sigma);
    const double K0 = find_K0(sigma).K0;
    int done = 0;
    while (done < 3334) {
      auto fc = gen::field_case(rng, sigma);
      if (!fc) continue;
      ++done;
      const auto p = GrowthParams::make(fc->gamma, tk.K, sigma);
      const double res = three_circle_residual(fc->field, p);
      const double scale = three_circle_scale(fc->field, p);
      if (res < -1e-12 * scale) ++negative;
      if (!(res > 1e-12 * scale)) ++not_strict;
      const auto p0 = GrowthParams::make(fc->gamma, K0, sigma);
      if (three_circle_residual(fc->field, p0) < -1e-12 * three_circle_scale(fc->field, p0)) ++at_k0_negative;
    }
    fields += done;
  }
  const auto zero = make_growth_field(3, {{-2.0, 0.0, 0.0}, {0.0, 0.0, 0.0}});
  const bool zero_ok = three_circle_residual(zero, GrowthParams::make(0.5, three_circle_K(0.5).K, 0.5)) == 0.0;

  // closed form against quadrature, and the cos^2 + sin^2 identity
  double worst_quad = 0.0, worst_id = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double alpha = rng.log_uniform(1e-3, 1e3);
    const double beta = (rng.coin() ? 1 : -1) * rng.uniform(0.05, 5.0);
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double K = rng.uniform(2.01, 100.0), r = rng.log_uniform(1e-2, 1e2);
    const double q = osc_quad(alpha, beta, theta, K, r);
    worst_quad = std::max(worst_quad, std::abs(osc_integral_raw(alpha, beta, theta, K, r) - q) / std::abs(q));
    const double sum = osc_integral_raw(alpha, beta, theta, K, r) +
                       osc_integral_raw(alpha, beta, theta + std::numbers::pi / 2, K, r);
    const double exact = std::pow(r, 2 * beta) * std::expm1(2 * beta * std::log(K)) / (2 * beta);
    worst_id = std::max(worst_id, std::abs(sum - exact) / exact);
  }
  const bool ok = negative == 0 && not_strict == 0 && zero_ok && worst_quad <= 1e-8 && worst_id <= 1e-12;
  return {ok, std::to_string(fields) + " fields: " + std::to_string(negative) + " negative, " +
                  std::to_string(not_strict) + " not strictly positive (at bare K0: " + std::to_string(at_k0_negative) +
                  " negative)" + fmt("; quadrature rel err %.2e", worst_quad) + fmt("; identity rel err %.2e", worst_id)};
}

Outcome k0_existence() {
  double prev = 1e300;
  bool ok = true;
  std::string detail;
  for (const double s : {0.1, 0.3, 0.5, 0.9}) {
    const auto r = find_K0(s);
    ok = ok && r.K0 > 2.0 && r.K0 <= prev;
    prev = r.K0;
    detail += fmt("K0(%.1f)", s) + fmt(" = %.4g  ", r.K0);
  }
  return {ok, detail + "(monotone non-increasing)"};
}

Outcome ode_rate() {
  double worst = 0.0;
  // n = 3 Clifford roots and a generic pair
  for (const auto& [mu, n] : std::vector<std::pair<double, int>>{{0.0, 3}, {2.0, 3}, {6.0, 3}, {3.0, 4}, {1.25, 5}}) {
    const double h = (n - 2) / 2.0;
    for (const double sign : {1.0, -1.0}) {
      const double g = -h + sign * std::sqrt(h * h + mu);
      const auto tr = radial_ode_solve(mu, n, {1.0, 0.01}, {1.0, g});
      for (std::size_t i = 0; i < tr.r.size(); ++i) worst = std::max(worst, std::abs(tr.f[i] / std::pow(tr.r[i], g) - 1.0));
    }
  }
  double worst_rate = 0.0;
  for (const double g : {0.7, -0.3, 1.0, -1.5, 2.2}) {
    std::vector<std::pair<double, double>> samples;
    double s = 1.0;
    for (int k = 0; k < 10; ++k, s *= 0.6) {
      samples.emplace_back(s, oracle::integrate([&](double x) { return std::exp(2 * g * x); }, std::log(s), std::log(2 * s)));
    }
    worst_rate = std::max(worst_rate, std::abs(estimate_asymptotic_rate(samples, 3) - g));
  }
  {
    const double alpha = std::sqrt(7.0) / 2.0;
    std::vector<std::pair<double, double>> samples;
    double s = 1.0;
    for (int k = 0; k < 80; ++k, s *= 0.88) {
      samples.emplace_back(s, oracle::integrate(
                                  [&](double x) {
                                    const double c = std::cos(alpha * x + 0.4);
                                    return c * c * std::exp(-x);
                                  },
                                  std::log(s), std::log(2 * s), 1e-13, 0.0, 4));
    }
    worst_rate = std::max(worst_rate, std::abs(estimate_asymptotic_rate(samples, 3) + 0.5));
  }
  return {worst <= 1e-8 && worst_rate <= 0.01,
          fmt("ODE max rel err %.2e", worst) + fmt(", rate max abs err %.2e", worst_rate)};
}

Outcome geometry() {
  const double pi = std::numbers::pi;
  const double d = density_bound(clifford_torus_area(), 3);
  const auto t = area_thresholds();
  const bool ok = std::abs(d - pi / 2) <= 1e-12 && std::abs(pi * pi * pi / sphere_area(3) - pi / 2) <= 1e-12 &&
                  std::abs(t.football_density - pi / 2) <= 1e-12 && std::abs(4 * pi * pi - 2 * sphere_area(3)) <= 1e-12 &&
                  t.threshold_equals_two_A3 && t.football_print_discrepancy;
  return {ok, fmt("density %.15f", d) + fmt("; pi^3 = %.5f", t.football_area) +
                  fmt(" vs printed %.5f flagged", t.football_area_printed)};
}

Outcome veronese() {
  oracle::Rng rng(10);
  double worst = 0.0;
  bool antipodal = true;
  for (const auto tag : {NormedField::R, NormedField::C, NormedField::H}) {
    const VeroneseField f{tag};
    std::vector<double> p(static_cast<std::size_t>(3 * f.m())), neg(p.size());
    for (int i = 0; i < 100000; ++i) {
      for (std::size_t k = 0; k < p.size(); ++k) {
        p[k] = rng.normal();
        neg[k] = -p[k];
      }
      const auto y = veronese_embed(f, p);
      double n2 = 0.0;
      for (const double v : y) n2 += v * v;
      worst = std::max(worst, std::abs(std::sqrt(n2) - 1.0));
      if (tag == NormedField::R) antipodal = antipodal && veronese_embed(f, neg) == y;
    }
  }
  const auto m = veronese_minimality_residual({NormedField::R}, 16);
  return {worst <= 1e-12 && antipodal && m.residual < 1e-3 && m.observed_order >= 1.8,
          fmt("containment %.1e", worst) + fmt("; R minimality %.2e", m.residual) + fmt(" order %.3f", m.observed_order) +
              (antipodal ? "; antipodal bitwise" : "; antipodal FAILED")};
}

}  // namespace

int main() {
  std::printf("SIMD backend: %s\n", std::string(kernels::backend_name(kernels::active_backend())).c_str());
  criterion(1, "clifford spectrum fixture", 1, clifford_spectrum);
  criterion(2, "discrete eigensolver oracle", 30, discrete_oracle);
  criterion(3, "indicial fixture", 1, indicial_fixture);
  criterion(4, "football index fixture", 1, football);
  criterion(5, "duality property", 10, duality);
  criterion(6, "three-circle property suite", 60, three_circle);
  criterion(7, "K0 existence", 120, k0_existence);
  criterion(8, "ODE and rate suite", 10, ode_rate);
  criterion(9, "geometry suite", 1, geometry);
  criterion(10, "veronese suite", 60, veronese);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
