#include "conindex/growth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

namespace conindex {

namespace {

using cplx = std::complex<double>;

double half_gap(int n) { return (n - 2) / 2.0; }

// r^e (1 - K^{-e}) / e, the integral of t^{e-1} over [r/K, r]
double power_annulus(double e, double r, double L) {
  if (e == 0.0) return L;
  return std::exp(e * std::log(r)) * (-std::expm1(-e * L)) / e;
}

// (1 - K^{-e})^3 / e: the three-circle second difference of r^e (1-K^{-e})/e
double power_second_difference(double e, double L) {
  const double g = -std::expm1(-e * L);
  return g * g * g / e;
}

// log |(1 - K^{-e})^3 / e|, stable for large |e| L
double log_power_second_difference(double e, double L) {
  const double x = e * L;
  const double lg = x > 0.0 ? std::log(-std::expm1(-x)) : -x + std::log(-std::expm1(x));
  return 3.0 * lg - std::log(std::abs(e));
}

// Gram entries of the double-root mode under the third difference
// G(0) - 3G(-L) + 3G(-2L) - G(-3L), where G is the antiderivative of
// e^{ex} (A + Bx)^2. All entries share the factor `log_scale` (natural log).
struct LogForm {
  double p = 0.0, q = 0.0, s = 0.0;
  double abs_p = 0.0, abs_q = 0.0, abs_s = 0.0;
  double log_scale = 0.0;
};

LogForm log_branch_form(double e, double L) {
  static constexpr std::array<double, 4> weights{1.0, -3.0, 3.0, -1.0};
  LogForm f;
  if (std::abs(e) < 1e-12) {
    // polynomial antiderivative A^2 x + A B x^2 + B^2 x^3 / 3
    for (int k = 0; k < 4; ++k) {
      const double x = -k * L;
      const double w = weights[static_cast<std::size_t>(k)];
      f.p += w * x;
      f.q += w * x * x / 2.0;
      f.s += w * x * x * x / 3.0;
      f.abs_p += std::abs(w * x);
      f.abs_q += std::abs(w * x * x / 2.0);
      f.abs_s += std::abs(w * x * x * x / 3.0);
    }
    return f;
  }
  f.log_scale = std::max(0.0, -3.0 * e * L);
  for (int k = 0; k < 4; ++k) {
    const double x = -k * L;
    const double w = weights[static_cast<std::size_t>(k)] * std::exp(e * x - f.log_scale);
    const double cp = 1.0 / e;
    const double cq = x / e - 1.0 / (e * e);
    const double cs = x * x / e - 2.0 * x / (e * e) + 2.0 / (e * e * e);
    f.p += w * cp;
    f.q += w * cq;
    f.s += w * cs;
    f.abs_p += std::abs(w * cp);
    f.abs_q += std::abs(w * cq);
    f.abs_s += std::abs(w * cs);
  }
  return f;
}

// Integral over [log r - L, log r] of e^{ex} (A + Bx)^2.
double log_annulus(double e, double A, double B, double x1, double L) {
  const double x0 = x1 - L;
  if (std::abs(e) < 1e-12) {
    auto prim = [&](double x) { return A * A * x + A * B * x * x + B * B * x * x * x / 3.0; };
    return prim(x1) - prim(x0);
  }
  auto prim = [&](double x) {
    const double u = A + B * x;
    return std::exp(e * x) * (u * u / e - 2.0 * B * u / (e * e) + 2.0 * B * B / (e * e * e));
  };
  return prim(x1) - prim(x0);
}

void check_finite(double v, const char* where, std::size_t mode) {
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << where << ": mode " << mode << " leaves double range (exponent too large for this K and r)";
    throw std::overflow_error(os.str());
  }
}

struct ModeExponents {
  RootCase tag;
  double g_plus = 0.0;   // real roots, or the common real part
  double g_minus = 0.0;
  double alpha = 0.0;    // imaginary part for the complex pair
};

ModeExponents exponents(const GrowthMode& mode, int n, const Tolerances& tol) {
  const double h = half_gap(n);
  const double disc = h * h + mode.mu;
  ModeExponents ex{mode_case(mode, n, tol)};
  if (ex.tag == RootCase::real_distinct) {
    const double s = std::sqrt(disc);
    ex.g_minus = -h - s;
    ex.g_plus = -mode.mu / ex.g_minus;
    if (ex.g_minus == 0.0) ex.g_plus = -h + s;
  } else if (ex.tag == RootCase::log_double) {
    ex.g_plus = ex.g_minus = -h;
  } else {
    ex.g_plus = ex.g_minus = -h;
    ex.alpha = std::sqrt(-disc);
  }
  return ex;
}

}  // namespace

RootCase mode_case(const GrowthMode& mode, int n, const Tolerances& tol) {
  const double h = half_gap(n);
  const double disc = h * h + mode.mu;
  if (std::abs(disc) <= tol.log_case_rel * (1.0 + std::abs(mode.mu))) return RootCase::log_double;
  return disc > 0.0 ? RootCase::real_distinct : RootCase::complex_pair;
}

GrowthField make_growth_field(int n, std::vector<GrowthMode> modes, const Tolerances& tol) {
  if (n < 2) throw std::invalid_argument("GrowthField: n must be >= 2");
  for (std::size_t j = 0; j < modes.size(); ++j) {
    const auto& m = modes[j];
    const bool finite = std::isfinite(m.mu) && std::isfinite(m.c_plus.real()) && std::isfinite(m.c_plus.imag()) &&
                        std::isfinite(m.c_minus.real()) && std::isfinite(m.c_minus.imag());
    if (!finite) throw std::invalid_argument("GrowthField: mode " + std::to_string(j) + " is not finite");
    if (mode_case(m, n, tol) == RootCase::complex_pair) {
      if (m.c_minus != std::conj(m.c_plus)) {
        throw std::invalid_argument("GrowthField: mode " + std::to_string(j) +
                                    " has complex roots, so c_minus must equal conj(c_plus)");
      }
    } else if (m.c_plus.imag() != 0.0 || m.c_minus.imag() != 0.0) {
      throw std::invalid_argument("GrowthField: mode " + std::to_string(j) + " has real roots and needs real coefficients");
    }
  }
  return {n, std::move(modes)};
}

cplx mode_profile(const GrowthMode& mode, int n, double r, const Tolerances& tol) {
  if (!(r > 0.0)) throw std::invalid_argument("mode_profile: r must be > 0");
  const auto ex = exponents(mode, n, tol);
  const double lr = std::log(r);
  switch (ex.tag) {
    case RootCase::real_distinct:
      return mode.c_plus * std::exp(ex.g_plus * lr) + mode.c_minus * std::exp(ex.g_minus * lr);
    case RootCase::log_double:
      return std::exp(ex.g_plus * lr) * (mode.c_plus + mode.c_minus * lr);
    case RootCase::complex_pair: {
      const cplx rp = std::exp(cplx(ex.g_plus, ex.alpha) * lr);
      return mode.c_plus * rp + mode.c_minus * std::conj(rp);
    }
  }
  return 0.0;
}

GrowthParams GrowthParams::make(double gamma, double K, double sigma) {
  if (!std::isfinite(gamma)) throw std::invalid_argument("GrowthParams: gamma must be finite");
  if (!(K > 2.0) || !std::isfinite(K)) throw std::invalid_argument("GrowthParams: K must be > 2");
  if (!(sigma > 0.0 && sigma < 1.0)) throw std::invalid_argument("GrowthParams: sigma must lie in (0, 1)");
  return {gamma, K, sigma};
}

double weight_gap(const GrowthField& field, double gamma, const Tolerances& tol) {
  double gap = std::abs(gamma + half_gap(field.n));
  for (const auto& m : field.modes) {
    const auto ex = exponents(m, field.n, tol);
    gap = std::min({gap, std::abs(gamma - ex.g_plus), std::abs(gamma - ex.g_minus)});
  }
  return gap;
}

double growth_functional(const GrowthField& field, const GrowthParams& params, double r, const Tolerances& tol) {
  if (!(r > 0.0)) throw std::invalid_argument("growth_functional: r must be > 0");
  const double L = std::log(params.K);
  const double g = params.gamma;
  double total = 0.0;
  for (std::size_t j = 0; j < field.modes.size(); ++j) {
    const auto& m = field.modes[j];
    const auto ex = exponents(m, field.n, tol);
    double t = 0.0;
    switch (ex.tag) {
      case RootCase::real_distinct: {
        const double cp = m.c_plus.real();
        const double cm = m.c_minus.real();
        const double a = ex.g_plus - g;
        const double b = ex.g_minus - g;
        if (cp != 0.0) t += cp * cp * power_annulus(2.0 * a, r, L);
        if (cp != 0.0 && cm != 0.0) t += 2.0 * cp * cm * power_annulus(a + b, r, L);
        if (cm != 0.0) t += cm * cm * power_annulus(2.0 * b, r, L);
        break;
      }
      case RootCase::log_double:
        if (m.c_plus != 0.0 || m.c_minus != 0.0) {
          t = log_annulus(2.0 * (ex.g_plus - g), m.c_plus.real(), m.c_minus.real(), std::log(r), L);
        }
        break;
      case RootCase::complex_pair: {
        const double c = 2.0 * std::abs(m.c_plus);
        if (c != 0.0) t = c * c * osc_integral_raw(ex.alpha, ex.g_plus - g, std::arg(m.c_plus), params.K, r / params.K);
        break;
      }
    }
    check_finite(t, "growth_functional", j);
    total += t;
  }
  return total;
}

namespace {

void require_hypothesis(const GrowthField& field, const GrowthParams& params, const Tolerances& tol) {
  const double gap = weight_gap(field, params.gamma, tol);
  if (gap < params.sigma) {
    std::ostringstream os;
    os << "three-circle hypothesis fails: dist(gamma, roots U {-(n-2)/2}) = " << gap << " < sigma = " << params.sigma;
    throw HypothesisError(os.str());
  }
}

struct ResidualParts {
  double value = 0.0;
  double scale = 0.0;
};

ResidualParts residual_parts(const GrowthField& field, const GrowthParams& params, const Tolerances& tol) {
  const double L = std::log(params.K);
  const double g = params.gamma;
  ResidualParts out;
  for (std::size_t j = 0; j < field.modes.size(); ++j) {
    const auto& m = field.modes[j];
    const auto ex = exponents(m, field.n, tol);
    double v = 0.0;
    double s = 0.0;
    switch (ex.tag) {
      case RootCase::real_distinct: {
        const double cp = m.c_plus.real();
        const double cm = m.c_minus.real();
        const double a = ex.g_plus - g;
        const double b = ex.g_minus - g;
        const std::array<std::pair<double, double>, 3> terms{
            {{cp * cp, 2.0 * a}, {2.0 * cp * cm, a + b}, {cm * cm, 2.0 * b}}};
        for (const auto& [w, e] : terms) {
          if (w == 0.0) continue;
          v += w * power_second_difference(e, L);
          // |J(K^-2)| + 2|J(K^-1)| + |J(1)| for this term
          const double base = std::abs(w * (-std::expm1(-e * L)) / e);
          s += base * (std::exp(-2.0 * e * L) + 2.0 * std::exp(-e * L) + 1.0);
        }
        break;
      }
      case RootCase::log_double: {
        const double A = m.c_plus.real();
        const double B = m.c_minus.real();
        if (A == 0.0 && B == 0.0) break;
        const auto f = log_branch_form(2.0 * (ex.g_plus - g), L);
        const double scale = std::exp(f.log_scale);
        v = scale * (f.p * A * A + 2.0 * f.q * A * B + f.s * B * B);
        s = scale * (f.abs_p * A * A + 2.0 * f.abs_q * std::abs(A * B) + f.abs_s * B * B);
        break;
      }
      case RootCase::complex_pair: {
        const double c = 2.0 * std::abs(m.c_plus);
        if (c == 0.0) break;
        const double beta = ex.g_plus - g;
        const double theta = std::arg(m.c_plus);
        const double r = std::exp(-3.0 * L);
        v = c * c * osc_second_difference_raw(ex.alpha, beta, theta, params.K, r).value;
        s = c * c *
            (std::abs(osc_integral_raw(ex.alpha, beta, theta, params.K, r)) +
             2.0 * std::abs(osc_integral_raw(ex.alpha, beta, theta, params.K, r * params.K)) +
             std::abs(osc_integral_raw(ex.alpha, beta, theta, params.K, r * params.K * params.K)));
        break;
      }
    }
    check_finite(v, "three_circle_residual", j);
    check_finite(s, "three_circle_residual", j);
    out.value += v;
    out.scale += s;
  }
  return out;
}

}  // namespace

double three_circle_residual(const GrowthField& field, const GrowthParams& params, const Tolerances& tol) {
  require_hypothesis(field, params, tol);
  return residual_parts(field, params, tol).value;
}

double three_circle_scale(const GrowthField& field, const GrowthParams& params, const Tolerances& tol) {
  require_hypothesis(field, params, tol);
  return residual_parts(field, params, tol).scale;
}

bool real_branch_positive(double a, double b, double K) {
  const double L = std::log(K);
  // P = f(2a), Q = f(2b) > 0 always; definiteness is R^2 < P Q with R = f(a+b)
  const double lp = log_power_second_difference(2.0 * a, L);
  const double lq = log_power_second_difference(2.0 * b, L);
  const double lr = log_power_second_difference(a + b, L);
  return 2.0 * lr < lp + lq;
}

bool log_branch_positive(double e, double K) {
  const auto f = log_branch_form(e, std::log(K));
  return f.p > 0.0 && f.s > 0.0 && f.q * f.q < f.p * f.s;
}

ThreeCircleK three_circle_K(double sigma, const K0SearchOptions& opts) {
  const auto k0 = find_K0(sigma, opts);

  // roots -h +- d, weight gamma = -h + u; admissible when |u|, |u - d|, |u + d| >= sigma.
  // u -> -u swaps the roots, so u > 0 suffices.
  std::vector<std::pair<double, double>> real_samples;
  std::vector<double> ds, us;
  for (int i = 0; i < 40; ++i) ds.push_back(1e-3 * std::pow(1e4, i / 39.0));
  for (int i = 0; i < 40; ++i) us.push_back(sigma * std::pow(10.0 / sigma, i / 39.0));
  for (const double d : ds) {
    std::vector<double> cand = us;
    cand.push_back(d + sigma);
    cand.push_back(d - sigma);
    for (const double u : cand) {
      if (u >= sigma && std::abs(u - d) >= sigma && u + d >= sigma) real_samples.emplace_back(d - u, -d - u);
    }
  }
  // double root: exponent e = -2u with |u| >= sigma
  std::vector<double> log_samples;
  for (int i = 0; i < 40; ++i) {
    const double e = 2.0 * sigma * std::pow(10.0 / sigma, i / 39.0);
    log_samples.push_back(e);
    log_samples.push_back(-e);
  }

  for (int m = k0.grid_index; m <= opts.max_grid_index; ++m) {
    const double K = k_grid(m);
    const bool ok =
        std::all_of(real_samples.begin(), real_samples.end(),
                    [K](const auto& ab) { return real_branch_positive(ab.first, ab.second, K); }) &&
        std::all_of(log_samples.begin(), log_samples.end(), [K](double e) { return log_branch_positive(e, K); });
    if (ok) return {K, m, k0.grid_index};
  }
  throw SearchExhausted("three_circle_K: no grid K makes the real and double-root branches definite", {});
}

}  // namespace conindex
