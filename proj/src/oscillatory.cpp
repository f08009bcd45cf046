#include "conindex/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace conindex {

namespace {

using cplx = std::complex<double>;

// e^z - 1 without cancellation for small |z|.
cplx cexpm1(cplx z) {
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(y / 2.0);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

}  // namespace

OscParams OscParams::make(double alpha, double beta, double theta, double K, double r, double sigma) {
  if (!(alpha > 0.0)) throw std::invalid_argument("OscParams: alpha must be > 0");
  if (!(sigma > 0.0)) throw std::invalid_argument("OscParams: sigma must be > 0");
  if (!(std::abs(beta) >= sigma)) throw std::invalid_argument("OscParams: |beta| must be >= sigma");
  if (!(K > 2.0)) throw std::invalid_argument("OscParams: K must be > 2");
  if (!(r > 0.0)) throw std::invalid_argument("OscParams: r must be > 0");
  return {alpha, beta, theta, K, r, sigma};
}

double osc_integral_raw(double alpha, double beta, double theta, double K, double r) {
  const double t0 = std::log(r);
  const double kp = std::log(K);
  // cos^2(a u + th) e^{2 b u} = (1/2) Re[ e^{2 b u} + e^{2i th} e^{(2b + 2ia) u} ]
  const double smooth = beta == 0.0 ? kp : std::exp(2.0 * beta * t0) * std::expm1(2.0 * beta * kp) / (2.0 * beta);
  const cplx b2(2.0 * beta, 2.0 * alpha);
  const cplx wave = std::polar(1.0, 2.0 * theta) * std::exp(b2 * t0) * cexpm1(b2 * kp) / b2;
  return 0.5 * (smooth + wave.real());
}

double osc_integral(const OscParams& p) { return osc_integral_raw(p.alpha, p.beta, p.theta, p.K, p.r); }

OscSecondDifference osc_second_difference_raw(double alpha, double beta, double theta, double K, double r) {
  if (beta == 0.0) throw std::invalid_argument("osc_second_difference: beta must be nonzero");
  const double bp = 2.0 * beta;
  const double ap = 2.0 * alpha;
  const double t0 = std::log(r);
  const double kp = std::log(K);
  const cplx bpp(bp, ap);

  // The three annuli telescope into (e^{b K'} - 1)^3 factors; q is the ratio of
  // the oscillating factor to the smooth one and stays bounded for any K.
  const double e1 = std::expm1(bp * kp);
  cplx q;
  if (bp > 0.0) {
    q = (std::polar(1.0, ap * kp) - std::exp(-bp * kp)) / (-std::expm1(-bp * kp));
  } else {
    q = cexpm1(bpp * kp) / e1;
  }
  const double phase = 2.0 * theta + ap * t0;
  const cplx q3 = q * q * q;

  OscSecondDifference out;
  out.normalized = 1.0 + bp * (std::polar(1.0, phase) * q3 / bpp).real();
  out.value = 0.5 * std::exp(bp * t0) * (e1 * e1 * e1 / bp) * out.normalized;
  return out;
}

OscSecondDifference osc_second_difference(const OscParams& p, std::optional<double> k0) {
  OscSecondDifference out = osc_second_difference_raw(p.alpha, p.beta, p.theta, p.K, p.r);
  out.below_k0 = k0.has_value() && p.K < *k0;
  return out;
}

double k_grid(int m) { return 2.0 * std::pow(1.05, m); }

std::vector<OscSample> k0_samples(double sigma, const K0SearchOptions& opts) {
  std::vector<double> alphas;
  for (int i = 0; i < opts.alpha_points; ++i) {
    const double t = opts.alpha_points == 1 ? 0.0 : static_cast<double>(i) / (opts.alpha_points - 1);
    alphas.push_back(std::pow(10.0, -3.0 + 6.0 * t));
  }
  std::vector<double> betas{sigma};
  for (int i = 0; i < opts.beta_points; ++i) {
    const double t = opts.beta_points == 1 ? 0.0 : static_cast<double>(i) / (opts.beta_points - 1);
    betas.push_back(sigma * std::pow(10.0 / sigma, t));
  }
  std::vector<OscSample> out;
  out.reserve(alphas.size() * betas.size() * 2 * static_cast<std::size_t>(opts.theta_points));
  // smallest |beta| and smallest alpha first: that corner fails first when K is too small
  for (const double b : betas) {
    for (const double a : alphas) {
      for (const double sign : {1.0, -1.0}) {
        for (int k = 0; k < opts.theta_points; ++k) {
          out.push_back({a, sign * b, std::numbers::pi * k / opts.theta_points});
        }
      }
    }
  }
  return out;
}

bool k0_certificate_holds(double alpha, double beta, double K) {
  const double kp = std::log(K);
  const double x = 2.0 * std::abs(beta) * kp;
  const double y = 2.0 * alpha * kp;
  const double inv_em1 = 1.0 / std::expm1(x);  // 1/(e^x - 1)
  // ratio^2 - 1 = 2 e^x (1 - cos y) / (e^x - 1)^2
  const double s = std::sin(y / 2.0);
  const double a = 4.0 * s * s * inv_em1 / (-std::expm1(-x));
  const double ratio6_minus_1 = a * (3.0 + 3.0 * a + a * a);
  const double mid = 20.0 * std::pow(std::min(y, 1.0), 2) * inv_em1;
  return ratio6_minus_1 <= mid && mid < (y * y) / (x * x);
}

K0Result find_K0(double sigma, const K0SearchOptions& opts) {
  if (!(sigma > 0.0 && sigma < 1.0)) throw std::invalid_argument("find_K0: sigma must lie in (0, 1)");
  const auto samples = k0_samples(sigma, opts);

  K0Result result;
  result.sigma = sigma;
  result.samples = samples.size();
  OscSample last_fail{};
  bool found = false;
  // m = 0 would give K = 2, which the threshold must exceed
  for (int m = 1; m <= opts.max_grid_index && !found; ++m) {
    const double K = k_grid(m);
    double worst = INFINITY;
    bool ok = true;
    for (const auto& s : samples) {
      const double v = osc_second_difference_raw(s.alpha, s.beta, s.theta, K, 1.0).normalized;
      worst = std::min(worst, v);
      if (!(v > 0.0)) {
        ok = false;
        last_fail = s;
        break;
      }
    }
    if (ok) {
      found = true;
      result.K0 = K;
      result.grid_index = m;
      result.min_normalized = worst;
    }
  }
  if (!found) {
    throw SearchExhausted("find_K0: no grid K up to " + std::to_string(k_grid(opts.max_grid_index)) +
                              " makes every sampled second difference positive",
                          last_fail);
  }

  for (int m = 1; m <= opts.max_grid_index; ++m) {
    const double K = k_grid(m);
    // the certificate ignores theta and the sign of beta
    const bool all = std::all_of(samples.begin(), samples.end(), [K](const OscSample& s) {
      return s.theta != 0.0 || s.beta < 0.0 || k0_certificate_holds(s.alpha, s.beta, K);
    });
    if (all) {
      result.certificate_K = K;
      result.certificate_index = m;
      break;
    }
  }
  return result;
}

}  // namespace conindex
