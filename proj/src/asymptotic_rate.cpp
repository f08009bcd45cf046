#include "conindex/asymptotic_rate.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace conindex {

namespace {

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto m = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

}  // namespace

RateFit fit_asymptotic_rate(const std::vector<std::pair<double, double>>& samples, int n) {
  if (n < 2) throw std::invalid_argument("estimate_asymptotic_rate: n must be >= 2");
  if (samples.size() < 4) throw std::invalid_argument("estimate_asymptotic_rate: need at least 4 samples");
  bool all_zero = true;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto [s, a] = samples[i];
    if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("estimate_asymptotic_rate: s must be positive");
    if (i > 0 && !(s < samples[i - 1].first)) {
      throw std::invalid_argument("estimate_asymptotic_rate: s must be strictly decreasing");
    }
    if (!(a >= 0.0) || !std::isfinite(a)) throw std::invalid_argument("estimate_asymptotic_rate: annular_l2 must be >= 0");
    all_zero = all_zero && a == 0.0;
  }
  if (all_zero) return {std::numeric_limits<double>::infinity(), false, samples.size()};

  std::vector<double> x, y;
  for (const auto& [s, a] : samples) {
    if (a == 0.0) throw std::invalid_argument("estimate_asymptotic_rate: annular_l2 vanishes on part of the data only");
    x.push_back(std::log(s));
    y.push_back(std::log(a));
  }

  // Oscillating data: fit the upper envelope through the interior local maxima.
  std::vector<double> mx, my;
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (y[i] > y[i - 1] && y[i] >= y[i + 1]) {
      mx.push_back(x[i]);
      my.push_back(y[i]);
    }
  }
  RateFit fit;
  if (mx.size() >= 3) {
    fit.rate = ls_slope(mx, my) / 2.0;
    fit.envelope = true;
    fit.points_used = mx.size();
  } else {
    fit.rate = ls_slope(x, y) / 2.0;
    fit.points_used = x.size();
  }
  return fit;
}

double estimate_asymptotic_rate(const std::vector<std::pair<double, double>>& samples, int n) {
  return fit_asymptotic_rate(samples, n).rate;
}

}  // namespace conindex
