#pragma once

// Asymptotic rate estimate from annular L^2 data.
//
// annular_l2(s) is the integral of |v|^2 rho^{-n} over the annulus A(s, 2s). A
// mode of rate g gives annular_l2 ~ s^{2g}, and the weighted integrals
// s^{-2 gamma} annular_l2(s) vanish as s -> 0 exactly when gamma < g, so the
// rate is half the log-log slope.

#include <cstddef>
#include <utility>
#include <vector>

namespace conindex {

struct RateFit {
  double rate = 0.0;          // +inf when the data vanish identically
  bool envelope = false;      // fitted through local maxima
  std::size_t points_used = 0;
};

// samples: (s, annular_l2) with s strictly decreasing, at least 4 of them.
RateFit fit_asymptotic_rate(const std::vector<std::pair<double, double>>& samples, int n);
double estimate_asymptotic_rate(const std::vector<std::pair<double, double>>& samples, int n);

}  // namespace conindex
