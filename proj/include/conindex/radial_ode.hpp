#pragma once

// Radial Euler equation r^2 f'' + (n-1) r f' - mu f = 0, integrated in t = log r,
// where it becomes f_tt + (n-2) f_t - mu f = 0, with classical RK4 at a fixed step.

#include <cstddef>
#include <utility>
#include <vector>

namespace conindex {

struct RadialTrajectory {
  std::vector<double> r;
  std::vector<double> f;
  std::vector<double> df;  // d f / d r
  std::size_t steps = 0;
  double step = 0.0;       // |dt|
};

// Integrates from r_span.first (where `initial` = (f, f') is imposed) to r_span.second.
// Either direction is allowed; both ends must be positive.
RadialTrajectory radial_ode_solve(double mu, int n, std::pair<double, double> r_span, std::pair<double, double> initial,
                                  double rel_accuracy = 1e-8);

// Step count used for a given span length in t and root magnitude.
std::size_t radial_step_count(double mu, int n, double t_span, double rel_accuracy);

}  // namespace conindex
