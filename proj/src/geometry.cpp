#include "conindex/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conindex {

double gamma_half_integer(int k) {
  if (k <= 0) throw std::domain_error("gamma_half_integer: argument must be positive");
  if (k % 2 == 0) {
    // Gamma(m) = (m-1)!
    double f = 1.0;
    for (int i = 2; i < k / 2; ++i) f *= i;
    return f;
  }
  // Gamma(m + 1/2) = (2m)! sqrt(pi) / (4^m m!) = sqrt(pi) * prod_{i=1..m} (2i-1)/2
  const int m = (k - 1) / 2;
  double g = std::sqrt(std::numbers::pi);
  for (int i = 1; i <= m; ++i) g *= (2.0 * i - 1.0) / 2.0;
  return g;
}

SphereConstants sphere_constants(int d) {
  if (d < 0) throw std::domain_error("sphere_constants: negative dimension");
  SphereConstants c;
  c.d = d;
  c.area = 2.0 * std::pow(std::numbers::pi, (d + 1) / 2.0) / gamma_half_integer(d + 1);
  c.ball_volume = std::pow(std::numbers::pi, d / 2.0) / gamma_half_integer(d + 2);
  return c;
}

double sphere_area(int d) { return sphere_constants(d).area; }

double clifford_torus_area() {
  const double circumference = 2.0 * std::numbers::pi / std::numbers::sqrt2;
  return circumference * circumference;
}

double density_bound(double link_area, int n) {
  if (!(link_area > 0.0)) throw std::domain_error("density_bound: link area must be positive");
  if (n < 2) throw std::domain_error("density_bound: n must be >= 2");
  return link_area / sphere_area(n - 1);
}

double irregular_density_floor() { return 2.0; }

bool is_strongly_isolated_compatible(double density) { return density < irregular_density_floor(); }

AreaThresholds area_thresholds() {
  constexpr double pi = std::numbers::pi;
  AreaThresholds t;
  t.football_area = pi * pi * pi;
  t.football_area_printed = 31.00063;
  // the quoted value disagrees with pi^3 = 31.00627... in the fourth decimal
  t.football_print_discrepancy = std::abs(t.football_area - t.football_area_printed) > 5e-6;
  t.threshold = 4.0 * pi * pi;
  t.threshold_printed = 39.47842;
  t.two_A3 = 2.0 * sphere_area(3);
  t.football_below_threshold = t.football_area < t.threshold;
  t.threshold_equals_two_A3 = std::abs(t.threshold - t.two_A3) <= 1e-12 * t.threshold;
  t.football_density = t.football_area / sphere_area(3);
  t.pole_density = density_bound(clifford_torus_area(), 3);
  return t;
}

}  // namespace conindex
