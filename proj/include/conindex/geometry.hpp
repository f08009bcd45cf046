#pragma once

#include <string>

namespace conindex {

// Gamma at a positive half-integer argument k/2, from exact factorials and sqrt(pi).
double gamma_half_integer(int k);

struct SphereConstants {
  int d = 0;
  double area = 0.0;         // A_d, d-dimensional measure of the unit S^d
  double ball_volume = 0.0;  // omega_d, volume of the unit d-ball
};

// A_d = 2 pi^{(d+1)/2} / Gamma((d+1)/2),  omega_d = pi^{d/2} / Gamma(d/2 + 1).
SphereConstants sphere_constants(int d);
double sphere_area(int d);

// Area of the Clifford torus S^1(1/sqrt2) x S^1(1/sqrt2), i.e. 2 pi^2.
double clifford_torus_area();

// Vertex density of the cone over a link of the given (n-1)-area: area / A_{n-1}.
// By monotonicity it also bounds the density at any point of a stationary
// varifold in the sphere with that mass.
double density_bound(double link_area, int n);

// Non-regular mod 2 cyclic 3-dimensional cones have density at least this.
double irregular_density_floor();
bool is_strongly_isolated_compatible(double density);

struct AreaThresholds {
  double football_area = 0.0;          // pi^3
  double football_area_printed = 0.0;  // value quoted in the literature, 31.00063
  bool football_print_discrepancy = false;
  double threshold = 0.0;              // 4 pi^2
  double threshold_printed = 0.0;      // 39.47842
  double two_A3 = 0.0;                 // 2 A_3
  bool football_below_threshold = false;
  bool threshold_equals_two_A3 = false;
  double football_density = 0.0;       // pi^3 / A_3
  double pole_density = 0.0;           // density of the Clifford cone
};

AreaThresholds area_thresholds();

}  // namespace conindex
