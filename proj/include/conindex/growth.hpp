#pragma once

// Annular growth functional of a Jacobi field on a cone and the three-circle
// second difference.
//
// A Jacobi field is a sum of homogeneous modes v_j(r) phi_j with
//   v_j = c+ r^{g+} + c- r^{g-}           (distinct real roots)
//   v_j = c+ r^{g} + c- r^{g} log r       (double root, mu = -(n-2)^2/4)
//   v_j = 2 Re(c+ r^{g+}),  c- = conj(c+) (complex pair)
// and, with the link eigenfunctions taken L^2-orthonormal,
//   J(r) = int_{r/K}^{r} t^{-1-2 gamma} sum_j v_j(t)^2 dt.

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "conindex/indicial.hpp"
#include "conindex/oscillatory.hpp"
#include "conindex/tolerances.hpp"

namespace conindex {

struct GrowthMode {
  double mu = 0.0;
  std::complex<double> c_plus;
  std::complex<double> c_minus;
};

struct GrowthField {
  int n = 3;
  std::vector<GrowthMode> modes;
};

// Validates coefficient reality / conjugacy per branch.
GrowthField make_growth_field(int n, std::vector<GrowthMode> modes, const Tolerances& tol = default_tolerances());

RootCase mode_case(const GrowthMode& mode, int n, const Tolerances& tol = default_tolerances());

// v_j(r) as a complex number; the imaginary part is rounding noise for valid fields.
std::complex<double> mode_profile(const GrowthMode& mode, int n, double r, const Tolerances& tol = default_tolerances());

struct GrowthParams {
  double gamma = 0.0;
  double K = 10.0;   // > 2
  double sigma = 0.5;  // in (0, 1)

  static GrowthParams make(double gamma, double K, double sigma);
};

class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// dist(gamma, Re roots of the field's modes U {-(n-2)/2}).
double weight_gap(const GrowthField& field, double gamma, const Tolerances& tol = default_tolerances());

// J_K^gamma(u; r). Throws std::overflow_error when a power term leaves double range.
double growth_functional(const GrowthField& field, const GrowthParams& params, double r,
                         const Tolerances& tol = default_tolerances());

// J(K^-2) - 2 J(K^-1) + J(1), evaluated from factored per-mode forms.
// Throws HypothesisError when weight_gap < sigma.
double three_circle_residual(const GrowthField& field, const GrowthParams& params,
                             const Tolerances& tol = default_tolerances());

// Sum of the magnitudes of the individual terms of the residual; the natural
// scale against which "zero" is judged.
double three_circle_scale(const GrowthField& field, const GrowthParams& params,
                          const Tolerances& tol = default_tolerances());

struct ThreeCircleK {
  double K = 0.0;
  int grid_index = 0;
  int oscillatory_index = 0;  // find_K0 alone
};

// Smallest grid K >= K0(sigma) for which the real-root and double-root
// branches are also positive definite over a sample of admissible exponents.
ThreeCircleK three_circle_K(double sigma, const K0SearchOptions& opts = {});

// Positive-definiteness of the per-mode quadratic forms, exposed for the search and tests.
bool real_branch_positive(double a, double b, double K);
bool log_branch_positive(double e, double K);

}  // namespace conindex
