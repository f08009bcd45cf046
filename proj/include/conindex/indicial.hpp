#pragma once

// Indicial roots of the cone Jacobi operator.
//
// Separating variables in L_C = d_rr + (n-1)/r d_r + (L_S - (n-1))/r^2, a
// homogeneous field r^gamma phi_j exists iff
//     gamma^2 + (n-2) gamma - mu_j = 0,    mu_j = lambda_j + (n-1).
// The asymptotic spectrum collects the real parts of all such roots.

#include <complex>
#include <string_view>
#include <utility>
#include <vector>

#include "conindex/spectra.hpp"
#include "conindex/tolerances.hpp"

namespace conindex {

enum class RootCase { real_distinct, log_double, complex_pair };

std::string_view to_string(RootCase c);

struct IndicialRoot {
  double lambda = 0.0;
  double mu = 0.0;
  std::complex<double> gamma_plus;
  std::complex<double> gamma_minus;
  RootCase case_tag = RootCase::real_distinct;
  int eigen_multiplicity = 1;
  // mu was within the log-case tolerance but not exactly on the double root.
  bool near_degenerate = false;
};

// Roots for a single eigenvalue; exposed for sweeps and property tests.
IndicialRoot indicial_root(double lambda, int multiplicity, int n, const Tolerances& tol = default_tolerances());

std::vector<IndicialRoot> indicial_roots(const LinkSpectrum& spec, const Tolerances& tol = default_tolerances());

struct SpectrumEntry {
  double real_part = 0.0;
  int crossing_multiplicity = 0;
};

struct AsymptoticSpectrum {
  int n = 0;
  std::vector<SpectrumEntry> entries;  // ascending, merged within gamma_dedup_abs
  double gamma_minus_of_cone = 0.0;    // sup of entries below 1
  double gamma_star_low = 0.0;         // -(n-1)
  double gamma_star_high = 1.0;
  // Every real part in the open window (complete_below, complete_above) is listed.
  double complete_below = 0.0;
  double complete_above = 0.0;

  bool in_window(double x) const { return complete_below < x && x < complete_above; }
  // Sum of crossing multiplicities of entries in the open interval (lo, hi).
  int crossings_between(double lo, double hi) const;
};

// Completeness window implied by a cutoff: missing eigenvalues are >= cutoff,
// so their roots lie outside (gamma^-(cutoff), gamma^+(cutoff)).
std::pair<double, double> completeness_window(double cutoff, int n);

AsymptoticSpectrum asymptotic_spectrum(const std::vector<IndicialRoot>& roots, int n, double cutoff,
                                       const Tolerances& tol = default_tolerances());

// Convenience: roots + spectrum straight from a link spectrum.
AsymptoticSpectrum asymptotic_spectrum(const LinkSpectrum& spec, const Tolerances& tol = default_tolerances());

struct IndexContribution {
  bool by_eigenvalue = false;  // lambda < 0
  bool by_root = false;        // Re gamma^+ < 1
  bool consistent() const { return by_eigenvalue == by_root; }
};

// Both sides of the threshold equivalence, computed independently.
IndexContribution index_contribution_test(const IndicialRoot& root);

}  // namespace conindex
