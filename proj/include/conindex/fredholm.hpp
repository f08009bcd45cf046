#pragma once

// Fredholm index bookkeeping for the Jacobi operator of a stationary varifold
// with strongly isolated singularities.
//
// On the anchored weight range (max_p gamma_-(C_p), 1) the index of
//   L : W^{m,2}_tau -> W^{m-2,2}_{tau-2}
// is -N Q - sum_p I(C_p), with I(C) = Morse index of the link minus N. The
// augmented domain adds N Q translation-like directions, so hat_index = index + N Q.
// Outside the anchored range the index is transported across indicial roots:
// each entry rho of some Gamma(C_p) crossed while raising tau lowers the index
// by its crossing multiplicity.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "conindex/indicial.hpp"
#include "conindex/spectra.hpp"
#include "conindex/tolerances.hpp"

namespace conindex {

struct ConeModel {
  LinkSpectrum link;
  AsymptoticSpectrum indicial;
  std::optional<double> link_area;
  std::optional<double> density;  // link_area / A_{n-1}

  int N() const { return link.N(); }
  int n() const { return link.n(); }
};

// Builds a cone from its link spectrum; rejects a density <= 1 when an area is given.
ConeModel make_cone(LinkSpectrum link, std::optional<double> link_area = std::nullopt,
                    const Tolerances& tol = default_tolerances());

ConeModel clifford_cone(double cutoff = 5.0);

struct MSIModel {
  int N = 0;
  int n = 0;
  std::vector<ConeModel> cones;
  double tau = 0.5;

  int Q() const { return static_cast<int>(cones.size()); }
  int augmentation_dim() const { return N * Q(); }
};

// Checks shared dimensions; throws std::invalid_argument otherwise.
MSIModel make_msi(int N, int n, std::vector<ConeModel> cones, double tau);

// The suspension of the Clifford torus: two Clifford cones in S^4.
MSIModel clifford_football(double tau = 0.5, double cutoff = 5.0);

// I(C) = morse_index(link) - N.
int effective_morse_index(const ConeModel& cone);

struct TauRange {
  double lo = 0.0;
  double hi = 1.0;
  bool smooth = false;  // no singular points
};

TauRange admissible_tau_range(const MSIModel& msi);

class WeightError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class IndexProvenance { anchored, transported };
std::string_view to_string(IndexProvenance p);

struct IndexReport {
  double tau = 0.0;
  // Component of R \ Gamma(Sigma) containing tau, clipped to the completeness windows.
  std::pair<double, double> tau_interval;
  int index = 0;
  int hat_index = 0;
  std::vector<int> per_cone_I;
  bool admissible_tau = false;
  IndexProvenance provenance = IndexProvenance::anchored;
  int N = 0;
  int Q = 0;
};

// Throws WeightError when tau sits on an asymptotic-spectrum entry or outside
// some cone's completeness window.
IndexReport fredholm_index(const MSIModel& msi, double tau, const Tolerances& tol = default_tolerances());

// index(2 - tau - n) == -index(tau).
bool duality_check(const MSIModel& msi, double tau, const Tolerances& tol = default_tolerances());

enum class Classification { smooth, generically_excluded, borderline_index_N };
std::string_view to_string(Classification c);

Classification classify_generic(const MSIModel& msi);

struct ValidatorResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Lower bounds every genuine regular cone satisfies: I >= 0; I >= 1 in
// codimension one; a connected link has Morse index >= N.
std::vector<ValidatorResult> simons_validators(const ConeModel& cone);

}  // namespace conindex
