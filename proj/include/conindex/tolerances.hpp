#pragma once

#include <string>
#include <string_view>

namespace conindex {

// Pinned numerical tolerances. Bump kToleranceVersion whenever a default
// changes so archived reports can be matched to the constants that made them.
inline constexpr int kToleranceVersion = 1;

struct Tolerances {
  // Discrete eigenvalues closer than cluster_rel * (1 + |lambda|) share a multiplicity.
  double eigen_cluster_rel = 1e-6;
  // |mu + (n-2)^2/4| <= log_case_rel * (1 + |mu|) selects the repeated-root branch.
  double log_case_rel = 1e-9;
  // Real parts of indicial roots closer than this are merged.
  double gamma_dedup_abs = 1e-9;
  // A weight this close to an asymptotic-spectrum entry is rejected.
  double tau_root_abs = 1e-9;
  // Residual target for the iterative eigensolver, relative to the operator norm.
  double eigen_residual_rel = 1e-9;

  // Sets a field by name; throws std::invalid_argument on unknown keys.
  void set(std::string_view key, double value);
};

inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace conindex
