#include "conindex/tolerances.hpp"

#include <stdexcept>
#include <string>

namespace conindex {

void Tolerances::set(std::string_view key, double value) {
  if (!(value > 0.0)) throw std::invalid_argument("tolerance '" + std::string(key) + "' must be positive");
  if (key == "eigen_cluster_rel") eigen_cluster_rel = value;
  else if (key == "log_case_rel") log_case_rel = value;
  else if (key == "gamma_dedup_abs") gamma_dedup_abs = value;
  else if (key == "tau_root_abs") tau_root_abs = value;
  else if (key == "eigen_residual_rel") eigen_residual_rel = value;
  else throw std::invalid_argument("unknown tolerance key '" + std::string(key) + "'");
}

}  // namespace conindex
