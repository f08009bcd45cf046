#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "conindex/discrete_operator.hpp"
#include "conindex/tolerances.hpp"

namespace conindex {

class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual) : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

using MatVec = std::function<void(std::span<const double>, std::span<double>)>;

struct FilterOptions {
  std::size_t guard_vectors = 8;  // extra subspace columns beyond `count`
  int degree = 60;                // Chebyshev filter degree per sweep
  int max_sweeps = 400;
  double residual_rel = 1e-9;     // relative to max(|lower|, |upper|)
};

struct FilteredEigenResult {
  std::vector<double> values;     // ascending
  std::vector<double> residuals;  // ||A x - theta x|| per value
  int sweeps = 0;
};

// Chebyshev-filtered subspace iteration for the `count` smallest eigenpairs of
// a symmetric operator whose spectrum lies in [lower, upper]. The start block
// is a fixed hash of (row, column), so runs are reproducible.
FilteredEigenResult chebyshev_subspace_smallest(const MatVec& apply, std::size_t dim, std::size_t count,
                                                double lower, double upper, const FilterOptions& opts = {});

// Grids up to this many unknowns are solved densely.
inline constexpr std::size_t kDenseEigenLimit = 1024;

// `count` smallest eigenvalues of the discretised operator, ascending.
std::vector<double> discrete_link_eigenvalues(const DiscreteOperator& op, std::size_t count,
                                              const Tolerances& tol = default_tolerances());

struct RichardsonEigenvalues {
  std::size_t coarse_grid = 0;
  std::size_t fine_grid = 0;
  std::vector<double> coarse;
  std::vector<double> fine;
  std::vector<double> extrapolated;  // (4 fine - coarse) / 3, for a second-order scheme at half spacing
};

// Clifford-torus operator at grid sizes g and 2g.
RichardsonEigenvalues richardson_clifford_eigenvalues(std::size_t coarse_grid, std::size_t count,
                                                      const Tolerances& tol = default_tolerances());

}  // namespace conindex
