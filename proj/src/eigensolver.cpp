#include "conindex/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <Eigen/Eigenvalues>

#include "conindex/kernels/kernels.hpp"

namespace conindex {

namespace {

double hashed_unit(std::uint64_t row, std::uint64_t col) {
  std::uint64_t z = row * 0x9E3779B97F4A7C15ULL + col * 0xD1B54A32D192ED03ULL + 0x2545F4914F6CDD1DULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53 * 2.0 - 1.0;
}

std::span<const double> column(const Eigen::MatrixXd& m, Eigen::Index c) {
  return {m.col(c).data(), static_cast<std::size_t>(m.rows())};
}
std::span<double> column(Eigen::MatrixXd& m, Eigen::Index c) {
  return {m.col(c).data(), static_cast<std::size_t>(m.rows())};
}

// Modified Gram-Schmidt, applied twice. Columns that collapse are replaced by
// fresh hashed vectors so the block keeps full rank.
void orthonormalize(Eigen::MatrixXd& x, std::uint64_t salt) {
  const Eigen::Index cols = x.cols();
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (int attempt = 0; attempt < 4; ++attempt) {
      const double before = std::sqrt(kernels::dot(column(x, c), column(x, c)));
      for (int pass = 0; pass < 2; ++pass) {
        for (Eigen::Index k = 0; k < c; ++k) {
          const double proj = kernels::dot(column(x, k), column(x, c));
          kernels::axpy(-proj, column(x, k), column(x, c));
        }
      }
      const double norm = std::sqrt(kernels::dot(column(x, c), column(x, c)));
      if (norm > 1e-10 * std::max(before, 1e-300)) {
        x.col(c) /= norm;
        break;
      }
      for (Eigen::Index r = 0; r < x.rows(); ++r) {
        x(r, c) = hashed_unit(static_cast<std::uint64_t>(r), salt + static_cast<std::uint64_t>(c) + 7919u * attempt);
      }
    }
  }
}

void apply_block(const MatVec& apply, const Eigen::MatrixXd& x, Eigen::MatrixXd& out) {
  for (Eigen::Index c = 0; c < x.cols(); ++c) apply(column(x, c), column(out, c));
}

// Scaled Chebyshev filter damping [cut, upper], scaled so values near `low` stay O(1).
void chebyshev_filter(const MatVec& apply, Eigen::MatrixXd& x, int degree, double cut, double upper, double low) {
  const double e = (upper - cut) / 2.0;
  const double c = (upper + cut) / 2.0;
  double sigma = e / (low - c);
  const double sigma1 = sigma;
  Eigen::MatrixXd ax(x.rows(), x.cols());
  apply_block(apply, x, ax);
  Eigen::MatrixXd y = (ax - c * x) * (sigma1 / e);
  for (int k = 2; k <= degree; ++k) {
    const double sigma2 = 1.0 / (2.0 / sigma1 - sigma);
    apply_block(apply, y, ax);
    Eigen::MatrixXd ynew = (ax - c * y) * (2.0 * sigma2 / e) - (sigma * sigma2) * x;
    x = std::move(y);
    y = std::move(ynew);
    sigma = sigma2;
  }
  x = std::move(y);
}

}  // namespace

FilteredEigenResult chebyshev_subspace_smallest(const MatVec& apply, std::size_t dim, std::size_t count,
                                                double lower, double upper, const FilterOptions& opts) {
  if (count == 0 || count > dim) throw std::invalid_argument("chebyshev_subspace_smallest: bad count");
  const auto rows = static_cast<Eigen::Index>(dim);
  const auto block = static_cast<Eigen::Index>(std::min(dim, count + opts.guard_vectors));
  const double scale = std::max({std::abs(lower), std::abs(upper), 1.0});

  Eigen::MatrixXd x(rows, block);
  for (Eigen::Index c = 0; c < block; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) {
      x(r, c) = hashed_unit(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(c));
    }
  }
  orthonormalize(x, 1000003u);

  Eigen::MatrixXd ax(rows, block);
  FilteredEigenResult result;
  double worst = INFINITY;
  for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
    // Rayleigh-Ritz on the current block
    apply_block(apply, x, ax);
    Eigen::MatrixXd h = x.transpose() * ax;
    h = 0.5 * (h + h.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ritz(h);
    if (ritz.info() != Eigen::Success) throw ConvergenceError("Rayleigh-Ritz eigensolve failed", worst);
    x = x * ritz.eigenvectors();
    ax = ax * ritz.eigenvectors();
    const Eigen::VectorXd& theta = ritz.eigenvalues();

    worst = 0.0;
    result.residuals.assign(count, 0.0);
    for (std::size_t k = 0; k < count; ++k) {
      const auto kk = static_cast<Eigen::Index>(k);
      result.residuals[k] = (ax.col(kk) - theta(kk) * x.col(kk)).norm();
      worst = std::max(worst, result.residuals[k]);
    }
    result.sweeps = sweep;
    if (worst <= opts.residual_rel * scale) {
      result.values.assign(theta.data(), theta.data() + count);
      return result;
    }

    const double cut = theta(block - 1);
    const double low = std::min(theta(0), cut - 1e-12 * scale);
    if (!(cut < upper)) {
      // block already spans the top of the spectrum; nothing left to filter
      result.values.assign(theta.data(), theta.data() + count);
      return result;
    }
    chebyshev_filter(apply, x, opts.degree, cut, upper, low);
    orthonormalize(x, 2000003u + static_cast<std::uint64_t>(sweep));
  }
  throw ConvergenceError("chebyshev_subspace_smallest: no convergence after " + std::to_string(opts.max_sweeps) +
                             " sweeps, residual " + std::to_string(worst),
                         worst);
}

std::vector<double> discrete_link_eigenvalues(const DiscreteOperator& op, std::size_t count, const Tolerances& tol) {
  const auto grid = op.grid();
  if (std::min(grid[0], grid[1]) < 16) throw std::invalid_argument("discrete_link_eigenvalues: grid_size must be >= 16");
  if (count == 0 || count > op.dimension()) {
    throw std::invalid_argument("discrete_link_eigenvalues: count must be in [1, grid_size^2]");
  }

  if (op.dimension() <= kDenseEigenLimit) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(op.dense(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw ConvergenceError("dense eigensolve failed", NAN);
    const Eigen::VectorXd& v = solver.eigenvalues();
    return {v.data(), v.data() + count};
  }

  FilterOptions opts;
  opts.residual_rel = tol.eigen_residual_rel;
  const MatVec apply = [&op](std::span<const double> x, std::span<double> out) { op.apply(x, out); };
  return chebyshev_subspace_smallest(apply, op.dimension(), count, op.lower_bound(), op.upper_bound(), opts).values;
}

RichardsonEigenvalues richardson_clifford_eigenvalues(std::size_t coarse_grid, std::size_t count,
                                                      const Tolerances& tol) {
  RichardsonEigenvalues r;
  r.coarse_grid = coarse_grid;
  r.fine_grid = 2 * coarse_grid;
  r.coarse = discrete_link_eigenvalues(DiscreteOperator::clifford_torus(r.coarse_grid), count, tol);
  r.fine = discrete_link_eigenvalues(DiscreteOperator::clifford_torus(r.fine_grid), count, tol);
  for (std::size_t i = 0; i < count; ++i) r.extrapolated.push_back((4.0 * r.fine[i] - r.coarse[i]) / 3.0);
  return r;
}

}  // namespace conindex
