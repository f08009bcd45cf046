#include "conindex/discrete_operator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conindex {

DiscreteOperator::DiscreteOperator(std::array<std::size_t, 2> grid, std::array<double, 2> side_lengths,
                                   double potential_shift)
    : grid_(grid), sides_(side_lengths), shift_(potential_shift) {
  if (grid[0] < 3 || grid[1] < 3) throw std::invalid_argument("DiscreteOperator: need at least 3 points per axis");
  if (!(side_lengths[0] > 0.0) || !(side_lengths[1] > 0.0)) {
    throw std::invalid_argument("DiscreteOperator: side lengths must be positive");
  }
  const auto [hx, hy] = spacing();
  coeffs_.nx = grid_[0];
  coeffs_.ny = grid_[1];
  coeffs_.cx = 1.0 / (hx * hx);
  coeffs_.cy = 1.0 / (hy * hy);
  coeffs_.diag = 2.0 * coeffs_.cx + 2.0 * coeffs_.cy - shift_;
}

DiscreteOperator DiscreteOperator::square(std::size_t grid_size, double side_length, double potential_shift) {
  return DiscreteOperator({grid_size, grid_size}, {side_length, side_length}, potential_shift);
}

DiscreteOperator DiscreteOperator::clifford_torus(std::size_t grid_size) {
  // |II|^2 = 2 and (n-1) = 2 on the Clifford torus: shift 4.
  return square(grid_size, std::numbers::pi * std::numbers::sqrt2, 4.0);
}

void DiscreteOperator::apply(std::span<const double> x, std::span<double> out) const {
  if (x.size() != dimension() || out.size() != dimension()) {
    throw std::invalid_argument("DiscreteOperator::apply: size mismatch");
  }
  kernels::stencil_apply(coeffs_, x, out);
}

double DiscreteOperator::lower_bound() const { return coeffs_.diag - 2.0 * coeffs_.cx - 2.0 * coeffs_.cy; }
double DiscreteOperator::upper_bound() const { return coeffs_.diag + 2.0 * coeffs_.cx + 2.0 * coeffs_.cy; }

Eigen::MatrixXd DiscreteOperator::dense() const {
  Eigen::MatrixXd m = dense_laplacian();
  m.diagonal().array() -= shift_;
  return m;
}

Eigen::MatrixXd DiscreteOperator::dense_laplacian() const {
  const std::size_t nx = grid_[0];
  const std::size_t ny = grid_[1];
  const auto dim = static_cast<Eigen::Index>(dimension());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
  auto idx = [ny](std::size_t i, std::size_t j) { return static_cast<Eigen::Index>(i * ny + j); };
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const auto r = idx(i, j);
      m(r, r) += 2.0 * coeffs_.cx + 2.0 * coeffs_.cy;
      m(r, idx((i + nx - 1) % nx, j)) -= coeffs_.cx;
      m(r, idx((i + 1) % nx, j)) -= coeffs_.cx;
      m(r, idx(i, (j + ny - 1) % ny)) -= coeffs_.cy;
      m(r, idx(i, (j + 1) % ny)) -= coeffs_.cy;
    }
  }
  return m;
}

}  // namespace conindex
