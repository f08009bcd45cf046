#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "conindex/kernels/kernels.hpp"

namespace conindex {

// -(Laplacian) - shift on a flat 2-torus, discretised with the periodic
// 5-point stencil. For the Clifford torus the link operator is -(Delta + 4)
// on the square torus of side pi*sqrt(2).
class DiscreteOperator {
 public:
  DiscreteOperator(std::array<std::size_t, 2> grid, std::array<double, 2> side_lengths, double potential_shift);

  // Square grid with equal sides.
  static DiscreteOperator square(std::size_t grid_size, double side_length, double potential_shift);
  static DiscreteOperator clifford_torus(std::size_t grid_size);

  std::array<std::size_t, 2> grid() const { return grid_; }
  std::array<double, 2> side_lengths() const { return sides_; }
  double potential_shift() const { return shift_; }
  std::size_t dimension() const { return grid_[0] * grid_[1]; }
  std::array<double, 2> spacing() const { return {sides_[0] / grid_[0], sides_[1] / grid_[1]}; }

  void apply(std::span<const double> x, std::span<double> out) const;

  // Gershgorin enclosure of the spectrum.
  double lower_bound() const;
  double upper_bound() const;

  // Dense assembly; only sensible for small grids.
  Eigen::MatrixXd dense() const;
  // Same, without the shift (pure Laplacian part).
  Eigen::MatrixXd dense_laplacian() const;

 private:
  std::array<std::size_t, 2> grid_;
  std::array<double, 2> sides_;
  double shift_;
  kernels::StencilCoeffs coeffs_;
};

}  // namespace conindex
