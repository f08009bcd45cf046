#include <doctest.h>

#include <cmath>
#include <numbers>

#include "conindex/discrete_operator.hpp"
#include "conindex/eigensolver.hpp"
#include "conindex/kernels/kernels.hpp"
#include "oracles.hpp"

using namespace conindex;

TEST_CASE("dense path matches the exact discrete Fourier spectrum") {
  const double L = std::numbers::pi * std::numbers::sqrt2;
  const auto op = DiscreteOperator::clifford_torus(24);
  const auto got = discrete_link_eigenvalues(op, 20);
  const auto want = oracle::periodic_stencil_eigenvalues(24, L, 4.0);
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-11));
}

TEST_CASE("filtered subspace path matches the exact discrete Fourier spectrum") {
  const double L = std::numbers::pi * std::numbers::sqrt2;
  for (const std::size_t g : {40u, 64u}) {
    const auto op = DiscreteOperator::clifford_torus(g);
    REQUIRE(op.dimension() > kDenseEigenLimit);
    const auto got = discrete_link_eigenvalues(op, 13);
    const auto want = oracle::periodic_stencil_eigenvalues(static_cast<int>(g), L, 4.0);
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - want[i]) < 1e-8);
  }
}

TEST_CASE("rectangular torus and shift") {
  const auto op = DiscreteOperator({20, 16}, {2.0, 3.0}, 1.5);
  const auto got = discrete_link_eigenvalues(op, 6);
  std::vector<double> want;
  for (int p = 0; p < 20; ++p) {
    for (int q = 0; q < 16; ++q) {
      const double hx = 2.0 / 20, hy = 3.0 / 16;
      const double sp = std::sin(std::numbers::pi * p / 20), sq = std::sin(std::numbers::pi * q / 16);
      want.push_back(4.0 * sp * sp / (hx * hx) + 4.0 * sq * sq / (hy * hy) - 1.5);
    }
  }
  std::sort(want.begin(), want.end());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-11));
}

TEST_CASE("matvec agrees with the dense matrix") {
  const auto op = DiscreteOperator({7, 9}, {1.0, 2.0}, 0.5);
  const Eigen::MatrixXd A = op.dense();
  Eigen::VectorXd x(op.dimension());
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = std::cos(0.3 * static_cast<double>(i));
  std::vector<double> y(op.dimension());
  op.apply({x.data(), op.dimension()}, y);
  const Eigen::VectorXd ref = A * x;
  for (std::size_t i = 0; i < y.size(); ++i) CHECK(y[i] == doctest::Approx(ref[static_cast<Eigen::Index>(i)]).epsilon(1e-13));
  CHECK((A - A.transpose()).norm() == 0.0);
}

TEST_CASE("both SIMD backends give the same eigenvalues") {
  if (!kernels::avx2::supported()) return;
  const auto op = DiscreteOperator::clifford_torus(48);
  const auto before = kernels::active_backend();
  kernels::set_backend(kernels::Backend::scalar);
  const auto a = discrete_link_eigenvalues(op, 9);
  kernels::set_backend(kernels::Backend::avx2);
  const auto b = discrete_link_eigenvalues(op, 9);
  kernels::set_backend(before);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
}

TEST_CASE("Richardson extrapolation is second order") {
  const auto r = richardson_clifford_eigenvalues(32, 9);
  const std::vector<double> exact{-4, -2, -2, -2, -2, 0, 0, 0, 0};
  for (std::size_t i = 1; i < 9; ++i) {
    const double order = std::log2(std::abs(r.coarse[i] - exact[i]) / std::abs(r.fine[i] - exact[i]));
    CHECK(order > 1.8);
    CHECK(std::abs(r.extrapolated[i] - exact[i]) < 1e-3);
  }
}

TEST_CASE("eigensolver input validation") {
  CHECK_THROWS(discrete_link_eigenvalues(DiscreteOperator::clifford_torus(8), 3));
  CHECK_THROWS(discrete_link_eigenvalues(DiscreteOperator::clifford_torus(16), 0));
  CHECK_THROWS(discrete_link_eigenvalues(DiscreteOperator::clifford_torus(16), 257));
}
