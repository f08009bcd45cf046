#include "conindex/kernels/kernels.hpp"

#include <cassert>

namespace conindex::kernels::scalar {

void stencil_apply(const StencilCoeffs& c, std::span<const double> x, std::span<double> out) {
  assert(x.size() == c.nx * c.ny && out.size() == x.size());
  const std::size_t nx = c.nx;
  const std::size_t ny = c.ny;
  for (std::size_t i = 0; i < nx; ++i) {
    const double* row = x.data() + i * ny;
    const double* up = x.data() + ((i + nx - 1) % nx) * ny;
    const double* down = x.data() + ((i + 1) % nx) * ny;
    double* dst = out.data() + i * ny;
    for (std::size_t j = 0; j < ny; ++j) {
      const std::size_t jl = (j == 0) ? ny - 1 : j - 1;
      const std::size_t jr = (j + 1 == ny) ? 0 : j + 1;
      dst[j] = c.diag * row[j] - c.cx * (up[j] + down[j]) - c.cy * (row[jl] + row[jr]);
    }
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  // four partial sums, matching the lane layout of the AVX2 path
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t k = 0;
  for (; k + 4 <= a.size(); k += 4) {
    s0 += a[k] * b[k];
    s1 += a[k + 1] * b[k + 1];
    s2 += a[k + 2] * b[k + 2];
    s3 += a[k + 3] * b[k + 3];
  }
  double s = (s0 + s2) + (s1 + s3);
  for (; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  for (std::size_t k = 0; k < x.size(); ++k) y[k] += alpha * x[k];
}

}  // namespace conindex::kernels::scalar
