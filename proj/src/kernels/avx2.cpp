#include "conindex/kernels/kernels.hpp"

#include <cassert>
#include <immintrin.h>

namespace conindex::kernels::avx2 {

bool supported() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

void stencil_apply(const StencilCoeffs& c, std::span<const double> x, std::span<double> out) {
  assert(x.size() == c.nx * c.ny && out.size() == x.size());
  const std::size_t nx = c.nx;
  const std::size_t ny = c.ny;
  const __m256d vdiag = _mm256_set1_pd(c.diag);
  const __m256d vcx = _mm256_set1_pd(c.cx);
  const __m256d vcy = _mm256_set1_pd(c.cy);

  for (std::size_t i = 0; i < nx; ++i) {
    const double* row = x.data() + i * ny;
    const double* up = x.data() + ((i + nx - 1) % nx) * ny;
    const double* down = x.data() + ((i + 1) % nx) * ny;
    double* dst = out.data() + i * ny;

    auto scalar_at = [&](std::size_t j) {
      const std::size_t jl = (j == 0) ? ny - 1 : j - 1;
      const std::size_t jr = (j + 1 == ny) ? 0 : j + 1;
      dst[j] = c.diag * row[j] - c.cx * (up[j] + down[j]) - c.cy * (row[jl] + row[jr]);
    };

    scalar_at(0);
    std::size_t j = 1;
    // interior: neighbours j-1 and j+1 never wrap
    for (; j + 4 < ny; j += 4) {
      const __m256d centre = _mm256_loadu_pd(row + j);
      const __m256d vert = _mm256_add_pd(_mm256_loadu_pd(up + j), _mm256_loadu_pd(down + j));
      const __m256d horiz = _mm256_add_pd(_mm256_loadu_pd(row + j - 1), _mm256_loadu_pd(row + j + 1));
      __m256d acc = _mm256_mul_pd(vdiag, centre);
      acc = _mm256_fnmadd_pd(vcx, vert, acc);
      acc = _mm256_fnmadd_pd(vcy, horiz, acc);
      _mm256_storeu_pd(dst + j, acc);
    }
    for (; j < ny; ++j) scalar_at(j);
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= a.size(); k += 4) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a.data() + k), _mm256_loadu_pd(b.data() + k), acc);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double s = (lanes[0] + lanes[2]) + (lanes[1] + lanes[3]);
  for (; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  const __m256d va = _mm256_set1_pd(alpha);
  std::size_t k = 0;
  for (; k + 4 <= x.size(); k += 4) {
    const __m256d vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x.data() + k), _mm256_loadu_pd(y.data() + k));
    _mm256_storeu_pd(y.data() + k, vy);
  }
  for (; k < x.size(); ++k) y[k] += alpha * x[k];
}

}  // namespace conindex::kernels::avx2
