#pragma once

// Data-parallel inner loops used by the eigensolver.
//
// Each kernel has a portable scalar reference and, on x86-64, an AVX2/FMA
// variant. `active_backend()` picks AVX2 when the CPU reports it; setting the
// environment variable CONINDEX_SIMD=scalar, or calling set_backend(), forces
// the reference path. Both paths are deterministic for a fixed input, but they
// round differently (FMA, summation order) so results agree to ~1e-15, not bitwise.

#include <cstddef>
#include <span>
#include <string_view>

namespace conindex::kernels {

enum class Backend { scalar, avx2 };

// Geometry of the periodic 5-point stencil
//   out[i,j] = diag*x[i,j] - cx*(x[i-1,j] + x[i+1,j]) - cy*(x[i,j-1] + x[i,j+1])
// on an nx-by-ny grid stored row-major (j fastest), indices wrapping.
struct StencilCoeffs {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double cx = 0.0;
  double cy = 0.0;
  double diag = 0.0;
};

namespace scalar {
void stencil_apply(const StencilCoeffs& c, std::span<const double> x, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
}  // namespace scalar

namespace avx2 {
bool supported();
void stencil_apply(const StencilCoeffs& c, std::span<const double> x, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
}  // namespace avx2

Backend active_backend();
void set_backend(Backend b);  // throws if AVX2 is requested on a CPU without it
std::string_view backend_name(Backend b);

// Dispatching entry points.
void stencil_apply(const StencilCoeffs& c, std::span<const double> x, std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);

}  // namespace conindex::kernels
