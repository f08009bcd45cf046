#include "conindex/kernels/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace conindex::kernels {

#ifndef CONINDEX_HAVE_AVX2_TU
namespace avx2 {
bool supported() { return false; }
void stencil_apply(const StencilCoeffs&, std::span<const double>, std::span<double>) {
  throw std::logic_error("AVX2 kernels not compiled in");
}
double dot(std::span<const double>, std::span<const double>) { throw std::logic_error("AVX2 kernels not compiled in"); }
void axpy(double, std::span<const double>, std::span<double>) { throw std::logic_error("AVX2 kernels not compiled in"); }
}  // namespace avx2
#endif

namespace {

Backend detect() {
  if (const char* env = std::getenv("CONINDEX_SIMD"); env != nullptr && std::string(env) == "scalar") {
    return Backend::scalar;
  }
  return avx2::supported() ? Backend::avx2 : Backend::scalar;
}

std::atomic<Backend>& backend_slot() {
  static std::atomic<Backend> slot{detect()};
  return slot;
}

}  // namespace

Backend active_backend() { return backend_slot().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (b == Backend::avx2 && !avx2::supported()) throw std::runtime_error("AVX2 backend not supported on this CPU");
  backend_slot().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

void stencil_apply(const StencilCoeffs& c, std::span<const double> x, std::span<double> out) {
  if (active_backend() == Backend::avx2) return avx2::stencil_apply(c, x, out);
  scalar::stencil_apply(c, x, out);
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (active_backend() == Backend::avx2) return avx2::dot(a, b);
  return scalar::dot(a, b);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  if (active_backend() == Backend::avx2) return avx2::axpy(alpha, x, y);
  scalar::axpy(alpha, x, y);
}

}  // namespace conindex::kernels
