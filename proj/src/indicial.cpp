#include "conindex/indicial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <tuple>

namespace conindex {

std::string_view to_string(RootCase c) {
  switch (c) {
    case RootCase::real_distinct: return "real_distinct";
    case RootCase::log_double: return "log_double";
    case RootCase::complex_pair: return "complex_pair";
  }
  return "unknown";
}

IndicialRoot indicial_root(double lambda, int multiplicity, int n, const Tolerances& tol) {
  if (n < 2) throw std::invalid_argument("indicial_root: n must be >= 2");
  IndicialRoot root;
  root.lambda = lambda;
  root.mu = lambda + static_cast<double>(n - 1);
  root.eigen_multiplicity = multiplicity;

  const double h = static_cast<double>(n - 2) / 2.0;  // roots are -h +- sqrt(h^2 + mu)
  const double disc = h * h + root.mu;
  if (std::abs(disc) <= tol.log_case_rel * (1.0 + std::abs(root.mu))) {
    root.case_tag = RootCase::log_double;
    root.gamma_plus = root.gamma_minus = {-h, 0.0};
    root.near_degenerate = disc != 0.0;
  } else if (disc < 0.0) {
    root.case_tag = RootCase::complex_pair;
    const double im = std::sqrt(-disc);
    root.gamma_plus = {-h, im};
    root.gamma_minus = {-h, -im};
  } else {
    root.case_tag = RootCase::real_distinct;
    const double s = std::sqrt(disc);
    // take the root of larger magnitude directly, the other from the product -mu
    const double big = -h - s;
    if (big != 0.0) {
      root.gamma_minus = {big, 0.0};
      root.gamma_plus = {-root.mu / big, 0.0};
    } else {  // h == 0 and s == 0 cannot both hold outside the log branch
      root.gamma_minus = {-s, 0.0};
      root.gamma_plus = {s, 0.0};
    }
  }
  return root;
}

std::vector<IndicialRoot> indicial_roots(const LinkSpectrum& spec, const Tolerances& tol) {
  std::vector<IndicialRoot> out;
  out.reserve(spec.eigenvalues().size());
  for (const auto& e : spec.eigenvalues()) out.push_back(indicial_root(e.value, e.multiplicity, spec.n(), tol));
  return out;
}

int AsymptoticSpectrum::crossings_between(double lo, double hi) const {
  int total = 0;
  for (const auto& e : entries) {
    if (lo < e.real_part && e.real_part < hi) total += e.crossing_multiplicity;
  }
  return total;
}

std::pair<double, double> completeness_window(double cutoff, int n) {
  const double h = static_cast<double>(n - 2) / 2.0;
  const double disc = h * h + cutoff + static_cast<double>(n - 1);
  if (disc <= 0.0) return {-h, -h};
  const double s = std::sqrt(disc);
  return {-h - s, -h + s};
}

AsymptoticSpectrum asymptotic_spectrum(const std::vector<IndicialRoot>& roots, int n, double cutoff,
                                       const Tolerances& tol) {
  AsymptoticSpectrum out;
  out.n = n;
  out.gamma_star_low = -static_cast<double>(n - 1);
  out.gamma_star_high = 1.0;
  std::tie(out.complete_below, out.complete_above) = completeness_window(cutoff, n);

  std::vector<SpectrumEntry> raw;
  raw.reserve(2 * roots.size());
  for (const auto& r : roots) {
    if (r.case_tag == RootCase::real_distinct) {
      raw.push_back({r.gamma_plus.real(), r.eigen_multiplicity});
      raw.push_back({r.gamma_minus.real(), r.eigen_multiplicity});
    } else {
      // one real part carrying both roots of the characteristic polynomial
      raw.push_back({r.gamma_plus.real(), 2 * r.eigen_multiplicity});
    }
  }
  std::sort(raw.begin(), raw.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.real_part < b.real_part; });
  for (const auto& e : raw) {
    if (!out.entries.empty() && e.real_part - out.entries.back().real_part <= tol.gamma_dedup_abs) {
      out.entries.back().crossing_multiplicity += e.crossing_multiplicity;
    } else {
      out.entries.push_back(e);
    }
  }

  // gamma_-: largest entry below 1. Certified only when the window reaches 1
  // from below and the candidate is not past its lower edge.
  const SpectrumEntry* best = nullptr;
  for (const auto& e : out.entries) {
    if (e.real_part < 1.0) best = &e;
  }
  if (out.complete_above < 1.0 - tol.gamma_dedup_abs || best == nullptr ||
      best->real_part < out.complete_below - tol.gamma_dedup_abs) {
    throw TruncationError("asymptotic_spectrum: gamma_- cannot be certified; no listed entry below 1 inside the "
                          "completeness window (" + std::to_string(out.complete_below) + ", " +
                          std::to_string(out.complete_above) + ")");
  }
  out.gamma_minus_of_cone = best->real_part;
  return out;
}

AsymptoticSpectrum asymptotic_spectrum(const LinkSpectrum& spec, const Tolerances& tol) {
  return asymptotic_spectrum(indicial_roots(spec, tol), spec.n(), spec.cutoff(), tol);
}

IndexContribution index_contribution_test(const IndicialRoot& root) {
  return {root.lambda < 0.0, root.gamma_plus.real() < 1.0};
}

}  // namespace conindex
