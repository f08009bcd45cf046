#include "conindex/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace conindex {

LinkSpectrum::LinkSpectrum(int n, int N, std::vector<Eigenvalue> eigenvalues, bool connected, double cutoff)
    : n_(n), N_(N), connected_(connected), cutoff_(cutoff) {
  if (n < 2 || N <= n) {
    throw std::invalid_argument("LinkSpectrum: need 2 <= n < N, got n=" + std::to_string(n) +
                                " N=" + std::to_string(N));
  }
  if (!std::isfinite(cutoff)) throw std::invalid_argument("LinkSpectrum: cutoff must be finite");
  for (const auto& e : eigenvalues) {
    if (e.multiplicity < 1) {
      throw std::invalid_argument("LinkSpectrum: multiplicity must be >= 1, got " + std::to_string(e.multiplicity));
    }
    if (!std::isfinite(e.value)) throw std::invalid_argument("LinkSpectrum: eigenvalue must be finite");
  }
  std::stable_sort(eigenvalues.begin(), eigenvalues.end(),
                   [](const Eigenvalue& a, const Eigenvalue& b) { return a.value < b.value; });
  for (auto& e : eigenvalues) {
    if (!eigenvalues_.empty() && eigenvalues_.back().value == e.value) {
      eigenvalues_.back().multiplicity += e.multiplicity;
    } else {
      eigenvalues_.push_back(std::move(e));
    }
  }
}

int LinkSpectrum::total_multiplicity() const {
  int total = 0;
  for (const auto& e : eigenvalues_) total += e.multiplicity;
  return total;
}

LinkSpectrum clifford_torus_spectrum(double cutoff) {
  if (!(cutoff > -4.0)) throw std::invalid_argument("clifford_torus_spectrum: cutoff must exceed -4");
  if (!std::isfinite(cutoff)) throw std::invalid_argument("clifford_torus_spectrum: cutoff must be finite");

  // lambda(p,q) = 2(p^2+q^2) - 4 < cutoff  <=>  p^2+q^2 < (cutoff+4)/2.
  const double shell_bound = (cutoff + 4.0) / 2.0;
  const auto radius = static_cast<std::int64_t>(std::floor(std::sqrt(shell_bound))) + 1;
  std::map<std::int64_t, int> shells;
  for (std::int64_t p = -radius; p <= radius; ++p) {
    for (std::int64_t q = -radius; q <= radius; ++q) {
      const std::int64_t s = p * p + q * q;
      if (static_cast<double>(2 * s - 4) < cutoff) ++shells[s];
    }
  }

  std::vector<Eigenvalue> eigs;
  eigs.reserve(shells.size());
  for (const auto& [s, count] : shells) {
    const Rational exact(2 * s - 4);
    eigs.push_back({exact.to_double(), count, exact});
  }
  return LinkSpectrum(/*n=*/3, /*N=*/4, std::move(eigs), /*connected=*/true, cutoff);
}

LinkSpectrum user_spectrum(std::vector<std::pair<double, int>> entries, int n, int N, bool connected,
                           double cutoff) {
  std::vector<Eigenvalue> eigs;
  eigs.reserve(entries.size());
  for (const auto& [value, mult] : entries) eigs.push_back({value, mult, std::nullopt});
  return LinkSpectrum(n, N, std::move(eigs), connected, cutoff);
}

int morse_index(const LinkSpectrum& spec) {
  if (spec.cutoff() < 0.0) {
    throw TruncationError("index undeterminable from truncation: cutoff " + std::to_string(spec.cutoff()) + " < 0");
  }
  int index = 0;
  for (const auto& e : spec.eigenvalues()) {
    if (e.value < 0.0) index += e.multiplicity;
  }
  return index;
}

LinkSpectrum union_spectra(const LinkSpectrum& a, const LinkSpectrum& b) {
  if (a.n() != b.n() || a.N() != b.N()) throw std::invalid_argument("union_spectra: dimension mismatch");
  std::vector<Eigenvalue> eigs(a.eigenvalues().begin(), a.eigenvalues().end());
  eigs.insert(eigs.end(), b.eigenvalues().begin(), b.eigenvalues().end());
  // Entries past the smaller cutoff are not guaranteed complete in the union.
  const double cutoff = std::min(a.cutoff(), b.cutoff());
  std::erase_if(eigs, [cutoff](const Eigenvalue& e) { return e.value >= cutoff; });
  return LinkSpectrum(a.n(), a.N(), std::move(eigs), /*connected=*/false, cutoff);
}

std::vector<Eigenvalue> cluster_eigenvalues(std::span<const double> sorted_values, const Tolerances& tol) {
  std::vector<Eigenvalue> out;
  double anchor = 0.0;
  for (const double v : sorted_values) {
    if (!out.empty() && std::abs(v - anchor) <= tol.eigen_cluster_rel * (1.0 + std::abs(anchor))) {
      auto& last = out.back();
      // running mean keeps the representative centred in the cluster
      last.value += (v - last.value) / static_cast<double>(last.multiplicity + 1);
      ++last.multiplicity;
    } else {
      out.push_back({v, 1, std::nullopt});
      anchor = v;
    }
  }
  return out;
}

}  // namespace conindex
