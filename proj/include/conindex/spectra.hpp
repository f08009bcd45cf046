#pragma once

// Jacobi spectra of cone links.
//
// Sign convention: L u = -lambda u, so negative lambda are index directions.
// A LinkSpectrum is a truncation: every eigenvalue strictly below `cutoff`
// is listed with its full multiplicity, nothing is promised above it.

#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "conindex/rational.hpp"
#include "conindex/tolerances.hpp"

namespace conindex {

struct Eigenvalue {
  double value = 0.0;
  int multiplicity = 1;
  std::optional<Rational> exact;  // set when the catalog knows the value exactly

  friend bool operator==(const Eigenvalue&, const Eigenvalue&) = default;
};

class LinkSpectrum {
 public:
  // Validates and sorts; equal values are merged by adding multiplicities.
  LinkSpectrum(int n, int N, std::vector<Eigenvalue> eigenvalues, bool connected, double cutoff);

  int n() const { return n_; }                      // cone dimension
  int N() const { return N_; }                      // ambient Euclidean dimension
  int link_dim() const { return n_ - 1; }
  int ambient_sphere_dim() const { return N_ - 1; }
  bool connected() const { return connected_; }
  double cutoff() const { return cutoff_; }
  std::span<const Eigenvalue> eigenvalues() const { return eigenvalues_; }

  // Total multiplicity of the listed eigenvalues.
  int total_multiplicity() const;

 private:
  int n_;
  int N_;
  std::vector<Eigenvalue> eigenvalues_;
  bool connected_;
  double cutoff_;
};

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Jacobi spectrum of the Clifford torus S^1(1/sqrt2) x S^1(1/sqrt2) in S^3:
// lambda = 2(p^2 + q^2) - 4 over (p, q) in Z^2, one eigenfunction per lattice point.
LinkSpectrum clifford_torus_spectrum(double cutoff);

LinkSpectrum user_spectrum(std::vector<std::pair<double, int>> entries, int n, int N, bool connected,
                           double cutoff);

// Number of negative eigenvalues with multiplicity. Requires cutoff >= 0.
int morse_index(const LinkSpectrum& spec);

// Spectrum of a disjoint union of two links with the same (n, N).
LinkSpectrum union_spectra(const LinkSpectrum& a, const LinkSpectrum& b);

// Groups ascending numerical eigenvalues into clusters within tol.eigen_cluster_rel.
std::vector<Eigenvalue> cluster_eigenvalues(std::span<const double> sorted_values,
                                            const Tolerances& tol = default_tolerances());

}  // namespace conindex
