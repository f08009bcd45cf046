#include "conindex/fredholm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "conindex/geometry.hpp"

namespace conindex {

ConeModel make_cone(LinkSpectrum link, std::optional<double> link_area, const Tolerances& tol) {
  AsymptoticSpectrum gamma = asymptotic_spectrum(link, tol);
  std::optional<double> density;
  if (link_area) {
    density = density_bound(*link_area, link.n());
    if (!(*density > 1.0)) {
      throw std::invalid_argument("make_cone: density " + std::to_string(*density) +
                                  " <= 1; trivial cones are not regular singular models");
    }
  }
  return ConeModel{std::move(link), std::move(gamma), link_area, density};
}

ConeModel clifford_cone(double cutoff) {
  return make_cone(clifford_torus_spectrum(cutoff), clifford_torus_area());
}

MSIModel make_msi(int N, int n, std::vector<ConeModel> cones, double tau) {
  if (n < 2 || N <= n) throw std::invalid_argument("make_msi: need 2 <= n < N");
  for (const auto& c : cones) {
    if (c.N() != N || c.n() != n) {
      throw std::invalid_argument("make_msi: cone dimensions (" + std::to_string(c.N()) + ", " +
                                  std::to_string(c.n()) + ") differ from model (" + std::to_string(N) + ", " +
                                  std::to_string(n) + ")");
    }
  }
  return MSIModel{N, n, std::move(cones), tau};
}

MSIModel clifford_football(double tau, double cutoff) {
  ConeModel pole = clifford_cone(cutoff);
  return make_msi(4, 3, {pole, pole}, tau);
}

int effective_morse_index(const ConeModel& cone) { return morse_index(cone.link) - cone.N(); }

TauRange admissible_tau_range(const MSIModel& msi) {
  if (msi.cones.empty()) return {0.0, 1.0, true};
  double lo = -std::numeric_limits<double>::infinity();
  for (const auto& c : msi.cones) lo = std::max(lo, c.indicial.gamma_minus_of_cone);
  return {lo, 1.0, false};
}

std::string_view to_string(IndexProvenance p) { return p == IndexProvenance::anchored ? "anchored" : "transported"; }

IndexReport fredholm_index(const MSIModel& msi, double tau, const Tolerances& tol) {
  IndexReport report;
  report.tau = tau;
  report.N = msi.N;
  report.Q = msi.Q();

  if (msi.cones.empty()) {
    report.admissible_tau = tau > 0.0 && tau < 1.0;
    constexpr double inf = std::numeric_limits<double>::infinity();
    report.tau_interval = report.admissible_tau ? std::pair{0.0, 1.0} : std::pair{-inf, inf};
    return report;
  }

  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  int anchor_index = 0;
  for (const auto& cone : msi.cones) {
    const auto& g = cone.indicial;
    if (!g.in_window(tau)) {
      throw WeightError("weight " + std::to_string(tau) + " outside completeness window (" +
                        std::to_string(g.complete_below) + ", " + std::to_string(g.complete_above) + ")");
    }
    lo = std::max(lo, g.complete_below);
    hi = std::min(hi, g.complete_above);
    for (const auto& e : g.entries) {
      if (std::abs(e.real_part - tau) <= tol.tau_root_abs) {
        throw WeightError("weight on asymptotic spectrum: tau " + std::to_string(tau) + " hits " +
                          std::to_string(e.real_part));
      }
      if (e.real_part < tau) lo = std::max(lo, e.real_part);
      if (e.real_part > tau) hi = std::min(hi, e.real_part);
    }
    const int I = effective_morse_index(cone);
    report.per_cone_I.push_back(I);
    anchor_index -= I + msi.N;
  }
  report.tau_interval = {lo, hi};

  const TauRange range = admissible_tau_range(msi);
  // no entry of any cone lies strictly inside (range.lo, 1)
  const double anchor = 0.5 * (range.lo + range.hi);
  report.admissible_tau = tau > range.lo && tau < range.hi;
  int crossed = 0;
  if (tau > anchor) {
    for (const auto& c : msi.cones) crossed -= c.indicial.crossings_between(anchor, tau);
  } else {
    for (const auto& c : msi.cones) crossed += c.indicial.crossings_between(tau, anchor);
  }
  report.index = anchor_index + crossed;
  report.hat_index = report.index + msi.augmentation_dim();
  report.provenance = report.admissible_tau ? IndexProvenance::anchored : IndexProvenance::transported;
  return report;
}

bool duality_check(const MSIModel& msi, double tau, const Tolerances& tol) {
  const double dual = 2.0 - tau - static_cast<double>(msi.n);
  return fredholm_index(msi, dual, tol).index == -fredholm_index(msi, tau, tol).index;
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::smooth: return "smooth";
    case Classification::generically_excluded: return "generically_excluded";
    case Classification::borderline_index_N: return "borderline_index_N";
  }
  return "unknown";
}

Classification classify_generic(const MSIModel& msi) {
  if (msi.cones.empty()) return Classification::smooth;
  bool positive = false;
  for (const auto& cone : msi.cones) {
    const int I = effective_morse_index(cone);
    if (I < 0) {
      throw std::invalid_argument("effective Morse index " + std::to_string(I) +
                                  " < 0 violates the lower bound I(C) >= 0; invalid spectrum");
    }
    positive = positive || I > 0;
  }
  return positive ? Classification::generically_excluded : Classification::borderline_index_N;
}

std::vector<ValidatorResult> simons_validators(const ConeModel& cone) {
  const int morse = morse_index(cone.link);
  const int I = morse - cone.N();
  std::vector<ValidatorResult> out;
  out.push_back({"nonnegative_effective_index", I >= 0, "I = " + std::to_string(I) + " >= 0"});
  if (cone.N() == cone.n() + 1) {
    out.push_back({"codimension_one_bound", I >= 1, "I = " + std::to_string(I) + " >= 1"});
  }
  if (cone.link.connected()) {
    out.push_back({"connected_bound", morse >= cone.N(),
                   "morse index " + std::to_string(morse) + " >= N = " + std::to_string(cone.N())});
  }
  return out;
}

}  // namespace conindex
