#include <doctest.h>

#include <cmath>

#include "conindex/fredholm.hpp"
#include "conindex/geometry.hpp"
#include "generators.hpp"

using namespace conindex;

TEST_CASE("clifford football index") {
  const auto msi = clifford_football();
  CHECK(msi.Q() == 2);
  CHECK(msi.augmentation_dim() == 8);
  const auto r = fredholm_index(msi, 0.5);
  CHECK(r.index == -10);
  CHECK(r.hat_index == -2);
  CHECK(r.per_cone_I == std::vector<int>{1, 1});
  CHECK(r.tau_interval == std::pair{0.0, 1.0});
  CHECK(r.admissible_tau);
  CHECK(r.provenance == IndexProvenance::anchored);

  const std::vector<std::pair<double, int>> seq{{-1.5, 10}, {-0.75, 2}, {-0.25, -2}, {0.5, -10}, {1.5, -18}};
  for (const auto& [tau, idx] : seq) CHECK(fredholm_index(msi, tau).index == idx);
  CHECK(fredholm_index(msi, 1.5).provenance == IndexProvenance::transported);
  CHECK(fredholm_index(msi, 1.5).hat_index == -10);
}

TEST_CASE("weights on the spectrum or outside the window are rejected") {
  const auto msi = clifford_football();
  CHECK_THROWS_AS(fredholm_index(msi, 1.0), WeightError);
  CHECK_THROWS_AS(fredholm_index(msi, -0.5), WeightError);
  CHECK_THROWS_AS(fredholm_index(msi, 3.0), WeightError);
  CHECK_THROWS_AS(fredholm_index(msi, -3.5), WeightError);
}

TEST_CASE("smooth case") {
  const auto msi = make_msi(4, 3, {}, 0.5);
  const auto r = fredholm_index(msi, 0.5);
  CHECK(r.index == 0);
  CHECK(r.hat_index == 0);
  CHECK(r.admissible_tau);
  CHECK(classify_generic(msi) == Classification::smooth);
  CHECK(admissible_tau_range(msi).smooth);
  CHECK_FALSE(fredholm_index(msi, 1.5).admissible_tau);
}

TEST_CASE("classification and validators") {
  CHECK(classify_generic(clifford_football()) == Classification::generically_excluded);
  // morse index exactly N: borderline
  const auto link = user_spectrum({{-2.0, 4}, {0.0, 3}}, 3, 4, true, 5.0);
  const auto msi = make_msi(4, 3, {make_cone(link)}, 0.5);
  CHECK(classify_generic(msi) == Classification::borderline_index_N);
  const auto bad = make_msi(4, 3, {make_cone(user_spectrum({{-2.0, 1}, {0.0, 3}}, 3, 4, true, 5.0))}, 0.5);
  CHECK_THROWS_AS(classify_generic(bad), std::invalid_argument);
  for (const auto& v : simons_validators(clifford_cone())) CHECK(v.pass);
  bool failed = false;
  for (const auto& v : simons_validators(bad.cones[0])) failed = failed || !v.pass;
  CHECK(failed);
}

TEST_CASE("cone densities") {
  const auto c = clifford_cone();
  REQUIRE(c.density.has_value());
  CHECK(*c.density == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
  CHECK_THROWS(make_cone(c.link, 0.5 * sphere_area(2)));
  CHECK_THROWS(make_msi(5, 3, {clifford_cone()}, 0.5));
}

TEST_CASE("property: duality on random models") {
  oracle::Rng rng(21);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto msi = gen::msi_model(rng);
    const auto tau = gen::weight(rng, msi);
    if (!tau) continue;
    const auto a = fredholm_index(msi, *tau);
    const auto b = fredholm_index(msi, 2.0 - *tau - msi.n);
    CHECK(a.index == -b.index);
    ++checked;
  }
  CHECK(checked > 900);
}

TEST_CASE("property: jumps equal crossing multiplicities") {
  oracle::Rng rng(22);
  for (int trial = 0; trial < 300; ++trial) {
    const auto msi = gen::msi_model(rng);
    const auto t1 = gen::weight(rng, msi);
    const auto t2 = gen::weight(rng, msi);
    if (!t1 || !t2) continue;
    const double lo = std::min(*t1, *t2), hi = std::max(*t1, *t2);
    int crossed = 0;
    for (const auto& c : msi.cones) {
      for (const auto& e : c.indicial.entries) {
        if (e.real_part > lo && e.real_part < hi) crossed += e.crossing_multiplicity;
      }
    }
    CHECK(fredholm_index(msi, lo).index - fredholm_index(msi, hi).index == crossed);
  }
}

TEST_CASE("property: admissible weights give -NQ - sum I") {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto msi = gen::msi_model(rng);
    const auto range = admissible_tau_range(msi);
    if (!(range.lo < range.hi)) continue;
    const double tau = range.lo + (range.hi - range.lo) * rng.uniform(0.01, 0.99);
    bool on_entry = false;
    for (const auto& c : msi.cones) {
      for (const auto& e : c.indicial.entries) on_entry = on_entry || std::abs(e.real_part - tau) < 1e-6;
    }
    if (on_entry) continue;
    int sum_I = 0;
    for (const auto& c : msi.cones) sum_I += morse_index(c.link) - msi.N;
    const auto r = fredholm_index(msi, tau);
    CHECK(r.admissible_tau);
    CHECK(r.index == -msi.N * msi.Q() - sum_I);
  }
}
