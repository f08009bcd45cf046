#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "conindex/json_io.hpp"

using namespace conindex;

TEST_CASE("canonical dump sorts keys and prints 17 digits") {
  Json j{{"b", 0.1}, {"a", {1, 2.5}}, {"c", {{"z", true}, {"y", nullptr}}}, {"inf", std::numeric_limits<double>::infinity()}};
  const auto s = dump_canonical(j, 0);
  CHECK(s == "{\"a\":[1, 2.5],\"b\":0.10000000000000001,\"c\":{\"y\":null,\"z\":true},\"inf\":null}\n");
  CHECK(dump_canonical(j) == dump_canonical(Json::parse(j.dump())));
}

TEST_CASE("spectrum round trip") {
  const auto spec = clifford_torus_spectrum(13.0);
  const auto back = spectrum_from_json(to_json(spec));
  CHECK(back.n() == spec.n());
  CHECK(back.N() == spec.N());
  CHECK(back.cutoff() == spec.cutoff());
  REQUIRE(back.eigenvalues().size() == spec.eigenvalues().size());
  for (std::size_t i = 0; i < back.eigenvalues().size(); ++i) {
    CHECK(back.eigenvalues()[i].value == spec.eigenvalues()[i].value);
    CHECK(back.eigenvalues()[i].multiplicity == spec.eigenvalues()[i].multiplicity);
  }
  CHECK_THROWS_AS(spectrum_from_json(Json{{"n", 3}}), InputError);
  CHECK_THROWS_AS(spectrum_from_json(Json{{"n", 3}, {"N", 4}, {"cutoff", 1}, {"eigenvalues", {"x"}}}), InputError);
  CHECK_THROWS_AS(spectrum_from_json(Json{{"n", 4}, {"N", 4}, {"cutoff", 1}, {"eigenvalues", Json::array()}}), InputError);
}

TEST_CASE("msi loading") {
  const auto dir = std::filesystem::temp_directory_path() / "conindex_json_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "link.json") << to_json(clifford_torus_spectrum(5.0)).dump();
    std::ofstream(dir / "msi.json") << R"({"N": 4, "n": 3, "tau": 0.25, "cones": ["link.json", "catalog:clifford",
      {"n": 3, "N": 4, "cutoff": 5, "eigenvalues": [[-4, 1], [-2, 4], [0, 4], [4, 4]]}]})";
    std::ofstream(dir / "bad.json") << R"({"N": 4, "n": 3, "cones": ["catalog:nothing"]})";
    std::ofstream(dir / "broken.json") << "{ not json";
  }
  const auto msi = read_msi_file(dir / "msi.json");
  CHECK(msi.Q() == 3);
  CHECK(msi.tau == 0.25);
  CHECK(fredholm_index(msi, 0.5).index == -15);
  CHECK_THROWS_AS(read_msi_file(dir / "bad.json"), InputError);
  CHECK_THROWS_AS(read_msi_file(dir / "broken.json"), InputError);
  CHECK_THROWS_AS(read_msi_file(dir / "missing.json"), InputError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("tolerance overrides") {
  const auto t = tolerances_from_json(Json{{"tolerances", {{"log_case_rel", 1e-6}, {"version", kToleranceVersion}}}});
  CHECK(t.log_case_rel == 1e-6);
  CHECK(t.tau_root_abs == default_tolerances().tau_root_abs);
  CHECK_THROWS_AS(tolerances_from_json(Json{{"nonsense", 1.0}}), InputError);
  CHECK_THROWS_AS(tolerances_from_json(Json{{"log_case_rel", -1.0}}), InputError);
  CHECK_THROWS_AS(tolerances_from_json(Json{{"version", 99}}), InputError);
}
