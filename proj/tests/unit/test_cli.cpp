#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <cmath>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CONINDEX_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(CONINDEX_DATA) + "/" + name; }

}  // namespace

TEST_CASE("football report") {
  const auto r = run("football");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["index_at_tau"]["index"] == -10);
  CHECK(j["index_at_tau"]["hat_index"] == -2);
  CHECK(j["classification"] == "generically_excluded");
  std::vector<int> seq;
  for (const auto& c : j["components"]) seq.push_back(c["index"]);
  CHECK(seq == std::vector<int>{10, 2, -2, -10, -18});
  CHECK(j["jumps"] == nlohmann::json({8, 4, 8, 8}));
  CHECK(run("football").out == r.out);
}

TEST_CASE("spectrum and index subcommands") {
  auto r = run("spectrum --output csv");
  CHECK(r.status == 0);
  CHECK(r.out.find("1,-4,-4,1") != std::string::npos);
  r = run("index --input " + data("football.json"));
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["index"]["index"] == -10);
  r = run("index --input " + data("football.json") + " --tau 1.5");
  CHECK(nlohmann::json::parse(r.out)["index"]["index"] == -18);
  CHECK(run("index --input " + data("football.json") + " --tau 1").status == 2);
  CHECK(run("index --input " + data("football.json") + " --tau 9").status == 2);
  CHECK(run("index --input /nonexistent.json").status == 2);
  CHECK(run("bogus").status == 2);
  CHECK(run("--output xml thresholds").status == 2);
}

TEST_CASE("sweep") {
  const auto r = run("sweep --input " + data("football.json") + " --lo -2 --hi 2 --steps 40");
  REQUIRE(r.status == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line == "tau,index,hat_index,interval_id,flag");
  std::vector<std::pair<double, int>> rows;
  while (std::getline(in, line)) {
    double tau = 0;
    int idx = 0;
    REQUIRE(std::sscanf(line.c_str(), "%lf,%d", &tau, &idx) == 2);
    rows.emplace_back(tau, idx);
  }
  CHECK(rows.size() == 41);
  std::vector<double> jumps_at;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].second != rows[i - 1].second) jumps_at.push_back(std::round(2 * rows[i].first) / 2);
  }
  CHECK(jumps_at == std::vector<double>{-1, -0.5, 0, 1});

  const auto smooth = run("sweep --input " + data("smooth.json") + " --steps 4");
  CHECK(smooth.out.find(",0,0,0,") != std::string::npos);

  const auto flagged = run("sweep --input " + data("football.json") + " --lo -4 --hi 0 --steps 4");
  CHECK(flagged.status == 0);
  CHECK(flagged.out.find("outside_window") != std::string::npos);
}

TEST_CASE("single cone sweep is antisymmetric under duality") {
  const auto r = run("sweep --input " + data("single_cone.json") + " --lo -2.9 --hi 1.9 --steps 48 --output json");
  REQUIRE(r.status == 0);
  const auto rows = nlohmann::json::parse(r.out)["rows"];
  // tau_k + tau_{48-k} = -1 = 2 - n
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const auto& a = rows[k];
    const auto& b = rows[rows.size() - 1 - k];
    // a nudged row and its mirror sit on the same side of their roots, not mirrored sides
    if (a.contains("flag") || b.contains("flag")) continue;
    CHECK(a["index"].get<int>() + b["index"].get<int>() == 0);
  }
}

TEST_CASE("config overrides") {
  const auto dir = std::filesystem::temp_directory_path();
  std::ofstream(dir / "conindex_bad_cfg.json") << R"({"tolerances": {"made_up": 1}})";
  std::ofstream(dir / "conindex_good_cfg.json") << R"({"tolerances": {"tau_root_abs": 1e-7}})";
  CHECK(run("--config " + (dir / "conindex_bad_cfg.json").string() + " thresholds").status == 2);
  const auto r = run("--config " + (dir / "conindex_good_cfg.json").string() + " thresholds");
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["tolerances"]["tau_root_abs"] == 1e-7);
}

TEST_CASE("other subcommands run") {
  CHECK(run("thresholds").status == 0);
  CHECK(run("veronese --samples 2000").status == 0);
  CHECK(run("three-circle").status == 0);
  CHECK(run("three-circle --gamma -0.5").status == 2);
  CHECK(run("ode --mu 2 --r0 1 --r1 0.01 --f0 1 --df0 1 --output csv").status == 0);
  CHECK(run("k0 --sigma 0.5 --sigma 0.9").status == 0);
  CHECK(run("indicial --output table").status == 0);
  const auto dir = std::filesystem::temp_directory_path();
  {
    std::ofstream f(dir / "conindex_rate.csv");
    f << "s,annular_l2\n" << std::setprecision(17);
    double s = 1.0;
    for (int i = 0; i < 10; ++i, s *= 0.5) f << s << "," << std::pow(s, 1.4) << "\n";
  }
  const auto r = run("rate --input " + (dir / "conindex_rate.csv").string());
  CHECK(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["rate"].get<double>() == doctest::Approx(0.7).epsilon(1e-9));
}
