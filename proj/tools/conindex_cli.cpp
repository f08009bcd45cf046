// conindex: command-line front end.
//
// Exit status: 0 when every validator passed, 1 on a validator failure or a
// numerical failure, 2 on bad input.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "conindex/asymptotic_rate.hpp"
#include "conindex/eigensolver.hpp"
#include "conindex/fredholm.hpp"
#include "conindex/geometry.hpp"
#include "conindex/growth.hpp"
#include "conindex/indicial.hpp"
#include "conindex/json_io.hpp"
#include "conindex/kernels/kernels.hpp"
#include "conindex/oscillatory.hpp"
#include "conindex/radial_ode.hpp"
#include "conindex/spectra.hpp"
#include "conindex/veronese.hpp"

using namespace conindex;

namespace {

enum class Format { json, csv, table };

struct Output {
  Json report = Json::object();
  std::vector<std::string> header;
  std::vector<std::vector<Json>> rows;
  bool ok = true;
};

struct Validators {
  Json list = Json::array();
  bool ok = true;

  void add(const std::string& name, bool pass, const std::string& detail) {
    list.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    ok = ok && pass;
  }
};

std::string fmt_num(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string cell(const Json& j) {
  if (j.is_number_float()) return fmt_num(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "";
  return j.dump();
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && std::any_of(j.begin(), j.end(), [](const Json& e) { return e.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), out);
  } else if (j.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + cell(j[i]);
    out.emplace_back(prefix, s);
  } else {
    out.emplace_back(prefix, cell(j));
  }
}

void render(const Output& out, Format format) {
  if (format == Format::json) {
    std::cout << dump_canonical(out.report);
    return;
  }
  std::vector<std::string> header = out.header;
  std::vector<std::vector<std::string>> rows;
  if (!header.empty()) {
    for (const auto& r : out.rows) {
      std::vector<std::string> line;
      for (const auto& c : r) line.push_back(cell(c));
      rows.push_back(std::move(line));
    }
  } else {
    header = {"key", "value"};
    std::vector<std::pair<std::string, std::string>> kv;
    flatten(out.report, "", kv);
    for (auto& [k, v] : kv) rows.push_back({k, v});
  }
  if (format == Format::csv) {
    for (std::size_t i = 0; i < header.size(); ++i) std::cout << (i ? "," : "") << header[i];
    std::cout << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        const bool quote = r[i].find_first_of(",\"\n") != std::string::npos;
        std::string v = r[i];
        if (quote) {
          std::string q = "\"";
          for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
          v = q + "\"";
        }
        std::cout << (i ? "," : "") << v;
      }
      std::cout << "\n";
    }
    return;
  }
  // table: shortened numbers, aligned columns
  auto shorten = [](const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end && *end == '\0' && !s.empty() && s.find_first_of(".eE") != std::string::npos) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.8g", v);
      return std::string(buf);
    }
    return s;
  };
  for (auto& r : rows) {
    for (auto& c : r) c = shorten(c);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  auto line = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::cout << r[i];
      if (i + 1 < r.size()) std::cout << std::string(width[i] - r[i].size() + 2, ' ');
    }
    std::cout << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

LinkSpectrum load_spectrum(const std::string& path, double cutoff) {
  return path.empty() ? clifford_torus_spectrum(cutoff) : read_spectrum_file(path);
}

// ---------------------------------------------------------------- spectrum

Output run_spectrum(const std::string& input, double cutoff, std::size_t discrete_grid) {
  const auto spec = load_spectrum(input, cutoff);
  Output out;
  out.report["spectrum"] = to_json(spec);
  try {
    out.report["morse_index"] = morse_index(spec);
  } catch (const TruncationError& e) {
    out.report["morse_index"] = nullptr;
    out.report["morse_index_error"] = e.what();
  }
  // one row per eigenvalue counted with multiplicity
  out.header = {"k", "lambda", "exact", "multiplicity"};
  Json listed = Json::array();
  int k = 1;
  for (const auto& e : spec.eigenvalues()) {
    for (int i = 0; i < e.multiplicity; ++i, ++k) {
      const Json exact = e.exact ? Json(e.exact->str()) : Json(nullptr);
      out.rows.push_back({k, e.value, exact, e.multiplicity});
      listed.push_back(e.exact ? Json(e.exact->str()) : Json(e.value));
    }
  }
  out.report["listed"] = listed;

  if (discrete_grid > 0) {
    if (!input.empty()) throw InputError("--discrete compares against the Clifford catalog; drop --input");
    const auto count = static_cast<std::size_t>(std::min(spec.total_multiplicity(), 9));
    const auto r = richardson_clifford_eigenvalues(discrete_grid, count);
    Json d;
    d["coarse_grid"] = r.coarse_grid;
    d["fine_grid"] = r.fine_grid;
    d["coarse"] = r.coarse;
    d["fine"] = r.fine;
    d["extrapolated"] = r.extrapolated;
    std::vector<double> exact;
    for (const auto& e : spec.eigenvalues()) {
      for (int i = 0; i < e.multiplicity && exact.size() < count; ++i) exact.push_back(e.value);
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < count; ++i) worst = std::max(worst, std::abs(r.extrapolated[i] - exact[i]));
    d["max_abs_error_extrapolated"] = worst;
    d["simd_backend"] = std::string(kernels::backend_name(kernels::active_backend()));
    out.report["discrete"] = d;
  }
  return out;
}

// ---------------------------------------------------------------- indicial

Output run_indicial(const std::string& input, double cutoff, const Tolerances& tol) {
  const auto spec = load_spectrum(input, cutoff);
  const auto roots = indicial_roots(spec, tol);
  Output out;
  Json rj = Json::array();
  out.header = {"lambda", "mu", "case", "multiplicity", "gamma_plus_re", "gamma_plus_im", "gamma_minus_re",
                "gamma_minus_im"};
  for (const auto& r : roots) {
    rj.push_back(to_json(r));
    out.rows.push_back({r.lambda, r.mu, std::string(to_string(r.case_tag)), r.eigen_multiplicity, r.gamma_plus.real(),
                        r.gamma_plus.imag(), r.gamma_minus.real(), r.gamma_minus.imag()});
  }
  out.report["roots"] = rj;
  try {
    out.report["gamma"] = to_json(asymptotic_spectrum(roots, spec.n(), spec.cutoff(), tol));
  } catch (const TruncationError& e) {
    out.report["gamma"] = nullptr;
    out.report["gamma_error"] = e.what();
  }
  return out;
}

// ---------------------------------------------------------------- index

void cone_validators(const MSIModel& msi, Validators& v) {
  for (std::size_t i = 0; i < msi.cones.size(); ++i) {
    for (const auto& r : simons_validators(msi.cones[i])) v.add("cone" + std::to_string(i) + "." + r.name, r.pass, r.detail);
    for (const auto& root : indicial_roots(msi.cones[i].link)) {
      const auto c = index_contribution_test(root);
      if (!c.consistent()) {
        v.add("cone" + std::to_string(i) + ".root_count", false,
              "lambda = " + fmt_num(root.lambda) + ": negative-eigenvalue and Re gamma+ < 1 tests disagree");
      }
    }
  }
}

Output run_index(const std::string& input, std::optional<double> tau_opt, const Tolerances& tol) {
  if (input.empty()) throw InputError("index: --input <msi.json> is required");
  const auto msi = read_msi_file(input, tol);
  const double tau = tau_opt.value_or(msi.tau);
  const auto rep = fredholm_index(msi, tau, tol);
  Output out;
  out.report["index"] = to_json(rep);
  Validators v;
  cone_validators(msi, v);
  if (!msi.cones.empty()) {
    const double dual = 2.0 - tau - msi.n;
    try {
      v.add("duality", duality_check(msi, tau, tol), "index(" + fmt_num(dual) + ") = -index(" + fmt_num(tau) + ")");
    } catch (const WeightError& e) {
      out.report["duality_skipped"] = e.what();
    }
    out.report["classification"] = std::string(to_string(classify_generic(msi)));
  } else {
    out.report["classification"] = std::string(to_string(Classification::smooth));
  }
  const auto range = admissible_tau_range(msi);
  out.report["admissible_tau_range"] = {range.lo, range.hi};
  out.report["validators"] = v.list;
  out.ok = v.ok;
  return out;
}

// ---------------------------------------------------------------- sweep

std::vector<double> union_entries(const MSIModel& msi) {
  std::vector<double> all;
  for (const auto& c : msi.cones) {
    for (const auto& e : c.indicial.entries) all.push_back(e.real_part);
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

Output run_sweep(const std::string& input, double lo, double hi, int steps, const Tolerances& tol) {
  if (input.empty()) throw InputError("sweep: --input <msi.json> is required");
  if (steps < 1 || !(lo < hi)) throw InputError("sweep: need lo < hi and steps >= 1");
  const auto msi = read_msi_file(input, tol);
  const auto entries = union_entries(msi);
  const double nudge = std::max(1e-6, 1e3 * tol.tau_root_abs);
  Output out;
  out.header = {"tau", "index", "hat_index", "interval_id", "flag"};
  Json rows = Json::array();
  Json warnings = Json::array();
  int flagged = 0;
  for (int k = 0; k <= steps; ++k) {
    double tau = lo + (hi - lo) * k / steps;
    bool nudged = false;
    for (const double e : entries) {
      if (std::abs(tau - e) <= tol.tau_root_abs) {
        const double moved = k == steps ? tau - nudge : tau + nudge;
        warnings.push_back("tau " + fmt_num(tau) + " sits on the asymptotic spectrum; moved to " + fmt_num(moved));
        std::cerr << "warning: " << warnings.back().get<std::string>() << "\n";
        tau = moved;
        nudged = true;
        break;
      }
    }
    const auto below = std::count_if(entries.begin(), entries.end(), [tau](double e) { return e < tau; });
    try {
      const auto rep = fredholm_index(msi, tau, tol);
      out.rows.push_back({tau, rep.index, rep.hat_index, static_cast<int>(below), nudged ? "nudged" : ""});
      rows.push_back({{"tau", tau}, {"index", rep.index}, {"hat_index", rep.hat_index}, {"interval_id", below}});
      if (nudged) rows.back()["flag"] = "nudged";
    } catch (const WeightError& e) {
      ++flagged;
      out.rows.push_back({tau, nullptr, nullptr, static_cast<int>(below), "outside_window"});
      rows.push_back({{"tau", tau}, {"index", nullptr}, {"hat_index", nullptr}, {"interval_id", below},
                      {"flag", e.what()}});
    }
  }
  out.report["rows"] = rows;
  out.report["warnings"] = warnings;
  out.report["flagged_rows"] = flagged;
  return out;
}

// ---------------------------------------------------------------- three-circle

GrowthField field_from_json(const Json& j) {
  auto c = [](const Json& v) {
    if (v.is_number()) return std::complex<double>(v.get<double>(), 0.0);
    if (v.is_array() && v.size() == 2) return std::complex<double>(v[0].get<double>(), v[1].get<double>());
    throw InputError("three-circle: coefficients are numbers or [re, im]");
  };
  std::vector<GrowthMode> modes;
  for (const auto& m : j.at("modes")) modes.push_back({m.at("mu").get<double>(), c(m.at("c_plus")), c(m.at("c_minus"))});
  try {
    return make_growth_field(j.at("n").get<int>(), std::move(modes));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Output run_three_circle(const std::string& input, double sigma_flag, std::optional<double> gamma_flag,
                        std::optional<double> K_flag) {
  Json spec;
  if (input.empty()) {
    // the oscillatory mode of the Clifford cone (lambda = -4)
    spec = {{"n", 3}, {"modes", {{{"mu", -2.0}, {"c_plus", {1.0, 0.0}}, {"c_minus", {1.0, 0.0}}}}}};
  } else {
    spec = read_json_file(input);
  }
  GrowthField field;
  double sigma = sigma_flag, gamma = 0.5;
  std::optional<double> K = K_flag;
  try {
    field = field_from_json(spec);
    if (spec.contains("sigma")) sigma = spec.at("sigma").get<double>();
    if (spec.contains("gamma")) gamma = spec.at("gamma").get<double>();
    if (spec.contains("K") && !K) K = spec.at("K").get<double>();
  } catch (const Json::exception& e) {
    throw InputError(std::string("three-circle: ") + e.what());
  }
  if (gamma_flag) gamma = *gamma_flag;

  Output out;
  const auto k0 = find_K0(sigma);
  const auto tk = three_circle_K(sigma);
  const double Kused = K.value_or(tk.K);
  const auto params = GrowthParams::make(gamma, Kused, sigma);
  const double residual = three_circle_residual(field, params);
  const double scale = three_circle_scale(field, params);
  out.report["sigma"] = sigma;
  out.report["gamma"] = gamma;
  out.report["K"] = Kused;
  out.report["K0_oscillatory"] = k0.K0;
  out.report["K_three_circle"] = tk.K;
  out.report["weight_gap"] = weight_gap(field, gamma);
  out.report["J"] = {growth_functional(field, params, 1.0 / (Kused * Kused)), growth_functional(field, params, 1.0 / Kused),
                     growth_functional(field, params, 1.0)};
  out.report["residual"] = residual;
  out.report["scale"] = scale;
  out.report["relative_residual"] = scale > 0.0 ? residual / scale : 0.0;
  Validators v;
  v.add("residual_nonnegative", residual >= -1e-12 * scale, "residual >= -1e-12 * scale");
  if (Kused < tk.K) v.add("K_at_least_threshold", false, "K below the sampled threshold " + fmt_num(tk.K));
  out.report["validators"] = v.list;
  out.ok = v.ok;
  return out;
}

// ---------------------------------------------------------------- k0

Output run_k0(std::vector<double> sigmas) {
  if (sigmas.empty()) sigmas = {0.1, 0.3, 0.5, 0.9};
  std::sort(sigmas.begin(), sigmas.end());
  Output out;
  out.header = {"sigma", "K0", "grid_index", "min_normalized", "certificate_K", "three_circle_K"};
  Json list = Json::array();
  Validators v;
  double prev = INFINITY;
  for (const double s : sigmas) {
    const auto r = find_K0(s);
    const auto tk = three_circle_K(s);
    const Json cert = r.certificate_K ? Json(*r.certificate_K) : Json(nullptr);
    list.push_back({{"sigma", s},
                    {"K0", r.K0},
                    {"grid_index", r.grid_index},
                    {"min_normalized", r.min_normalized},
                    {"samples", r.samples},
                    {"certificate_K", cert},
                    {"three_circle_K", tk.K},
                    {"three_circle_grid_index", tk.grid_index}});
    out.rows.push_back({s, r.K0, r.grid_index, r.min_normalized, cert, tk.K});
    v.add("K0_above_2.sigma=" + fmt_num(s), r.K0 > 2.0, "K0 = " + fmt_num(r.K0));
    v.add("monotone.sigma=" + fmt_num(s), r.K0 <= prev, "K0 non-increasing in sigma");
    prev = r.K0;
  }
  out.report["results"] = list;
  out.report["validators"] = v.list;
  out.ok = v.ok;
  return out;
}

// ---------------------------------------------------------------- ode

Output run_ode(double mu, int n, double r0, double r1, double f0, double df0, int every) {
  if (every < 1) throw InputError("ode: --every must be >= 1");
  const auto traj = radial_ode_solve(mu, n, {r0, r1}, {f0, df0});
  Output out;
  out.header = {"r", "f", "df"};
  Json rows = Json::array();
  for (std::size_t i = 0; i < traj.r.size(); ++i) {
    if (i % static_cast<std::size_t>(every) != 0 && i + 1 != traj.r.size()) continue;
    out.rows.push_back({traj.r[i], traj.f[i], traj.df[i]});
    rows.push_back({traj.r[i], traj.f[i], traj.df[i]});
  }
  out.report["mu"] = mu;
  out.report["n"] = n;
  out.report["steps"] = traj.steps;
  out.report["step"] = traj.step;
  out.report["trajectory"] = rows;
  return out;
}

// ---------------------------------------------------------------- rate

std::vector<std::pair<double, double>> read_samples(const std::string& path) {
  if (path.ends_with(".json")) {
    const auto j = read_json_file(path);
    std::vector<std::pair<double, double>> s;
    try {
      for (const auto& e : j) s.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    } catch (const Json::exception& e) {
      throw InputError(std::string("rate: expected [[s, annular_l2], ...]: ") + e.what());
    }
    return s;
  }
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::vector<std::pair<double, double>> s;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    double a = 0.0, b = 0.0;
    if (!(ls >> a >> b)) {
      if (s.empty()) continue;  // header
      throw InputError("rate: unreadable line '" + line + "'");
    }
    s.emplace_back(a, b);
  }
  return s;
}

Output run_rate(const std::string& input, int n) {
  if (input.empty()) throw InputError("rate: --input <samples.csv|json> is required");
  const auto samples = read_samples(input);
  RateFit fit;
  try {
    fit = fit_asymptotic_rate(samples, n);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  Output out;
  out.report["rate"] = fit.rate;
  out.report["rate_is_infinite"] = std::isinf(fit.rate);
  out.report["envelope_fit"] = fit.envelope;
  out.report["points_used"] = fit.points_used;
  out.report["samples"] = samples.size();
  return out;
}

// ---------------------------------------------------------------- thresholds

Output run_thresholds() {
  const auto t = area_thresholds();
  Output out;
  out.report = {{"football_area", t.football_area},
                {"football_area_printed", t.football_area_printed},
                {"football_print_discrepancy", t.football_print_discrepancy},
                {"football_print_difference", t.football_area - t.football_area_printed},
                {"threshold", t.threshold},
                {"threshold_printed", t.threshold_printed},
                {"two_A3", t.two_A3},
                {"A3", sphere_area(3)},
                {"football_below_threshold", t.football_below_threshold},
                {"threshold_equals_two_A3", t.threshold_equals_two_A3},
                {"football_density", t.football_density},
                {"pole_density", t.pole_density},
                {"clifford_cone_density_bound", density_bound(clifford_torus_area(), 3)},
                {"irregular_density_floor", irregular_density_floor()}};
  if (t.football_print_discrepancy) {
    char note[96];
    std::snprintf(note, sizeof note, "printed football area %.5f differs from pi^3 = %.5f", t.football_area_printed,
                  t.football_area);
    out.report["notes"] = Json::array({std::string(note)});
  }
  return out;
}

// ---------------------------------------------------------------- veronese

Output run_veronese(const std::vector<std::string>& fields, std::size_t samples, std::size_t grid, std::uint64_t seed) {
  std::vector<NormedField> tags;
  try {
    for (const auto& f : fields) tags.push_back(parse_field(f));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  if (tags.empty()) tags = {NormedField::R, NormedField::C, NormedField::H};
  Output out;
  out.header = {"field", "ambient_dim", "containment_max_error", "minimality_residual", "observed_order",
                "antipodal_bitwise"};
  Validators v;
  Json list = Json::array();
  for (const auto tag : tags) {
    const VeroneseField f{tag};
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<double> coords(static_cast<std::size_t>(3 * f.m()));
    double worst = 0.0;
    bool antipodal = true;
    for (std::size_t s = 0; s < samples; ++s) {
      for (auto& c : coords) c = gauss(rng);
      const auto y = veronese_embed(f, coords);
      double norm2 = 0.0;
      for (const double c : y) norm2 += c * c;
      worst = std::max(worst, std::abs(std::sqrt(norm2) - 1.0));
      std::vector<double> neg(coords);
      for (auto& c : neg) c = -c;
      antipodal = antipodal && veronese_embed(f, neg) == y;
    }
    const auto m = veronese_minimality_residual(f, grid);
    list.push_back({{"field", std::string(to_string(tag))},
                    {"ambient_dim", f.ambient_dim()},
                    {"containment_max_error", worst},
                    {"samples", samples},
                    {"antipodal_bitwise", antipodal},
                    {"minimality_residual", m.residual},
                    {"minimality_residual_h", m.residual_h},
                    {"minimality_residual_half", m.residual_half},
                    {"observed_order", m.observed_order},
                    {"chart_points", m.points},
                    {"step", m.step}});
    out.rows.push_back({std::string(to_string(tag)), f.ambient_dim(), worst, m.residual, m.observed_order, antipodal});
    const std::string name(to_string(tag));
    v.add("containment." + name, worst <= 1e-12, "max | |x| - 1 | <= 1e-12");
    v.add("minimality." + name, m.residual < 1e-3, "extrapolated residual < 1e-3");
    v.add("antipodal." + name, antipodal, "embed(-p) == embed(p) bitwise");
  }
  out.report["fields"] = list;
  out.report["validators"] = v.list;
  out.ok = v.ok;
  return out;
}

// ---------------------------------------------------------------- football

Output run_football(double cutoff, double lo, double hi, const Tolerances& tol) {
  const auto spec = clifford_torus_spectrum(cutoff);
  const auto msi = clifford_football(0.5, cutoff);
  const auto& cone = msi.cones.front();
  Output out;
  Validators v;

  out.report["spectrum"] = to_json(spec);
  out.report["morse_index"] = morse_index(spec);
  out.report["effective_index"] = effective_morse_index(cone);
  Json roots = Json::array();
  for (const auto& r : indicial_roots(spec, tol)) roots.push_back(to_json(r));
  out.report["roots"] = roots;
  out.report["gamma"] = to_json(cone.indicial);
  out.report["msi"] = {{"N", msi.N}, {"n", msi.n}, {"Q", msi.Q()}, {"augmentation_dim", msi.augmentation_dim()}};

  // components of (lo, hi) cut by the asymptotic spectrum
  std::vector<double> cuts{lo};
  for (const double e : union_entries(msi)) {
    if (e > lo && e < hi) cuts.push_back(e);
  }
  cuts.push_back(hi);
  Json comps = Json::array();
  Json jumps = Json::array();
  std::optional<int> prev;
  out.header = {"tau_lo", "tau_hi", "index", "hat_index", "provenance", "dual_ok"};
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    const auto rep = fredholm_index(msi, mid, tol);
    bool dual_ok = true;
    try {
      dual_ok = duality_check(msi, mid, tol);
    } catch (const WeightError&) {
      dual_ok = false;
    }
    v.add("duality.tau=" + fmt_num(mid), dual_ok, "index(2 - tau - n) = -index(tau)");
    comps.push_back({{"interval", {cuts[i], cuts[i + 1]}},
                     {"tau", mid},
                     {"index", rep.index},
                     {"hat_index", rep.hat_index},
                     {"provenance", std::string(to_string(rep.provenance))},
                     {"per_cone_I", rep.per_cone_I}});
    out.rows.push_back({cuts[i], cuts[i + 1], rep.index, rep.hat_index, std::string(to_string(rep.provenance)), dual_ok});
    if (prev) jumps.push_back(*prev - rep.index);
    prev = rep.index;
  }
  out.report["components"] = comps;
  out.report["jumps"] = jumps;
  out.report["index_at_tau"] = to_json(fredholm_index(msi, msi.tau, tol));
  out.report["classification"] = std::string(to_string(classify_generic(msi)));

  const auto t = area_thresholds();
  out.report["area"] = {{"football_area", t.football_area},
                        {"football_density", t.football_density},
                        {"pole_density", t.pole_density},
                        {"below_threshold", t.football_below_threshold}};
  cone_validators(msi, v);
  out.report["validators"] = v.list;
  out.ok = v.ok;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral and Fredholm-index accounting for regular minimal cones"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string output = "json";
  std::string config;
  app.add_option("--output", output, "json | csv | table")->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--config", config, "JSON file of tolerance overrides");

  std::string input;
  double cutoff = 5.0;
  std::size_t discrete = 0;
  auto* spectrum = app.add_subcommand("spectrum", "link spectrum (Clifford catalog or --input file)");
  spectrum->add_option("--input", input, "spectrum JSON");
  spectrum->add_option("--cutoff", cutoff, "catalog cutoff");
  spectrum->add_option("--discrete", discrete, "compare with the finite-difference operator at this grid and twice it");

  auto* indicial = app.add_subcommand("indicial", "indicial roots and asymptotic spectrum");
  indicial->add_option("--input", input, "spectrum JSON");
  indicial->add_option("--cutoff", cutoff, "catalog cutoff");

  std::optional<double> tau;
  auto* index = app.add_subcommand("index", "Fredholm index of an MSI model");
  index->add_option("--input", input, "MSI JSON")->required();
  index->add_option("--tau", tau, "weight (defaults to the file's tau)");

  double lo = -2.0, hi = 2.0;
  int steps = 40;
  auto* sweep = app.add_subcommand("sweep", "index over a weight grid (CSV by default)");
  sweep->add_option("--input", input, "MSI JSON")->required();
  sweep->add_option("--lo", lo, "first weight")->capture_default_str();
  sweep->add_option("--hi", hi, "last weight")->capture_default_str();
  sweep->add_option("--steps", steps, "grid intervals")->capture_default_str();

  double sigma = 0.5;
  std::optional<double> gamma, K;
  auto* three = app.add_subcommand("three-circle", "three-circle second difference of a Jacobi field");
  three->add_option("--input", input, "field JSON {n, modes:[{mu, c_plus, c_minus}], gamma, sigma, K}");
  three->add_option("--sigma", sigma, "required gap between gamma and the roots")->capture_default_str();
  three->add_option("--gamma", gamma, "weight")->capture_default_str();
  three->add_option("--K", K, "annulus ratio (default: three-circle K for sigma)");

  std::vector<double> sigmas;
  auto* k0 = app.add_subcommand("k0", "empirical K0(sigma) search");
  k0->add_option("--sigma", sigmas, "one or more sigma in (0,1)");

  double mu = -2.0, r0 = 1.0, r1 = 0.01, f0 = 1.0, df0 = 0.0;
  int n = 3, every = 1;
  auto* ode = app.add_subcommand("ode", "radial Euler equation r^2 f'' + (n-1) r f' - mu f = 0");
  ode->add_option("--mu", mu, "lambda + n - 1")->capture_default_str();
  ode->add_option("--n", n, "cone dimension")->capture_default_str();
  ode->add_option("--r0", r0, "where the initial data sit");
  ode->add_option("--r1", r1, "end of the integration")->capture_default_str();
  ode->add_option("--f0", f0, "f(r0)")->capture_default_str();
  ode->add_option("--df0", df0, "f'(r0)")->capture_default_str();
  ode->add_option("--every", every, "emit every k-th step");

  auto* rate = app.add_subcommand("rate", "asymptotic rate from annular L2 samples");
  rate->add_option("--input", input, "CSV or JSON of (s, annular_l2)")->required();
  rate->add_option("--n", n, "cone dimension")->capture_default_str();

  app.add_subcommand("thresholds", "area and density constants");

  std::vector<std::string> fields;
  std::size_t samples = 100000, grid = 16;
  std::uint64_t seed = 1;
  auto* veronese = app.add_subcommand("veronese", "Veronese embedding checks");
  veronese->add_option("--field", fields, "R, C, H (default all)");
  veronese->add_option("--samples", samples, "random sphere points per field")->capture_default_str();
  veronese->add_option("--grid", grid, "coarse step count for the minimality residual")->capture_default_str();
  veronese->add_option("--seed", seed)->capture_default_str();

  auto* football = app.add_subcommand("football", "end-to-end Clifford football report");
  football->add_option("--cutoff", cutoff, "link spectrum cutoff")->capture_default_str();
  football->add_option("--tau-lo", lo)->capture_default_str();
  football->add_option("--tau-hi", hi)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const Format format = output == "csv" ? Format::csv : output == "table" ? Format::table : Format::json;
  try {
    const Tolerances tol = config.empty() ? default_tolerances() : tolerances_from_json(read_json_file(config));
    Output out;
    if (*spectrum) out = run_spectrum(input, cutoff, discrete);
    else if (*indicial) out = run_indicial(input, cutoff, tol);
    else if (*index) out = run_index(input, tau, tol);
    else if (*sweep) out = run_sweep(input, lo, hi, steps, tol);
    else if (*three) out = run_three_circle(input, sigma, gamma, K);
    else if (*k0) out = run_k0(sigmas);
    else if (*ode) out = run_ode(mu, n, r0, r1, f0, df0, every);
    else if (*rate) out = run_rate(input, n);
    else if (app.got_subcommand("thresholds")) out = run_thresholds();
    else if (*veronese) out = run_veronese(fields, samples, grid, seed);
    else if (*football) out = run_football(cutoff, lo, hi, tol);
    out.report["tolerances"] = to_json(tol);
    out.report["ok"] = out.ok;
    const bool sweep_csv = *sweep && app.get_option("--output")->count() == 0;
    render(out, sweep_csv ? Format::csv : format);
    if (!out.ok) std::cerr << "validator failure\n";
    return out.ok ? 0 : 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const TruncationError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const WeightError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const HypothesisError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
