#include "conindex/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace conindex {

namespace {

void write_string(std::string& out, const std::string& s) {
  out += Json(s).dump();
}

void write_value(std::string& out, const Json& j, int indent, int depth) {
  const std::string pad = indent > 0 ? std::string(static_cast<std::size_t>(indent * (depth + 1)), ' ') : "";
  const std::string close = indent > 0 ? std::string(static_cast<std::size_t>(indent * depth), ' ') : "";
  const char* nl = indent > 0 ? "\n" : "";
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{";
      out += nl;
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted keys
        if (!first) {
          out += ",";
          out += nl;
        }
        first = false;
        out += pad;
        write_string(out, it.key());
        out += indent > 0 ? ": " : ":";
        write_value(out, it.value(), indent, depth + 1);
      }
      out += nl;
      out += close;
      out += "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // short numeric rows stay on one line
      const bool flat = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      out += "[";
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) {
          out += nl;
          out += pad;
        }
        write_value(out, e, indent, depth + 1);
      }
      if (!flat) {
        out += nl;
        out += close;
      }
      out += "]";
      return;
    }
    case Json::value_t::number_float: {
      const double v = j.get<double>();
      if (!std::isfinite(v)) {
        out += "null";
        return;
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", v);
      out += buf;
      return;
    }
    default:
      out += j.dump();
  }
}

const Json& require(const Json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string(what) + ": missing key '" + key + "'");
  return j.at(key);
}

template <class T>
T get_as(const Json& j, const char* key, const char* what) {
  try {
    return require(j, key, what).get<T>();
  } catch (const Json::exception& e) {
    throw InputError(std::string(what) + ": bad value for '" + key + "': " + e.what());
  }
}

}  // namespace

std::string dump_canonical(const Json& j, int indent) {
  std::string out;
  write_value(out, j, indent, 0);
  out += "\n";
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

Json to_json(const LinkSpectrum& spec) {
  Json eig = Json::array();
  Json exact = Json::array();
  bool any_exact = false;
  for (const auto& e : spec.eigenvalues()) {
    eig.push_back({e.value, e.multiplicity});
    exact.push_back(e.exact ? Json(e.exact->str()) : Json(nullptr));
    any_exact = any_exact || e.exact.has_value();
  }
  Json j{{"n", spec.n()},
         {"N", spec.N()},
         {"connected", spec.connected()},
         {"cutoff", spec.cutoff()},
         {"eigenvalues", eig},
         {"total_multiplicity", spec.total_multiplicity()}};
  if (any_exact) j["exact"] = exact;
  return j;
}

Json to_json(const IndicialRoot& root) {
  auto c = [](std::complex<double> z) { return Json{{"re", z.real()}, {"im", z.imag()}}; };
  return {{"lambda", root.lambda},
          {"mu", root.mu},
          {"gamma_plus", c(root.gamma_plus)},
          {"gamma_minus", c(root.gamma_minus)},
          {"case", std::string(to_string(root.case_tag))},
          {"multiplicity", root.eigen_multiplicity},
          {"near_degenerate", root.near_degenerate}};
}

Json to_json(const AsymptoticSpectrum& gamma) {
  Json entries = Json::array();
  for (const auto& e : gamma.entries) entries.push_back({e.real_part, e.crossing_multiplicity});
  return {{"entries", entries},
          {"gamma_minus", gamma.gamma_minus_of_cone},
          {"gamma_star", {gamma.gamma_star_low, gamma.gamma_star_high}},
          {"complete_window", {gamma.complete_below, gamma.complete_above}}};
}

Json to_json(const IndexReport& r) {
  return {{"tau", r.tau},
          {"tau_interval", {r.tau_interval.first, r.tau_interval.second}},
          {"index", r.index},
          {"hat_index", r.hat_index},
          {"per_cone_I", r.per_cone_I},
          {"admissible_tau", r.admissible_tau},
          {"provenance", std::string(to_string(r.provenance))},
          {"N", r.N},
          {"Q", r.Q}};
}

Json to_json(const Tolerances& tol) {
  return {{"version", kToleranceVersion},
          {"eigen_cluster_rel", tol.eigen_cluster_rel},
          {"log_case_rel", tol.log_case_rel},
          {"gamma_dedup_abs", tol.gamma_dedup_abs},
          {"tau_root_abs", tol.tau_root_abs},
          {"eigen_residual_rel", tol.eigen_residual_rel}};
}

LinkSpectrum spectrum_from_json(const Json& j) {
  const char* what = "spectrum";
  const int n = get_as<int>(j, "n", what);
  const int N = get_as<int>(j, "N", what);
  const bool connected = j.contains("connected") ? get_as<bool>(j, "connected", what) : true;
  const double cutoff = get_as<double>(j, "cutoff", what);
  std::vector<std::pair<double, int>> entries;
  for (const auto& e : require(j, "eigenvalues", what)) {
    if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number_integer()) {
      entries.emplace_back(e[0].get<double>(), e[1].get<int>());
    } else if (e.is_number()) {
      entries.emplace_back(e.get<double>(), 1);
    } else {
      throw InputError("spectrum: eigenvalue entries must be numbers or [value, multiplicity] pairs");
    }
  }
  try {
    return user_spectrum(std::move(entries), n, N, connected, cutoff);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

LinkSpectrum read_spectrum_file(const std::filesystem::path& path) { return spectrum_from_json(read_json_file(path)); }

MSIModel msi_from_json(const Json& j, const std::filesystem::path& base_dir, const Tolerances& tol) {
  const char* what = "msi";
  const int N = get_as<int>(j, "N", what);
  const int n = get_as<int>(j, "n", what);
  const double tau = j.contains("tau") ? get_as<double>(j, "tau", what) : 0.5;
  const Json& cones_json = require(j, "cones", what);
  if (!cones_json.is_array()) throw InputError("msi: 'cones' must be an array");
  std::vector<double> areas;
  if (j.contains("link_area")) {
    const auto& a = j.at("link_area");
    if (!a.is_array() || a.size() != cones_json.size()) {
      throw InputError("msi: 'link_area' must list one area per cone");
    }
    for (const auto& v : a) areas.push_back(v.is_null() ? NAN : v.get<double>());
  }
  std::vector<ConeModel> cones;
  for (std::size_t i = 0; i < cones_json.size(); ++i) {
    const auto& c = cones_json[i];
    std::optional<double> area;
    if (!areas.empty() && std::isfinite(areas[i])) area = areas[i];
    try {
      if (c.is_string()) {
        const auto s = c.get<std::string>();
        if (s == "catalog:clifford") {
          auto cone = clifford_cone();
          if (area) cone = make_cone(cone.link, area, tol);
          cones.push_back(std::move(cone));
        } else if (s.starts_with("catalog:")) {
          throw InputError("msi: unknown catalog entry '" + s + "'");
        } else {
          cones.push_back(make_cone(read_spectrum_file(base_dir / s), area, tol));
        }
      } else if (c.is_object()) {
        cones.push_back(make_cone(spectrum_from_json(c), area, tol));
      } else {
        throw InputError("msi: cone entries must be catalog names, paths or spectrum objects");
      }
    } catch (const InputError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("msi: cone ") + std::to_string(i) + ": " + e.what());
    }
  }
  try {
    return make_msi(N, n, std::move(cones), tau);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

MSIModel read_msi_file(const std::filesystem::path& path, const Tolerances& tol) {
  return msi_from_json(read_json_file(path), path.parent_path(), tol);
}

Tolerances tolerances_from_json(const Json& j) {
  const Json& body = j.contains("tolerances") ? j.at("tolerances") : j;
  if (!body.is_object()) throw InputError("config: expected an object of tolerances");
  Tolerances tol = default_tolerances();
  for (auto it = body.begin(); it != body.end(); ++it) {
    if (it.key() == "version") {
      if (!it.value().is_number_integer() || it.value().get<int>() != kToleranceVersion) {
        throw InputError("config: tolerance version mismatch");
      }
      continue;
    }
    if (!it.value().is_number()) throw InputError("config: '" + it.key() + "' must be a number");
    try {
      tol.set(it.key(), it.value().get<double>());
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("config: ") + e.what());
    }
  }
  return tol;
}

}  // namespace conindex
