#pragma once

// JSON reading and canonical writing. Canonical output has sorted keys, floats
// at 17 significant digits and null for non-finite numbers, so identical inputs
// give byte-identical files.
//
// Spectrum file:  {"n": 3, "N": 4, "connected": true, "cutoff": 5,
//                  "eigenvalues": [[-4, 1], [-2, 4], ...]}
// MSI file:       {"N": 4, "n": 3, "tau": 0.5,
//                  "cones": ["catalog:clifford", "link.json", {<spectrum>}, ...],
//                  "link_area": [ ... optional, one per cone ... ]}

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "conindex/fredholm.hpp"
#include "conindex/indicial.hpp"
#include "conindex/spectra.hpp"
#include "conindex/tolerances.hpp"

namespace conindex {

using Json = nlohmann::json;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string dump_canonical(const Json& j, int indent = 2);

Json read_json_file(const std::filesystem::path& path);

Json to_json(const LinkSpectrum& spec);
Json to_json(const IndicialRoot& root);
Json to_json(const AsymptoticSpectrum& gamma);
Json to_json(const IndexReport& report);
Json to_json(const Tolerances& tol);

LinkSpectrum spectrum_from_json(const Json& j);
LinkSpectrum read_spectrum_file(const std::filesystem::path& path);

// Relative cone paths resolve against base_dir.
MSIModel msi_from_json(const Json& j, const std::filesystem::path& base_dir = {},
                       const Tolerances& tol = default_tolerances());
MSIModel read_msi_file(const std::filesystem::path& path, const Tolerances& tol = default_tolerances());

// {"tolerances": {"log_case_rel": 1e-10, ...}} or a flat object of the same keys.
Tolerances tolerances_from_json(const Json& j);

}  // namespace conindex
