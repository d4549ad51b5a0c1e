#pragma once

#include <filesystem>
#include <istream>
#include <string>

#include <nlohmann/json.hpp>

#include "fwcycles/landscape.hpp"

namespace fwc {

enum class LandscapeFormat { json };

/// Reads a landscape document:
///
///   { "energy_scale": 1000000,                      (optional)
///     "states": [ {"id": "a", "energy": "2.5"}, ... ],
///     "edges":  [ ["a", "b"], {"pair": ["b", "c"], "q": "0.25"}, ... ] }
///
/// Energies and rates are exact decimal strings (or "p/q"); plain JSON
/// integers are accepted too. Edges without "q" get 1/max_degree.
Landscape load_landscape(std::istream& source, LandscapeFormat format = LandscapeFormat::json);
Landscape load_landscape(const std::filesystem::path& path);
Landscape landscape_from_json(const nlohmann::ordered_json& document);

nlohmann::ordered_json landscape_to_json(const Landscape& landscape);
/// Canonical text; load then write of this output is byte-identical.
std::string write_landscape(const Landscape& landscape);

}  // namespace fwc
