#pragma once

#include <algorithm>
#include <filesystem>
#include <string>
#include <vector>

#include "fwcycles/landscape.hpp"
#include "fwcycles/landscape_io.hpp"

namespace fwc::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(FWCYCLES_TEST_DATA_DIR) / name;
}

inline Landscape load_fixture(const std::string& name) { return load_landscape(data_path(name)); }

/// The eleven-state chain a..k with energies 2,5,1,2,2,2,4,3,0,1,5.
inline const Landscape& fig1() {
  static const Landscape landscape = load_fixture("fig1.json");
  return landscape;
}

/// Energy in whole units of the landscape scale.
inline Energy units(const Landscape& landscape, std::int64_t whole) {
  return Energy::from_units(whole * landscape.energy_scale());
}

/// Parses "cdef" or "c,d,e,f" style shorthands for single-letter ids.
inline StateSet set_of(const Landscape& landscape, const std::string& letters) {
  std::vector<StateIndex> members;
  for (char c : letters) {
    if (c == ',') continue;
    members.push_back(landscape.index_of(std::string(1, c)));
  }
  return StateSet(std::move(members));
}

inline std::vector<StateSet> sets_of(const Landscape& landscape, const std::vector<std::string>& shorthands) {
  std::vector<StateSet> out;
  for (const auto& s : shorthands) out.push_back(set_of(landscape, s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fwc::testing
