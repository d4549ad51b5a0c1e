#pragma once

#include <cstdint>

#include "fwcycles/landscape.hpp"

namespace fwc {

/// Random connected landscapes for property tests and fuzz campaigns.
/// Small integer energy ranges are the point: they force plateaus and ties.
struct RandomLandscapeParams {
  std::size_t min_states = 2;
  std::size_t max_states = 10;
  /// Probability that each non-tree pair gets an extra edge.
  double edge_density = 0.2;
  std::int64_t min_energy = 0;
  std::int64_t max_energy = 6;
  std::int64_t energy_scale = kDefaultEnergyScale;
};

/// Uniform random spanning tree (each state attaches to an earlier one in a
/// shuffled order) plus independent extra edges; integer energies. State
/// ids are "s0", "s1", ...; every edge uses the default rate.
/// Deterministic in (params, seed).
Landscape random_landscape(const RandomLandscapeParams& params, std::uint64_t seed);

/// Same landscape with states and edges listed in a shuffled order.
Landscape shuffled_copy(const Landscape& landscape, std::uint64_t seed);

}  // namespace fwc
