#pragma once

#include <optional>
#include <vector>

#include "fwcycles/landscape.hpp"

namespace fwc {

/// A singleton, or a connected set whose highest energy is strictly below
/// the lowest energy of its exterior boundary (+inf for an empty boundary).
bool is_path_cycle(const Landscape& landscape, const StateSet& set);

/// All states reachable from x through states of energy <= level.
/// Throws LevelBelowStart when level < H(x).
StateSet sublevel_component(const Landscape& landscape, StateIndex x, Energy level);

/// min over the exterior boundary minus min over the set (+inf when the
/// boundary is empty). Throws NotACycle.
Energy depth(const Landscape& landscape, const StateSet& cycle);
/// max over the set minus min over the set. Throws NotACycle.
Energy resistance_height(const Landscape& landscape, const StateSet& cycle);

struct CycleNode {
  StateSet members;
  Energy depth;           // +inf for the whole space
  Energy resistance;
  StateSet ground;
  Energy boundary_floor;  // +inf for the whole space
  /// Singleton that is not a strict local minimum.
  bool trivial = false;
  std::optional<std::size_t> parent;
  std::vector<std::size_t> children;
};

struct CycleTree {
  std::vector<CycleNode> nodes;
  std::size_t root = 0;

  std::optional<std::size_t> find(const StateSet& members) const;
};

/// Every path cycle exactly once, linked by inclusion. Sweeps the distinct
/// energies upward, growing sub-level components with a union-find; each
/// component that changes at a level is a new cycle.
CycleTree enumerate_path_cycles(const Landscape& landscape);

}  // namespace fwc
