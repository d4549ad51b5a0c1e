#pragma once

#include <string>
#include <vector>

#include "fwcycles/graph_cycles.hpp"
#include "fwcycles/landscape.hpp"
#include "fwcycles/path_cycles.hpp"

namespace fwc {

struct IdentityViolation {
  StateSet cycle;
  Energy computed;
  Energy expected;
};

/// Pass/fail of the four per-level conditions: every class is a path
/// cycle (I); costs between a non-singleton class and an adjacent singleton
/// class are H(a) - min_A H outward and 0 inward (II); exit heights match
/// (min over boundary - min)^+ (III); merge heights of non-singletons match
/// max - min at the level that creates them (IV).
struct LevelConditions {
  std::size_t level = 0;
  bool path_cycle = true;
  bool singleton_costs = true;
  bool exit_height = true;
  bool merge_height = true;

  bool all() const noexcept { return path_cycle && singleton_costs && exit_height && merge_height; }
};

struct EquivalenceReport {
  bool set_equal = false;
  std::size_t path_cycle_count = 0;
  std::size_t graph_cycle_count = 0;
  std::vector<StateSet> only_path_cycles;
  std::vector<StateSet> only_graph_cycles;
  std::vector<IdentityViolation> exit_height_violations;
  std::vector<IdentityViolation> merge_height_violations;
  /// Non-trivial cycles whose merge height is not strictly below their exit height.
  std::vector<StateSet> strict_order_violations;
  /// Human-readable failures of nesting, non-adjacency, constant exit
  /// heights across levels, and "new classes are exactly the minimal blocks".
  std::vector<std::string> structural_violations;
  std::vector<LevelConditions> conditions;

  bool certified() const;
};

/// Per-level conditions for a Metropolis-seeded trace.
std::vector<LevelConditions> check_level_conditions(const Landscape& landscape, const DecompositionTrace& trace);

/// Runs both decompositions and checks they describe the same cycles with
/// the same heights. Violations are collected, never thrown.
EquivalenceReport verify_equivalence(const Landscape& landscape);

inline constexpr std::size_t kBruteForceLimit = 20;

/// Every connected subset passing the cycle test, found by scanning all
/// 2^|S| subsets. Shares no code with the sweep. Throws TooLarge above
/// kBruteForceLimit states.
std::vector<StateSet> brute_force_path_cycles(const Landscape& landscape);

}  // namespace fwc
