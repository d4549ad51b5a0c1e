#pragma once

#include <cstddef>
#include <optional>
#include <tuple>
#include <vector>

#include "fwcycles/landscape.hpp"

namespace fwc {

/// Finite cost entries of one row, sorted by target. Missing targets cost +inf.
struct CostEntry {
  std::size_t target;
  Energy cost;
};
using CostRows = std::vector<std::vector<CostEntry>>;

/// Lookup in a sorted row; +inf when absent.
Energy cost_at(const CostRows& rows, std::size_t from, std::size_t to);

/// Pairwise state costs that seed the recursion. Finite exactly on
/// q-positive pairs and never negative.
class InitialCostFunction {
 public:
  /// (H(y) - H(x))^+ on every edge.
  static InitialCostFunction metropolis(const Landscape& landscape);
  /// Arbitrary directed costs; every edge direction must be listed once.
  /// Throws InvalidCostFunction otherwise.
  static InitialCostFunction from_entries(const Landscape& landscape,
                                          const std::vector<std::tuple<StateIndex, StateIndex, Energy>>& entries);

  const CostRows& rows() const noexcept { return rows_; }
  Energy cost(StateIndex from, StateIndex to) const { return cost_at(rows_, from, to); }
  bool is_metropolis() const noexcept { return metropolis_; }

 private:
  CostRows rows_;
  bool metropolis_ = false;
};

/// One generation of the recursion: a partition of the state space with its
/// cost function and derived quantities.
struct PartitionLevel {
  std::size_t index = 0;
  /// Ordered by smallest member index.
  std::vector<StateSet> classes;
  /// owner[x] = position in `classes` of the class containing state x.
  std::vector<std::size_t> owner;
  CostRows cost;
  /// min over other classes of cost; +inf when there is no other class.
  std::vector<Energy> exit_height;
  /// cost minus exit height of the source; finite where cost is finite.
  CostRows renormalized_cost;
  /// Max exit height of the previous-level constituents. Empty at level 0.
  std::vector<std::optional<Energy>> merge_height;

  std::optional<std::size_t> find_class(const StateSet& members) const;
  std::size_t require_class(const StateSet& members) const;  // throws UnknownClass
  bool is_terminal() const noexcept { return classes.size() == 1; }
};

/// The merged blocks of one step: all mutual zero-cost classes glued
/// together, and the subset that cannot leave at zero cost.
struct MergeStep {
  std::vector<StateSet> merged;
  std::vector<StateSet> minimal;
};

struct AdvanceResult {
  PartitionLevel next;
  MergeStep step;
};

PartitionLevel initial_level(const Landscape& landscape);
PartitionLevel initial_level(const Landscape& landscape, const InitialCostFunction& seed);

/// True iff a chain of classes from `from` to `to` has zero total
/// renormalized cost. Every class reaches itself.
bool zero_cost_reaches(const PartitionLevel& level, const StateSet& from, const StateSet& to);

/// One step of the recursion. Throws AlreadyTerminal on the single-class level.
AdvanceResult advance(const PartitionLevel& level);

struct GraphCycle {
  StateSet members;
  /// Constant exit height across the levels holding this class; +inf for S.
  Energy exit_height;
  /// Singletons: the exit height. Otherwise the largest exit height of a
  /// strictly smaller graph cycle, floored at 0.
  Energy merge_height;
  /// Per-level merge height recorded when the class was created (absent
  /// for singletons, which exist from level 0).
  std::optional<Energy> creation_merge_height;
  std::size_t first_level = 0;
  std::size_t last_level = 0;
  std::optional<std::size_t> parent;
  /// Maximal strictly smaller graph cycles (they partition the members).
  std::vector<std::size_t> children;
};

struct DecompositionTrace {
  std::vector<PartitionLevel> levels;
  /// steps[k] produced levels[k + 1].
  std::vector<MergeStep> steps;
  std::vector<GraphCycle> cycles;
  /// First index with a single class.
  std::size_t terminal_index = 0;
  bool metropolis_seed = true;

  std::optional<std::size_t> find_cycle(const StateSet& members) const;
  /// Maximal elements among the graph cycles strictly inside `members`.
  std::vector<StateSet> maximal_subcycles(const StateSet& members) const;
};

DecompositionTrace run_decomposition(const Landscape& landscape,
                                     const std::optional<InitialCostFunction>& seed = std::nullopt);

}  // namespace fwc
