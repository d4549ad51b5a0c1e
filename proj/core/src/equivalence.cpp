#include "fwcycles/equivalence.hpp"

#include <algorithm>
#include <cstdint>

#include "fwcycles/error.hpp"

namespace fwc {

bool EquivalenceReport::certified() const {
  return set_equal && exit_height_violations.empty() && merge_height_violations.empty() &&
         strict_order_violations.empty() && structural_violations.empty() &&
         std::all_of(conditions.begin(), conditions.end(), [](const LevelConditions& c) { return c.all(); });
}

namespace {

Energy expected_exit_height(const Landscape& landscape, const StateSet& a) {
  Energy floor = boundary_floor(landscape, a);
  if (floor.is_infinite()) return floor;
  return (floor - min_energy(landscape, a)).positive_part();
}

Energy spread(const Landscape& landscape, const StateSet& a) {
  return max_energy(landscape, a) - min_energy(landscape, a);
}

bool nested_or_disjoint(const StateSet& a, const StateSet& b) {
  return !a.intersects(b) || a.is_subset_of(b) || b.is_subset_of(a);
}

bool touching(const Landscape& landscape, const StateSet& a, const StateSet& b) {
  for (StateIndex x : a) {
    for (const auto& n : landscape.neighbors(x)) {
      if (b.contains(n.state)) return true;
    }
  }
  return false;
}

void check_structure(const Landscape& landscape, const std::vector<StateSet>& path_cycles,
                     const DecompositionTrace& trace, std::vector<std::string>& out) {
  for (std::size_t i = 0; i < path_cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < path_cycles.size(); ++j) {
      const auto& a = path_cycles[i];
      const auto& b = path_cycles[j];
      if (!nested_or_disjoint(a, b))
        out.push_back("path cycles " + landscape.describe(a) + " and " + landscape.describe(b) + " overlap");
      if (a.size() > 1 && b.size() > 1 && !a.intersects(b) && touching(landscape, a, b))
        out.push_back("disjoint non-trivial cycles " + landscape.describe(a) + " and " + landscape.describe(b) +
                      " are adjacent");
    }
  }
  for (std::size_t i = 0; i < trace.cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < trace.cycles.size(); ++j) {
      if (!nested_or_disjoint(trace.cycles[i].members, trace.cycles[j].members))
        out.push_back("graph cycles " + landscape.describe(trace.cycles[i].members) + " and " +
                      landscape.describe(trace.cycles[j].members) + " overlap");
    }
  }

  for (std::size_t k = 0; k + 1 < trace.levels.size(); ++k) {
    const PartitionLevel& now = trace.levels[k];
    const PartitionLevel& next = trace.levels[k + 1];
    std::vector<StateSet> fresh;
    std::vector<std::pair<std::size_t, std::size_t>> kept;  // (index in now, index in next)
    for (std::size_t c = 0; c < next.classes.size(); ++c) {
      if (auto old = now.find_class(next.classes[c])) {
        kept.push_back({*old, c});
        Energy he_now = now.exit_height[*old];
        if (!(next.merge_height[c] == he_now && next.exit_height[c] == he_now))
          out.push_back("class " + landscape.describe(next.classes[c]) + " changes exit height between levels " +
                        std::to_string(k) + " and " + std::to_string(k + 1));
      } else {
        fresh.push_back(next.classes[c]);
      }
    }
    std::vector<StateSet> minimal = trace.steps[k].minimal;
    std::sort(fresh.begin(), fresh.end());
    std::sort(minimal.begin(), minimal.end());
    if (fresh != minimal)
      out.push_back("classes new at level " + std::to_string(k + 1) + " differ from the minimal merged blocks");
    for (auto [a_now, a_next] : kept) {
      for (auto [b_now, b_next] : kept) {
        if (a_now == b_now) continue;
        if (cost_at(now.cost, a_now, b_now) != cost_at(next.cost, a_next, b_next))
          out.push_back("cost " + landscape.describe(now.classes[a_now]) + "->" +
                        landscape.describe(now.classes[b_now]) + " changes at level " + std::to_string(k + 1));
      }
    }
  }
}

}  // namespace

std::vector<LevelConditions> check_level_conditions(const Landscape& landscape, const DecompositionTrace& trace) {
  std::vector<LevelConditions> out;
  for (const auto& level : trace.levels) {
    LevelConditions c;
    c.level = level.index;
    for (std::size_t a = 0; a < level.classes.size(); ++a) {
      const StateSet& set = level.classes[a];
      if (!is_path_cycle(landscape, set)) c.path_cycle = false;
      if (level.exit_height[a] != expected_exit_height(landscape, set)) c.exit_height = false;
      if (set.size() == 1) continue;
      // A class kept from the previous level carries its old exit height as
      // merge height, so the spread identity is checked where the class is created.
      bool fresh = level.index == 0 || !trace.levels[level.index - 1].find_class(set);
      if (fresh && (!level.merge_height[a] || *level.merge_height[a] != spread(landscape, set)))
        c.merge_height = false;
      Energy low = min_energy(landscape, set);
      for (StateIndex y : exterior_boundary(landscape, set)) {
        auto single = level.find_class(StateSet::singleton(y));
        if (!single) continue;
        if (cost_at(level.cost, a, *single) != landscape.energy(y) - low) c.singleton_costs = false;
        if (cost_at(level.cost, *single, a) != Energy::zero()) c.singleton_costs = false;
      }
    }
    out.push_back(c);
  }
  return out;
}

EquivalenceReport verify_equivalence(const Landscape& landscape) {
  EquivalenceReport report;
  CycleTree tree = enumerate_path_cycles(landscape);
  DecompositionTrace trace = run_decomposition(landscape);

  std::vector<StateSet> path_sets;
  for (const auto& node : tree.nodes) path_sets.push_back(node.members);
  std::vector<StateSet> graph_sets;
  for (const auto& cycle : trace.cycles) graph_sets.push_back(cycle.members);
  std::sort(path_sets.begin(), path_sets.end());
  std::sort(graph_sets.begin(), graph_sets.end());
  report.path_cycle_count = path_sets.size();
  report.graph_cycle_count = graph_sets.size();
  std::set_difference(path_sets.begin(), path_sets.end(), graph_sets.begin(), graph_sets.end(),
                      std::back_inserter(report.only_path_cycles));
  std::set_difference(graph_sets.begin(), graph_sets.end(), path_sets.begin(), path_sets.end(),
                      std::back_inserter(report.only_graph_cycles));
  report.set_equal = report.only_path_cycles.empty() && report.only_graph_cycles.empty();

  for (const auto& cycle : trace.cycles) {
    Energy he = expected_exit_height(landscape, cycle.members);
    if (cycle.exit_height != he) report.exit_height_violations.push_back({cycle.members, cycle.exit_height, he});
    Energy hm = cycle.members.size() > 1 ? spread(landscape, cycle.members) : cycle.exit_height;
    if (cycle.merge_height != hm) report.merge_height_violations.push_back({cycle.members, cycle.merge_height, hm});
    if (cycle.members.size() > 1 && !(cycle.merge_height < cycle.exit_height))
      report.strict_order_violations.push_back(cycle.members);
  }

  check_structure(landscape, path_sets, trace, report.structural_violations);
  report.conditions = check_level_conditions(landscape, trace);
  return report;
}

std::vector<StateSet> brute_force_path_cycles(const Landscape& landscape) {
  const std::size_t n = landscape.size();
  if (n > kBruteForceLimit)
    throw Error(ErrorCode::TooLarge, std::to_string(n) + " states exceed the exhaustive-scan limit of " +
                                         std::to_string(kBruteForceLimit));
  std::vector<std::uint32_t> adjacent(n, 0);
  for (StateIndex x = 0; x < n; ++x) {
    for (const auto& nb : landscape.neighbors(x)) adjacent[x] |= std::uint32_t{1} << nb.state;
  }

  std::vector<StateSet> out;
  const std::uint32_t full = n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= full && mask != 0; ++mask) {
    std::vector<StateIndex> members;
    for (StateIndex x = 0; x < n; ++x) {
      if (mask & (std::uint32_t{1} << x)) members.push_back(x);
    }
    if (members.size() > 1) {
      // Flood fill restricted to the mask.
      std::uint32_t reached = std::uint32_t{1} << members.front();
      std::uint32_t grown = reached;
      do {
        reached = grown;
        for (StateIndex x = 0; x < n; ++x) {
          if (reached & (std::uint32_t{1} << x)) grown |= adjacent[x] & mask;
        }
      } while (grown != reached);
      if (reached != mask) continue;

      std::uint32_t outside = 0;
      Energy highest = landscape.energy(members.front());
      for (StateIndex x : members) {
        outside |= adjacent[x];
        highest = std::max(highest, landscape.energy(x));
      }
      outside &= ~mask;
      bool strict = true;
      for (StateIndex y = 0; y < n && strict; ++y) {
        if ((outside & (std::uint32_t{1} << y)) && !(highest < landscape.energy(y))) strict = false;
      }
      if (!strict) continue;
    }
    out.emplace_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fwc
