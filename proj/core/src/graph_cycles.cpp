#include "fwcycles/graph_cycles.hpp"

#include <algorithm>
#include <map>

#include "fwcycles/error.hpp"

namespace fwc {

Energy cost_at(const CostRows& rows, std::size_t from, std::size_t to) {
  const auto& row = rows.at(from);
  auto it = std::lower_bound(row.begin(), row.end(), to,
                             [](const CostEntry& e, std::size_t t) { return e.target < t; });
  if (it != row.end() && it->target == to) return it->cost;
  return Energy::infinity();
}

InitialCostFunction InitialCostFunction::metropolis(const Landscape& landscape) {
  InitialCostFunction f;
  f.metropolis_ = true;
  f.rows_.resize(landscape.size());
  for (StateIndex x = 0; x < landscape.size(); ++x) {
    for (const auto& n : landscape.neighbors(x)) {
      f.rows_[x].push_back({n.state, (landscape.energy(n.state) - landscape.energy(x)).positive_part()});
    }
  }
  return f;
}

InitialCostFunction InitialCostFunction::from_entries(
    const Landscape& landscape, const std::vector<std::tuple<StateIndex, StateIndex, Energy>>& entries) {
  InitialCostFunction f;
  f.rows_.resize(landscape.size());
  for (const auto& [from, to, cost] : entries) {
    if (from >= landscape.size() || to >= landscape.size())
      throw Error(ErrorCode::InvalidCostFunction, "cost entry mentions an unknown state");
    if (!landscape.adjacent(from, to))
      throw Error(ErrorCode::InvalidCostFunction,
                  "cost entry " + landscape.id(from) + "->" + landscape.id(to) + " is not on an edge");
    if (cost.is_infinite() || cost < Energy::zero())
      throw Error(ErrorCode::InvalidCostFunction,
                  "cost entry " + landscape.id(from) + "->" + landscape.id(to) + " must be finite and nonnegative");
    f.rows_[from].push_back({to, cost});
  }
  for (StateIndex x = 0; x < landscape.size(); ++x) {
    auto& row = f.rows_[x];
    std::sort(row.begin(), row.end(), [](const CostEntry& a, const CostEntry& b) { return a.target < b.target; });
    bool duplicate = std::adjacent_find(row.begin(), row.end(), [](const CostEntry& a, const CostEntry& b) {
                       return a.target == b.target;
                     }) != row.end();
    if (duplicate || row.size() != landscape.neighbors(x).size())
      throw Error(ErrorCode::InvalidCostFunction,
                  "edges leaving '" + landscape.id(x) + "' need exactly one cost entry each");
  }
  return f;
}

std::optional<std::size_t> PartitionLevel::find_class(const StateSet& members) const {
  if (members.empty() || members.front() >= owner.size()) return std::nullopt;
  std::size_t c = owner[members.front()];
  if (classes[c] == members) return c;
  return std::nullopt;
}

std::size_t PartitionLevel::require_class(const StateSet& members) const {
  if (auto c = find_class(members)) return *c;
  throw Error(ErrorCode::UnknownClass, "set is not a class of level " + std::to_string(index));
}

namespace {

void fill_derived(PartitionLevel& level) {
  const std::size_t m = level.classes.size();
  level.exit_height.assign(m, Energy::infinity());
  level.renormalized_cost.assign(m, {});
  for (std::size_t a = 0; a < m; ++a) {
    for (const auto& e : level.cost[a]) level.exit_height[a] = std::min(level.exit_height[a], e.cost);
    for (const auto& e : level.cost[a]) level.renormalized_cost[a].push_back({e.target, e.cost - level.exit_height[a]});
  }
}

std::vector<std::vector<std::size_t>> zero_cost_graph(const PartitionLevel& level) {
  std::vector<std::vector<std::size_t>> out(level.classes.size());
  for (std::size_t a = 0; a < level.classes.size(); ++a) {
    for (const auto& e : level.renormalized_cost[a]) {
      if (e.target != a && e.cost == Energy::zero()) out[a].push_back(e.target);
    }
  }
  return out;
}

/// Tarjan's algorithm without recursion. Returns a component id per vertex.
std::vector<std::size_t> strongly_connected_components(const std::vector<std::vector<std::size_t>>& graph,
                                                       std::size_t& count) {
  constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
  const std::size_t n = graph.size();
  std::vector<std::size_t> index(n, unvisited), low(n, 0), component(n, unvisited);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::pair<std::size_t, std::size_t>> call;  // (vertex, next edge)
  std::size_t counter = 0;
  count = 0;

  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != unvisited) continue;
    call.push_back({start, 0});
    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge == 0 && index[v] == unvisited) {
        index[v] = low[v] = counter++;
        stack.push_back(v);
        on_stack[v] = true;
      }
      if (edge < graph[v].size()) {
        std::size_t w = graph[v][edge++];
        if (index[w] == unvisited) {
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component[w] = count;
        } while (w != v);
        ++count;
      }
      std::size_t finished = v;
      call.pop_back();
      if (!call.empty()) {
        std::size_t parent = call.back().first;
        low[parent] = std::min(low[parent], low[finished]);
      }
    }
  }
  return component;
}

StateSet unite(const std::vector<StateSet>& classes, const std::vector<std::size_t>& parts) {
  std::vector<StateIndex> members;
  for (std::size_t p : parts) members.insert(members.end(), classes[p].begin(), classes[p].end());
  return StateSet(std::move(members));
}

bool by_first_member(const StateSet& a, const StateSet& b) { return a.front() < b.front(); }

}  // namespace

PartitionLevel initial_level(const Landscape& landscape) {
  return initial_level(landscape, InitialCostFunction::metropolis(landscape));
}

PartitionLevel initial_level(const Landscape& landscape, const InitialCostFunction& seed) {
  PartitionLevel level;
  level.index = 0;
  const std::size_t n = landscape.size();
  level.owner.resize(n);
  for (StateIndex x = 0; x < n; ++x) {
    level.classes.push_back(StateSet::singleton(x));
    level.owner[x] = x;
  }
  level.cost = seed.rows();
  level.merge_height.assign(n, std::nullopt);
  fill_derived(level);
  return level;
}

bool zero_cost_reaches(const PartitionLevel& level, const StateSet& from, const StateSet& to) {
  std::size_t a = level.require_class(from);
  std::size_t b = level.require_class(to);
  if (a == b) return true;
  auto graph = zero_cost_graph(level);
  std::vector<bool> seen(graph.size(), false);
  std::vector<std::size_t> stack{a};
  seen[a] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : graph[v]) {
      if (w == b) return true;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

AdvanceResult advance(const PartitionLevel& level) {
  if (level.is_terminal())
    throw Error(ErrorCode::AlreadyTerminal, "level " + std::to_string(level.index) + " is already the whole space");

  const std::size_t m = level.classes.size();
  auto graph = zero_cost_graph(level);
  std::size_t block_count = 0;
  auto block = strongly_connected_components(graph, block_count);

  std::vector<std::vector<std::size_t>> parts(block_count);
  for (std::size_t a = 0; a < m; ++a) parts[block[a]].push_back(a);

  // A block is minimal when no constituent has a zero-cost step into
  // another block.
  std::vector<bool> minimal(block_count, true);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t w : graph[a]) {
      if (block[w] != block[a]) minimal[block[a]] = false;
    }
  }

  AdvanceResult result;
  struct Pending {
    StateSet members;
    std::vector<std::size_t> parts;
  };
  std::vector<Pending> pending;
  for (std::size_t b = 0; b < block_count; ++b) {
    StateSet merged = unite(level.classes, parts[b]);
    result.step.merged.push_back(merged);
    if (minimal[b]) {
      result.step.minimal.push_back(merged);
      pending.push_back({std::move(merged), parts[b]});
    } else {
      for (std::size_t a : parts[b]) pending.push_back({level.classes[a], {a}});
    }
  }
  std::sort(result.step.merged.begin(), result.step.merged.end(), by_first_member);
  std::sort(result.step.minimal.begin(), result.step.minimal.end(), by_first_member);
  std::sort(pending.begin(), pending.end(),
            [](const Pending& a, const Pending& b) { return a.members.front() < b.members.front(); });

  PartitionLevel& next = result.next;
  next.index = level.index + 1;
  next.owner.resize(level.owner.size());
  std::vector<std::size_t> lifted(m);
  for (std::size_t c = 0; c < pending.size(); ++c) {
    for (std::size_t a : pending[c].parts) lifted[a] = c;
    for (StateIndex x : pending[c].members) next.owner[x] = c;
    Energy height = Energy::zero();
    bool first = true;
    for (std::size_t a : pending[c].parts) {
      height = first ? level.exit_height[a] : std::max(height, level.exit_height[a]);
      first = false;
    }
    next.merge_height.push_back(height);
    next.classes.push_back(std::move(pending[c].members));
  }

  // Cheapest renormalized step between constituents, shifted by the
  // source's merge height.
  std::vector<std::map<std::size_t, Energy>> cheapest(next.classes.size());
  for (std::size_t a = 0; a < m; ++a) {
    for (const auto& e : level.renormalized_cost[a]) {
      std::size_t from = lifted[a];
      std::size_t to = lifted[e.target];
      if (from == to || e.cost.is_infinite()) continue;
      auto [it, inserted] = cheapest[from].emplace(to, e.cost);
      if (!inserted) it->second = std::min(it->second, e.cost);
    }
  }
  next.cost.resize(next.classes.size());
  for (std::size_t c = 0; c < next.classes.size(); ++c) {
    for (const auto& [to, v] : cheapest[c]) next.cost[c].push_back({to, *next.merge_height[c] + v});
  }
  fill_derived(next);
  return result;
}

std::optional<std::size_t> DecompositionTrace::find_cycle(const StateSet& members) const {
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    if (cycles[i].members == members) return i;
  }
  return std::nullopt;
}

std::vector<StateSet> DecompositionTrace::maximal_subcycles(const StateSet& members) const {
  std::vector<const StateSet*> inside;
  for (const auto& c : cycles) {
    if (c.members != members && c.members.is_subset_of(members)) inside.push_back(&c.members);
  }
  std::vector<StateSet> out;
  for (const StateSet* a : inside) {
    bool covered = std::any_of(inside.begin(), inside.end(), [&](const StateSet* b) {
      return b != a && a->size() < b->size() && a->is_subset_of(*b);
    });
    if (!covered) out.push_back(*a);
  }
  std::sort(out.begin(), out.end(), by_first_member);
  return out;
}

DecompositionTrace run_decomposition(const Landscape& landscape, const std::optional<InitialCostFunction>& seed) {
  DecompositionTrace trace;
  InitialCostFunction costs = seed ? *seed : InitialCostFunction::metropolis(landscape);
  trace.metropolis_seed = costs.is_metropolis();
  trace.levels.push_back(initial_level(landscape, costs));

  while (!trace.levels.back().is_terminal()) {
    if (trace.levels.size() > landscape.size())
      throw Error(ErrorCode::NonTermination, "recursion did not reach the whole space within |S| steps");
    AdvanceResult r = advance(trace.levels.back());
    if (r.next.classes.size() >= trace.levels.back().classes.size())
      throw Error(ErrorCode::NonTermination, "step " + std::to_string(r.next.index) + " merged nothing");
    trace.steps.push_back(std::move(r.step));
    trace.levels.push_back(std::move(r.next));
  }
  trace.terminal_index = trace.levels.size() - 1;

  std::map<StateSet, std::size_t> lookup;
  for (const auto& level : trace.levels) {
    for (std::size_t c = 0; c < level.classes.size(); ++c) {
      auto [it, inserted] = lookup.emplace(level.classes[c], trace.cycles.size());
      if (inserted) {
        GraphCycle cycle;
        cycle.members = level.classes[c];
        cycle.first_level = cycle.last_level = level.index;
        cycle.exit_height = level.exit_height[c];
        cycle.creation_merge_height = level.merge_height[c];
        trace.cycles.push_back(std::move(cycle));
      } else {
        GraphCycle& cycle = trace.cycles[it->second];
        cycle.last_level = level.index;
        cycle.exit_height = std::max(cycle.exit_height, level.exit_height[c]);
      }
    }
  }

  for (std::size_t i = 0; i < trace.cycles.size(); ++i) {
    GraphCycle& cycle = trace.cycles[i];
    if (cycle.last_level == trace.terminal_index) {
      cycle.exit_height = Energy::infinity();
      continue;
    }
    const PartitionLevel& above = trace.levels[cycle.last_level + 1];
    std::size_t p = lookup.at(above.classes[above.owner[cycle.members.front()]]);
    cycle.parent = p;
    trace.cycles[p].children.push_back(i);
  }

  // Children are created strictly before their parents, so one pass in
  // creation order sees every subtree complete.
  std::vector<std::optional<Energy>> below(trace.cycles.size());
  for (std::size_t i = 0; i < trace.cycles.size(); ++i) {
    GraphCycle& cycle = trace.cycles[i];
    std::sort(cycle.children.begin(), cycle.children.end(), [&](std::size_t a, std::size_t b) {
      return trace.cycles[a].members.front() < trace.cycles[b].members.front();
    });
    for (std::size_t child : cycle.children) {
      Energy h = trace.cycles[child].exit_height;
      if (below[child]) h = std::max(h, *below[child]);
      below[i] = below[i] ? std::max(*below[i], h) : h;
    }
    if (cycle.members.size() == 1) {
      cycle.merge_height = cycle.exit_height;
    } else {
      cycle.merge_height = below[i].value_or(Energy::zero()).positive_part();
    }
  }
  return trace;
}

}  // namespace fwc
