#include "fwcycles/path_cycles.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "fwcycles/error.hpp"

namespace fwc {

bool is_path_cycle(const Landscape& landscape, const StateSet& set) {
  landscape.check_subset(set);
  if (set.size() == 1) return true;
  if (!is_connected_subset(landscape, set)) return false;
  return max_energy(landscape, set) < boundary_floor(landscape, set);
}

StateSet sublevel_component(const Landscape& landscape, StateIndex x, Energy level) {
  if (x >= landscape.size()) throw Error(ErrorCode::ForeignState, "state index out of range");
  if (level < landscape.energy(x))
    throw Error(ErrorCode::LevelBelowStart,
                "level " + landscape.format(level) + " is below H(" + landscape.id(x) + ")");
  std::vector<bool> seen(landscape.size(), false);
  std::vector<StateIndex> stack{x};
  std::vector<StateIndex> members{x};
  seen[x] = true;
  while (!stack.empty()) {
    StateIndex y = stack.back();
    stack.pop_back();
    for (const auto& n : landscape.neighbors(y)) {
      if (!seen[n.state] && landscape.energy(n.state) <= level) {
        seen[n.state] = true;
        members.push_back(n.state);
        stack.push_back(n.state);
      }
    }
  }
  return StateSet(std::move(members));
}

Energy depth(const Landscape& landscape, const StateSet& cycle) {
  if (!is_path_cycle(landscape, cycle))
    throw Error(ErrorCode::NotACycle, landscape.describe(cycle) + " is not a path cycle");
  return boundary_floor(landscape, cycle) - min_energy(landscape, cycle);
}

Energy resistance_height(const Landscape& landscape, const StateSet& cycle) {
  if (!is_path_cycle(landscape, cycle))
    throw Error(ErrorCode::NotACycle, landscape.describe(cycle) + " is not a path cycle");
  return max_energy(landscape, cycle) - min_energy(landscape, cycle);
}

std::optional<std::size_t> CycleTree::find(const StateSet& members) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].members == members) return i;
  }
  return std::nullopt;
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

CycleNode make_node(const Landscape& landscape, StateSet members, bool is_whole) {
  CycleNode node;
  Energy low = min_energy(landscape, members);
  node.boundary_floor = is_whole ? Energy::infinity() : boundary_floor(landscape, members);
  node.depth = node.boundary_floor - low;
  node.resistance = max_energy(landscape, members) - low;
  node.ground = ground(landscape, members);
  node.trivial = members.size() == 1 && !(landscape.energy(members.front()) < node.boundary_floor);
  node.members = std::move(members);
  return node;
}

}  // namespace

CycleTree enumerate_path_cycles(const Landscape& landscape) {
  const std::size_t n = landscape.size();
  std::vector<StateIndex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](StateIndex a, StateIndex b) { return landscape.energy(a) < landscape.energy(b); });

  CycleTree tree;
  DisjointSets components(n);
  std::vector<bool> active(n, false);
  std::vector<std::size_t> current(n, 0);  // smallest emitted node containing each active state
  std::vector<StateIndex> active_states;

  for (std::size_t begin = 0; begin < n;) {
    std::size_t end = begin;
    Energy level = landscape.energy(order[begin]);
    while (end < n && landscape.energy(order[end]) == level) ++end;

    // The whole level enters at once so plateaus merge before any test.
    for (std::size_t i = begin; i < end; ++i) {
      StateIndex x = order[i];
      active[x] = true;
      active_states.push_back(x);
      current[x] = tree.nodes.size();
      tree.nodes.push_back(make_node(landscape, StateSet::singleton(x), n == 1));
    }
    for (std::size_t i = begin; i < end; ++i) {
      StateIndex x = order[i];
      for (const auto& nb : landscape.neighbors(x)) {
        if (active[nb.state]) components.unite(x, nb.state);
      }
    }

    std::map<std::size_t, std::vector<StateIndex>> touched;
    for (std::size_t i = begin; i < end; ++i) touched.emplace(components.find(order[i]), std::vector<StateIndex>{});
    for (StateIndex x : active_states) {
      auto it = touched.find(components.find(x));
      if (it != touched.end()) it->second.push_back(x);
    }

    for (auto& [root, members] : touched) {
      if (members.size() == 1) continue;
      StateSet set(std::move(members));
      bool whole = set.size() == n;
      CycleNode node = make_node(landscape, set, whole);
      if (!(max_energy(landscape, node.members) < node.boundary_floor))
        throw Error(ErrorCode::NotACycle, "sub-level component " + landscape.describe(node.members) +
                                              " violates the cycle condition");
      std::size_t id = tree.nodes.size();
      std::vector<std::size_t> kids;
      for (StateIndex x : node.members) kids.push_back(current[x]);
      std::sort(kids.begin(), kids.end());
      kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
      for (std::size_t child : kids) tree.nodes[child].parent = id;
      node.children = std::move(kids);
      for (StateIndex x : node.members) current[x] = id;
      tree.nodes.push_back(std::move(node));
    }
    begin = end;
  }

  tree.root = current[0];
  return tree;
}

}  // namespace fwc
