#include "fwcycles/landscape.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "fwcycles/error.hpp"

namespace fwc {

StateSet::StateSet(std::vector<StateIndex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool StateSet::contains(StateIndex x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool StateSet::is_subset_of(const StateSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(), members_.end());
}

bool StateSet::intersects(const StateSet& other) const {
  auto a = members_.begin();
  auto b = other.members_.begin();
  while (a != members_.end() && b != other.members_.end()) {
    if (*a == *b) return true;
    if (*a < *b) ++a; else ++b;
  }
  return false;
}

Landscape Landscape::create(std::vector<StateRecord> states, std::vector<EdgeRecord> edges,
                            std::int64_t energy_scale) {
  if (energy_scale <= 0) throw Error(ErrorCode::MalformedInput, "energy_scale must be a positive integer");
  if (states.empty()) throw Error(ErrorCode::MalformedInput, "a landscape needs at least one state");

  Landscape out;
  out.scale_ = energy_scale;
  out.ids_.reserve(states.size());
  for (auto& s : states) {
    if (s.energy.is_infinite()) throw Error(ErrorCode::MalformedInput, "state '" + s.id + "' has infinite energy");
    auto [it, inserted] = out.index_.emplace(s.id, out.ids_.size());
    if (!inserted) throw Error(ErrorCode::DuplicateState, "state '" + s.id + "' is listed twice");
    out.ids_.push_back(std::move(s.id));
    out.energy_.push_back(s.energy);
  }

  // Per unordered pair: every listed directed rate (nullopt = default).
  struct Listing {
    bool forward;
    std::optional<Rational> rate;
  };
  std::map<std::pair<StateIndex, StateIndex>, std::vector<Listing>> pairs;
  for (const auto& e : edges) {
    auto from = out.find(e.from);
    auto to = out.find(e.to);
    if (!from) throw Error(ErrorCode::UnknownStateInEdge, "edge mentions unknown state '" + e.from + "'");
    if (!to) throw Error(ErrorCode::UnknownStateInEdge, "edge mentions unknown state '" + e.to + "'");
    if (*from == *to) throw Error(ErrorCode::MalformedInput, "self-edge on '" + e.from + "'");
    if (e.rate && (*e.rate < Rational(0) || *e.rate > Rational(1)))
      throw Error(ErrorCode::MalformedInput,
                  "rate of edge " + e.from + "-" + e.to + " is outside [0,1]");
    auto key = std::minmax(*from, *to);
    pairs[{key.first, key.second}].push_back({*from < *to, e.rate});
  }

  std::vector<std::size_t> degree(out.ids_.size(), 0);
  for (const auto& [key, listings] : pairs) {
    bool positive = std::any_of(listings.begin(), listings.end(),
                                [](const Listing& l) { return !l.rate || *l.rate != Rational(0); });
    if (positive) {
      ++degree[key.first];
      ++degree[key.second];
    }
  }
  out.max_degree_ = degree.empty() ? 0 : *std::max_element(degree.begin(), degree.end());
  const Rational default_rate = out.max_degree_ > 0 ? Rational(1, static_cast<std::int64_t>(out.max_degree_)) : Rational(0);

  out.adjacency_.assign(out.ids_.size(), {});
  for (const auto& [key, listings] : pairs) {
    Rational rate = listings.front().rate.value_or(default_rate);
    for (const auto& l : listings) {
      Rational r = l.rate.value_or(default_rate);
      if (r != rate) {
        bool same_direction = l.forward == listings.front().forward;
        throw Error(same_direction ? ErrorCode::MalformedInput : ErrorCode::AsymmetricEdge,
                    "edge " + out.ids_[key.first] + "-" + out.ids_[key.second] + " has conflicting rates " +
                        format_rational(rate) + " and " + format_rational(r));
      }
    }
    if (rate == Rational(0)) continue;
    out.adjacency_[key.first].push_back({key.second, rate});
    out.adjacency_[key.second].push_back({key.first, rate});
    ++out.edge_count_;
  }
  for (auto& row : out.adjacency_) {
    std::sort(row.begin(), row.end(), [](const Neighbor& a, const Neighbor& b) { return a.state < b.state; });
  }

  for (StateIndex x = 0; x < out.ids_.size(); ++x) {
    Rational sum(0);
    for (const auto& n : out.adjacency_[x]) sum += n.rate;
    if (sum > Rational(1))
      throw Error(ErrorCode::RowSumExceedsOne,
                  "outgoing rates of '" + out.ids_[x] + "' sum to " + format_rational(sum));
  }

  std::vector<bool> seen(out.ids_.size(), false);
  std::queue<StateIndex> frontier;
  frontier.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!frontier.empty()) {
    StateIndex x = frontier.front();
    frontier.pop();
    for (const auto& n : out.adjacency_[x]) {
      if (!seen[n.state]) {
        seen[n.state] = true;
        ++reached;
        frontier.push(n.state);
      }
    }
  }
  if (reached != out.ids_.size()) {
    auto missing = std::find(seen.begin(), seen.end(), false) - seen.begin();
    throw Error(ErrorCode::DisconnectedGraph,
                "state '" + out.ids_[missing] + "' is not reachable from '" + out.ids_[0] + "'");
  }

  out.edge_records_ = std::move(edges);
  return out;
}

std::optional<StateIndex> Landscape::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

StateIndex Landscape::index_of(std::string_view id) const {
  if (auto x = find(id)) return *x;
  throw Error(ErrorCode::ForeignState, "unknown state '" + std::string(id) + "'");
}

Rational Landscape::rate(StateIndex x, StateIndex y) const {
  const auto& row = adjacency_.at(x);
  auto it = std::lower_bound(row.begin(), row.end(), y,
                             [](const Neighbor& n, StateIndex s) { return n.state < s; });
  if (it != row.end() && it->state == y) return it->rate;
  return Rational(0);
}

bool Landscape::adjacent(StateIndex x, StateIndex y) const { return rate(x, y) != Rational(0); }

StateSet Landscape::all_states() const {
  std::vector<StateIndex> all(size());
  for (StateIndex x = 0; x < size(); ++x) all[x] = x;
  return StateSet(std::move(all));
}

StateSet Landscape::make_set(std::initializer_list<std::string_view> ids) const {
  std::vector<StateIndex> members;
  for (auto id : ids) members.push_back(index_of(id));
  return StateSet(std::move(members));
}

StateSet Landscape::make_set(std::span<const std::string> ids) const {
  std::vector<StateIndex> members;
  for (const auto& id : ids) members.push_back(index_of(id));
  return StateSet(std::move(members));
}

std::vector<std::string> Landscape::sorted_ids(const StateSet& set) const {
  std::vector<std::string> out;
  out.reserve(set.size());
  for (StateIndex x : set) out.push_back(id(x));
  std::sort(out.begin(), out.end());
  return out;
}

std::string Landscape::describe(const StateSet& set) const {
  std::string out = "{";
  bool first = true;
  for (const auto& id : sorted_ids(set)) {
    if (!first) out += ",";
    out += id;
    first = false;
  }
  return out + "}";
}

void Landscape::check_subset(const StateSet& set) const {
  if (set.empty()) throw Error(ErrorCode::EmptySet, "operation needs a nonempty set of states");
  if (set.members().back() >= size())
    throw Error(ErrorCode::ForeignState, "state index " + std::to_string(set.members().back()) + " is out of range");
}

StateSet exterior_boundary(const Landscape& landscape, const StateSet& set) {
  landscape.check_subset(set);
  std::vector<StateIndex> out;
  for (StateIndex x : set) {
    for (const auto& n : landscape.neighbors(x)) {
      if (!set.contains(n.state)) out.push_back(n.state);
    }
  }
  return StateSet(std::move(out));
}

StateSet ground(const Landscape& landscape, const StateSet& set) {
  Energy floor = min_energy(landscape, set);
  std::vector<StateIndex> out;
  for (StateIndex x : set) {
    if (landscape.energy(x) == floor) out.push_back(x);
  }
  return StateSet(std::move(out));
}

bool is_connected_subset(const Landscape& landscape, const StateSet& set) {
  landscape.check_subset(set);
  std::vector<bool> seen(set.size(), false);
  auto slot = [&](StateIndex x) {
    return static_cast<std::size_t>(std::lower_bound(set.begin(), set.end(), x) - set.begin());
  };
  std::vector<StateIndex> stack{set.front()};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    StateIndex x = stack.back();
    stack.pop_back();
    for (const auto& n : landscape.neighbors(x)) {
      if (!set.contains(n.state)) continue;
      std::size_t s = slot(n.state);
      if (!seen[s]) {
        seen[s] = true;
        ++reached;
        stack.push_back(n.state);
      }
    }
  }
  return reached == set.size();
}

Energy min_energy(const Landscape& landscape, const StateSet& set) {
  landscape.check_subset(set);
  Energy best = Energy::infinity();
  for (StateIndex x : set) best = std::min(best, landscape.energy(x));
  return best;
}

Energy max_energy(const Landscape& landscape, const StateSet& set) {
  landscape.check_subset(set);
  Energy best = landscape.energy(set.front());
  for (StateIndex x : set) best = std::max(best, landscape.energy(x));
  return best;
}

Energy boundary_floor(const Landscape& landscape, const StateSet& set) {
  StateSet boundary = exterior_boundary(landscape, set);
  if (boundary.empty()) return Energy::infinity();
  return min_energy(landscape, boundary);
}

}  // namespace fwc
