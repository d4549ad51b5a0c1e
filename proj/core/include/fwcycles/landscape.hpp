#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "fwcycles/energy.hpp"
#include "fwcycles/rational.hpp"

namespace fwc {

using StateIndex = std::size_t;

/// Sorted, duplicate-free set of dense state indices.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::vector<StateIndex> members);

  static StateSet singleton(StateIndex x) { return StateSet(std::vector<StateIndex>{x}); }

  std::span<const StateIndex> members() const noexcept { return members_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }
  StateIndex front() const { return members_.front(); }

  bool contains(StateIndex x) const;
  bool is_subset_of(const StateSet& other) const;
  bool intersects(const StateSet& other) const;

  friend bool operator==(const StateSet&, const StateSet&) = default;
  friend auto operator<=>(const StateSet&, const StateSet&) = default;

 private:
  std::vector<StateIndex> members_;
};

struct StateRecord {
  std::string id;
  Energy energy;
};

/// One listed edge. An absent rate means "use the uniform default 1/max_degree".
struct EdgeRecord {
  std::string from;
  std::string to;
  std::optional<Rational> rate;
};

/// Finite state space with energies and a symmetric connectivity function.
///
/// Construction validates symmetry, sub-stochastic rows and irreducibility;
/// afterwards the object is immutable. q(x, x) is never stored: it is the
/// row remainder.
class Landscape {
 public:
  struct Neighbor {
    StateIndex state;
    Rational rate;
  };

  static Landscape create(std::vector<StateRecord> states, std::vector<EdgeRecord> edges,
                          std::int64_t energy_scale = kDefaultEnergyScale);

  std::size_t size() const noexcept { return ids_.size(); }
  std::int64_t energy_scale() const noexcept { return scale_; }

  const std::string& id(StateIndex x) const { return ids_.at(x); }
  std::optional<StateIndex> find(std::string_view id) const;
  /// Throws ForeignState for unknown ids.
  StateIndex index_of(std::string_view id) const;

  Energy energy(StateIndex x) const { return energy_.at(x); }
  std::span<const Neighbor> neighbors(StateIndex x) const { return adjacency_.at(x); }
  Rational rate(StateIndex x, StateIndex y) const;
  bool adjacent(StateIndex x, StateIndex y) const;
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t max_degree() const noexcept { return max_degree_; }

  StateSet all_states() const;
  StateSet make_set(std::initializer_list<std::string_view> ids) const;
  StateSet make_set(std::span<const std::string> ids) const;

  /// Member ids sorted lexicographically; the order used by every export.
  std::vector<std::string> sorted_ids(const StateSet& set) const;
  /// "{a,b,c}" using sorted_ids.
  std::string describe(const StateSet& set) const;

  /// Throws EmptySet or ForeignState.
  void check_subset(const StateSet& set) const;

  const std::vector<EdgeRecord>& edge_records() const noexcept { return edge_records_; }

  std::string format(Energy value) const { return format_energy(value, scale_); }

 private:
  Landscape() = default;

  std::vector<std::string> ids_;
  std::unordered_map<std::string, StateIndex> index_;
  std::vector<Energy> energy_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<EdgeRecord> edge_records_;
  std::size_t edge_count_ = 0;
  std::size_t max_degree_ = 0;
  std::int64_t scale_ = kDefaultEnergyScale;
};

/// { y not in G : q(x, y) > 0 for some x in G }.
StateSet exterior_boundary(const Landscape& landscape, const StateSet& set);

/// States of G attaining min_G H.
StateSet ground(const Landscape& landscape, const StateSet& set);

/// True iff every pair of members is joined by a path that stays inside G.
bool is_connected_subset(const Landscape& landscape, const StateSet& set);

Energy min_energy(const Landscape& landscape, const StateSet& set);
Energy max_energy(const Landscape& landscape, const StateSet& set);
/// min over the exterior boundary, +inf when the boundary is empty.
Energy boundary_floor(const Landscape& landscape, const StateSet& set);

}  // namespace fwc
