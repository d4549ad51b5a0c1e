#include "fwcycles/random_landscape.hpp"

#include <algorithm>
#include <random>

#include "fwcycles/error.hpp"

namespace fwc {
namespace {

// Bounded draws written out by hand: the std distributions are
// implementation-defined, and generated corpora must match across toolchains.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t draw;
  do draw = rng(); while (draw >= limit);
  return draw % bound;
}

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

template <typename T>
void shuffle(std::vector<T>& items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(rng, i)]);
}

std::mt19937_64 seeded(std::uint64_t seed, std::uint64_t salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return std::mt19937_64(seq);
}

}  // namespace

Landscape random_landscape(const RandomLandscapeParams& params, std::uint64_t seed) {
  if (params.min_states < 1 || params.max_states < params.min_states)
    throw Error(ErrorCode::InvalidSpec, "state-count range is empty");
  if (params.min_energy > params.max_energy) throw Error(ErrorCode::InvalidSpec, "energy range is empty");
  if (!(params.edge_density >= 0.0 && params.edge_density <= 1.0))
    throw Error(ErrorCode::InvalidSpec, "edge density must lie in [0,1]");

  auto rng = seeded(seed, 0x6c616e64);
  const std::size_t n = params.min_states + below(rng, params.max_states - params.min_states + 1);
  const auto span = static_cast<std::uint64_t>(params.max_energy - params.min_energy) + 1;

  std::vector<StateRecord> states;
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t value = params.min_energy + static_cast<std::int64_t>(below(rng, span));
    states.push_back({"s" + std::to_string(i), energy_from_rational(Rational(value), params.energy_scale)});
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  shuffle(order, rng);
  std::vector<std::vector<bool>> linked(n, std::vector<bool>(n, false));
  std::vector<EdgeRecord> edges;
  auto link = [&](std::size_t a, std::size_t b) {
    linked[a][b] = linked[b][a] = true;
    edges.push_back({states[a].id, states[b].id, std::nullopt});
  };
  for (std::size_t i = 1; i < n; ++i) link(order[i], order[below(rng, i)]);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!linked[a][b] && unit(rng) < params.edge_density) link(a, b);
    }
  }
  return Landscape::create(std::move(states), std::move(edges), params.energy_scale);
}

Landscape shuffled_copy(const Landscape& landscape, std::uint64_t seed) {
  auto rng = seeded(seed, 0x73687566);
  std::vector<StateRecord> states;
  for (StateIndex x = 0; x < landscape.size(); ++x) states.push_back({landscape.id(x), landscape.energy(x)});
  std::vector<EdgeRecord> edges = landscape.edge_records();
  shuffle(states, rng);
  shuffle(edges, rng);
  for (auto& e : edges) {
    if (below(rng, 2) == 1) std::swap(e.from, e.to);
  }
  return Landscape::create(std::move(states), std::move(edges), landscape.energy_scale());
}

}  // namespace fwc
