#include "fwcycles/simulation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

#include "fwcycles/error.hpp"
#include "fwcycles/path_cycles.hpp"

namespace fwc {
namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr std::uint64_t kStepCap = std::uint64_t{1} << 62;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t steps_for(double bound) {
  if (!(bound < static_cast<double>(kStepCap))) return kStepCap;
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(bound)));
}

template <typename Fn>
void for_each_replica(std::size_t replicas, unsigned threads, Fn&& body) {
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, replicas));
  if (workers <= 1) {
    for (std::size_t r = 0; r < replicas; ++r) body(r);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < replicas; r += workers) body(r);
    });
  }
}

void require_exit_cycle(const Landscape& landscape, const StateSet& cycle) {
  landscape.check_subset(cycle);
  if (cycle.size() < 2 || !is_path_cycle(landscape, cycle))
    throw Error(ErrorCode::NotACycle, landscape.describe(cycle) + " is not a non-trivial path cycle");
  if (exterior_boundary(landscape, cycle).empty())
    throw Error(ErrorCode::NotACycle, landscape.describe(cycle) + " has no exterior boundary to exit through");
}

std::vector<bool> membership(const Landscape& landscape, const StateSet& set) {
  std::vector<bool> mask(landscape.size(), false);
  for (StateIndex x : set) mask[x] = true;
  return mask;
}

}  // namespace

std::mt19937_64 replica_stream(std::uint64_t seed, std::uint64_t replica) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(replica), static_cast<std::uint32_t>(replica >> 32)};
  return std::mt19937_64(seq);
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return splitmix64(seed ^ splitmix64(a ^ splitmix64(b)));
}

double HittingTimeStats::window_fraction(double lower, double upper) const {
  std::size_t inside = 0;
  std::size_t counted = 0;
  for (const auto& s : samples) {
    if (s.censored) continue;
    ++counted;
    auto t = static_cast<double>(s.steps);
    if (lower < t && t < upper) ++inside;
  }
  return counted ? static_cast<double>(inside) / static_cast<double>(counted) : kNaN;
}

HittingSample run_chain(const TransitionMatrix& kernel, StateIndex start, const std::vector<bool>& target,
                        std::optional<StateIndex> secondary, bool stop_at_secondary, std::uint64_t max_steps,
                        std::mt19937_64& rng) {
  HittingSample sample;
  StateIndex state = start;
  if (secondary && state == *secondary) {
    sample.secondary_steps = 0;
    if (stop_at_secondary) return sample;
  }
  std::uint64_t t = 0;
  while (!target[state]) {
    if (t == max_steps) {
      sample.censored = true;
      break;
    }
    state = kernel.sample(state, uniform01(rng));
    ++t;
    if (secondary && !sample.secondary_steps && state == *secondary) {
      sample.secondary_steps = t;
      if (stop_at_secondary) break;
    }
  }
  sample.steps = t;
  return sample;
}

HittingTimeStats simulate_hitting_time(const Landscape& landscape, const SimulationSpec& spec) {
  if (spec.replicas == 0) throw Error(ErrorCode::InvalidSpec, "replicas must be positive");
  if (spec.max_steps == 0) throw Error(ErrorCode::InvalidSpec, "max_steps must be positive");
  if (spec.start >= landscape.size()) throw Error(ErrorCode::InvalidSpec, "start state out of range");
  if (spec.target.empty() || spec.target.members().back() >= landscape.size())
    throw Error(ErrorCode::InvalidSpec, "target must be a nonempty set of states");
  if (spec.secondary_target && *spec.secondary_target >= landscape.size())
    throw Error(ErrorCode::InvalidSpec, "secondary target out of range");
  if (spec.beta == 0.0 && !spec.diagnostic)
    throw Error(ErrorCode::NonpositiveBeta, "beta = 0 is only allowed in diagnostic mode");

  TransitionMatrix kernel = spec.diagnostic ? metropolis_kernel_diagnostic(landscape, spec.beta)
                                            : metropolis_kernel(landscape, spec.beta);
  std::vector<bool> target = membership(landscape, spec.target);

  HittingTimeStats stats;
  stats.beta = spec.beta;
  stats.replicas = spec.replicas;
  stats.max_steps = spec.max_steps;
  stats.samples.resize(spec.replicas);
  for_each_replica(spec.replicas, spec.threads, [&](std::size_t r) {
    auto rng = replica_stream(spec.seed, r);
    stats.samples[r] = run_chain(kernel, spec.start, target, spec.secondary_target, spec.stop_at_secondary,
                                 spec.max_steps, rng);
  });

  double total = 0.0;
  std::vector<double> ordered;
  ordered.reserve(spec.replicas);
  for (const auto& s : stats.samples) {
    if (s.censored) {
      ++stats.censored_count;
    } else {
      total += static_cast<double>(s.steps);
    }
    ordered.push_back(static_cast<double>(s.steps));
  }
  std::size_t uncensored = spec.replicas - stats.censored_count;
  stats.mean = uncensored ? total / static_cast<double>(uncensored) : kNaN;
  std::sort(ordered.begin(), ordered.end());
  std::size_t mid = ordered.size() / 2;
  stats.median = ordered.size() % 2 ? ordered[mid] : 0.5 * (ordered[mid - 1] + ordered[mid]);
  stats.log_median_over_beta = (spec.beta > 0.0 && stats.median > 0.0) ? std::log(stats.median) / spec.beta : kNaN;
  return stats;
}

std::vector<ExitWindowRow> check_exit_window(const Landscape& landscape, const StateSet& cycle,
                                             const std::vector<double>& betas, double epsilon,
                                             std::size_t replicas, std::uint64_t seed,
                                             const ExitCheckOptions& options) {
  require_exit_cycle(landscape, cycle);
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidSpec, "epsilon must be positive");
  std::vector<StateIndex> starts = options.starts;
  if (starts.empty()) starts.assign(cycle.begin(), cycle.end());
  for (StateIndex x : starts) {
    if (!cycle.contains(x)) throw Error(ErrorCode::StateOutsideCycle, "start state is not in the cycle");
  }

  const double gamma = depth(landscape, cycle).to_double(landscape.energy_scale());
  StateSet boundary = exterior_boundary(landscape, cycle);
  std::vector<ExitWindowRow> rows;
  for (double beta : betas) {
    for (StateIndex x : starts) {
      ExitWindowRow row;
      row.beta = beta;
      row.start = x;
      row.depth = gamma;
      row.lower = std::exp(beta * (gamma - epsilon));
      row.upper = std::exp(beta * (gamma + epsilon));

      SimulationSpec spec;
      spec.beta = beta;
      spec.start = x;
      spec.target = boundary;
      spec.max_steps = options.max_steps.value_or(steps_for(100.0 * std::exp(beta * (gamma + 1.0))));
      spec.replicas = replicas;
      spec.seed = derive_seed(seed, std::bit_cast<std::uint64_t>(beta), x);
      spec.threads = options.threads;
      row.stats = simulate_hitting_time(landscape, spec);
      row.fraction = row.stats.window_fraction(row.lower, row.upper);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<VisitRow> check_visit_before_exit(const Landscape& landscape, const StateSet& cycle, StateIndex from,
                                              StateIndex to, const std::vector<double>& betas, double epsilon,
                                              std::size_t replicas, std::uint64_t seed, unsigned threads) {
  landscape.check_subset(cycle);
  if (from >= landscape.size() || to >= landscape.size() || !cycle.contains(from) || !cycle.contains(to))
    throw Error(ErrorCode::StateOutsideCycle, "both states must belong to " + landscape.describe(cycle));
  require_exit_cycle(landscape, cycle);
  if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidSpec, "epsilon must be positive");

  const double spread = resistance_height(landscape, cycle).to_double(landscape.energy_scale());
  StateSet boundary = exterior_boundary(landscape, cycle);
  std::vector<VisitRow> rows;
  for (double beta : betas) {
    VisitRow row;
    row.beta = beta;
    row.bound = std::exp(beta * (spread + epsilon));
    row.replicas = replicas;

    SimulationSpec spec;
    spec.beta = beta;
    spec.start = from;
    spec.target = boundary;
    spec.secondary_target = to;
    spec.stop_at_secondary = true;
    spec.max_steps = steps_for(row.bound);
    spec.replicas = replicas;
    spec.seed = derive_seed(seed, std::bit_cast<std::uint64_t>(beta), from * 0x10001 + to);
    spec.threads = threads;
    HittingTimeStats stats = simulate_hitting_time(landscape, spec);
    for (const auto& s : stats.samples) {
      if (s.secondary_steps && static_cast<double>(*s.secondary_steps) < row.bound) ++row.successes;
    }
    row.fraction = static_cast<double>(row.successes) / static_cast<double>(replicas);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fwc
