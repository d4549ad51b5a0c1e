#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fwcycles/kernel.hpp"
#include "fwcycles/landscape.hpp"

namespace fwc {

/// Independent reproducible stream for one replica of one experiment.
std::mt19937_64 replica_stream(std::uint64_t seed, std::uint64_t replica);
/// Uniform double in [0, 1) from 53 random bits.
double uniform01(std::mt19937_64& rng);
/// Derives a sub-seed so experiments keyed by (beta, start) stay
/// reproducible whatever order they run in.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0);

struct SimulationSpec {
  double beta = 1.0;
  StateIndex start = 0;
  StateSet target;
  std::optional<StateIndex> secondary_target;
  /// Stop a replica as soon as the secondary target is hit.
  bool stop_at_secondary = false;
  std::uint64_t max_steps = 1'000'000;
  std::size_t replicas = 1000;
  std::uint64_t seed = 0;
  /// Admits beta == 0 (proposal chain only).
  bool diagnostic = false;
  /// Worker threads; 0 picks the hardware concurrency. Results do not depend on it.
  unsigned threads = 0;
};

struct HittingSample {
  std::uint64_t steps = 0;
  bool censored = false;
  /// First step at the secondary target, if it came no later than the stop.
  std::optional<std::uint64_t> secondary_steps;
};

struct HittingTimeStats {
  double beta = 0.0;
  std::size_t replicas = 0;
  std::size_t censored_count = 0;
  std::uint64_t max_steps = 0;
  std::vector<HittingSample> samples;
  /// Over uncensored samples; NaN when every sample is censored.
  double mean = 0.0;
  /// Over all samples with censored ones counted at max_steps.
  double median = 0.0;
  /// log(median) / beta; NaN for beta == 0 or a zero median.
  double log_median_over_beta = 0.0;

  /// Share of uncensored samples with lower < steps < upper. NaN when all
  /// samples are censored.
  double window_fraction(double lower, double upper) const;
};

/// Runs `replicas` independent chains from spec.start until they enter
/// spec.target, censoring at max_steps. Holding steps count. Throws
/// InvalidSpec or NonpositiveBeta.
HittingTimeStats simulate_hitting_time(const Landscape& landscape, const SimulationSpec& spec);

/// Runs one chain; exposed for kernel/sampler agreement tests.
HittingSample run_chain(const TransitionMatrix& kernel, StateIndex start, const std::vector<bool>& target,
                        std::optional<StateIndex> secondary, bool stop_at_secondary, std::uint64_t max_steps,
                        std::mt19937_64& rng);

struct ExitWindowRow {
  double beta = 0.0;
  StateIndex start = 0;
  double depth = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double fraction = 0.0;
  HittingTimeStats stats;
};

struct ExitCheckOptions {
  /// Defaults to ceil(100 exp(beta (depth + 1))).
  std::optional<std::uint64_t> max_steps;
  /// Defaults to every member of the cycle.
  std::vector<StateIndex> starts;
  unsigned threads = 0;
};

/// For each beta and start x in A: the share of exits from A with
/// exp(beta (depth - eps)) < tau < exp(beta (depth + eps)).
/// Throws NotACycle unless A is a non-trivial cycle with a nonempty boundary.
std::vector<ExitWindowRow> check_exit_window(const Landscape& landscape, const StateSet& cycle,
                                             const std::vector<double>& betas, double epsilon,
                                             std::size_t replicas, std::uint64_t seed,
                                             const ExitCheckOptions& options = {});

struct VisitRow {
  double beta = 0.0;
  double bound = 0.0;
  std::size_t successes = 0;
  std::size_t replicas = 0;
  double fraction = 0.0;
};

/// Share of runs from x that reach x' before the boundary of A and before
/// exp(beta (resistance + eps)) steps. Throws StateOutsideCycle, NotACycle.
std::vector<VisitRow> check_visit_before_exit(const Landscape& landscape, const StateSet& cycle, StateIndex from,
                                              StateIndex to, const std::vector<double>& betas, double epsilon,
                                              std::size_t replicas, std::uint64_t seed, unsigned threads = 0);

}  // namespace fwc
