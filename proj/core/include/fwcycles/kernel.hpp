#pragma once

#include <span>
#include <vector>

#include "fwcycles/landscape.hpp"

namespace fwc {

/// Sparse row-stochastic matrix: explicit off-diagonal entries plus the
/// diagonal remainder.
class TransitionMatrix {
 public:
  struct Entry {
    StateIndex target;
    double probability;
  };

  TransitionMatrix(std::vector<std::vector<Entry>> rows, std::vector<double> diagonal);

  std::size_t size() const noexcept { return rows_.size(); }
  std::span<const Entry> row(StateIndex x) const { return rows_.at(x); }
  double stay(StateIndex x) const { return diagonal_.at(x); }
  /// p(x, y) including the diagonal.
  double probability(StateIndex x, StateIndex y) const;

  /// Maps a uniform draw in [0, 1) to the next state. Off-diagonal entries
  /// are laid out first in row order; the remainder keeps the chain at x.
  StateIndex sample(StateIndex x, double uniform) const;

 private:
  std::vector<std::vector<Entry>> rows_;
  std::vector<double> diagonal_;
};

/// p(x,y) = q(x,y) exp(-beta (H(y)-H(x))^+), diagonal as remainder.
/// Throws NonpositiveBeta unless beta > 0.
TransitionMatrix metropolis_kernel(const Landscape& landscape, double beta);

/// Same formula with beta = 0 admitted (pure proposal chain). Only meant for
/// diagnostic sampling.
TransitionMatrix metropolis_kernel_diagnostic(const Landscape& landscape, double beta);

}  // namespace fwc
