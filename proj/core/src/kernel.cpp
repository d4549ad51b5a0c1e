#include "fwcycles/kernel.hpp"

#include <algorithm>
#include <cmath>

#include "fwcycles/error.hpp"

namespace fwc {

TransitionMatrix::TransitionMatrix(std::vector<std::vector<Entry>> rows, std::vector<double> diagonal)
    : rows_(std::move(rows)), diagonal_(std::move(diagonal)) {}

double TransitionMatrix::probability(StateIndex x, StateIndex y) const {
  if (x == y) return stay(x);
  for (const auto& e : row(x)) {
    if (e.target == y) return e.probability;
  }
  return 0.0;
}

StateIndex TransitionMatrix::sample(StateIndex x, double uniform) const {
  double acc = 0.0;
  for (const auto& e : rows_[x]) {
    acc += e.probability;
    if (uniform < acc) return e.target;
  }
  return x;
}

namespace {

TransitionMatrix build_kernel(const Landscape& landscape, double beta) {
  const double scale = static_cast<double>(landscape.energy_scale());
  std::vector<std::vector<TransitionMatrix::Entry>> rows(landscape.size());
  std::vector<double> diagonal(landscape.size(), 1.0);
  for (StateIndex x = 0; x < landscape.size(); ++x) {
    double off = 0.0;
    for (const auto& n : landscape.neighbors(x)) {
      Energy climb = (landscape.energy(n.state) - landscape.energy(x)).positive_part();
      double p = n.rate.to_double();
      if (climb != Energy::zero()) p *= std::exp(-beta * static_cast<double>(climb.units()) / scale);
      rows[x].push_back({n.state, p});
      off += p;
    }
    diagonal[x] = std::max(0.0, 1.0 - off);
  }
  return TransitionMatrix(std::move(rows), std::move(diagonal));
}

}  // namespace

TransitionMatrix metropolis_kernel(const Landscape& landscape, double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw Error(ErrorCode::NonpositiveBeta, "beta must be a positive finite number");
  return build_kernel(landscape, beta);
}

TransitionMatrix metropolis_kernel_diagnostic(const Landscape& landscape, double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta))
    throw Error(ErrorCode::NonpositiveBeta, "beta must be a nonnegative finite number");
  return build_kernel(landscape, beta);
}

}  // namespace fwc
