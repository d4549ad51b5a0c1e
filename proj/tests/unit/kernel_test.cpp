#include <cmath>
#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fwcycles/error.hpp"
#include "fwcycles/kernel.hpp"
#include "fwcycles/random_landscape.hpp"

namespace fwc {
namespace {

using testing::fig1;
using testing::load_fixture;

TEST(MetropolisKernelTest, TwoStateHalfPenalty) {
  Landscape l = load_fixture("two_state.json");
  TransitionMatrix p = metropolis_kernel(l, std::log(2.0));
  EXPECT_NEAR(p.probability(0, 1), 0.25, 1e-15);
  EXPECT_NEAR(p.probability(1, 0), 0.5, 1e-15);
  EXPECT_NEAR(p.probability(0, 0), 0.75, 1e-15);
  EXPECT_NEAR(p.probability(1, 1), 0.5, 1e-15);
}

TEST(MetropolisKernelTest, FlatLandscapeIgnoresBeta) {
  std::istringstream in(R"({"states":[{"id":"x","energy":"3"},{"id":"y","energy":"3"},{"id":"z","energy":"3"}],
                            "edges":[{"pair":["x","y"],"q":"0.2"},["y","z"]]})");
  Landscape l = load_landscape(in);
  for (double beta : {0.1, 1.0, 17.0}) {
    TransitionMatrix p = metropolis_kernel(l, beta);
    for (StateIndex x = 0; x < 3; ++x)
      for (StateIndex y = 0; y < 3; ++y)
        if (x != y) EXPECT_EQ(p.probability(x, y), l.rate(x, y).to_double());
  }
}

TEST(MetropolisKernelTest, Fig1MissingEdgeStaysZero) {
  const Landscape& l = fig1();
  for (double beta : {0.5, 3.0}) {
    EXPECT_EQ(metropolis_kernel(l, beta).probability(l.index_of("e"), l.index_of("g")), 0.0);
  }
}

TEST(MetropolisKernelTest, RejectsNonpositiveBeta) {
  for (double beta : {0.0, -1.0, std::nan("")}) {
    try {
      metropolis_kernel(fig1(), beta);
      FAIL() << beta;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::NonpositiveBeta);
    }
  }
  EXPECT_NO_THROW(metropolis_kernel_diagnostic(fig1(), 0.0));
}

TEST(MetropolisKernelTest, StochasticAndReversible) {
  RandomLandscapeParams params;
  params.max_states = 10;
  params.edge_density = 0.4;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Landscape l = random_landscape(params, seed);
    double beta = 0.25 + 0.05 * static_cast<double>(seed);
    TransitionMatrix p = metropolis_kernel(l, beta);
    for (StateIndex x = 0; x < l.size(); ++x) {
      double sum = p.stay(x);
      EXPECT_GE(p.stay(x), 0.0);
      for (const auto& e : p.row(x)) {
        EXPECT_GE(e.probability, 0.0);
        EXPECT_LE(e.probability, 1.0);
        sum += e.probability;
        // pi(x) p(x,y) = pi(y) p(y,x) in the form q exp(-beta max(H(x),H(y))).
        double hx = l.energy(x).to_double(l.energy_scale());
        double hy = l.energy(e.target).to_double(l.energy_scale());
        double lhs = std::exp(-beta * hx) * e.probability;
        double rhs = std::exp(-beta * hy) * p.probability(e.target, x);
        EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(lhs, rhs));
        EXPECT_NEAR(lhs, l.rate(x, e.target).to_double() * std::exp(-beta * std::max(hx, hy)), 1e-12);
      }
      EXPECT_NEAR(sum, 1.0, 1e-12);
    }
  }
}

TEST(TransitionMatrixTest, SampleUsesCumulativeRow) {
  Landscape l = load_fixture("two_state.json");
  TransitionMatrix p = metropolis_kernel(l, std::log(2.0));
  EXPECT_EQ(p.sample(0, 0.0), 1u);
  EXPECT_EQ(p.sample(0, 0.2499), 1u);
  EXPECT_EQ(p.sample(0, 0.25), 0u);
  EXPECT_EQ(p.sample(1, 0.4999), 0u);
  EXPECT_EQ(p.sample(1, 0.5), 1u);
}

}  // namespace
}  // namespace fwc
