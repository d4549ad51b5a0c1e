#include <sstream>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fwcycles/error.hpp"
#include "fwcycles/landscape_io.hpp"
#include "fwcycles/random_landscape.hpp"

namespace fwc {
namespace {

using testing::fig1;
using testing::load_fixture;
using testing::set_of;
using testing::units;

ErrorCode load_error(const std::string& text) {
  std::istringstream in(text);
  try {
    load_landscape(in);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "document was accepted: " << text;
  return ErrorCode::InvalidSpec;
}

ErrorCode fixture_error(const std::string& name) {
  try {
    load_fixture(name);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << name << " was accepted";
  return ErrorCode::InvalidSpec;
}

TEST(LoadLandscapeTest, Fig1Chain) {
  const Landscape& l = fig1();
  EXPECT_EQ(l.size(), 11u);
  EXPECT_EQ(l.edge_count(), 10u);
  const std::int64_t expected[] = {2, 5, 1, 2, 2, 2, 4, 3, 0, 1, 5};
  for (StateIndex x = 0; x < 11; ++x) {
    EXPECT_EQ(l.id(x), std::string(1, static_cast<char>('a' + x)));
    EXPECT_EQ(l.energy(x), units(l, expected[x]));
  }
  EXPECT_TRUE(l.adjacent(l.index_of("d"), l.index_of("e")));
  EXPECT_TRUE(l.adjacent(l.index_of("e"), l.index_of("f")));
  EXPECT_FALSE(l.adjacent(l.index_of("e"), l.index_of("g")));
  // Default rate is 1/max_degree = 1/2 on the chain.
  EXPECT_EQ(l.rate(l.index_of("a"), l.index_of("b")), Rational(1, 2));
}

TEST(LoadLandscapeTest, TwoState) {
  Landscape l = load_fixture("two_state.json");
  EXPECT_EQ(l.size(), 2u);
  EXPECT_EQ(l.rate(0, 1), Rational(1, 2));
  EXPECT_EQ(l.rate(1, 0), Rational(1, 2));
}

TEST(LoadLandscapeTest, SingleStateHasNoEdges) {
  Landscape l = load_fixture("single_state.json");
  EXPECT_EQ(l.size(), 1u);
  EXPECT_EQ(l.edge_count(), 0u);
}

TEST(LoadLandscapeTest, ValidationFailures) {
  EXPECT_EQ(fixture_error("asymmetric.json"), ErrorCode::AsymmetricEdge);
  EXPECT_EQ(fixture_error("broken_rowsum.json"), ErrorCode::RowSumExceedsOne);
  EXPECT_EQ(fixture_error("disconnected.json"), ErrorCode::DisconnectedGraph);

  EXPECT_EQ(load_error(R"({"states":[{"id":"x","energy":"0"},{"id":"x","energy":"1"}],"edges":[]})"),
            ErrorCode::DuplicateState);
  EXPECT_EQ(load_error(R"({"states":[{"id":"x","energy":"0"}],"edges":[["x","y"]]})"),
            ErrorCode::UnknownStateInEdge);
  EXPECT_EQ(load_error(R"({"states":[{"id":"x","energy":"0.5"},{"id":"y","energy":"0"}],
                           "edges":[["x","y"]],"energy_scale":1})"),
            ErrorCode::ScaleOverflow);
  EXPECT_EQ(load_error(R"({"states":[{"id":"x","energy":"0"}],)"), ErrorCode::MalformedInput);
  EXPECT_EQ(load_error(R"({"states":[{"id":"x","energy":0.5}]})"), ErrorCode::MalformedInput);
  EXPECT_EQ(load_error(R"({"states":[{"id":"x","energy":"0"},{"id":"y","energy":"0"}],
                           "edges":[{"pair":["x","y"],"q":"1.5"}]})"),
            ErrorCode::MalformedInput);
  EXPECT_EQ(load_error(R"({"states":[{"id":"x","energy":"0"}],"edges":[["x","x"]]})"), ErrorCode::MalformedInput);
  EXPECT_EQ(load_error(R"({"states":[]})"), ErrorCode::MalformedInput);
}

TEST(LoadLandscapeTest, ExactRowSumBoundary) {
  // 1/3 + 2/3 sums to exactly one: accepted.
  std::istringstream ok(R"({"states":[{"id":"x","energy":"0"},{"id":"y","energy":"0"},{"id":"z","energy":"0"}],
                            "edges":[{"pair":["x","y"],"q":"1/3"},{"pair":["x","z"],"q":"2/3"}]})");
  EXPECT_NO_THROW(load_landscape(ok));
  EXPECT_EQ(load_error(R"({"states":[{"id":"x","energy":"0"},{"id":"y","energy":"0"},{"id":"z","energy":"0"}],
                           "edges":[{"pair":["x","y"],"q":"0.3334"},{"pair":["x","z"],"q":"2/3"}]})"),
            ErrorCode::RowSumExceedsOne);
}

TEST(LoadLandscapeTest, CanonicalTextIsAFixedPoint) {
  std::string once = write_landscape(fig1());
  std::istringstream in(once);
  EXPECT_EQ(write_landscape(load_landscape(in)), once);

  RandomLandscapeParams params;
  params.max_states = 12;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Landscape l = random_landscape(params, seed);
    std::string text = write_landscape(l);
    std::istringstream again(text);
    ASSERT_EQ(write_landscape(load_landscape(again)), text) << "seed " << seed;
  }
}

TEST(LoadLandscapeTest, ExplicitRatesSurviveRoundTrip) {
  std::istringstream in(R"({"energy_scale": 8,
    "states":[{"id":"p","energy":"0.125"},{"id":"q","energy":"-1.5"}],
    "edges":[{"pair":["p","q"],"q":"0.250"}]})");
  Landscape l = load_landscape(in);
  std::string text = write_landscape(l);
  EXPECT_NE(text.find("\"q\": \"0.25\""), std::string::npos);
  EXPECT_NE(text.find("\"energy\": \"-1.5\""), std::string::npos);
  std::istringstream again(text);
  EXPECT_EQ(write_landscape(load_landscape(again)), text);
}

TEST(ExteriorBoundaryTest, Fig1Examples) {
  const Landscape& l = fig1();
  EXPECT_EQ(exterior_boundary(l, set_of(l, "ij")), set_of(l, "hk"));
  EXPECT_TRUE(exterior_boundary(l, l.all_states()).empty());
  EXPECT_EQ(exterior_boundary(l, set_of(l, "e")), set_of(l, "df"));
}

TEST(ExteriorBoundaryTest, Errors) {
  const Landscape& l = fig1();
  EXPECT_THROW(exterior_boundary(l, StateSet()), Error);
  EXPECT_THROW(exterior_boundary(l, StateSet({0, 42})), Error);
  try {
    ground(l, StateSet());
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySet);
  }
  try {
    l.make_set({"a", "zz"});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ForeignState);
  }
}

TEST(GroundTest, Fig1Examples) {
  const Landscape& l = fig1();
  EXPECT_EQ(ground(l, set_of(l, "cdef")), set_of(l, "c"));
  EXPECT_EQ(ground(l, set_of(l, "def")), set_of(l, "def"));
  EXPECT_EQ(ground(l, set_of(l, "i")), set_of(l, "i"));
}

TEST(ConnectedSubsetTest, Fig1Examples) {
  const Landscape& l = fig1();
  EXPECT_TRUE(is_connected_subset(l, set_of(l, "cdef")));
  EXPECT_FALSE(is_connected_subset(l, set_of(l, "ac")));
  EXPECT_TRUE(is_connected_subset(l, set_of(l, "g")));
}

// Transitive closure of the induced adjacency matrix, independent of the
// stack-based search in the library.
bool closure_connected(const Landscape& l, std::uint32_t mask) {
  const std::size_t n = l.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (StateIndex x = 0; x < n; ++x) {
    for (StateIndex y = 0; y < n; ++y) {
      bool inside = (mask >> x & 1) && (mask >> y & 1);
      reach[x][y] = inside && (x == y || l.adjacent(x, y));
    }
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (reach[i][k] && reach[k][j]) reach[i][j] = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> i & 1) && (mask >> j & 1) && !reach[i][j]) return false;
  return true;
}

TEST(ConnectedSubsetTest, AgreesWithClosureOracle) {
  RandomLandscapeParams params;
  params.min_states = 2;
  params.max_states = 8;
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Landscape l = random_landscape(params, seed);
    for (std::uint32_t mask = 1; mask < (1u << l.size()); ++mask) {
      std::vector<StateIndex> members;
      for (StateIndex x = 0; x < l.size(); ++x)
        if (mask >> x & 1) members.push_back(x);
      ASSERT_EQ(is_connected_subset(l, StateSet(members)), closure_connected(l, mask))
          << "seed " << seed << " mask " << mask;
    }
  }
}

TEST(ExteriorBoundaryTest, BoundaryIsOutsideAndAdjacent) {
  RandomLandscapeParams params;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Landscape l = random_landscape(params, seed);
    for (std::uint32_t mask = 1; mask < (1u << l.size()); mask += 3) {
      std::vector<StateIndex> members;
      for (StateIndex x = 0; x < l.size(); ++x)
        if (mask >> x & 1) members.push_back(x);
      StateSet g(members);
      for (StateIndex y : exterior_boundary(l, g)) {
        ASSERT_FALSE(g.contains(y));
        bool touches = false;
        for (StateIndex x : g) touches = touches || l.adjacent(x, y);
        ASSERT_TRUE(touches);
      }
    }
  }
}

TEST(RandomLandscapeTest, DeterministicAndShuffleInvariant) {
  RandomLandscapeParams params;
  Landscape a = random_landscape(params, 99);
  Landscape b = random_landscape(params, 99);
  EXPECT_EQ(write_landscape(a), write_landscape(b));
  Landscape s = shuffled_copy(a, 5);
  ASSERT_EQ(s.size(), a.size());
  for (StateIndex x = 0; x < a.size(); ++x) {
    StateIndex y = s.index_of(a.id(x));
    EXPECT_EQ(s.energy(y), a.energy(x));
    for (const auto& n : a.neighbors(x)) EXPECT_EQ(s.rate(y, s.index_of(a.id(n.state))), n.rate);
  }
}

}  // namespace
}  // namespace fwc
