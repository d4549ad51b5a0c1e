#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fwcycles/equivalence.hpp"
#include "fwcycles/error.hpp"
#include "fwcycles/path_cycles.hpp"
#include "fwcycles/random_landscape.hpp"

namespace fwc {
namespace {

using testing::fig1;
using testing::load_fixture;
using testing::set_of;
using testing::sets_of;
using testing::units;

std::vector<StateSet> member_sets(const CycleTree& tree) {
  std::vector<StateSet> out;
  for (const auto& n : tree.nodes) out.push_back(n.members);
  std::sort(out.begin(), out.end());
  return out;
}

TEST(IsPathCycleTest, Fig1Examples) {
  const Landscape& l = fig1();
  EXPECT_TRUE(is_path_cycle(l, set_of(l, "cdef")));
  EXPECT_FALSE(is_path_cycle(l, set_of(l, "def")));
  EXPECT_TRUE(is_path_cycle(l, set_of(l, "k")));
  EXPECT_TRUE(is_path_cycle(l, l.all_states()));
  EXPECT_FALSE(is_path_cycle(l, set_of(l, "ac")));
  EXPECT_THROW(is_path_cycle(l, StateSet()), Error);
}

TEST(SublevelComponentTest, Fig1Examples) {
  const Landscape& l = fig1();
  EXPECT_EQ(sublevel_component(l, l.index_of("e"), units(l, 2)), set_of(l, "cdef"));
  EXPECT_EQ(sublevel_component(l, l.index_of("i"), units(l, 0)), set_of(l, "i"));
  EXPECT_EQ(sublevel_component(l, l.index_of("i"), units(l, 5)), l.all_states());
  // Levels between landscape energies behave like the largest energy below.
  EXPECT_EQ(sublevel_component(l, l.index_of("e"), Energy::from_units(2'500'000)), set_of(l, "cdef"));
}

TEST(SublevelComponentTest, LevelBelowStart) {
  const Landscape& l = fig1();
  try {
    sublevel_component(l, l.index_of("b"), units(l, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LevelBelowStart);
  }
}

TEST(EnumeratePathCyclesTest, Fig1) {
  const Landscape& l = fig1();
  CycleTree tree = enumerate_path_cycles(l);
  EXPECT_EQ(member_sets(tree), sets_of(l, {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "cdef", "ij", "hij",
                                           "cdefghij", "abcdefghijk"}));
  EXPECT_EQ(tree.nodes[tree.root].members, l.all_states());
  EXPECT_TRUE(tree.nodes[tree.root].depth.is_infinite());

  const CycleNode& hij = tree.nodes[*tree.find(set_of(l, "hij"))];
  std::vector<StateSet> kids;
  for (auto c : hij.children) kids.push_back(tree.nodes[c].members);
  std::sort(kids.begin(), kids.end());
  EXPECT_EQ(kids, sets_of(l, {"h", "ij"}));
  EXPECT_EQ(tree.nodes[*hij.parent].members, set_of(l, "cdefghij"));

  EXPECT_FALSE(tree.nodes[*tree.find(set_of(l, "c"))].trivial);
  EXPECT_TRUE(tree.nodes[*tree.find(set_of(l, "d"))].trivial);
  EXPECT_FALSE(tree.nodes[*tree.find(set_of(l, "i"))].trivial);
  EXPECT_EQ(tree.nodes[*tree.find(set_of(l, "cdef"))].ground, set_of(l, "c"));
}

TEST(EnumeratePathCyclesTest, SmallCases) {
  Landscape two = load_fixture("two_state.json");
  EXPECT_EQ(member_sets(enumerate_path_cycles(two)),
            (std::vector<StateSet>{StateSet({0}), StateSet({0, 1}), StateSet({1})}));
  Landscape one = load_fixture("single_state.json");
  CycleTree t = enumerate_path_cycles(one);
  ASSERT_EQ(t.nodes.size(), 1u);
  EXPECT_TRUE(t.nodes[0].depth.is_infinite());
}

TEST(DepthTest, Fig1Examples) {
  const Landscape& l = fig1();
  EXPECT_EQ(depth(l, set_of(l, "ij")), units(l, 3));
  EXPECT_EQ(resistance_height(l, set_of(l, "ij")), units(l, 1));
  EXPECT_EQ(depth(l, set_of(l, "hij")), units(l, 4));
  EXPECT_EQ(resistance_height(l, set_of(l, "hij")), units(l, 3));
  EXPECT_EQ(resistance_height(l, set_of(l, "g")), Energy::zero());
  EXPECT_EQ(depth(l, set_of(l, "cdef")), units(l, 3));
  EXPECT_TRUE(depth(l, l.all_states()).is_infinite());
  try {
    depth(l, set_of(l, "def"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotACycle);
  }
}

class PathCycleProperties : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(PathCycleProperties, TreeInvariants) {
  RandomLandscapeParams params;
  params.max_states = 10;
  params.edge_density = 0.25;
  Landscape l = random_landscape(params, GetParam());
  CycleTree tree = enumerate_path_cycles(l);

  EXPECT_EQ(member_sets(tree), brute_force_path_cycles(l));
  EXPECT_LE(tree.nodes.size(), 2 * l.size() - 1);
  EXPECT_EQ(tree.nodes[tree.root].members, l.all_states());

  for (StateIndex x = 0; x < l.size(); ++x) {
    auto leaf = tree.find(StateSet::singleton(x));
    ASSERT_TRUE(leaf);
    EXPECT_TRUE(tree.nodes[*leaf].children.empty());
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const CycleNode& a = tree.nodes[i];
    if (a.members.size() > 1) {
      EXPECT_LT(max_energy(l, a.members), a.boundary_floor);
      if (a.members != l.all_states()) EXPECT_LT(a.resistance, a.depth);
      // Level-set characterization at a highest state, containment at every state.
      Energy top = max_energy(l, a.members);
      for (StateIndex x : a.members) {
        if (l.energy(x) == top) EXPECT_EQ(sublevel_component(l, x, top), a.members);
        EXPECT_TRUE(sublevel_component(l, x, l.energy(x)).is_subset_of(a.members));
      }
    }
    std::vector<StateIndex> covered;
    for (std::size_t c : a.children) {
      EXPECT_EQ(tree.nodes[c].parent, i);
      for (StateIndex x : tree.nodes[c].members) covered.push_back(x);
    }
    StateSet united(covered);
    EXPECT_EQ(united.size(), covered.size()) << "children overlap";
    EXPECT_TRUE(united.is_subset_of(a.members));
    for (std::size_t j = i + 1; j < tree.nodes.size(); ++j) {
      const CycleNode& b = tree.nodes[j];
      bool nested = a.members.is_subset_of(b.members) || b.members.is_subset_of(a.members);
      EXPECT_TRUE(nested || !a.members.intersects(b.members));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(RandomLandscapes, PathCycleProperties, ::testing::Range<std::uint64_t>(0, 200));

}  // namespace
}  // namespace fwc
