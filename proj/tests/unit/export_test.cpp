#include <cmath>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "fwcycles/export.hpp"
#include "fwcycles/landscape_io.hpp"
#include "fwcycles/random_landscape.hpp"

namespace fwc {
namespace {

using testing::fig1;
using testing::load_fixture;
using testing::set_of;

TEST(Export, CanonicalOrderIsSizeThenIds) {
  const Landscape& l = fig1();
  auto ordered = canonical_order(l, {set_of(l, "ij"), set_of(l, "k"), set_of(l, "cdef"), set_of(l, "a"), set_of(l, "hij")});
  std::vector<std::string> shown;
  for (const auto& s : ordered) shown.push_back(l.describe(s));
  EXPECT_EQ(shown, (std::vector<std::string>{"{a}", "{k}", "{i,j}", "{h,i,j}", "{c,d,e,f}"}));
}

TEST(Export, TreeDocument) {
  const Landscape& l = fig1();
  Document doc = tree_to_json(l, enumerate_path_cycles(l));
  EXPECT_EQ(doc["format"], "fwcycles-tree/1");
  EXPECT_EQ(doc["cycle_count"], 16);
  const auto& nodes = doc["nodes"];
  ASSERT_EQ(nodes.size(), 16u);
  const auto& root = nodes[doc["root_index"].get<std::size_t>()];
  EXPECT_EQ(root["members"].size(), 11u);
  EXPECT_EQ(root["gamma"], "inf");
  EXPECT_EQ(root["gamma_tilde"], "5");
  EXPECT_TRUE(root["parent_index"].is_null());
  bool found = false;
  for (const auto& n : nodes) {
    if (n["members"] == Document::array({"i", "j"})) {
      found = true;
      EXPECT_EQ(n["gamma"], "3");
      EXPECT_EQ(n["gamma_tilde"], "1");
      EXPECT_EQ(n["ground"], Document::array({"i"}));
      EXPECT_EQ(nodes[n["parent_index"].get<std::size_t>()]["members"], Document::array({"h", "i", "j"}));
    }
  }
  EXPECT_TRUE(found);
}

TEST(Export, DotHasOneNodePerCycleAndParentEdges) {
  const Landscape& l = fig1();
  std::string dot = tree_to_dot(l, enumerate_path_cycles(l));
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  std::size_t labels = 0, edges = 0;
  for (std::size_t p = dot.find("[label="); p != std::string::npos; p = dot.find("[label=", p + 1)) ++labels;
  for (std::size_t p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 1)) ++edges;
  EXPECT_EQ(labels, 16u);
  EXPECT_EQ(edges, 15u);
  EXPECT_NE(dot.find("{i,j}\\nΓ=3, Γ̃=1"), std::string::npos);
}

TEST(Export, TraceDocumentWithIterations) {
  const Landscape& l = fig1();
  Document doc = trace_to_json(l, run_decomposition(l), true);
  EXPECT_EQ(doc["format"], "fwcycles-trace/1");
  EXPECT_EQ(doc["terminal_index"], 4);
  EXPECT_EQ(doc["cycle_count"], 16);
  ASSERT_EQ(doc["levels"].size(), 5u);
  const auto& first = doc["levels"][0];
  EXPECT_EQ(first["minimal_next"], Document::parse(R"([["i","j"],["c","d","e","f"]])"));
  bool seen = false;
  for (const auto& e : first["cost"]) {
    if (e["from"] == Document::array({"j"}) && e["to"] == Document::array({"k"})) {
      seen = true;
      EXPECT_EQ(e["value"], "4");
    }
  }
  EXPECT_TRUE(seen);
  EXPECT_TRUE(doc["levels"][4]["merged_next"].is_null());
  for (const auto& c : doc["cycles"]) {
    if (c["members"].size() == 11u) {
      EXPECT_EQ(c["exit_height"], "inf");
      EXPECT_EQ(c["merge_height"], "5");
    }
  }
}

TEST(Export, TraceWithoutIterationsOmitsLevels) {
  const Landscape& l = fig1();
  Document doc = trace_to_json(l, run_decomposition(l), false);
  EXPECT_FALSE(doc.contains("levels"));
}

TEST(Export, ReportDocument) {
  const Landscape& l = fig1();
  Document doc = report_to_json(l, verify_equivalence(l));
  EXPECT_EQ(doc["format"], "fwcycles-report/1");
  EXPECT_EQ(doc["certified"], true);
  EXPECT_EQ(doc["path_cycle_count"], 16);
  EXPECT_TRUE(doc["exit_height_violations"].empty());
  EXPECT_EQ(doc["conditions"].size(), 5u);
}

TEST(Export, NumbersAndRows) {
  EXPECT_EQ(number_to_json(std::nan("")), "nan");
  EXPECT_EQ(number_to_json(INFINITY), "inf");
  EXPECT_EQ(number_to_json(0.25), 0.25);
  std::vector<VisitRow> rows = {{3.0, 54.6, 9, 10, 0.9}};
  EXPECT_EQ(visit_rows_to_tsv(rows), "beta\tbound\treplicas\tsuccesses\tfraction\n3\t54.6\t10\t9\t0.9\n");
  EXPECT_EQ(visit_rows_to_json(rows)[0]["successes"], 9);
}

TEST(Export, LandscapeRoundTripIsByteExact) {
  for (const char* name : {"fig1.json", "two_state.json", "single_state.json"}) {
    std::string once = write_landscape(load_fixture(name));
    std::istringstream in(once);
    EXPECT_EQ(write_landscape(load_landscape(in)), once) << name;
  }
}

TEST(Export, TraceIgnoresListingOrder) {
  RandomLandscapeParams params;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Landscape l = random_landscape(params, seed);
    Landscape shuffled = shuffled_copy(l, seed + 1000);
    EXPECT_EQ(trace_to_json(l, run_decomposition(l), true).dump(),
              trace_to_json(shuffled, run_decomposition(shuffled), true).dump())
        << seed;
    EXPECT_EQ(tree_to_json(l, enumerate_path_cycles(l)).dump(),
              tree_to_json(shuffled, enumerate_path_cycles(shuffled)).dump())
        << seed;
  }
}

}  // namespace
}  // namespace fwc
