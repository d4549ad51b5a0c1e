#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fwcycles/equivalence.hpp"
#include "fwcycles/graph_cycles.hpp"
#include "fwcycles/path_cycles.hpp"
#include "fwcycles/simulation.hpp"

namespace fwc {

// Structured documents. Sets are emitted as sorted id lists, collections of
// sets in (size, ids) order, energies as exact decimal strings with "inf"
// for +inf. Output never depends on the order states were listed in.

using Document = nlohmann::ordered_json;

Document set_to_json(const Landscape& landscape, const StateSet& set);
/// Sorts a family of sets into the canonical export order.
std::vector<StateSet> canonical_order(const Landscape& landscape, std::vector<StateSet> sets);

Document tree_to_json(const Landscape& landscape, const CycleTree& tree);
/// Graphviz digraph: one node per cycle, parent -> child edges.
std::string tree_to_dot(const Landscape& landscape, const CycleTree& tree);

/// Cycle summary; with `iterations` also every level's costs and heights.
Document trace_to_json(const Landscape& landscape, const DecompositionTrace& trace, bool iterations);

Document report_to_json(const Landscape& landscape, const EquivalenceReport& report);

Document exit_rows_to_json(const Landscape& landscape, const std::vector<ExitWindowRow>& rows);
Document visit_rows_to_json(const std::vector<VisitRow>& rows);
std::string exit_rows_to_tsv(const Landscape& landscape, const std::vector<ExitWindowRow>& rows);
std::string visit_rows_to_tsv(const std::vector<VisitRow>& rows);

/// Shortest round-trip decimal for doubles; "nan"/"inf" as strings.
Document number_to_json(double value);

}  // namespace fwc
