#include "fwcycles/export.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

namespace fwc {
namespace {

using SortKey = std::pair<std::size_t, std::vector<std::string>>;

SortKey key_of(const Landscape& landscape, const StateSet& set) { return {set.size(), landscape.sorted_ids(set)}; }

Document energy_json(const Landscape& landscape, Energy value) { return landscape.format(value); }

Document cost_entries(const Landscape& landscape, const PartitionLevel& level, const CostRows& rows) {
  struct Item {
    SortKey from, to;
    Energy value;
  };
  std::vector<Item> items;
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (const auto& e : rows[a]) {
      if (e.cost.is_infinite()) continue;
      items.push_back({key_of(landscape, level.classes[a]), key_of(landscape, level.classes[e.target]), e.cost});
    }
  }
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
  Document out = Document::array();
  for (const auto& item : items) {
    Document entry = Document::object();
    entry["from"] = item.from.second;
    entry["to"] = item.to.second;
    entry["value"] = energy_json(landscape, item.value);
    out.push_back(std::move(entry));
  }
  return out;
}

Document family(const Landscape& landscape, std::vector<StateSet> sets) {
  Document out = Document::array();
  for (const auto& s : canonical_order(landscape, std::move(sets))) out.push_back(set_to_json(landscape, s));
  return out;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  return std::string(buffer, end);
}

}  // namespace

Document set_to_json(const Landscape& landscape, const StateSet& set) { return landscape.sorted_ids(set); }

std::vector<StateSet> canonical_order(const Landscape& landscape, std::vector<StateSet> sets) {
  std::vector<std::pair<SortKey, StateSet>> keyed;
  for (auto& s : sets) keyed.emplace_back(key_of(landscape, s), std::move(s));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<StateSet> out;
  for (auto& [k, s] : keyed) out.push_back(std::move(s));
  return out;
}

Document number_to_json(double value) {
  if (std::isfinite(value)) return value;
  return format_double(value);
}

Document tree_to_json(const Landscape& landscape, const CycleTree& tree) {
  std::vector<std::size_t> order(tree.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<SortKey> keys;
  for (const auto& node : tree.nodes) keys.push_back(key_of(landscape, node.members));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  Document nodes = Document::array();
  for (std::size_t i : order) {
    const CycleNode& node = tree.nodes[i];
    Document n = Document::object();
    n["members"] = set_to_json(landscape, node.members);
    n["gamma"] = energy_json(landscape, node.depth);
    n["gamma_tilde"] = energy_json(landscape, node.resistance);
    n["ground"] = set_to_json(landscape, node.ground);
    n["boundary_floor"] = energy_json(landscape, node.boundary_floor);
    n["trivial"] = node.trivial;
    n["parent_index"] = node.parent ? Document(position[*node.parent]) : Document(nullptr);
    nodes.push_back(std::move(n));
  }
  Document doc = Document::object();
  doc["format"] = "fwcycles-tree/1";
  doc["state_count"] = landscape.size();
  doc["cycle_count"] = tree.nodes.size();
  doc["root_index"] = position[tree.root];
  doc["nodes"] = std::move(nodes);
  return doc;
}

std::string tree_to_dot(const Landscape& landscape, const CycleTree& tree) {
  std::vector<std::size_t> order(tree.nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<SortKey> keys;
  for (const auto& node : tree.nodes) keys.push_back(key_of(landscape, node.members));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<std::size_t> position(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = i;

  std::ostringstream out;
  out << "digraph cycles {\n  node [shape=box];\n";
  for (std::size_t i : order) {
    const CycleNode& node = tree.nodes[i];
    out << "  n" << position[i] << " [label=\"" << landscape.describe(node.members) << "\\n\u0393="
        << landscape.format(node.depth) << ", \u0393\u0303=" << landscape.format(node.resistance) << "\"];\n";
  }
  for (std::size_t i : order) {
    const CycleNode& node = tree.nodes[i];
    if (node.parent) out << "  n" << position[*node.parent] << " -> n" << position[i] << ";\n";
  }
  out << "}\n";
  return out.str();
}

Document trace_to_json(const Landscape& landscape, const DecompositionTrace& trace, bool iterations) {
  Document doc = Document::object();
  doc["format"] = "fwcycles-trace/1";
  doc["seed_costs"] = trace.metropolis_seed ? "metropolis" : "custom";
  doc["state_count"] = landscape.size();
  doc["terminal_index"] = trace.terminal_index;
  doc["cycle_count"] = trace.cycles.size();

  std::vector<std::size_t> order(trace.cycles.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::vector<SortKey> keys;
  for (const auto& c : trace.cycles) keys.push_back(key_of(landscape, c.members));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });

  Document cycles = Document::array();
  for (std::size_t i : order) {
    const GraphCycle& c = trace.cycles[i];
    Document entry = Document::object();
    entry["members"] = set_to_json(landscape, c.members);
    entry["exit_height"] = energy_json(landscape, c.exit_height);
    entry["merge_height"] = energy_json(landscape, c.merge_height);
    entry["creation_merge_height"] =
        c.creation_merge_height ? energy_json(landscape, *c.creation_merge_height) : Document(nullptr);
    entry["first_level"] = c.first_level;
    entry["last_level"] = c.last_level;
    entry["parent"] = c.parent ? set_to_json(landscape, trace.cycles[*c.parent].members) : Document(nullptr);
    std::vector<StateSet> kids;
    for (std::size_t k : c.children) kids.push_back(trace.cycles[k].members);
    entry["maximal_subcycles"] = family(landscape, kids);
    cycles.push_back(std::move(entry));
  }
  doc["cycles"] = std::move(cycles);

  if (iterations) {
    Document levels = Document::array();
    for (const auto& level : trace.levels) {
      Document l = Document::object();
      l["k"] = level.index;
      l["classes"] = family(landscape, level.classes);
      l["cost"] = cost_entries(landscape, level, level.cost);
      l["renormalized_cost"] = cost_entries(landscape, level, level.renormalized_cost);

      std::vector<std::size_t> idx(level.classes.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
      std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return key_of(landscape, level.classes[a]) < key_of(landscape, level.classes[b]);
      });
      Document exit = Document::array();
      Document merge = Document::array();
      for (std::size_t a : idx) {
        Document e = Document::object();
        e["class"] = set_to_json(landscape, level.classes[a]);
        e["value"] = energy_json(landscape, level.exit_height[a]);
        exit.push_back(std::move(e));
        if (level.merge_height[a]) {
          Document m = Document::object();
          m["class"] = set_to_json(landscape, level.classes[a]);
          m["value"] = energy_json(landscape, *level.merge_height[a]);
          merge.push_back(std::move(m));
        }
      }
      l["exit_height"] = std::move(exit);
      l["merge_height"] = std::move(merge);
      if (level.index < trace.steps.size()) {
        l["merged_next"] = family(landscape, trace.steps[level.index].merged);
        l["minimal_next"] = family(landscape, trace.steps[level.index].minimal);
      } else {
        l["merged_next"] = nullptr;
        l["minimal_next"] = nullptr;
      }
      levels.push_back(std::move(l));
    }
    doc["levels"] = std::move(levels);
  }
  return doc;
}

Document report_to_json(const Landscape& landscape, const EquivalenceReport& report) {
  auto violations = [&](const std::vector<IdentityViolation>& list) {
    std::vector<const IdentityViolation*> sorted;
    for (const auto& v : list) sorted.push_back(&v);
    std::sort(sorted.begin(), sorted.end(), [&](const auto* a, const auto* b) {
      return key_of(landscape, a->cycle) < key_of(landscape, b->cycle);
    });
    Document out = Document::array();
    for (const auto* v : sorted) {
      Document e = Document::object();
      e["cycle"] = set_to_json(landscape, v->cycle);
      e["computed"] = energy_json(landscape, v->computed);
      e["expected"] = energy_json(landscape, v->expected);
      out.push_back(std::move(e));
    }
    return out;
  };

  Document doc = Document::object();
  doc["format"] = "fwcycles-report/1";
  doc["certified"] = report.certified();
  doc["set_equal"] = report.set_equal;
  doc["path_cycle_count"] = report.path_cycle_count;
  doc["graph_cycle_count"] = report.graph_cycle_count;
  doc["identities"] = Document::array({"exit_height = (min_boundary H - min H) v 0",
                                       "merge_height = max H - min H (|A| > 1), exit_height (|A| = 1)",
                                       "merge_height < exit_height (|A| > 1)"});
  doc["not_checked"] = Document::array({"exit_height = resistance height", "merge_height = depth"});
  doc["only_path_cycles"] = family(landscape, report.only_path_cycles);
  doc["only_graph_cycles"] = family(landscape, report.only_graph_cycles);
  doc["exit_height_violations"] = violations(report.exit_height_violations);
  doc["merge_height_violations"] = violations(report.merge_height_violations);
  doc["strict_order_violations"] = family(landscape, report.strict_order_violations);
  doc["structural_violations"] = report.structural_violations;
  Document conditions = Document::array();
  for (const auto& c : report.conditions) {
    Document e = Document::object();
    e["level"] = c.level;
    e["path_cycle"] = c.path_cycle;
    e["singleton_costs"] = c.singleton_costs;
    e["exit_height"] = c.exit_height;
    e["merge_height"] = c.merge_height;
    conditions.push_back(std::move(e));
  }
  doc["conditions"] = std::move(conditions);
  return doc;
}

Document exit_rows_to_json(const Landscape& landscape, const std::vector<ExitWindowRow>& rows) {
  Document out = Document::array();
  for (const auto& r : rows) {
    Document e = Document::object();
    e["beta"] = r.beta;
    e["start"] = landscape.id(r.start);
    e["replicas"] = r.stats.replicas;
    e["censored"] = r.stats.censored_count;
    e["max_steps"] = r.stats.max_steps;
    e["mean"] = number_to_json(r.stats.mean);
    e["median"] = number_to_json(r.stats.median);
    e["window_lower"] = number_to_json(r.lower);
    e["window_upper"] = number_to_json(r.upper);
    e["window_fraction"] = number_to_json(r.fraction);
    e["log_median_over_beta"] = number_to_json(r.stats.log_median_over_beta);
    e["depth"] = number_to_json(r.depth);
    out.push_back(std::move(e));
  }
  return out;
}

Document visit_rows_to_json(const std::vector<VisitRow>& rows) {
  Document out = Document::array();
  for (const auto& r : rows) {
    Document e = Document::object();
    e["beta"] = r.beta;
    e["bound"] = number_to_json(r.bound);
    e["replicas"] = r.replicas;
    e["successes"] = r.successes;
    e["fraction"] = number_to_json(r.fraction);
    out.push_back(std::move(e));
  }
  return out;
}

std::string exit_rows_to_tsv(const Landscape& landscape, const std::vector<ExitWindowRow>& rows) {
  std::ostringstream out;
  out << "beta\tstart\treplicas\tcensored\tmean\tmedian\twindow_fraction\tlog_median_over_beta\n";
  for (const auto& r : rows) {
    out << format_double(r.beta) << '\t' << landscape.id(r.start) << '\t' << r.stats.replicas << '\t'
        << r.stats.censored_count << '\t' << format_double(r.stats.mean) << '\t' << format_double(r.stats.median)
        << '\t' << format_double(r.fraction) << '\t' << format_double(r.stats.log_median_over_beta) << '\n';
  }
  return out.str();
}

std::string visit_rows_to_tsv(const std::vector<VisitRow>& rows) {
  std::ostringstream out;
  out << "beta\tbound\treplicas\tsuccesses\tfraction\n";
  for (const auto& r : rows) {
    out << format_double(r.beta) << '\t' << format_double(r.bound) << '\t' << r.replicas << '\t' << r.successes
        << '\t' << format_double(r.fraction) << '\n';
  }
  return out.str();
}

}  // namespace fwc
