// Command-line front end: validate, decompose, verify, fuzz, simulate, export.
//
// Exit codes: 0 success, 1 usage error, 2 invalid input, 3 violation found,
// 4 simulation infeasible (every replica censored).

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fwcycles/equivalence.hpp"
#include "fwcycles/error.hpp"
#include "fwcycles/export.hpp"
#include "fwcycles/landscape_io.hpp"
#include "fwcycles/random_landscape.hpp"
#include "fwcycles/simulation.hpp"

namespace {

using namespace fwc;

constexpr int kUsage = 1;
constexpr int kInvalid = 2;
constexpr int kViolation = 3;
constexpr int kInfeasible = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string out;
  bool iterations = false;
  bool dot = false;
  bool tsv = false;
  bool json = false;

  std::size_t count = 1000;
  std::uint64_t seed = 0;
  std::size_t size_min = 2;
  std::size_t size_max = 10;
  double edge_density = 0.2;
  std::int64_t energy_min = 0;
  std::int64_t energy_max = 6;
  std::int64_t energy_scale = kDefaultEnergyScale;
  std::string counterexamples;

  std::string cycle;
  std::vector<double> betas{2.0, 3.0};
  double epsilon = 1.0;
  std::size_t replicas = 1000;
  std::vector<std::string> starts;
  std::string visit;
  std::uint64_t max_steps = 0;
  unsigned threads = 0;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot write " + o.out);
  file << text;
}

std::string document_text(const Document& doc) { return doc.dump(2) + "\n"; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, sep);) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

int run_validate(const Options& o) {
  Landscape l = load_landscape(o.input);
  Document doc = Document::object();
  doc["valid"] = true;
  doc["states"] = l.size();
  doc["edges"] = l.edge_count();
  doc["max_degree"] = l.max_degree();
  doc["energy_scale"] = l.energy_scale();
  emit(o, document_text(doc));
  return 0;
}

int run_path_cycles(const Options& o) {
  Landscape l = load_landscape(o.input);
  CycleTree tree = enumerate_path_cycles(l);
  emit(o, o.dot ? tree_to_dot(l, tree) : document_text(tree_to_json(l, tree)));
  return 0;
}

int run_graph_cycles(const Options& o) {
  Landscape l = load_landscape(o.input);
  emit(o, document_text(trace_to_json(l, run_decomposition(l), o.iterations)));
  return 0;
}

int run_verify(const Options& o) {
  Landscape l = load_landscape(o.input);
  EquivalenceReport report = verify_equivalence(l);
  emit(o, document_text(report_to_json(l, report)));
  return report.certified() ? 0 : kViolation;
}

int run_fuzz(const Options& o) {
  if (o.size_min < 1 || o.size_min > o.size_max) throw UsageError("need 1 <= --size-min <= --size-max");
  if (o.size_max > kBruteForceLimit) throw UsageError("--size-max is capped at " + std::to_string(kBruteForceLimit));
  if (!(o.edge_density >= 0.0 && o.edge_density <= 1.0)) throw UsageError("--edge-density must lie in [0, 1]");
  if (o.energy_min > o.energy_max) throw UsageError("need --energy-min <= --energy-max");

  RandomLandscapeParams params;
  params.min_states = o.size_min;
  params.max_states = o.size_max;
  params.edge_density = o.edge_density;
  params.min_energy = o.energy_min;
  params.max_energy = o.energy_max;
  params.energy_scale = o.energy_scale;

  Document failures = Document::array();
  std::size_t certified = 0;
  for (std::size_t i = 0; i < o.count; ++i) {
    std::uint64_t seed = derive_seed(o.seed, i);
    Landscape l = random_landscape(params, seed);
    EquivalenceReport report = verify_equivalence(l);
    std::vector<StateSet> swept;
    for (const auto& node : enumerate_path_cycles(l).nodes) swept.push_back(node.members);
    std::sort(swept.begin(), swept.end());
    bool oracle = swept == brute_force_path_cycles(l);
    if (report.certified() && oracle) {
      ++certified;
      continue;
    }
    Document f = Document::object();
    f["index"] = i;
    f["seed"] = seed;
    f["states"] = l.size();
    f["oracle_agrees"] = oracle;
    f["report"] = report_to_json(l, report);
    if (!o.counterexamples.empty()) {
      std::filesystem::create_directories(o.counterexamples);
      auto path = std::filesystem::path(o.counterexamples) / ("counterexample_" + std::to_string(i) + ".json");
      std::ofstream(path, std::ios::binary) << write_landscape(l);
      f["file"] = path.string();
    }
    failures.push_back(std::move(f));
  }

  Document doc = Document::object();
  doc["format"] = "fwcycles-fuzz/1";
  doc["seed"] = o.seed;
  doc["count"] = o.count;
  doc["size_min"] = o.size_min;
  doc["size_max"] = o.size_max;
  doc["edge_density"] = o.edge_density;
  doc["energy_min"] = o.energy_min;
  doc["energy_max"] = o.energy_max;
  doc["energy_scale"] = o.energy_scale;
  doc["certified"] = certified;
  doc["failures"] = std::move(failures);
  emit(o, document_text(doc));
  return certified == o.count ? 0 : kViolation;
}

int run_simulate(const Options& o) {
  Landscape l = load_landscape(o.input);
  StateSet cycle = l.make_set(split(o.cycle, ','));
  if (!(o.epsilon > 0.0)) throw UsageError("--epsilon must be positive");
  for (double beta : o.betas) {
    if (!(beta > 0.0)) throw UsageError("--beta values must be positive");
  }

  ExitCheckOptions exit_options;
  for (const auto& id : o.starts) exit_options.starts.push_back(l.index_of(id));
  if (o.max_steps) exit_options.max_steps = o.max_steps;
  exit_options.threads = o.threads;
  auto exit_rows = check_exit_window(l, cycle, o.betas, o.epsilon, o.replicas, o.seed, exit_options);

  std::vector<VisitRow> visit_rows;
  if (!o.visit.empty()) {
    auto pair = split(o.visit, ':');
    if (pair.size() != 2) throw UsageError("--visit expects from:to");
    visit_rows = check_visit_before_exit(l, cycle, l.index_of(pair[0]), l.index_of(pair[1]), o.betas, o.epsilon,
                                         o.replicas, o.seed, o.threads);
  }

  if (o.tsv) {
    std::string text = exit_rows_to_tsv(l, exit_rows);
    if (!visit_rows.empty()) text += "\n" + visit_rows_to_tsv(visit_rows);
    emit(o, text);
  } else {
    Document doc = Document::object();
    doc["format"] = "fwcycles-simulation/1";
    doc["cycle"] = set_to_json(l, cycle);
    doc["epsilon"] = o.epsilon;
    doc["replicas"] = o.replicas;
    doc["seed"] = o.seed;
    doc["exit_window"] = exit_rows_to_json(l, exit_rows);
    if (!o.visit.empty()) doc["visit_before_exit"] = visit_rows_to_json(visit_rows);
    emit(o, document_text(doc));
  }
  for (const auto& row : exit_rows) {
    if (row.stats.censored_count == row.stats.replicas) {
      std::cerr << "every replica was censored at beta=" << row.beta << " from " << l.id(row.start)
                << "; raise --max-steps\n";
      return kInfeasible;
    }
  }
  return 0;
}

int run_export_tree(const Options& o) {
  Landscape l = load_landscape(o.input);
  CycleTree tree = enumerate_path_cycles(l);
  emit(o, !o.json ? tree_to_dot(l, tree) : document_text(tree_to_json(l, tree)));
  return 0;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec:
    case ErrorCode::NonpositiveBeta:
      return kUsage;
    case ErrorCode::NonTermination:
      return kViolation;
    default:
      return kInvalid;
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Path-cycle and graph-cycle decompositions of energy landscapes under Metropolis dynamics"};
  app.require_subcommand(1);
  app.add_option("-o,--out", o.out, "Write output to this file instead of stdout");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("landscape", o.input, "Landscape file (JSON)")->required();
  };

  auto* validate = app.add_subcommand("validate", "Check a landscape file");
  add_input(validate);

  auto* path_cycles = app.add_subcommand("path-cycles", "Export the path-cycle tree");
  add_input(path_cycles);
  path_cycles->add_flag("--dot", o.dot, "Emit Graphviz text instead of JSON");

  auto* graph_cycles = app.add_subcommand("graph-cycles", "Export the graph-cycle recursion");
  add_input(graph_cycles);
  graph_cycles->add_flag("--iterations", o.iterations, "Include every level's costs and heights");

  auto* verify = app.add_subcommand("verify", "Check that both decompositions agree (exit 3 otherwise)");
  add_input(verify);

  auto* fuzz = app.add_subcommand("fuzz", "Verify random landscapes (exit 3 on any failure)");
  fuzz->add_option("--count", o.count, "Number of landscapes")->capture_default_str();
  fuzz->add_option("--seed", o.seed, "Campaign seed")->required();
  fuzz->add_option("--size-min", o.size_min, "Fewest states")->capture_default_str();
  fuzz->add_option("--size-max", o.size_max, "Most states")->capture_default_str();
  fuzz->add_option("--edge-density", o.edge_density, "Chance of each extra edge")->capture_default_str();
  fuzz->add_option("--energy-min", o.energy_min, "Lowest integer energy")->capture_default_str();
  fuzz->add_option("--energy-max", o.energy_max, "Highest integer energy")->capture_default_str();
  fuzz->add_option("--energy-scale", o.energy_scale, "Fixed-point denominator")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  fuzz->add_option("--counterexamples", o.counterexamples, "Directory for failing landscapes");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo exit-window and visit-before-exit checks");
  add_input(simulate);
  simulate->add_option("--cycle", o.cycle, "Comma-separated state ids of the cycle")->required();
  simulate->add_option("--beta", o.betas, "Inverse temperatures")->delimiter(',')->capture_default_str();
  simulate->add_option("--epsilon", o.epsilon, "Window half-width")->capture_default_str();
  simulate->add_option("--replicas", o.replicas, "Chains per beta and start")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", o.seed, "Simulation seed")->required();
  simulate->add_option("--start", o.starts, "Start states (default: every member)")->delimiter(',');
  simulate->add_option("--visit", o.visit, "Also check from:to visit-before-exit");
  simulate->add_option("--max-steps", o.max_steps, "Censoring threshold (default 100 exp(beta (depth + 1)))")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  simulate->add_flag("--tsv", o.tsv, "Tab-separated rows instead of JSON");

  auto* export_tree = app.add_subcommand("export-tree", "Cycle hierarchy as Graphviz text");
  add_input(export_tree);
  export_tree->add_flag("--dot", o.dot, "Graphviz text (the default)");
  export_tree->add_flag("--json", o.json, "Tree document instead of Graphviz text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*validate) return run_validate(o);
    if (*path_cycles) return run_path_cycles(o);
    if (*graph_cycles) return run_graph_cycles(o);
    if (*verify) return run_verify(o);
    if (*fuzz) return run_fuzz(o);
    if (*simulate) return run_simulate(o);
    if (*export_tree) return run_export_tree(o);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kUsage;
}
