// mixgrover: predict and simulate Grover search from mixed initial states.
//
//   mixgrover [--config FILE] [--seed S] [--out PATH] [--dump-config] <command> [options]
//
// Commands: predict, simulate, sweep, entropy-report. Exit status 0 on
// success, 1 for invalid input, 2 when the computation has no answer
// (e.g. a useless initial state). Errors go to stderr as one line that
// starts with "error:".

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mixgrover/commands.hpp"
#include "mixgrover/errors.hpp"
#include "mixgrover/scenario.hpp"

namespace {

using namespace mixgrover;

constexpr int kExitValidation = 1;
constexpr int kExitComputation = 2;

struct Overrides {
  std::optional<int> n;
  std::optional<std::vector<std::uint64_t>> marked;
  std::optional<std::int64_t> horizon;
  std::optional<std::string> iterate_kind;
  std::optional<std::string> unitary;
  std::optional<std::string> s;
  std::optional<double> beta;
  std::optional<double> gamma;
  std::optional<std::string> initial_kind;
  std::optional<std::uint64_t> label;
  std::optional<std::string> state;
  std::optional<double> epsilon;
  std::optional<std::string> base;
  std::optional<int> m;
  std::optional<std::string> ensemble;
  std::optional<std::uint64_t> seed;

  void add_to(CLI::App& app) {
    app.add_option("-n,--n,--qubits", n, "Number of qubits");
    app.add_option("--marked", marked, "Marked basis labels")->delimiter(',');
    app.add_option("--horizon", horizon, "Iterations to simulate");
    app.add_option("--iterate", iterate_kind, "original | generalized");
    app.add_option("--unitary", unitary, "hadamard | identity | random | file:<path>");
    app.add_option("--axis-state", s, "Reflection axis state reference");
    app.add_option("--beta", beta, "Axis rotation angle in units of pi");
    app.add_option("--gamma", gamma, "Marked rotation angle in units of pi");
    app.add_option("--initial", initial_kind, "pure_uniform | basis | pure | pseudo_pure | m_mix | ensemble_file");
    app.add_option("--label", label, "Basis label for --initial basis");
    app.add_option("--state", state, "State reference for --initial pure");
    app.add_option("--epsilon", epsilon, "Purity for --initial pseudo_pure");
    app.add_option("--base", base, "Base state reference for --initial pseudo_pure");
    app.add_option("--m", m, "Mixed qubits for --initial m_mix");
    app.add_option("--ensemble", ensemble, "Ensemble file for --initial ensemble_file");
  }

  void apply(ScenarioConfig& c) const {
    if (n) c.n = *n;
    if (marked) c.marked = *marked;
    if (horizon) c.horizon = *horizon;
    if (iterate_kind) c.iterate.kind = *iterate_kind;
    if (unitary) c.iterate.unitary = *unitary;
    if (s) c.iterate.s = *s;
    if (beta) c.iterate.beta = *beta;
    if (gamma) c.iterate.gamma = *gamma;
    if (initial_kind) c.initial.kind = *initial_kind;
    if (label) c.initial.label = *label;
    if (state) c.initial.state = *state;
    if (epsilon) c.initial.epsilon = *epsilon;
    if (base) c.initial.base = *base;
    if (m) c.initial.m = *m;
    if (ensemble) {
      c.initial.path = *ensemble;
      if (!initial_kind) c.initial.kind = "ensemble_file";
    }
    if (seed) c.seed = *seed;
  }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() != 3) throw DomainError("--grid expects start:stop:count");
  try {
    return linear_grid(std::stod(parts[0]), std::stod(parts[1]), std::stoi(parts[2]));
  } catch (const std::logic_error&) {
    throw DomainError("--grid expects numeric start:stop:count");
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-" || out_path == "stdout") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw DomainError("cannot write output file '" + out_path + "'");
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grover search from arbitrary mixed initial states: closed-form prediction and exact simulation"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  std::string config_path;
  std::string out_path;
  bool dump_config = false;
  Overrides overrides;
  app.add_option("--config", config_path, "Scenario JSON document");
  app.add_option("--seed", overrides.seed, "Seed for random unitaries");
  app.add_option("--out", out_path, "Output path (default stdout)");
  app.add_flag("--dump-config", dump_config, "Print the effective scenario as JSON and exit");
  overrides.add_to(app);

  auto* predict = app.add_subcommand("predict", "Closed-form prediction for one scenario");
  auto* simulate = app.add_subcommand("simulate", "Exact evolution next to the prediction, as CSV");
  auto* sweep = app.add_subcommand("sweep", "Predictions over a parameter grid, as CSV");
  auto* report = app.add_subcommand("entropy-report", "Entropy next to usefulness for several initial states");

  std::string sweep_axis;
  std::vector<double> sweep_values;
  std::string sweep_grid;
  sweep->add_option("--axis", sweep_axis, "epsilon | m | n | beta | gamma");
  sweep->add_option("--values", sweep_values, "Explicit values")->delimiter(',');
  sweep->add_option("--grid", sweep_grid, "start:stop:count");

  std::vector<std::string> report_entries;
  report->add_option("entries", report_entries, "Config files or the alias 'paper-counterexamples'");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    ScenarioConfig config;
    std::string doc;
    if (!config_path.empty()) {
      doc = read_file(config_path);
      config = load_scenario(config_path);
    }
    overrides.apply(config);

    if (dump_config) {
      emit(dump_scenario(config), out_path);
      return 0;
    }
    if (app.get_subcommands().empty()) {
      std::cerr << "error: usage: a command is required (predict, simulate, sweep, entropy-report)\n";
      return kExitValidation;
    }

    std::string result;
    if (predict->parsed()) {
      result = cmd_predict(config);
    } else if (simulate->parsed()) {
      result = cmd_simulate(config);
    } else if (sweep->parsed()) {
      SweepSpec spec;
      if (!doc.empty()) {
        if (auto from_file = parse_sweep(doc, config)) spec = *from_file;
      }
      spec.base = config;
      if (!sweep_axis.empty()) spec.axis = sweep_axis;
      if (!sweep_values.empty()) spec.values = sweep_values;
      if (!sweep_grid.empty()) spec.values = parse_grid(sweep_grid);
      result = cmd_sweep(spec);
    } else if (report->parsed()) {
      if (report_entries.empty()) throw DomainError("entropy-report needs at least one config or alias");
      std::vector<ReportEntry> entries;
      for (const auto& e : report_entries) {
        if (e == kCounterexampleAlias) {
          entries.push_back({e, config});
        } else {
          ScenarioConfig c = load_scenario(e);
          overrides.apply(c);
          entries.push_back({"", c});
        }
      }
      result = cmd_entropy_report(entries);
    }
    emit(result, out_path);
    return 0;
  } catch (const ComputationError& e) {
    std::cerr << "error: " << e.category() << ": " << e.what() << "\n";
    return kExitComputation;
  } catch (const DomainError& e) {
    std::cerr << "error: validation: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kExitComputation;
  }
}
