#pragma once

// Scenario documents for the command-line tool.
//
// A scenario is a JSON object; every field is optional:
//
//   {
//     "n": 10,                       // qubits
//     "marked": [1023],              // default: [N-1]
//     "iterate": {
//       "kind": "original",          // original | generalized
//       "unitary": "hadamard",       // hadamard | identity | random | file:<path>
//       "s": "zero",                 // state reference, see below
//       "beta": 1.0,                 // units of pi
//       "gamma": 1.0,                // units of pi
//       "axes": [{"s": ..., "beta": ...}]   // optional multi-axis form
//     },
//     "initial": {
//       "kind": "pure_uniform",      // pure_uniform | basis | pure | pseudo_pure | m_mix | ensemble_file
//       "label": 0,                  // basis
//       "state": "uniform",          // pure
//       "epsilon": 1.0,              // pseudo_pure
//       "base": "uniform",           // pseudo_pure
//       "m": 0,                      // m_mix
//       "path": ""                   // ensemble_file
//     },
//     "horizon": 100,                // default: 4 * ceil(pi sqrt(N) / 4)
//     "seed": 0,                     // drives "random" unitaries
//     "sweep": {"axis": "m", "values": [0, 1]}   // or "grid": {"start", "stop", "count"}
//   }
//
// State references are strings: "zero" (|0>), "uniform" (H|0>),
// "basis:<x>", "hadamard:<x>" (H|x>), "marked" (first marked label), or an
// array of "re,im" amplitude strings (normalized on load).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mixgrover/grover.hpp"
#include "mixgrover/states.hpp"

namespace mixgrover {

using StateRef = std::variant<std::string, std::vector<Amp>>;

struct AxisConfig {
  StateRef s = std::string("zero");
  double beta = 1.0;

  bool operator==(const AxisConfig&) const = default;
};

struct IterateConfig {
  std::string kind = "original";
  std::string unitary = "hadamard";
  StateRef s = std::string("zero");
  double beta = 1.0;
  double gamma = 1.0;
  std::vector<AxisConfig> axes;  // nonempty: multi-axis form, overrides s/beta

  bool operator==(const IterateConfig&) const = default;
};

struct InitialConfig {
  std::string kind = "pure_uniform";
  std::uint64_t label = 0;
  StateRef state = std::string("uniform");
  double epsilon = 1.0;
  StateRef base = std::string("uniform");
  int m = 0;
  std::string path;

  bool operator==(const InitialConfig&) const = default;
};

struct ScenarioConfig {
  int n = 10;
  std::optional<std::vector<std::uint64_t>> marked;
  IterateConfig iterate;
  InitialConfig initial;
  std::optional<std::int64_t> horizon;
  std::uint64_t seed = 0;

  std::vector<std::uint64_t> marked_labels() const;
  std::int64_t effective_horizon() const;

  bool operator==(const ScenarioConfig&) const = default;
};

struct SweepSpec {
  std::string axis;  // epsilon | m | n | beta | gamma
  std::vector<double> values;
  ScenarioConfig base;
};

/// A validated, ready-to-run scenario.
struct Scenario {
  ScenarioConfig config;
  IterateSpec spec;
  Ensemble initial;
  std::int64_t horizon;
};

/// Parses a scenario document. Relative file paths are resolved against
/// `base_dir` and stored absolute. Unknown keys are rejected.
ScenarioConfig parse_scenario(const std::string& json_text, const std::string& base_dir = "");
ScenarioConfig load_scenario(const std::string& path);
/// Pretty-printed JSON that parses back to an equivalent config.
std::string dump_scenario(const ScenarioConfig& config);

/// Reads the optional "sweep" section of a scenario document.
std::optional<SweepSpec> parse_sweep(const std::string& json_text, const ScenarioConfig& base);

Scenario build_scenario(const ScenarioConfig& config);
StateVector resolve_state(const StateRef& ref, int num_qubits, const std::vector<std::uint64_t>& marked);
std::string describe_initial(const ScenarioConfig& config);

/// `count` evenly spaced values from start to stop inclusive.
std::vector<double> linear_grid(double start, double stop, int count);
void validate_sweep(const SweepSpec& sweep);
ScenarioConfig instantiate(const SweepSpec& sweep, double value);

}  // namespace mixgrover
