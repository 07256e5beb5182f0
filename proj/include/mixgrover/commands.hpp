#pragma once

// The four tool subcommands as pure functions returning CSV text. Every
// number is written with 17 significant digits, so identical inputs give
// byte-identical output.

#include <string>
#include <vector>

#include "mixgrover/scenario.hpp"

namespace mixgrover {

/// Header + one row: omega, mean, amplitude, phase, p_max, t_opt, t_star,
/// t_q, t_c, speedup, advantage, entropy_bits. Throws on any error.
std::string cmd_predict(const ScenarioConfig& config);

/// Rows "t,P_oracle,P_predicted,residual" for t = 0..horizon, then a
/// footer "# max_residual,<value>".
std::string cmd_simulate(const ScenarioConfig& config);

/// One row per value (in order): the axis value, the predict columns and
/// an error column. Row failures are recorded, not thrown.
std::string cmd_sweep(const SweepSpec& sweep);

/// Entry for entropy-report: either a scenario or the alias
/// "paper-counterexamples" expanded at `alias_qubits`.
struct ReportEntry {
  std::string alias;  // empty: use `config`
  ScenarioConfig config;
};
inline constexpr const char* kCounterexampleAlias = "paper-counterexamples";

/// Columns: label, entropy_bits, mean, amplitude, phase, p_max, speedup,
/// advantage, error.
std::string cmd_entropy_report(const std::vector<ReportEntry>& entries);

}  // namespace mixgrover
