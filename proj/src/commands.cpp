#include "mixgrover/commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "mixgrover/errors.hpp"
#include "mixgrover/predictor.hpp"
#include "text_format.hpp"

namespace mixgrover {

namespace {

constexpr const char* kPredictHeader =
    "omega,mean,amplitude,phase,p_max,t_opt,t_star,t_q,t_c,speedup,advantage,entropy_bits";

std::string num(const std::optional<double>& v) { return v ? text::format_double(*v) : std::string(); }

std::string prediction_fields(const std::optional<MixedPrediction>& pred, const std::optional<double>& entropy) {
  std::ostringstream out;
  if (pred) {
    out << text::format_double(pred->omega) << ',' << text::format_double(pred->mean) << ','
        << text::format_double(pred->amplitude) << ',' << text::format_double(pred->phase) << ','
        << text::format_double(pred->p_max) << ',' << text::format_double(pred->t_opt) << ',';
  } else {
    out << ",,,,,,";
  }
  out << (pred && pred->t_star ? std::to_string(*pred->t_star) : std::string()) << ',';
  if (pred && pred->cost) {
    out << text::format_double(pred->cost->quantum) << ',' << text::format_double(pred->cost->classical) << ','
        << text::format_double(pred->cost->speedup) << ',' << (pred->cost->advantage ? "true" : "false") << ',';
  } else {
    out << ",,,,";
  }
  out << num(entropy);
  return out.str();
}

// Entropy where it is affordable; large full-rank ensembles have none.
std::optional<double> try_entropy(const Ensemble& e) {
  try {
    return von_neumann_entropy(e);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::string error_text(const std::exception& e) {
  if (const auto* c = dynamic_cast<const ComputationError*>(&e)) return std::string(c->category()) + ": " + c->what();
  if (dynamic_cast<const DomainError*>(&e)) return std::string("validation: ") + e.what();
  return std::string("internal: ") + e.what();
}

// CSV fields never contain quotes or newlines here; commas become ';'.
std::string csv_safe(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

std::string cmd_predict(const ScenarioConfig& config) {
  const Scenario sc = build_scenario(config);
  const MixedPrediction pred = predict_mixed(sc.spec, sc.initial);
  std::ostringstream out;
  out << kPredictHeader << '\n' << prediction_fields(pred, try_entropy(sc.initial)) << '\n';
  return out.str();
}

std::string cmd_simulate(const ScenarioConfig& config) {
  const Scenario sc = build_scenario(config);
  const MixedPrediction pred = predict_curve(sc.spec, sc.initial);
  const SuccessCurve oracle = evolve_mixed(sc.spec, sc.initial, sc.horizon);
  std::ostringstream out;
  out << "t,P_oracle,P_predicted,residual\n";
  double worst = 0.0;
  for (std::size_t t = 0; t < oracle.values.size(); ++t) {
    const double predicted = pred.at(static_cast<double>(t));
    const double residual = std::abs(predicted - oracle.values[t]);
    worst = std::max(worst, residual);
    out << t << ',' << text::format_double(oracle.values[t]) << ',' << text::format_double(predicted) << ','
        << text::format_double(residual) << '\n';
  }
  out << "# max_residual," << text::format_double(worst) << '\n';
  return out.str();
}

std::string cmd_sweep(const SweepSpec& sweep) {
  validate_sweep(sweep);
  const auto rows = static_cast<std::int64_t>(sweep.values.size());
  std::vector<std::string> lines(sweep.values.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < rows; ++i) {
    const double value = sweep.values[i];
    std::optional<MixedPrediction> pred;
    std::optional<double> entropy;
    std::string error;
    try {
      const Scenario sc = build_scenario(instantiate(sweep, value));
      pred = predict_curve(sc.spec, sc.initial);
      entropy = try_entropy(sc.initial);
      pred = complete_prediction(*pred, sc.spec);
    } catch (const std::exception& e) {
      error = error_text(e);
    }
    lines[i] = text::format_double(value) + ',' + prediction_fields(pred, entropy) + ',' + csv_safe(error);
  }
  std::ostringstream out;
  out << sweep.axis << ',' << kPredictHeader << ",error\n";
  for (const auto& l : lines) out << l << '\n';
  return out.str();
}

std::string cmd_entropy_report(const std::vector<ReportEntry>& entries) {
  std::ostringstream out;
  out << "label,entropy_bits,mean,amplitude,phase,p_max,speedup,advantage,error\n";
  for (const auto& entry : entries) {
    std::vector<ReportCase> cases;
    std::string setup_error;
    std::string label = entry.alias.empty() ? describe_initial(entry.config) : entry.alias;
    try {
      if (!entry.alias.empty()) {
        if (entry.alias != kCounterexampleAlias) throw DomainError("unknown report alias '" + entry.alias + "'");
        cases = counterexample_cases(entry.config.n);
      } else {
        Scenario sc = build_scenario(entry.config);
        cases.push_back({label, std::move(sc.initial), std::move(sc.spec)});
      }
    } catch (const std::exception& e) {
      setup_error = error_text(e);
    }
    if (!setup_error.empty()) {
      out << csv_safe(label) << ",,,,,,,," << csv_safe(setup_error) << '\n';
      continue;
    }
    for (const auto& row : entropy_usefulness_report(cases)) {
      out << csv_safe(row.label) << ',' << num(row.entropy_bits) << ',';
      if (row.prediction) {
        const auto& p = *row.prediction;
        out << text::format_double(p.mean) << ',' << text::format_double(p.amplitude) << ','
            << text::format_double(p.phase) << ',' << text::format_double(p.p_max) << ',';
        if (p.cost) {
          out << text::format_double(p.cost->speedup) << ',' << (p.cost->advantage ? "true" : "false");
        } else {
          out << ',';
        }
      } else {
        out << ",,,,,";
      }
      out << ',' << csv_safe(row.error) << '\n';
    }
  }
  return out.str();
}

}  // namespace mixgrover
