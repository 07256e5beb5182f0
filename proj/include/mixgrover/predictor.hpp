#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mixgrover/grover.hpp"
#include "mixgrover/states.hpp"

namespace mixgrover {

/// P(t) = mean - amplitude * cos(2 omega t + 2 phase), phase in (-pi/2, pi/2].
struct SinusoidParams {
  double mean = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
  double omega = 0.0;

  double at(double t) const;
};

enum class FitMethod { kThreePoint, kLeastSquares };

struct SinusoidFit {
  SinusoidParams params;
  double residual = 0.0;     // max |P(t) - fit(t)| over the fit window
  std::int64_t window = 0;   // last t of the residual window
  FitMethod method = FitMethod::kThreePoint;
};

/// cos w = sum_{i in M} |<i|U|s>|^2 cos((b+g)/2) + sum_{i not in M} |<i|U|s>|^2 cos((b-g)/2).
/// Throws UnsupportedSpecError for multi-axis iterates.
double angular_frequency(const IterateSpec& spec);

/// Fits the success curve of a pure start. Three samples determine mean,
/// amplitude and phase exactly; the curve over t in [0, 4 pi / w] is then
/// checked and, if the residual exceeds kTol.fit_residual or w sits at a
/// multiple of pi/2, refit by least squares over that window.
SinusoidFit extract_sinusoid(const IterateSpec& spec, const StateVector& init);
SinusoidFit extract_sinusoid(const IterateSpec& spec, const StateVector& init, double omega);

/// Wrap a double angle 2*phi into (-pi, pi].
double normalize_double_angle(double two_phi);

struct WeightedSinusoid {
  double probability;
  SinusoidParams params;
};

struct QueryCost {
  double quantum;    // T / P_max
  double classical;  // N/2 for one marked item, (N+1)/(|M|+1) otherwise
  double speedup;    // classical / quantum
  bool advantage;    // speedup > 1
};

struct MixedPrediction {
  double mean = 0.0;
  double amplitude = 0.0;
  double phase = 0.0;
  double omega = 0.0;
  double p_max = 0.0;
  double t_opt = 0.0;  // (pi - 2 phase) / (2 omega); +inf when omega == 0
  std::optional<std::int64_t> t_star;
  std::optional<QueryCost> cost;

  /// mean - amplitude * cos(2 omega t + 2 phase)
  double at(double t) const;
};

/// Rotating-vector sum of per-component sinusoids sharing one frequency.
MixedPrediction combine_ensemble(std::span<const WeightedSinusoid> components);

struct StoppingPoint {
  double real;
  std::int64_t iterations;  // floor or ceil of `real`, whichever predicts more
};
StoppingPoint optimal_iterations(const MixedPrediction& pred);

double expected_total_queries(const MixedPrediction& pred);
/// (pi - 2 phase) sqrt(N) / (4 P_max); valid for the original iterate with one marked item.
double expected_total_queries_reduced(const MixedPrediction& pred, double dim);
double classical_expected_queries(double dim, std::size_t marked_count);
QueryCost speedup_ratio(const MixedPrediction& pred, double dim, std::size_t marked_count);

/// Frequency, per-component fits and their combination; no stopping or
/// cost fields. Does not reject flat curves.
MixedPrediction predict_curve(const IterateSpec& spec, const Ensemble& init);
/// Fills t_star and cost on a curve prediction. A curve whose amplitude is
/// below kTol.flat_amplitude cannot be amplified and is rejected as a
/// useless initial state.
MixedPrediction complete_prediction(MixedPrediction curve, const IterateSpec& spec);
MixedPrediction predict_mixed(const IterateSpec& spec, const Ensemble& init);

/// max_{t <= horizon} |predicted(t) - evolve_mixed(t)|
double validate_prediction(const IterateSpec& spec, const Ensemble& init, std::int64_t horizon);

struct ReportCase {
  std::string label;
  Ensemble ensemble;
  IterateSpec spec;
};

struct ReportRow {
  std::string label;
  std::optional<double> entropy_bits;
  std::optional<MixedPrediction> prediction;  // cost may be empty on error
  std::string error;                          // empty when the row succeeded
};

std::vector<ReportRow> entropy_usefulness_report(std::span<const ReportCase> cases);

/// Two equal-entropy pairs with opposite usefulness, original iterate,
/// marked item N-1: eps = 1/n pseudo-pure vs (n-1)-mix, H|0> vs H|1>.
std::vector<ReportCase> counterexample_cases(int num_qubits);

}  // namespace mixgrover
