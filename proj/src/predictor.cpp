#include "mixgrover/predictor.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>

#include "mixgrover/errors.hpp"
#include "mixgrover/tolerances.hpp"

namespace mixgrover {

namespace {

struct Coefficients {
  double mean;
  double c;  // amplitude * cos(2 phi)
  double s;  // -amplitude * sin(2 phi)
};

double model(const Coefficients& k, double omega, double t) {
  return k.mean - k.c * std::cos(2.0 * omega * t) - k.s * std::sin(2.0 * omega * t);
}

double max_residual(const Coefficients& k, double omega, std::span<const double> curve) {
  double r = 0.0;
  for (std::size_t t = 0; t < curve.size(); ++t) {
    r = std::max(r, std::abs(curve[t] - model(k, omega, static_cast<double>(t))));
  }
  return r;
}

// Where 2w is a multiple of pi the cosine and sine columns collapse; the
// number of independent columns is 1 (even multiple) or 2 (odd multiple).
int independent_columns(double omega) {
  const double turns = 2.0 * omega / M_PI;
  const double nearest = std::round(turns);
  if (std::abs(omega - nearest * M_PI / 2.0) > kTol.singular_omega) return 3;
  return (static_cast<long long>(nearest) % 2 == 0) ? 1 : 2;
}

Coefficients least_squares(std::span<const double> curve, double omega, int columns) {
  const auto rows = static_cast<Eigen::Index>(curve.size());
  Eigen::MatrixXd a(rows, columns);
  Eigen::VectorXd b(rows);
  for (Eigen::Index t = 0; t < rows; ++t) {
    const double x = 2.0 * omega * static_cast<double>(t);
    a(t, 0) = 1.0;
    if (columns > 1) a(t, 1) = -std::cos(x);
    if (columns > 2) a(t, 2) = -std::sin(x);
    b(t) = curve[static_cast<std::size_t>(t)];
  }
  const Eigen::VectorXd sol = a.colPivHouseholderQr().solve(b);
  return {sol(0), columns > 1 ? sol(1) : 0.0, columns > 2 ? sol(2) : 0.0};
}

Coefficients three_point(std::span<const double> curve, double omega) {
  Eigen::Matrix3d a;
  Eigen::Vector3d b;
  for (int t = 0; t < 3; ++t) {
    a(t, 0) = 1.0;
    a(t, 1) = -std::cos(2.0 * omega * t);
    a(t, 2) = -std::sin(2.0 * omega * t);
    b(t) = curve[static_cast<std::size_t>(t)];
  }
  const Eigen::Vector3d sol = a.fullPivLu().solve(b);
  return {sol(0), sol(1), sol(2)};
}

SinusoidParams to_params(const Coefficients& k, double omega) {
  SinusoidParams p;
  p.mean = k.mean;
  p.amplitude = std::hypot(k.c, k.s);
  p.phase = p.amplitude <= kTol.zero_amplitude ? 0.0 : normalize_double_angle(std::atan2(-k.s, k.c)) / 2.0;
  p.omega = omega;
  return p;
}

void require_single_axis(const IterateSpec& spec) {
  if (!spec.single_axis()) {
    throw UnsupportedSpecError("multi-axis iterates are supported in simulation only; no closed-form prediction");
  }
}

}  // namespace

double SinusoidParams::at(double t) const { return mean - amplitude * std::cos(2.0 * omega * t + 2.0 * phase); }

double MixedPrediction::at(double t) const { return mean - amplitude * std::cos(2.0 * omega * t + 2.0 * phase); }

double normalize_double_angle(double two_phi) {
  double x = std::remainder(two_phi, 2.0 * M_PI);
  if (x <= -M_PI + kTol.phase_branch) x += 2.0 * M_PI;
  return std::min(x, M_PI);
}

double angular_frequency(const IterateSpec& spec) {
  require_single_axis(spec);
  const auto& axis = spec.axes().front();
  const StateVector image = spec.unitary().image(axis.state);
  const auto& marked = spec.marked();
  double in_marked = 0.0;
  double outside = 0.0;
  for (std::size_t i = 0; i < image.dim(); ++i) {
    const double w = std::norm(image[i]);
    if (std::binary_search(marked.begin(), marked.end(), i)) {
      in_marked += w;
    } else {
      outside += w;
    }
  }
  const double beta = axis.angle;
  const double gamma = spec.gamma();
  const double cos_omega = in_marked * std::cos((beta + gamma) / 2.0) + outside * std::cos((beta - gamma) / 2.0);
  return std::acos(std::clamp(cos_omega, -1.0, 1.0));
}

SinusoidFit extract_sinusoid(const IterateSpec& spec, const StateVector& init) {
  return extract_sinusoid(spec, init, angular_frequency(spec));
}

SinusoidFit extract_sinusoid(const IterateSpec& spec, const StateVector& init, double omega) {
  require_single_axis(spec);
  const int columns = independent_columns(omega);
  std::int64_t window = kTol.min_lsq_points - 1;
  if (columns == 3) {
    const double span = std::ceil(4.0 * M_PI / omega);
    window = std::max<std::int64_t>(window, static_cast<std::int64_t>(std::min<double>(span, kTol.fit_window_cap)));
  }
  const auto curve = evolve_pure(spec, init, window).values;

  SinusoidFit fit;
  fit.window = window;
  Coefficients k{};
  if (columns == 3) {
    k = three_point(curve, omega);
    fit.residual = max_residual(k, omega, curve);
    fit.method = FitMethod::kThreePoint;
  }
  if (columns < 3 || !(fit.residual <= kTol.fit_residual)) {
    k = least_squares(curve, omega, columns);
    fit.residual = max_residual(k, omega, curve);
    fit.method = FitMethod::kLeastSquares;
  }
  fit.params = to_params(k, omega);
  return fit;
}

MixedPrediction combine_ensemble(std::span<const WeightedSinusoid> components) {
  if (components.empty()) throw DomainError("cannot combine an empty component list");
  const double omega = components.front().params.omega;
  double total = 0.0;
  double mean = 0.0;
  double x = 0.0;
  double y = 0.0;
  for (const auto& c : components) {
    if (std::abs(c.params.omega - omega) > kTol.omega_match) {
      throw DomainError("components do not share one angular frequency");
    }
    total += c.probability;
    mean += c.probability * c.params.mean;
    x += c.probability * c.params.amplitude * std::cos(2.0 * c.params.phase);
    y += c.probability * c.params.amplitude * std::sin(2.0 * c.params.phase);
  }
  if (std::abs(total - 1.0) > kTol.probability_sum) throw DomainError("component weights do not sum to one");

  MixedPrediction pred;
  pred.mean = mean;
  pred.amplitude = std::hypot(x, y);
  pred.phase = pred.amplitude <= kTol.zero_amplitude ? 0.0 : normalize_double_angle(std::atan2(y, x)) / 2.0;
  pred.omega = omega;
  pred.p_max = pred.mean + pred.amplitude;
  pred.t_opt = omega > 0.0 ? (M_PI - 2.0 * pred.phase) / (2.0 * omega) : std::numeric_limits<double>::infinity();
  return pred;
}

StoppingPoint optimal_iterations(const MixedPrediction& pred) {
  if (!(pred.omega > 0.0)) throw NoOscillationError("angular frequency is zero; the success probability never moves");
  const double t = (M_PI - 2.0 * pred.phase) / (2.0 * pred.omega);
  const double lo = std::floor(t);
  const double hi = std::ceil(t);
  const double best = pred.at(hi) > pred.at(lo) ? hi : lo;
  return {t, static_cast<std::int64_t>(best)};
}

double expected_total_queries(const MixedPrediction& pred) {
  if (!(pred.p_max > kTol.useless_p_max)) {
    throw UselessInitialStateError("maximum success probability is zero; the search never succeeds");
  }
  return optimal_iterations(pred).real / pred.p_max;
}

double expected_total_queries_reduced(const MixedPrediction& pred, double dim) {
  if (!(pred.p_max > kTol.useless_p_max)) {
    throw UselessInitialStateError("maximum success probability is zero; the search never succeeds");
  }
  return (M_PI - 2.0 * pred.phase) * std::sqrt(dim) / (4.0 * pred.p_max);
}

double classical_expected_queries(double dim, std::size_t marked_count) {
  if (marked_count == 0) throw DomainError("classical baseline needs at least one marked item");
  if (marked_count == 1) return dim / 2.0;
  return (dim + 1.0) / (static_cast<double>(marked_count) + 1.0);
}

QueryCost speedup_ratio(const MixedPrediction& pred, double dim, std::size_t marked_count) {
  QueryCost cost;
  cost.quantum = expected_total_queries(pred);
  cost.classical = classical_expected_queries(dim, marked_count);
  cost.speedup = cost.classical / cost.quantum;
  cost.advantage = cost.speedup > 1.0;
  return cost;
}

MixedPrediction predict_curve(const IterateSpec& spec, const Ensemble& init) {
  require_single_axis(spec);
  if (init.dim() != spec.dim()) throw DomainError("ensemble dimension does not match the iterate");
  const double omega = angular_frequency(spec);
  const auto k_count = static_cast<std::int64_t>(init.size());
  std::vector<WeightedSinusoid> parts(init.size(), WeightedSinusoid{0.0, {}});
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k < k_count; ++k) {
    try {
      parts[k] = {init[k].probability, extract_sinusoid(spec, init[k].state, omega).params};
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return combine_ensemble(parts);
}

MixedPrediction complete_prediction(MixedPrediction curve, const IterateSpec& spec) {
  if (!(curve.amplitude > kTol.flat_amplitude)) {
    throw UselessInitialStateError("success probability is constant under the iterate; nothing to amplify");
  }
  curve.t_star = optimal_iterations(curve).iterations;
  curve.cost = speedup_ratio(curve, static_cast<double>(spec.dim()), spec.marked().size());
  return curve;
}

MixedPrediction predict_mixed(const IterateSpec& spec, const Ensemble& init) {
  return complete_prediction(predict_curve(spec, init), spec);
}

double validate_prediction(const IterateSpec& spec, const Ensemble& init, std::int64_t horizon) {
  const MixedPrediction pred = predict_curve(spec, init);
  const SuccessCurve oracle = evolve_mixed(spec, init, horizon);
  double r = 0.0;
  for (std::size_t t = 0; t < oracle.values.size(); ++t) {
    r = std::max(r, std::abs(pred.at(static_cast<double>(t)) - oracle.values[t]));
  }
  return r;
}

std::vector<ReportRow> entropy_usefulness_report(std::span<const ReportCase> cases) {
  std::vector<ReportRow> rows;
  rows.reserve(cases.size());
  for (const auto& c : cases) {
    ReportRow row;
    row.label = c.label;
    try {
      row.entropy_bits = von_neumann_entropy(c.ensemble);
      row.prediction = predict_curve(c.spec, c.ensemble);
      row.prediction = complete_prediction(*row.prediction, c.spec);
    } catch (const ComputationError& e) {
      row.error = std::string(e.category()) + ": " + e.what();
    } catch (const DomainError& e) {
      row.error = std::string("validation: ") + e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<ReportCase> counterexample_cases(int num_qubits) {
  if (num_qubits < 2) throw DomainError("counterexamples need at least 2 qubits");
  const std::uint64_t target = (std::uint64_t{1} << num_qubits) - 1;
  const auto spec = original_iterate(num_qubits, {target});
  const StateVector uniform = hadamard_all(basis_state(0, num_qubits));
  std::vector<ReportCase> cases;
  cases.push_back({"pseudo_pure(eps=1/n)",
                   pseudo_pure({num_qubits, 1.0 / static_cast<double>(num_qubits), uniform}), spec});
  cases.push_back({"m_mix(m=n-1)", m_mix({num_qubits, num_qubits - 1}), spec});
  cases.push_back({"pure(H|0>)", Ensemble::pure(uniform), spec});
  cases.push_back({"pure(H|1>)", Ensemble::pure(hadamard_all(basis_state(1, num_qubits))), spec});
  return cases;
}

}  // namespace mixgrover
