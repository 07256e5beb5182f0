#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "mixgrover/qcore.hpp"
#include "mixgrover/states.hpp"

namespace mixgrover {

/// The U of the generalized iterate. Hadamard and identity are applied
/// structurally; dense unitaries (file or seeded random) are stored with
/// their adjoint and limited to kTol.max_dense_qubits.
class Unitary {
 public:
  enum class Kind { kHadamard, kIdentity, kDense };

  static Unitary hadamard(int num_qubits);
  static Unitary identity(int num_qubits);
  static Unitary dense(DenseOperator op);

  Kind kind() const { return kind_; }
  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return std::size_t{1} << num_qubits_; }

  void apply(std::span<Amp> v, std::vector<Amp>& scratch) const;
  void apply_adjoint(std::span<Amp> v, std::vector<Amp>& scratch) const;
  StateVector apply(StateVector v) const;
  StateVector apply_adjoint(StateVector v) const;

  /// Materialized matrix (used by the frequency formula and tests).
  ComplexMatrix matrix() const;
  /// Column U|s>.
  StateVector image(const StateVector& s) const;

 private:
  Unitary(Kind kind, int num_qubits) : kind_(kind), num_qubits_(num_qubits) {}

  Kind kind_;
  int num_qubits_;
  std::shared_ptr<const ComplexMatrix> forward_;
  std::shared_ptr<const ComplexMatrix> backward_;
};

struct ReflectionAxis {
  StateVector state;
  double angle;
};

/// Q = sign * U * prod_j I_{s_j}^{beta_j} * U^dag * I_M^gamma.
class IterateSpec {
 public:
  /// Checks: unit-norm axes, pairwise orthogonal when there are several,
  /// nonempty in-range marked set, matching dimensions. Marked labels are
  /// sorted and deduplicated.
  IterateSpec(Unitary unitary, std::vector<ReflectionAxis> axes, std::vector<std::uint64_t> marked, double gamma,
              double global_sign = -1.0);

  int num_qubits() const { return unitary_.num_qubits(); }
  std::size_t dim() const { return unitary_.dim(); }
  const Unitary& unitary() const { return unitary_; }
  const std::vector<ReflectionAxis>& axes() const { return axes_; }
  bool single_axis() const { return axes_.size() == 1; }
  const std::vector<std::uint64_t>& marked() const { return marked_; }
  double gamma() const { return gamma_; }
  double global_sign() const { return global_sign_; }

  /// In-place application on a raw vector (need not be normalized).
  void apply(std::span<Amp> v, std::vector<Amp>& scratch) const;

 private:
  Unitary unitary_;
  std::vector<ReflectionAxis> axes_;
  std::vector<std::uint64_t> marked_;
  double gamma_;
  double global_sign_;
};

/// -H I_0^pi H I_M^pi
IterateSpec original_iterate(int num_qubits, std::vector<std::uint64_t> marked);
/// -U I_s^beta U^dag I_M^gamma
IterateSpec generalized_iterate(Unitary unitary, StateVector s, double beta, std::vector<std::uint64_t> marked,
                                double gamma);

struct SuccessCurve {
  std::vector<double> values;  // P(t), t = 0..horizon
};

StateVector apply_iterate(const IterateSpec& spec, StateVector state);

/// Sum over marked labels of |amps[i]|^2.
double success_probability(std::span<const Amp> amps, std::span<const std::uint64_t> marked);

/// Streams P(0..horizon) to `sink` without storing states.
void for_each_success_probability(const IterateSpec& spec, const StateVector& init, std::int64_t horizon,
                                  const std::function<void(std::int64_t, double)>& sink);

SuccessCurve evolve_pure(const IterateSpec& spec, const StateVector& init, std::int64_t horizon);

/// Weighted average of per-component curves. Components run in parallel;
/// the average is summed in component order, so it equals the serial sum
/// of evolve_pure curves bit for bit.
SuccessCurve evolve_mixed(const IterateSpec& spec, const Ensemble& init, std::int64_t horizon);

/// Independent route: rho <- Q rho Q^dag, P(t) = sum_{i in M} rho_ii.
SuccessCurve evolve_density(const IterateSpec& spec, const DensityMatrix& init, std::int64_t horizon);

}  // namespace mixgrover
