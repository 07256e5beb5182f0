#pragma once

#include <cstdint>
#include <iosfwd>
#include <utility>
#include <vector>

#include "mixgrover/qcore.hpp"

namespace mixgrover {

struct EnsembleComponent {
  double probability;
  StateVector state;
};

/// A mixed state presented as pure states with probabilities. Components
/// are kept as given; nothing is purified or diagonalized.
class Ensemble {
 public:
  /// Checks: nonempty, weights nonnegative and summing to one, shared qubit
  /// count, unit-norm components.
  explicit Ensemble(std::vector<EnsembleComponent> components);

  static Ensemble pure(StateVector state);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return std::size_t{1} << num_qubits_; }
  std::size_t size() const { return components_.size(); }
  const std::vector<EnsembleComponent>& components() const { return components_; }
  const EnsembleComponent& operator[](std::size_t i) const { return components_[i]; }

 private:
  int num_qubits_ = 0;
  std::vector<EnsembleComponent> components_;
};

struct PseudoPureSpec {
  int num_qubits;
  double epsilon;
  StateVector base;
};

struct MMixSpec {
  int num_qubits;
  int mixed_qubits;
};

/// sum_mu p_mu |psi_mu><psi_mu|; only for up to kTol.max_dense_qubits.
DensityMatrix ensemble_to_density(const Ensemble& e);

/// psi with weight eps + (1-eps)/N, plus a Gram-Schmidt completion of
/// {psi} over the computational basis, each with weight (1-eps)/N.
Ensemble pseudo_pure(const PseudoPureSpec& spec);

/// 2^m equiprobable components H|i>, i < 2^m.
Ensemble m_mix(const MMixSpec& spec);

/// Orthonormal completion of {psi}: N-1 unit vectors orthogonal to psi and
/// to each other, in the order Gram-Schmidt over e_0, e_1, ... yields them.
std::vector<StateVector> orthonormal_completion(const StateVector& psi);

/// -sum lambda log2 lambda over a spectrum; 0 log 0 = 0, tiny negatives
/// (within kTol.psd) count as 0.
double entropy_bits(std::span<const double> eigenvalues);

/// K x K matrix sqrt(p_mu p_nu) <psi_mu|psi_nu>; same nonzero spectrum as rho.
ComplexMatrix gram_matrix(const Ensemble& e);

/// Von Neumann entropy in bits. Uses the Gram matrix when there are fewer
/// components than dimensions, the dense density matrix otherwise.
double von_neumann_entropy(const Ensemble& e);

/// Closed-form entropy of (1-eps) I/N + eps |psi><psi| (bits).
double pseudo_pure_entropy_exact(double dim, double epsilon);

struct ApproxEntropy {
  double entropy;
  double remainder;  // the l in (1-eps) log2 N - l
};
/// Large-N approximation (1-eps) log2 N - l with
/// l = (1-eps) log2(1-eps) + (1/N + eps) log2(1/N + eps).
ApproxEntropy pseudo_pure_entropy_approx(double dim, double epsilon);

/// Normalized state with i.i.d. standard complex Gaussian entries.
StateVector random_pure_state(int num_qubits, std::uint64_t seed);
/// K random pure components with exponential(1) weights, normalized.
Ensemble random_ensemble(int num_qubits, std::size_t components, std::uint64_t seed);

// Ensemble text format: "n K", then per component the weight followed by
// N amplitudes written "re,im".
Ensemble read_ensemble(std::istream& in);
void write_ensemble(std::ostream& out, const Ensemble& e);

}  // namespace mixgrover
