#include "mixgrover/states.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <random>
#include <string>

#include "mixgrover/errors.hpp"
#include "mixgrover/kernels.hpp"
#include "mixgrover/tolerances.hpp"
#include "text_format.hpp"

namespace mixgrover {

namespace {

double xlog2x(double x) { return x <= 0.0 ? 0.0 : x * std::log2(x); }

void check_dense_size(int n, const char* what) {
  if (n > kTol.max_dense_qubits) {
    throw DomainError(std::string(what) + " is limited to " + std::to_string(kTol.max_dense_qubits) +
                      " qubits (got " + std::to_string(n) + ")");
  }
}

}  // namespace

Ensemble::Ensemble(std::vector<EnsembleComponent> components) : components_(std::move(components)) {
  if (components_.empty()) throw DomainError("ensemble has no components");
  num_qubits_ = components_.front().state.num_qubits();
  double total = 0.0;
  for (const auto& c : components_) {
    if (c.state.num_qubits() != num_qubits_) throw DomainError("ensemble components have different qubit counts");
    if (!(c.probability >= 0.0) || !std::isfinite(c.probability)) {
      throw DomainError("ensemble weight must be finite and nonnegative");
    }
    if (!c.state.is_normalized(kTol.component_norm)) throw DomainError("ensemble component is not normalized");
    total += c.probability;
  }
  if (!(std::abs(total - 1.0) <= kTol.probability_sum)) {
    throw DomainError("ensemble weights sum to " + text::format_double(total) + ", expected 1");
  }
}

Ensemble Ensemble::pure(StateVector state) {
  std::vector<EnsembleComponent> c;
  c.push_back({1.0, std::move(state)});
  return Ensemble(std::move(c));
}

DensityMatrix ensemble_to_density(const Ensemble& e) {
  check_dense_size(e.num_qubits(), "density matrix construction");
  const std::size_t dim = e.dim();
  std::vector<double> weights;
  std::vector<Amp> stacked;
  weights.reserve(e.size());
  stacked.reserve(e.size() * dim);
  for (const auto& c : e.components()) {
    weights.push_back(c.probability);
    stacked.insert(stacked.end(), c.state.amps().begin(), c.state.amps().end());
  }
  ComplexMatrix rho(dim);
  kernels::weighted_outer_sum(weights, stacked, dim, rho.mutable_data());
  return DensityMatrix(std::move(rho));
}

std::vector<StateVector> orthonormal_completion(const StateVector& psi) {
  const std::size_t dim = psi.dim();
  const auto amps = psi.amps();
  // tail[j] = sum_{i >= j} |psi_i|^2
  std::vector<double> tail(dim + 1, 0.0);
  for (std::size_t j = dim; j-- > 0;) tail[j] = tail[j + 1] + std::norm(amps[j]);

  // Gram-Schmidt of e_k against span{psi, e_i : i < k, i not skipped}.
  // The orthogonal complement of the accepted e_i is spanned by the skipped
  // coordinates and coordinates >= k, so the residual only needs psi
  // restricted there: r = e_k - conj(psi_k) P psi / |P psi|^2.
  std::vector<std::size_t> skipped;
  double skipped_weight = 0.0;
  std::vector<StateVector> out;
  out.reserve(dim - 1);
  for (std::size_t k = 0; k < dim; ++k) {
    const double t = tail[k] + skipped_weight;
    const double pk = std::norm(amps[k]);
    std::vector<Amp> r(dim);
    double norm2 = 1.0;
    if (t > 0.0 && pk > 0.0) {
      norm2 = (tail[k + 1] + skipped_weight) / t;
      const Amp scale = -std::conj(amps[k]) / t;
      for (auto s : skipped) r[s] = scale * amps[s];
      for (std::size_t i = k + 1; i < dim; ++i) r[i] = scale * amps[i];
      r[k] = norm2;
    } else {
      r[k] = 1.0;
    }
    const double nrm = std::sqrt(norm2);
    if (nrm < kTol.completion_residual) {
      skipped.push_back(k);
      skipped_weight += pk;
      continue;
    }
    for (auto& a : r) a /= nrm;
    out.emplace_back(psi.num_qubits(), std::move(r));
  }
  if (out.size() != dim - 1) {
    throw ComputationError("orthonormal completion produced " + std::to_string(out.size()) + " vectors, expected " +
                           std::to_string(dim - 1));
  }
  return out;
}

Ensemble pseudo_pure(const PseudoPureSpec& spec) {
  if (!(spec.epsilon >= 0.0 && spec.epsilon <= 1.0)) {
    throw DomainError("pseudo-pure epsilon must lie in [0, 1], got " + text::format_double(spec.epsilon));
  }
  if (spec.base.num_qubits() != spec.num_qubits) throw DomainError("pseudo-pure base state has wrong qubit count");
  if (!spec.base.is_normalized(kTol.component_norm)) throw DomainError("pseudo-pure base state is not normalized");
  check_dense_size(spec.num_qubits, "pseudo-pure ensemble");
  const double dim = static_cast<double>(spec.base.dim());
  const double background = (1.0 - spec.epsilon) / dim;
  std::vector<EnsembleComponent> comps;
  comps.reserve(spec.base.dim());
  comps.push_back({spec.epsilon + background, spec.base});
  for (auto& v : orthonormal_completion(spec.base)) comps.push_back({background, std::move(v)});
  return Ensemble(std::move(comps));
}

Ensemble m_mix(const MMixSpec& spec) {
  if (spec.mixed_qubits < 0 || spec.mixed_qubits > spec.num_qubits) {
    throw DomainError("m-mix needs 0 <= m <= n, got m=" + std::to_string(spec.mixed_qubits));
  }
  check_dense_size(spec.mixed_qubits, "m-mix ensemble");
  const std::uint64_t count = std::uint64_t{1} << spec.mixed_qubits;
  const double p = 1.0 / static_cast<double>(count);
  std::vector<EnsembleComponent> comps;
  comps.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    comps.push_back({p, hadamard_all(basis_state(i, spec.num_qubits))});
  }
  return Ensemble(std::move(comps));
}

double entropy_bits(std::span<const double> eigenvalues) {
  double s = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda < -kTol.psd) throw DomainError("spectrum has a negative eigenvalue " + text::format_double(lambda));
    s -= xlog2x(lambda);
  }
  return s;
}

ComplexMatrix gram_matrix(const Ensemble& e) {
  const std::size_t k = e.size();
  ComplexMatrix g(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      const double w = std::sqrt(e[a].probability * e[b].probability);
      const Amp v = a == b ? Amp(w * std::norm(e[a].state.norm()), 0.0) : w * inner(e[a].state, e[b].state);
      g(a, b) = v;
      g(b, a) = std::conj(v);
    }
  }
  return g;
}

double von_neumann_entropy(const Ensemble& e) {
  if (e.size() < e.dim()) return entropy_bits(hermitian_eigenvalues(gram_matrix(e)));
  return entropy_bits(hermitian_eigenvalues(ensemble_to_density(e)));
}

double pseudo_pure_entropy_exact(double dim, double epsilon) {
  const double low = (1.0 - epsilon) / dim;
  const double high = (1.0 + (dim - 1.0) * epsilon) / dim;
  return -(dim - 1.0) * xlog2x(low) - xlog2x(high);
}

ApproxEntropy pseudo_pure_entropy_approx(double dim, double epsilon) {
  const double remainder = xlog2x(1.0 - epsilon) + xlog2x(1.0 / dim + epsilon);
  return {(1.0 - epsilon) * std::log2(dim) - remainder, remainder};
}

StateVector random_pure_state(int num_qubits, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Amp> amps(std::size_t{1} << num_qubits);
  for (auto& a : amps) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    a = Amp(re, im);
  }
  return StateVector(num_qubits, std::move(amps)).normalized();
}

Ensemble random_ensemble(int num_qubits, std::size_t components, std::uint64_t seed) {
  if (components == 0) throw DomainError("random ensemble needs at least one component");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(components);
  double total = 0.0;
  for (auto& x : w) total += (x = expo(rng));
  std::vector<EnsembleComponent> comps;
  comps.reserve(components);
  for (std::size_t k = 0; k < components; ++k) {
    comps.push_back({w[k] / total, random_pure_state(num_qubits, rng())});
  }
  return Ensemble(std::move(comps));
}

Ensemble read_ensemble(std::istream& in) {
  const int n = static_cast<int>(text::parse_double(text::next_token(in, "qubit count"), "qubit count"));
  const double k_raw = text::parse_double(text::next_token(in, "component count"), "component count");
  if (n < 0 || n > 30 || k_raw < 1 || k_raw != std::floor(k_raw)) {
    throw DomainError("ensemble header must be 'n K' with K >= 1");
  }
  const auto k = static_cast<std::size_t>(k_raw);
  const std::size_t dim = std::size_t{1} << n;
  std::vector<EnsembleComponent> comps;
  comps.reserve(k);
  for (std::size_t c = 0; c < k; ++c) {
    const double p = text::parse_double(text::next_token(in, "component weight"), "component weight");
    std::vector<Amp> amps(dim);
    for (auto& a : amps) a = text::parse_amp(text::next_token(in, "amplitude"));
    comps.push_back({p, StateVector(n, std::move(amps))});
  }
  std::string extra;
  if (in >> extra) throw DomainError("trailing data after ensemble: '" + extra + "'");
  return Ensemble(std::move(comps));
}

void write_ensemble(std::ostream& out, const Ensemble& e) {
  out << e.num_qubits() << ' ' << e.size() << '\n';
  for (const auto& c : e.components()) {
    out << text::format_double(c.probability);
    for (const auto& a : c.state.amps()) out << ' ' << text::format_amp(a);
    out << '\n';
  }
}

}  // namespace mixgrover
