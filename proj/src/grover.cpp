#include "mixgrover/grover.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mixgrover/errors.hpp"
#include "mixgrover/kernels.hpp"
#include "mixgrover/tolerances.hpp"

namespace mixgrover {

namespace {

void check_horizon(std::int64_t horizon) {
  if (horizon < 0) throw DomainError("horizon must be nonnegative");
  if (horizon > kTol.max_horizon) {
    throw DomainError("horizon " + std::to_string(horizon) + " exceeds the cap of " +
                      std::to_string(kTol.max_horizon) + " iterations");
  }
}

// Per-component curves are buffered in batches of at most this many doubles.
constexpr std::size_t kCurveBufferDoubles = std::size_t{1} << 22;

}  // namespace

Unitary Unitary::hadamard(int num_qubits) { return Unitary(Kind::kHadamard, num_qubits); }

Unitary Unitary::identity(int num_qubits) { return Unitary(Kind::kIdentity, num_qubits); }

Unitary Unitary::dense(DenseOperator op) {
  const int n = qubits_for_dim(op.dim());
  if (n < 0) throw DomainError("dense unitary dimension must be a power of two");
  if (n > kTol.max_dense_qubits) {
    throw DomainError("dense unitaries are limited to " + std::to_string(kTol.max_dense_qubits) + " qubits");
  }
  if (!op.is_unitary()) op = DenseOperator::unitary(op.matrix());
  Unitary u(Kind::kDense, n);
  u.backward_ = std::make_shared<const ComplexMatrix>(op.matrix().adjoint());
  u.forward_ = std::make_shared<const ComplexMatrix>(op.matrix());
  return u;
}

void Unitary::apply(std::span<Amp> v, std::vector<Amp>& scratch) const {
  switch (kind_) {
    case Kind::kHadamard:
      kernels::walsh_hadamard(v);
      break;
    case Kind::kIdentity:
      break;
    case Kind::kDense:
      scratch.resize(v.size());
      kernels::matvec(*forward_, v, scratch);
      std::copy(scratch.begin(), scratch.end(), v.begin());
      break;
  }
}

void Unitary::apply_adjoint(std::span<Amp> v, std::vector<Amp>& scratch) const {
  switch (kind_) {
    case Kind::kHadamard:
      kernels::walsh_hadamard(v);
      break;
    case Kind::kIdentity:
      break;
    case Kind::kDense:
      scratch.resize(v.size());
      kernels::matvec(*backward_, v, scratch);
      std::copy(scratch.begin(), scratch.end(), v.begin());
      break;
  }
}

StateVector Unitary::apply(StateVector v) const {
  if (v.dim() != dim()) throw DomainError("unitary and state dimensions differ");
  std::vector<Amp> scratch;
  apply(v.mutable_amps(), scratch);
  return v;
}

StateVector Unitary::apply_adjoint(StateVector v) const {
  if (v.dim() != dim()) throw DomainError("unitary and state dimensions differ");
  std::vector<Amp> scratch;
  apply_adjoint(v.mutable_amps(), scratch);
  return v;
}

ComplexMatrix Unitary::matrix() const {
  if (kind_ == Kind::kDense) return *forward_;
  ComplexMatrix m(dim());
  std::vector<Amp> col(dim());
  std::vector<Amp> scratch;
  for (std::size_t c = 0; c < dim(); ++c) {
    std::fill(col.begin(), col.end(), Amp{});
    col[c] = 1.0;
    apply(col, scratch);
    for (std::size_t r = 0; r < dim(); ++r) m(r, c) = col[r];
  }
  return m;
}

StateVector Unitary::image(const StateVector& s) const { return apply(s); }

IterateSpec::IterateSpec(Unitary unitary, std::vector<ReflectionAxis> axes, std::vector<std::uint64_t> marked,
                         double gamma, double global_sign)
    : unitary_(std::move(unitary)),
      axes_(std::move(axes)),
      marked_(std::move(marked)),
      gamma_(gamma),
      global_sign_(global_sign) {
  if (axes_.empty()) throw DomainError("iterate needs at least one reflection axis");
  for (const auto& a : axes_) {
    if (a.state.dim() != dim()) throw DomainError("reflection axis dimension does not match the unitary");
    if (!a.state.is_normalized(kTol.axis_norm)) throw DomainError("reflection axis is not normalized");
    if (!std::isfinite(a.angle)) throw DomainError("reflection angle must be finite");
  }
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    for (std::size_t j = i + 1; j < axes_.size(); ++j) {
      if (std::abs(inner(axes_[i].state, axes_[j].state)) > kTol.axis_norm) {
        throw DomainError("reflection axes must be pairwise orthogonal");
      }
    }
  }
  if (marked_.empty()) throw DomainError("marked set must be nonempty");
  std::sort(marked_.begin(), marked_.end());
  marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
  if (marked_.back() >= dim()) {
    throw DomainError("marked label " + std::to_string(marked_.back()) + " out of range for " +
                      std::to_string(num_qubits()) + " qubits");
  }
  if (!std::isfinite(gamma_)) throw DomainError("marked angle must be finite");
  if (std::abs(std::abs(global_sign_) - 1.0) > 0.0) throw DomainError("global sign must be +1 or -1");
}

void IterateSpec::apply(std::span<Amp> v, std::vector<Amp>& scratch) const {
  const Amp marked_phase = std::polar(1.0, gamma_);
  for (auto i : marked_) v[i] *= marked_phase;
  unitary_.apply_adjoint(v, scratch);
  for (const auto& axis : axes_) {
    const auto s = axis.state.amps();
    const Amp coeff = (std::polar(1.0, axis.angle) - 1.0) * inner(s, v);
    if (coeff == Amp{}) continue;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (s[i] != Amp{}) v[i] += coeff * s[i];
    }
  }
  unitary_.apply(v, scratch);
  if (global_sign_ < 0) {
    for (auto& a : v) a = -a;
  }
}

IterateSpec original_iterate(int num_qubits, std::vector<std::uint64_t> marked) {
  if (marked.empty()) throw DomainError("original iterate needs a nonempty marked set");
  std::vector<ReflectionAxis> axes;
  axes.push_back({basis_state(0, num_qubits), M_PI});
  return IterateSpec(Unitary::hadamard(num_qubits), std::move(axes), std::move(marked), M_PI, -1.0);
}

IterateSpec generalized_iterate(Unitary unitary, StateVector s, double beta, std::vector<std::uint64_t> marked,
                                double gamma) {
  std::vector<ReflectionAxis> axes;
  axes.push_back({std::move(s), beta});
  return IterateSpec(std::move(unitary), std::move(axes), std::move(marked), gamma, -1.0);
}

StateVector apply_iterate(const IterateSpec& spec, StateVector state) {
  if (state.dim() != spec.dim()) throw DomainError("state dimension does not match the iterate");
  std::vector<Amp> scratch;
  spec.apply(state.mutable_amps(), scratch);
  return state;
}

double success_probability(std::span<const Amp> amps, std::span<const std::uint64_t> marked) {
  double p = 0.0;
  for (auto i : marked) p += std::norm(amps[i]);
  return p;
}

void for_each_success_probability(const IterateSpec& spec, const StateVector& init, std::int64_t horizon,
                                  const std::function<void(std::int64_t, double)>& sink) {
  check_horizon(horizon);
  if (init.dim() != spec.dim()) throw DomainError("initial state dimension does not match the iterate");
  std::vector<Amp> v(init.amps().begin(), init.amps().end());
  std::vector<Amp> scratch;
  sink(0, success_probability(v, spec.marked()));
  for (std::int64_t t = 1; t <= horizon; ++t) {
    spec.apply(v, scratch);
    sink(t, success_probability(v, spec.marked()));
  }
}

SuccessCurve evolve_pure(const IterateSpec& spec, const StateVector& init, std::int64_t horizon) {
  SuccessCurve curve;
  check_horizon(horizon);
  curve.values.resize(static_cast<std::size_t>(horizon) + 1);
  for_each_success_probability(spec, init, horizon,
                               [&](std::int64_t t, double p) { curve.values[static_cast<std::size_t>(t)] = p; });
  return curve;
}

SuccessCurve evolve_mixed(const IterateSpec& spec, const Ensemble& init, std::int64_t horizon) {
  check_horizon(horizon);
  if (init.dim() != spec.dim()) throw DomainError("ensemble dimension does not match the iterate");
  const std::size_t len = static_cast<std::size_t>(horizon) + 1;
  const std::size_t k_count = init.size();
  const std::size_t batch = std::clamp<std::size_t>(kCurveBufferDoubles / len, 1, k_count);

  SuccessCurve total;
  total.values.assign(len, 0.0);
  std::vector<std::vector<double>> curves(batch);
  for (std::size_t start = 0; start < k_count; start += batch) {
    const auto count = static_cast<std::int64_t>(std::min(batch, k_count - start));
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < count; ++b) {
      curves[b] = evolve_pure(spec, init[start + b].state, horizon).values;
    }
    for (std::int64_t b = 0; b < count; ++b) {
      const double p = init[start + b].probability;
      for (std::size_t t = 0; t < len; ++t) total.values[t] += p * curves[b][t];
    }
  }
  return total;
}

SuccessCurve evolve_density(const IterateSpec& spec, const DensityMatrix& init, std::int64_t horizon) {
  check_horizon(horizon);
  if (init.dim() != spec.dim()) throw DomainError("density matrix dimension does not match the iterate");
  if (spec.num_qubits() > kTol.max_dense_qubits) {
    throw DomainError("density evolution is limited to " + std::to_string(kTol.max_dense_qubits) + " qubits");
  }
  const std::size_t dim = init.dim();
  std::vector<Amp> rho(init.matrix().data().begin(), init.matrix().data().end());
  auto marked_weight = [&] {
    double p = 0.0;
    for (auto i : spec.marked()) p += rho[i * dim + i].real();
    return p;
  };
  const kernels::VectorMap q = [&spec](std::span<Amp> v, std::vector<Amp>& scratch) { spec.apply(v, scratch); };
  SuccessCurve curve;
  curve.values.reserve(static_cast<std::size_t>(horizon) + 1);
  curve.values.push_back(marked_weight());
  for (std::int64_t t = 1; t <= horizon; ++t) {
    kernels::conjugate_by(rho, dim, q);
    curve.values.push_back(marked_weight());
  }
  return curve;
}

}  // namespace mixgrover
