#include "mixgrover/qcore.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
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

Eigen::MatrixXcd to_eigen(const ComplexMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dim());
  Eigen::MatrixXcd out(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) out(r, c) = m(r, c);
  }
  return out;
}

}  // namespace

int qubits_for_dim(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) return -1;
  int n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

StateVector::StateVector(int num_qubits, std::vector<Amp> amps)
    : num_qubits_(num_qubits), amps_(std::move(amps)) {
  if (num_qubits < 0 || num_qubits > 30) {
    throw DomainError("qubit count out of range: " + std::to_string(num_qubits));
  }
  if (amps_.size() != (std::size_t{1} << num_qubits)) {
    throw DomainError("state has " + std::to_string(amps_.size()) + " amplitudes, expected 2^" +
                      std::to_string(num_qubits));
  }
  for (const auto& a : amps_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw DomainError("state contains a non-finite amplitude");
    }
  }
}

double StateVector::norm() const {
  double acc = 0.0;
  for (const auto& a : amps_) acc += std::norm(a);
  return std::sqrt(acc);
}

bool StateVector::is_normalized(double tol) const { return std::abs(norm() - 1.0) <= tol; }

StateVector StateVector::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) throw DomainError("cannot normalize the zero vector");
  std::vector<Amp> out(amps_);
  for (auto& a : out) a /= nrm;
  return StateVector(num_qubits_, std::move(out));
}

Amp inner(std::span<const Amp> a, std::span<const Amp> b) {
  Amp acc{};
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

Amp inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DomainError("inner product of states with different dimensions");
  return inner(a.amps(), b.amps());
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw DomainError("comparing states with different dimensions");
  double m = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Amp> row_major)
    : dim_(dim), data_(std::move(row_major)) {
  if (data_.size() != dim * dim) throw DomainError("matrix data does not match dimension");
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = std::conj((*this)(r, c));
  }
  return out;
}

Amp ComplexMatrix::trace() const {
  Amp t{};
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
  if (dim_ != rhs.dim_) throw DomainError("matrix product dimension mismatch");
  ComplexMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Amp a = (*this)(r, k);
      if (a == Amp{}) continue;
      for (std::size_t c = 0; c < dim_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw DomainError("comparing matrices with different dimensions");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

double unitarity_defect(const ComplexMatrix& m) {
  return max_abs_diff(m.adjoint() * m, ComplexMatrix::identity(m.dim()));
}

double hermiticity_defect(const ComplexMatrix& m) {
  double d = 0.0;
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = r; c < m.dim(); ++c) d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
  }
  return d;
}

DenseOperator DenseOperator::unitary(ComplexMatrix m) {
  const double defect = unitarity_defect(m);
  if (!(defect <= kTol.unitary)) {
    throw DomainError("operator is not unitary (max |U^dag U - I| = " + std::to_string(defect) + ")");
  }
  DenseOperator op(std::move(m));
  op.unitary_ = true;
  return op;
}

StateVector DenseOperator::apply(const StateVector& state) const {
  if (state.dim() != dim()) throw DomainError("operator and state dimensions differ");
  std::vector<Amp> out(dim());
  kernels::matvec(matrix_, state.amps(), out);
  return StateVector(state.num_qubits(), std::move(out));
}

DenseOperator DenseOperator::adjoint() const {
  DenseOperator op(matrix_.adjoint());
  op.unitary_ = unitary_;
  return op;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : matrix_(std::move(m)) {
  if (matrix_.dim() == 0) throw DomainError("empty density matrix");
  const double herm = hermiticity_defect(matrix_);
  if (!(herm <= kTol.hermitian)) {
    throw DomainError("density matrix is not Hermitian (defect " + std::to_string(herm) + ")");
  }
  const Amp tr = matrix_.trace();
  if (!(std::abs(tr - 1.0) <= kTol.trace)) {
    throw DomainError("density matrix trace is " + std::to_string(tr.real()) + ", expected 1");
  }
}

int DensityMatrix::num_qubits() const { return qubits_for_dim(dim()); }

StateVector basis_state(std::uint64_t x, int num_qubits) {
  if (num_qubits < 0 || num_qubits > 30) throw DomainError("qubit count out of range");
  const std::uint64_t dim = std::uint64_t{1} << num_qubits;
  if (x >= dim) {
    throw DomainError("basis label " + std::to_string(x) + " out of range for " +
                      std::to_string(num_qubits) + " qubits");
  }
  std::vector<Amp> amps(dim);
  amps[x] = 1.0;
  return StateVector(num_qubits, std::move(amps));
}

StateVector hadamard_all(StateVector state) {
  kernels::walsh_hadamard(state.mutable_amps());
  return state;
}

StateVector reflect_about_state(StateVector state, const StateVector& axis, double angle) {
  if (axis.dim() != state.dim()) throw DomainError("reflection axis and state dimensions differ");
  if (!axis.is_normalized(kTol.axis_norm)) throw DomainError("reflection axis is not normalized");
  const Amp coeff = (std::polar(1.0, angle) - 1.0) * inner(axis, state);
  auto amps = state.mutable_amps();
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] += coeff * axis[i];
  return state;
}

StateVector phase_marked(StateVector state, std::span<const std::uint64_t> marked, double gamma) {
  const Amp phase = std::polar(1.0, gamma);
  for (auto i : marked) {
    if (i >= state.dim()) throw DomainError("marked label " + std::to_string(i) + " out of range");
  }
  auto amps = state.mutable_amps();
  for (auto i : marked) amps[i] *= phase;
  return state;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.dim() == 0) return {};
  if (!(hermiticity_defect(m) <= kTol.hermitian_input)) {
    throw DomainError("eigenvalue input is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(to_eigen(m), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ComputationError("Hermitian eigensolver did not converge");
  const auto& ev = solver.eigenvalues();
  std::vector<double> out(ev.data(), ev.data() + ev.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho) {
  return hermitian_eigenvalues(rho.matrix());
}

double min_eigenvalue(const DensityMatrix& rho) { return hermitian_eigenvalues(rho).back(); }

DenseOperator random_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim == 0) throw DomainError("random_unitary needs dim >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXcd z(n, n);
  // Row-major fill so the draw order is independent of Eigen's storage.
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      z(r, c) = Amp(re, im);
    }
  }
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(z);
  Eigen::MatrixXcd q = qr.householderQ();
  const Eigen::MatrixXcd& r = qr.matrixQR();
  for (Eigen::Index c = 0; c < n; ++c) {
    const Amp d = r(c, c);
    const double mag = std::abs(d);
    q.col(c) *= (mag > 0.0) ? d / mag : Amp(1.0);
  }
  ComplexMatrix out(dim);
  for (Eigen::Index rr = 0; rr < n; ++rr) {
    for (Eigen::Index c = 0; c < n; ++c) out(rr, c) = q(rr, c);
  }
  return DenseOperator::unitary(std::move(out));
}

DenseOperator read_unitary(std::istream& in) {
  const double n_raw = text::parse_double(text::next_token(in, "dimension"), "dimension");
  if (n_raw < 1 || n_raw != std::floor(n_raw) || n_raw > (1 << 12)) throw DomainError("unitary dimension must be a positive integer");
  const auto dim = static_cast<std::size_t>(n_raw);
  std::vector<Amp> entries(dim * dim);
  for (auto& a : entries) a = text::parse_amp(text::next_token(in, "matrix entry"));
  std::string extra;
  if (in >> extra) throw DomainError("trailing data after unitary: '" + extra + "'");
  return DenseOperator::unitary(ComplexMatrix(dim, std::move(entries)));
}

void write_unitary(std::ostream& out, const DenseOperator& op) {
  const auto& m = op.matrix();
  out << m.dim() << '\n';
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) out << (c ? " " : "") << text::format_amp(m(r, c));
    out << '\n';
  }
}

}  // namespace mixgrover
