#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

namespace mixgrover {

using Amp = std::complex<double>;

/// Amplitudes of an n-qubit register over the computational basis.
///
/// Index x is the integer whose binary digits are the qubit values, most
/// significant qubit first. Construction checks the dimension and that
/// every entry is finite; unit norm is a property checked by callers that
/// need it (density-matrix columns pass through the same kernels).
class StateVector {
 public:
  StateVector(int num_qubits, std::vector<Amp> amps);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }

  std::span<const Amp> amps() const { return amps_; }
  std::span<Amp> mutable_amps() { return amps_; }
  const Amp& operator[](std::size_t x) const { return amps_[x]; }

  double norm() const;
  bool is_normalized(double tol) const;
  StateVector normalized() const;

 private:
  int num_qubits_;
  std::vector<Amp> amps_;
};

/// <a|b>
Amp inner(std::span<const Amp> a, std::span<const Amp> b);
Amp inner(const StateVector& a, const StateVector& b);
double max_abs_diff(const StateVector& a, const StateVector& b);

/// Square complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim);
  ComplexMatrix(std::size_t dim, std::vector<Amp> row_major);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  Amp& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const Amp& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
  std::span<const Amp> data() const { return data_; }
  std::span<Amp> mutable_data() { return data_; }
  std::span<const Amp> row(std::size_t r) const { return {data_.data() + r * dim_, dim_}; }

  ComplexMatrix adjoint() const;
  Amp trace() const;
  ComplexMatrix operator*(const ComplexMatrix& rhs) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Amp> data_;
};

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
/// max |M^dag M - I|
double unitarity_defect(const ComplexMatrix& m);
/// max |M - M^dag|
double hermiticity_defect(const ComplexMatrix& m);

/// A dense operator; `unitary()` builds one flagged (and checked) unitary.
class DenseOperator {
 public:
  explicit DenseOperator(ComplexMatrix m) : matrix_(std::move(m)) {}
  static DenseOperator unitary(ComplexMatrix m);

  std::size_t dim() const { return matrix_.dim(); }
  bool is_unitary() const { return unitary_; }
  const ComplexMatrix& matrix() const { return matrix_; }

  StateVector apply(const StateVector& state) const;
  DenseOperator adjoint() const;

 private:
  ComplexMatrix matrix_;
  bool unitary_ = false;
};

/// Hermitian, trace-one, positive semidefinite matrix. The constructor
/// checks Hermiticity and trace; positivity needs an eigensolve and is
/// checked by `min_eigenvalue`.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  std::size_t dim() const { return matrix_.dim(); }
  int num_qubits() const;
  const ComplexMatrix& matrix() const { return matrix_; }
  const Amp& operator()(std::size_t r, std::size_t c) const { return matrix_(r, c); }

 private:
  ComplexMatrix matrix_;
};

StateVector basis_state(std::uint64_t x, int num_qubits);

/// H^{(x)n} in n butterfly passes.
StateVector hadamard_all(StateVector state);

/// psi + (e^{i angle} - 1) <axis|psi> axis
StateVector reflect_about_state(StateVector state, const StateVector& axis, double angle);

/// Multiplies amps[i] by e^{i gamma} for every i in `marked`.
StateVector phase_marked(StateVector state, std::span<const std::uint64_t> marked, double gamma);

/// Real eigenvalues in descending order.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);
std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho);
double min_eigenvalue(const DensityMatrix& rho);

/// Haar-distributed unitary from the QR factorization of a complex
/// Ginibre matrix, with R's diagonal phases folded back into Q.
DenseOperator random_unitary(std::size_t dim, std::uint64_t seed);

// Unitary text format: first token N, then N rows of N entries "re,im".
// Reading validates unitarity.
DenseOperator read_unitary(std::istream& in);
void write_unitary(std::ostream& out, const DenseOperator& op);

/// n with 2^n == dim, or -1.
int qubits_for_dim(std::size_t dim);

}  // namespace mixgrover
