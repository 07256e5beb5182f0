#pragma once

// Brute-force dense constructions shared by the tests. Nothing here calls
// the structured kernels: the Hadamard matrix is built entry by entry from
// (-1)^{popcount(x & y)} / sqrt(N) and reflections are explicit matrices.

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <vector>

#include "mixgrover/grover.hpp"
#include "mixgrover/qcore.hpp"

namespace testing_support {

using mixgrover::Amp;
using mixgrover::ComplexMatrix;
using mixgrover::StateVector;

inline ComplexMatrix dense_hadamard(int n) {
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix h(dim);
  const double s = 1.0 / std::sqrt(static_cast<double>(dim));
  for (std::size_t x = 0; x < dim; ++x) {
    for (std::size_t y = 0; y < dim; ++y) h(x, y) = (std::popcount(x & y) % 2 == 0) ? s : -s;
  }
  return h;
}

/// I + (e^{i angle} - 1) |s><s|
inline ComplexMatrix dense_reflection(const StateVector& s, double angle) {
  const std::size_t dim = s.dim();
  ComplexMatrix r = ComplexMatrix::identity(dim);
  const Amp f = std::polar(1.0, angle) - 1.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) r(i, j) += f * s[i] * std::conj(s[j]);
  }
  return r;
}

inline ComplexMatrix dense_marked_phase(std::size_t dim, const std::vector<std::uint64_t>& marked, double gamma) {
  ComplexMatrix m = ComplexMatrix::identity(dim);
  for (auto k : marked) m(k, k) = std::polar(1.0, gamma);
  return m;
}

/// sign * U * prod_j R_j * U^dag * I_M^gamma as an explicit matrix.
inline ComplexMatrix dense_iterate(const mixgrover::IterateSpec& spec) {
  const std::size_t dim = spec.dim();
  const ComplexMatrix u = spec.unitary().matrix();
  ComplexMatrix axes = ComplexMatrix::identity(dim);
  for (const auto& a : spec.axes()) axes = axes * dense_reflection(a.state, a.angle);
  ComplexMatrix q = u * axes * u.adjoint() * dense_marked_phase(dim, spec.marked(), spec.gamma());
  for (auto& z : q.mutable_data()) z *= spec.global_sign();
  return q;
}

inline StateVector dense_apply(const ComplexMatrix& m, const StateVector& v) {
  std::vector<Amp> out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    Amp acc{};
    for (std::size_t j = 0; j < v.dim(); ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return StateVector(v.num_qubits(), std::move(out));
}

inline ComplexMatrix projector(const StateVector& v) {
  ComplexMatrix p(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    for (std::size_t j = 0; j < v.dim(); ++j) p(i, j) = v[i] * std::conj(v[j]);
  }
  return p;
}

inline constexpr double kPi = std::numbers::pi;

}  // namespace testing_support
