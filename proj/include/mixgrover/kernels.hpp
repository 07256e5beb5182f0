#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP version and a
// `_serial` reference; tests pin them against each other and bench/
// compares their throughput. Both versions perform the same arithmetic
// in the same order per output element, so results are bit-identical.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "mixgrover/qcore.hpp"

namespace mixgrover::kernels {

/// In-place normalized Walsh-Hadamard transform; v.size() must be 2^n.
void walsh_hadamard(std::span<Amp> v);
void walsh_hadamard_serial(std::span<Amp> v);

/// out = m * in
void matvec(const ComplexMatrix& m, std::span<const Amp> in, std::span<Amp> out);
void matvec_serial(const ComplexMatrix& m, std::span<const Amp> in, std::span<Amp> out);

/// rho = sum_k w[k] |psi_k><psi_k| with the states stacked row-wise in
/// `states` (K x dim). rho is dim x dim row-major; terms are accumulated
/// in ascending k.
void weighted_outer_sum(std::span<const double> weights, std::span<const Amp> states,
                        std::size_t dim, std::span<Amp> rho);
void weighted_outer_sum_serial(std::span<const double> weights, std::span<const Amp> states,
                               std::size_t dim, std::span<Amp> rho);

/// In-place linear map on one vector; `scratch` is a per-thread buffer the
/// map may resize and use freely.
using VectorMap = std::function<void(std::span<Amp>, std::vector<Amp>& scratch)>;

/// rho <- Q rho Q^dag where Q is given by its action on vectors.
void conjugate_by(std::span<Amp> rho, std::size_t dim, const VectorMap& apply_q);
void conjugate_by_serial(std::span<Amp> rho, std::size_t dim, const VectorMap& apply_q);

}  // namespace mixgrover::kernels
