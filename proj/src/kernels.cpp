#include "mixgrover/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace mixgrover::kernels {

namespace {

// Below this many amplitudes a parallel region costs more than it saves.
constexpr std::int64_t kParallelThreshold = 1 << 12;

void conj_inplace(std::span<Amp> v) {
  for (auto& a : v) a = std::conj(a);
}

void transpose_inplace(std::span<Amp> m, std::size_t dim, bool parallel) {
  const auto n = static_cast<std::int64_t>(dim);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::int64_t r = 0; r < n; ++r) {
    for (std::int64_t c = r + 1; c < n; ++c) {
      std::swap(m[r * dim + c], m[c * dim + r]);
    }
  }
}

void conjugate_impl(std::span<Amp> rho, std::size_t dim, const VectorMap& apply_q, bool parallel) {
  const auto n = static_cast<std::int64_t>(dim);
  // Rows: r_i <- conj(Q conj(r_i)) turns rho into rho Q^dag.
#pragma omp parallel if (parallel)
  {
    std::vector<Amp> scratch;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      std::span<Amp> row(rho.data() + i * dim, dim);
      conj_inplace(row);
      apply_q(row, scratch);
      conj_inplace(row);
    }
  }
  // Columns: apply Q to each column of rho Q^dag.
  transpose_inplace(rho, dim, parallel);
#pragma omp parallel if (parallel)
  {
    std::vector<Amp> scratch;
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
      apply_q(std::span<Amp>(rho.data() + i * dim, dim), scratch);
    }
  }
  transpose_inplace(rho, dim, parallel);
}

void outer_sum_impl(std::span<const double> weights, std::span<const Amp> states, std::size_t dim,
                    std::span<Amp> rho, bool parallel) {
  const auto n = static_cast<std::int64_t>(dim);
  const std::size_t k_count = weights.size();
  std::fill(rho.begin(), rho.end(), Amp{});
#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (std::int64_t r = 0; r < n; ++r) {
    Amp* row = rho.data() + r * dim;
    for (std::size_t k = 0; k < k_count; ++k) {
      const Amp* psi = states.data() + k * dim;
      const Amp a = weights[k] * psi[r];
      if (a == Amp{}) continue;
      for (std::int64_t c = r; c < n; ++c) row[c] += a * std::conj(psi[c]);
    }
  }
  for (std::int64_t r = 0; r < n; ++r) {
    rho[r * dim + r] = Amp(rho[r * dim + r].real(), 0.0);
    for (std::int64_t c = r + 1; c < n; ++c) rho[c * dim + r] = std::conj(rho[r * dim + c]);
  }
}

}  // namespace

void walsh_hadamard_serial(std::span<Amp> v) {
  const std::size_t n = v.size();
  const double s = 1.0 / std::sqrt(2.0);
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const Amp a = v[j];
        const Amp b = v[j + h];
        v[j] = (a + b) * s;
        v[j + h] = (a - b) * s;
      }
    }
  }
}

void walsh_hadamard(std::span<Amp> v) {
  const auto n = static_cast<std::int64_t>(v.size());
  if (n < kParallelThreshold) {
    walsh_hadamard_serial(v);
    return;
  }
  const double s = 1.0 / std::sqrt(2.0);
  const std::int64_t pairs = n / 2;
  for (std::int64_t h = 1; h < n; h <<= 1) {
#pragma omp parallel for schedule(static)
    for (std::int64_t p = 0; p < pairs; ++p) {
      const std::int64_t j = (p / h) * 2 * h + p % h;
      const Amp a = v[j];
      const Amp b = v[j + h];
      v[j] = (a + b) * s;
      v[j + h] = (a - b) * s;
    }
  }
}

void matvec_serial(const ComplexMatrix& m, std::span<const Amp> in, std::span<Amp> out) {
  const std::size_t n = m.dim();
  for (std::size_t r = 0; r < n; ++r) {
    Amp acc{};
    const auto row = m.row(r);
    for (std::size_t c = 0; c < n; ++c) acc += row[c] * in[c];
    out[r] = acc;
  }
}

void matvec(const ComplexMatrix& m, std::span<const Amp> in, std::span<Amp> out) {
  const auto n = static_cast<std::int64_t>(m.dim());
#pragma omp parallel for schedule(static) if (n * n >= kParallelThreshold * 16)
  for (std::int64_t r = 0; r < n; ++r) {
    Amp acc{};
    const auto row = m.row(r);
    for (std::int64_t c = 0; c < n; ++c) acc += row[c] * in[c];
    out[r] = acc;
  }
}

void weighted_outer_sum(std::span<const double> weights, std::span<const Amp> states,
                        std::size_t dim, std::span<Amp> rho) {
  outer_sum_impl(weights, states, dim, rho, true);
}

void weighted_outer_sum_serial(std::span<const double> weights, std::span<const Amp> states,
                               std::size_t dim, std::span<Amp> rho) {
  outer_sum_impl(weights, states, dim, rho, false);
}

void conjugate_by(std::span<Amp> rho, std::size_t dim, const VectorMap& apply_q) {
  conjugate_impl(rho, dim, apply_q, true);
}

void conjugate_by_serial(std::span<Amp> rho, std::size_t dim, const VectorMap& apply_q) {
  conjugate_impl(rho, dim, apply_q, false);
}

}  // namespace mixgrover::kernels
