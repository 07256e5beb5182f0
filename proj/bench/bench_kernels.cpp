// Serial reference kernels against their OpenMP versions, plus the two
// end-to-end hot paths (ensemble evolution and curve prediction).

#include <benchmark/benchmark.h>

#include <vector>

#include "mixgrover/grover.hpp"
#include "mixgrover/kernels.hpp"
#include "mixgrover/predictor.hpp"
#include "mixgrover/states.hpp"

namespace {

using namespace mixgrover;

std::vector<Amp> random_amps(std::size_t n, std::uint64_t seed) {
  const int q = qubits_for_dim(n);
  const StateVector s = random_pure_state(q, seed);
  return {s.amps().begin(), s.amps().end()};
}

template <void (*Kernel)(std::span<Amp>)>
void BM_WalshHadamard(benchmark::State& state) {
  auto v = random_amps(std::size_t{1} << state.range(0), 1);
  for (auto _ : state) {
    Kernel(v);
    benchmark::DoNotOptimize(v.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(v.size()));
}
BENCHMARK(BM_WalshHadamard<kernels::walsh_hadamard_serial>)->Name("walsh_hadamard/serial")->DenseRange(12, 22, 5);
BENCHMARK(BM_WalshHadamard<kernels::walsh_hadamard>)->Name("walsh_hadamard/omp")->DenseRange(12, 22, 5);

template <void (*Kernel)(const ComplexMatrix&, std::span<const Amp>, std::span<Amp>)>
void BM_Matvec(benchmark::State& state) {
  const auto dim = static_cast<std::size_t>(state.range(0));
  const DenseOperator u = random_unitary(dim, 3);
  const auto in = random_amps(dim, 2);
  std::vector<Amp> out(dim);
  for (auto _ : state) {
    Kernel(u.matrix(), in, out);
    benchmark::DoNotOptimize(out.data());
  }
}
BENCHMARK(BM_Matvec<kernels::matvec_serial>)->Name("matvec/serial")->Arg(256)->Arg(1024);
BENCHMARK(BM_Matvec<kernels::matvec>)->Name("matvec/omp")->Arg(256)->Arg(1024);

template <void (*Kernel)(std::span<const double>, std::span<const Amp>, std::size_t, std::span<Amp>)>
void BM_OuterSum(benchmark::State& state) {
  const std::size_t dim = 256;
  const auto k = static_cast<std::size_t>(state.range(0));
  std::vector<double> w(k, 1.0 / static_cast<double>(k));
  std::vector<Amp> stacked;
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = random_amps(dim, 10 + i);
    stacked.insert(stacked.end(), a.begin(), a.end());
  }
  std::vector<Amp> rho(dim * dim);
  for (auto _ : state) {
    Kernel(w, stacked, dim, rho);
    benchmark::DoNotOptimize(rho.data());
  }
}
BENCHMARK(BM_OuterSum<kernels::weighted_outer_sum_serial>)->Name("outer_sum/serial")->Arg(16)->Arg(256);
BENCHMARK(BM_OuterSum<kernels::weighted_outer_sum>)->Name("outer_sum/omp")->Arg(16)->Arg(256);

template <void (*Kernel)(std::span<Amp>, std::size_t, const kernels::VectorMap&)>
void BM_Conjugate(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IterateSpec q = original_iterate(n, {0});
  const std::size_t dim = std::size_t{1} << n;
  const kernels::VectorMap map = [&q](std::span<Amp> v, std::vector<Amp>& scratch) { q.apply(v, scratch); };
  std::vector<Amp> rho(dim * dim);
  for (std::size_t i = 0; i < dim; ++i) rho[i * dim + i] = 1.0 / static_cast<double>(dim);
  for (auto _ : state) {
    Kernel(rho, dim, map);
    benchmark::DoNotOptimize(rho.data());
  }
}
BENCHMARK(BM_Conjugate<kernels::conjugate_by_serial>)->Name("conjugate_by/serial")->Arg(6)->Arg(9);
BENCHMARK(BM_Conjugate<kernels::conjugate_by>)->Name("conjugate_by/omp")->Arg(6)->Arg(9);

void BM_EvolveMixed(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IterateSpec q = original_iterate(n, {(std::uint64_t{1} << n) - 1});
  const Ensemble e = random_ensemble(n, 64, 5);
  for (auto _ : state) benchmark::DoNotOptimize(evolve_mixed(q, e, 100));
}
BENCHMARK(BM_EvolveMixed)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_PredictPseudoPure(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const IterateSpec q = original_iterate(n, {(std::uint64_t{1} << n) - 1});
  const Ensemble e = pseudo_pure({n, 0.5, StateVector(hadamard_all(basis_state(0, n)))});
  for (auto _ : state) benchmark::DoNotOptimize(predict_curve(q, e));
}
BENCHMARK(BM_PredictPseudoPure)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
