#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>

#include "mixgrover/errors.hpp"
#include "mixgrover/predictor.hpp"
#include "oracles/frozen_oracles.hpp"
#include "test_support.hpp"

namespace {

using namespace mixgrover;
using testing_support::kPi;

StateVector uniform(int n) { return hadamard_all(basis_state(0, n)); }

SinusoidParams params(double mean, double amplitude, double phase, double omega) {
  SinusoidParams p;
  p.mean = mean;
  p.amplitude = amplitude;
  p.phase = phase;
  p.omega = omega;
  return p;
}

MixedPrediction single(double mean, double amplitude, double phase, double omega) {
  const WeightedSinusoid w{1.0, params(mean, amplitude, phase, omega)};
  return combine_ensemble(std::span(&w, 1));
}

TEST(AngularFrequency, FourItemsIsPiOverThree) {
  const double w = angular_frequency(original_iterate(2, {3}));
  EXPECT_NEAR(w, kPi / 3.0, 1e-12);
  EXPECT_NEAR(w, oracle::kN4Omega, 1e-12);
}

TEST(AngularFrequency, MatchesClosedFormForOneMarkedItem) {
  for (int n = 2; n <= 16; ++n) {
    const double dim = std::ldexp(1.0, n);
    const double w = angular_frequency(original_iterate(n, {3}));
    EXPECT_NEAR(std::cos(w), 1.0 - 2.0 / dim, 1e-12);
    if (n >= 8) EXPECT_NEAR(w, 2.0 / std::sqrt(dim), 1.0 / dim);
  }
  EXPECT_NEAR(angular_frequency(original_iterate(10, {1023})), oracle::kOmega10, 1e-12);
}

TEST(AngularFrequency, TrivialAnglesGiveZero) {
  const IterateSpec q = generalized_iterate(Unitary::dense(random_unitary(16, 5)), random_pure_state(4, 2), 0.0,
                                            {1}, 0.0);
  EXPECT_NEAR(angular_frequency(q), 0.0, 1e-7);
}

TEST(AngularFrequency, MatchesDenseEigenphases) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 3 + static_cast<int>(seed % 3);
    const std::size_t dim = std::size_t{1} << n;
    const IterateSpec q =
        generalized_iterate(Unitary::dense(random_unitary(dim, seed)), basis_state(0, n), kPi, {seed % dim}, kPi);
    const ComplexMatrix dense = testing_support::dense_iterate(q);
    Eigen::MatrixXcd m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) m(i, j) = dense(i, j);
    }
    const Eigen::VectorXcd ev = m.eigenvalues();
    double best = 10.0;
    const double w = angular_frequency(q);
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
      best = std::min(best, std::abs(std::abs(std::arg(ev(i))) - w));
    }
    EXPECT_LE(best, 1e-8) << "seed=" << seed;
  }
}

TEST(AngularFrequency, RejectsMultiAxis) {
  std::vector<ReflectionAxis> axes{{basis_state(0, 2), kPi}, {basis_state(1, 2), kPi}};
  const IterateSpec q(Unitary::hadamard(2), axes, {3}, kPi);
  EXPECT_THROW(angular_frequency(q), UnsupportedSpecError);
  EXPECT_THROW(extract_sinusoid(q, uniform(2)), UnsupportedSpecError);
  EXPECT_THROW(predict_mixed(q, Ensemble::pure(uniform(2))), UnsupportedSpecError);
}

TEST(ExtractSinusoid, FourItemsFrozen) {
  const SinusoidFit f = extract_sinusoid(original_iterate(2, {3}), uniform(2));
  EXPECT_NEAR(f.params.mean, oracle::kN4Mean, 1e-9);
  EXPECT_NEAR(f.params.amplitude, oracle::kN4Amplitude, 1e-9);
  EXPECT_NEAR(f.params.phase, oracle::kN4Phase, 1e-9);
  EXPECT_NEAR(f.params.phase, kPi / 6.0, 1e-9);
  EXPECT_LE(f.residual, 1e-9);
}

TEST(ExtractSinusoid, UniformStartLargeN) {
  const SinusoidFit f = extract_sinusoid(original_iterate(10, {1023}), uniform(10));
  EXPECT_NEAR(f.params.mean, oracle::kPure10_mean, 1e-9);
  EXPECT_NEAR(f.params.amplitude, oracle::kPure10_amplitude, 1e-9);
  EXPECT_NEAR(f.params.phase, oracle::kPure10_phase, 1e-9);
  EXPECT_NEAR(f.params.phase, std::asin(1.0 / 32.0), 1e-9);
  EXPECT_EQ(f.method, FitMethod::kThreePoint);
}

TEST(ExtractSinusoid, MarkedStartHasQuarterTurnPhase) {
  for (int n : {3, 8, 10}) {
    const std::uint64_t k = 5;
    const SinusoidFit f = extract_sinusoid(original_iterate(n, {k}), basis_state(k, n));
    EXPECT_NEAR(f.params.mean, 0.5, 1e-9);
    EXPECT_NEAR(f.params.amplitude, 0.5, 1e-9);
    EXPECT_NEAR(f.params.phase, kPi / 2.0, 1e-9);
  }
}

TEST(ExtractSinusoid, SharedFrequencyFitsRandomStates) {
  const IterateSpec q = original_iterate(7, {3, 90});
  const double w = angular_frequency(q);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SinusoidFit f = extract_sinusoid(q, random_pure_state(7, seed), w);
    EXPECT_LE(f.residual, 1e-8) << seed;
    EXPECT_GE(f.params.mean - f.params.amplitude, -1e-8);
    EXPECT_LE(f.params.mean + f.params.amplitude, 1.0 + 1e-8);
  }
}

TEST(ExtractSinusoid, SingularFrequenciesFallBackToLeastSquares) {
  // omega = pi/2: |M| = N/2 marked items of the original iterate.
  const IterateSpec half = original_iterate(2, {0, 1});
  ASSERT_NEAR(angular_frequency(half), kPi / 2.0, 1e-12);
  const SinusoidFit f = extract_sinusoid(half, random_pure_state(2, 1));
  EXPECT_EQ(f.method, FitMethod::kLeastSquares);
  EXPECT_LE(f.residual, 1e-9);
  // omega = 0: trivial rotations, the curve is constant.
  const IterateSpec still = generalized_iterate(Unitary::hadamard(3), basis_state(0, 3), 0.0, {2}, 0.0);
  const SinusoidFit g = extract_sinusoid(still, random_pure_state(3, 2));
  EXPECT_EQ(g.method, FitMethod::kLeastSquares);
  EXPECT_EQ(g.params.amplitude, 0.0);
  EXPECT_LE(g.residual, 1e-12);
}

TEST(NormalizeDoubleAngle, LandsInHalfOpenInterval) {
  EXPECT_NEAR(normalize_double_angle(-kPi), kPi, 1e-15);
  EXPECT_NEAR(normalize_double_angle(kPi), kPi, 1e-15);
  EXPECT_NEAR(normalize_double_angle(3 * kPi / 2), -kPi / 2, 1e-15);
  for (int i = -100; i <= 100; ++i) {
    const double x = normalize_double_angle(0.173 * i);
    EXPECT_GT(x, -kPi);
    EXPECT_LE(x, kPi);
  }
}

TEST(CombineEnsemble, SingleComponentUnchanged) {
  const MixedPrediction p = single(0.3, 0.2, 0.4, 0.1);
  EXPECT_EQ(p.mean, 0.3);
  EXPECT_NEAR(p.amplitude, 0.2, 1e-15);
  EXPECT_NEAR(p.phase, 0.4, 1e-15);
  EXPECT_EQ(p.omega, 0.1);
  EXPECT_NEAR(p.p_max, 0.5, 1e-15);
}

TEST(CombineEnsemble, OpposedVectorsCancel) {
  const WeightedSinusoid parts[] = {{0.5, params(0.25, 0.25, 0.1, 0.2)}, {0.5, params(0.25, 0.25, 0.1 + kPi / 2, 0.2)}};
  const MixedPrediction p = combine_ensemble(parts);
  EXPECT_NEAR(p.amplitude, 0.0, 1e-15);
  EXPECT_EQ(p.phase, 0.0);
  EXPECT_NEAR(p.mean, 0.25, 1e-15);
}

TEST(CombineEnsemble, CenterOfMassBound) {
  for (int i = 0; i < 50; ++i) {
    std::vector<WeightedSinusoid> parts;
    double bound = 0.0;
    for (int k = 0; k < 5; ++k) {
      const double p = 0.2;
      const double amp = 0.1 * ((i + k) % 5);
      parts.push_back({p, params(0.5, amp, 0.37 * (i * k + 1), 0.05)});
      bound += p * amp;
    }
    const MixedPrediction m = combine_ensemble(parts);
    EXPECT_LE(m.amplitude, bound + 1e-15);
    EXPECT_GT(2 * m.phase, -kPi);
    EXPECT_LE(2 * m.phase, kPi);
    EXPECT_GE(m.t_opt, 0.0);
  }
}

TEST(CombineEnsemble, RejectsMismatchedOrBadInput) {
  EXPECT_THROW(combine_ensemble({}), DomainError);
  const WeightedSinusoid mism[] = {{0.5, params(0.1, 0.1, 0, 0.2)}, {0.5, params(0.1, 0.1, 0, 0.21)}};
  EXPECT_THROW(combine_ensemble(mism), DomainError);
  const WeightedSinusoid light[] = {{0.5, params(0.1, 0.1, 0, 0.2)}, {0.4, params(0.1, 0.1, 0, 0.2)}};
  EXPECT_THROW(combine_ensemble(light), DomainError);
}

TEST(OptimalIterations, UniformStartNearQuarterPiRootN) {
  const MixedPrediction p = predict_mixed(original_iterate(10, {1023}), Ensemble::pure(uniform(10)));
  EXPECT_NEAR(p.t_opt, oracle::kPure10_t_opt, 1e-8);
  EXPECT_NEAR(p.t_opt, kPi / 4 * 32, 1.0);
  const StoppingPoint s = optimal_iterations(p);
  EXPECT_EQ(s.iterations, 25);
  ASSERT_TRUE(p.t_star.has_value());
  EXPECT_EQ(*p.t_star, 25);
}

TEST(OptimalIterations, MarkedStartStopsImmediately) {
  const StoppingPoint s = optimal_iterations(single(0.5, 0.5, kPi / 2, 0.1));
  EXPECT_NEAR(s.real, 0.0, 1e-15);
  EXPECT_EQ(s.iterations, 0);
}

TEST(OptimalIterations, PicksBetterNeighbourAndBreaksTiesLow) {
  // T = 2.5 exactly: floor and ceil predict the same, keep the smaller.
  const double w = kPi / 5.0;
  const StoppingPoint tie = optimal_iterations(single(0.5, 0.5, 0.0, w));
  EXPECT_NEAR(tie.real, 2.5, 1e-12);
  EXPECT_EQ(tie.iterations, 2);
  // Nudge the phase so ceil wins.
  const StoppingPoint up = optimal_iterations(single(0.5, 0.5, -0.05, w));
  EXPECT_EQ(up.iterations, 3);
  const StoppingPoint down = optimal_iterations(single(0.5, 0.5, 0.05, w));
  EXPECT_EQ(down.iterations, 2);
}

TEST(OptimalIterations, ZeroFrequencyHasNoOscillation) {
  EXPECT_THROW(optimal_iterations(single(0.5, 0.1, 0.0, 0.0)), NoOscillationError);
}

TEST(QueryCost, ReducedFormHalfProbability) {
  const double dim = 1024;
  const MixedPrediction p = single(0.25, 0.25, 0.0, angular_frequency(original_iterate(10, {1})));
  EXPECT_NEAR(expected_total_queries_reduced(p, dim), kPi * 32 / 2, 1e-12);
  EXPECT_NEAR(expected_total_queries(p) / expected_total_queries_reduced(p, dim), 1.0, 1e-3);
}

TEST(QueryCost, UselessStateRejected) {
  const MixedPrediction zero = single(0.0, 0.0, 0.0, 0.1);
  EXPECT_THROW(expected_total_queries(zero), UselessInitialStateError);
  EXPECT_THROW(speedup_ratio(zero, 16, 1), UselessInitialStateError);
}

TEST(QueryCost, ClassicalBaseline) {
  EXPECT_EQ(classical_expected_queries(1024, 1), 512.0);
  EXPECT_EQ(classical_expected_queries(1023, 3), 256.0);
}

TEST(Speedup, PureUniformStart) {
  const MixedPrediction p = predict_mixed(original_iterate(10, {1023}), Ensemble::pure(uniform(10)));
  ASSERT_TRUE(p.cost.has_value());
  EXPECT_NEAR(p.cost->speedup, oracle::kPure10_speedup, 1e-8);
  EXPECT_NEAR(p.cost->speedup, 2 * 32 / kPi, 0.5);
  EXPECT_TRUE(p.cost->advantage);
}

TEST(Speedup, LargeMixLosesAdvantage) {
  const MixedPrediction p = predict_mixed(original_iterate(10, {1023}), m_mix({10, 7}));
  EXPECT_FALSE(p.cost->advantage);
}

TEST(PredictMixed, PseudoPureMatchesFrozenDensityFit) {
  const MixedPrediction p = predict_mixed(original_iterate(10, {1023}), pseudo_pure({10, 0.1, uniform(10)}));
  EXPECT_NEAR(p.mean, oracle::kPseudoPure10_mean, 1e-9);
  EXPECT_NEAR(p.amplitude, oracle::kPseudoPure10_amplitude, 1e-9);
  EXPECT_NEAR(p.phase, oracle::kPseudoPure10_phase, 1e-8);
  EXPECT_NEAR(p.p_max, oracle::kPseudoPure10_p_max, 1e-9);
  EXPECT_NEAR(p.cost->speedup, oracle::kPseudoPure10_speedup, 1e-7);
}

TEST(PredictMixed, MMixMatchesFrozenDensityFit) {
  const IterateSpec q = original_iterate(10, {1023});
  for (int m = 0; m <= 6; ++m) {
    const MixedPrediction p = predict_mixed(q, m_mix({10, m}));
    EXPECT_NEAR(p.mean, oracle::kMMix10_mean[m], 1e-9) << m;
    EXPECT_NEAR(p.amplitude, oracle::kMMix10_amplitude[m], 1e-9) << m;
    EXPECT_NEAR(p.phase, oracle::kMMix10_phase[m], 1e-8) << m;
  }
}

TEST(PredictMixed, PseudoPureScalesWithPurity) {
  const IterateSpec q = original_iterate(10, {1023});
  const StateVector psi = uniform(10);
  const double full = predict_curve(q, Ensemble::pure(psi)).amplitude;
  for (int i = 1; i <= 10; ++i) {
    const double eps = i / 10.0;
    const MixedPrediction p = predict_curve(q, pseudo_pure({10, eps, psi}));
    EXPECT_NEAR(p.amplitude / (eps * full), 1.0, 0.02) << eps;
  }
}

TEST(PredictMixed, SingleComponentRoundTrip) {
  const IterateSpec q = generalized_iterate(Unitary::dense(random_unitary(32, 1)), basis_state(0, 5), kPi, {4}, kPi);
  const StateVector psi = random_pure_state(5, 3);
  const SinusoidParams a = extract_sinusoid(q, psi).params;
  const MixedPrediction b = predict_curve(q, Ensemble::pure(psi));
  EXPECT_NEAR(b.mean, a.mean, 1e-12);
  EXPECT_NEAR(b.amplitude, a.amplitude, 1e-12);
  EXPECT_NEAR(b.phase, a.phase, 1e-12);
  EXPECT_EQ(b.omega, a.omega);
}

TEST(PredictMixed, FlatCurveIsUseless) {
  EXPECT_THROW(predict_mixed(original_iterate(6, {63}), m_mix({6, 6})), UselessInitialStateError);
  const MixedPrediction flat = predict_curve(original_iterate(6, {63}), m_mix({6, 6}));
  EXPECT_NEAR(flat.mean, 1.0 / 64, 1e-12);
  EXPECT_LE(flat.amplitude, 1e-12);
}

TEST(ValidatePrediction, OriginalIterateIsExact) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const int n = 3 + static_cast<int>(seed);
    const IterateSpec q = original_iterate(n, {seed});
    EXPECT_LE(validate_prediction(q, random_ensemble(n, 1 + seed % 12, seed), 200), 1e-9) << seed;
  }
}

TEST(ValidatePrediction, RandomUnitaryWithPiAngles) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const IterateSpec q =
        generalized_iterate(Unitary::dense(random_unitary(64, seed)), basis_state(0, 6), kPi, {7}, kPi);
    EXPECT_LE(validate_prediction(q, random_ensemble(6, 4, seed), 300), 1e-8) << seed;
  }
}

TEST(ValidatePrediction, MaximallyMixedIsConstant) {
  EXPECT_LE(validate_prediction(original_iterate(6, {5}), m_mix({6, 6}), 100), 1e-12);
}

TEST(Report, EmptyCaseListGivesEmptyTable) { EXPECT_TRUE(entropy_usefulness_report({}).empty()); }

TEST(Report, ErrorsStayOnTheirRow) {
  const IterateSpec q = original_iterate(4, {15});
  std::vector<ReportCase> cases{{"flat", m_mix({4, 4}), q}, {"pure", Ensemble::pure(uniform(4)), q}};
  const auto rows = entropy_usefulness_report(cases);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_NE(rows[0].error.find("useless-initial-state"), std::string::npos);
  EXPECT_NEAR(*rows[0].entropy_bits, 4.0, 1e-9);
  EXPECT_TRUE(rows[1].error.empty());
  EXPECT_TRUE(rows[1].prediction->cost->advantage);
}

TEST(Report, CounterexampleShapes) {
  const auto cases = counterexample_cases(6);
  ASSERT_EQ(cases.size(), 4u);
  const auto rows = entropy_usefulness_report(cases);
  EXPECT_NEAR(*rows[1].entropy_bits, 5.0, 1e-9);
  EXPECT_NEAR(*rows[2].entropy_bits, 0.0, 1e-12);
  EXPECT_NEAR(*rows[3].entropy_bits, 0.0, 1e-12);
  EXPECT_GT(rows[2].prediction->p_max, 0.99);
  EXPECT_LT(rows[3].prediction->p_max, 0.02);
}

}  // namespace
