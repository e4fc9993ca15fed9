// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "paving/walk.h"

#include <cmath>
#include <limits>
#include <map>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "paving/error.h"
#include "paving/matroid.h"
#include "paving/paving.h"

namespace paving {
namespace {

SubsetMask S(std::initializer_list<int> indices) { return SubsetMask::FromIndices(indices); }

ErrorCode CodeOf(auto&& fn) {
  try {
    fn();
  } catch (const MatroidError& e) {
    return e.code();
  }
  ADD_FAILURE() << "no MatroidError thrown";
  return ErrorCode::kVerification;
}

CircuitFamily HamiltonFamily(int n) { return FromHamiltonianCycles(oracle::CompleteGraph(n)); }

std::vector<double> Uniform(std::size_t n) { return std::vector<double>(n, 1.0 / n); }

double MaxNorm(const std::vector<double>& p, const std::vector<double>& q) {
  double worst = 0;
  for (std::size_t i = 0; i < p.size(); ++i) worst = std::max(worst, std::abs(p[i] - q[i]));
  return worst;
}

TEST(ExchangeGraphTest, SmallUniformMatroids) {
  const ExchangeGraph u12 = BuildExchangeGraph(UniformMatroid(1, 2));
  EXPECT_EQ(u12.size(), 2u);
  EXPECT_EQ(u12.edge_count(), 1u);
  const ExchangeGraph u24 = BuildExchangeGraph(UniformMatroid(2, 4));
  EXPECT_EQ(u24.size(), 6u);
  for (std::size_t v = 0; v < u24.size(); ++v) EXPECT_EQ(u24.degree(v), 4u);
  EXPECT_EQ(u24.edge_count(), 12u);
}

TEST(ExchangeGraphTest, MatchesAdjacencyOracle) {
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const ExplicitMatroid m = BasesFromCircuits(RandomSparseFamily(7, 3, 4, 60, seed));
    const ExchangeGraph graph = BuildExchangeGraph(m);
    const auto expected = oracle::Adjacency(oracle::BasisList(m));
    ASSERT_EQ(graph.size(), expected.size());
    for (std::size_t v = 0; v < graph.size(); ++v) {
      const auto got = graph.neighbours(v);
      EXPECT_EQ(std::vector<int>(got.begin(), got.end()), expected[v]);
    }
  }
}

TEST(ExchangeGraphTest, BudgetRefusal) {
  EXPECT_EQ(CodeOf([] { BuildExchangeGraph(UniformMatroid(3, 8), 10); }),
            ErrorCode::kBudgetExceeded);
}

TEST(ConnectivityTest, Examples) {
  EXPECT_TRUE(IsConnected(BuildExchangeGraph(UniformMatroid(1, 2))));
  EXPECT_TRUE(IsConnected(BuildExchangeGraph(BasesFromCircuits(HamiltonFamily(4)))));
  // Not a matroid: {0,1} and {2,3} are four exchanges apart.
  const ExplicitMatroid split(4, 2, {S({0, 1}), S({2, 3})});
  EXPECT_FALSE(IsConnected(BuildExchangeGraph(split)));
}

TEST(EdgeExpansionTest, Examples) {
  EXPECT_EQ(EdgeExpansion(BuildExchangeGraph(UniformMatroid(1, 2))), Rational(1));
  EXPECT_EQ(EdgeExpansion(BuildExchangeGraph(UniformMatroid(1, 3))), Rational(2));
  EXPECT_EQ(EdgeExpansion(BuildExchangeGraph(UniformMatroid(2, 4))), Rational(2));
}

TEST(EdgeExpansionTest, MatchesSubsetOracle) {
  int checked = 0;
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const int m = 5 + static_cast<int>(seed % 2);
    const ExplicitMatroid matroid = BasesFromCircuits(RandomSparseFamily(m, 2, 3, 30, seed));
    if (matroid.size() > 16) continue;
    EXPECT_EQ(EdgeExpansion(BuildExchangeGraph(matroid)),
              oracle::EdgeExpansion(oracle::BasisList(matroid)));
    ++checked;
  }
  EXPECT_EQ(EdgeExpansion(BuildExchangeGraph(BasesFromCircuits(HamiltonFamily(4)))),
            oracle::EdgeExpansion(oracle::BasisList(BasesFromCircuits(HamiltonFamily(4)))));
  EXPECT_GT(checked, 10);
}

TEST(EdgeExpansionTest, Refusals) {
  EXPECT_EQ(CodeOf([] { EdgeExpansion(BuildExchangeGraph(UniformMatroid(3, 7))); }),
            ErrorCode::kBudgetExceeded);
  EXPECT_EQ(CodeOf([] { EdgeExpansion(BuildExchangeGraph(UniformMatroid(2, 4)), 5); }),
            ErrorCode::kBudgetExceeded);
  EXPECT_EQ(CodeOf([] { EdgeExpansion(BuildExchangeGraph(UniformMatroid(1, 1))); }),
            ErrorCode::kInvalidArgument);
}

TEST(WalkStepTest, StaysOnBasesAndDiffersByOneExchange) {
  const ExplicitMatroid m = BasesFromCircuits(HamiltonFamily(5));
  WalkState state = StartWalk(m, 3);
  EXPECT_EQ(state.current, LexLeastBasis(m));
  int moves = 0;
  for (int i = 0; i < 5000; ++i) {
    const SubsetMask before = state.current;
    state = WalkStep(m, std::move(state));
    EXPECT_TRUE(m.IsBasis(state.current));
    const int diff = (before ^ state.current).size();
    EXPECT_TRUE(diff == 0 || diff == 2);
    moves += diff == 2;
  }
  EXPECT_EQ(state.step_count, 5000u);
  EXPECT_GT(moves, 0);
  EXPECT_LT(moves, 5000);
}

TEST(WalkStepTest, OneStepFrequenciesMatchTransitionOracle) {
  const ExplicitMatroid m = UniformMatroid(2, 4);
  const auto p = oracle::TransitionMatrix(m);
  // Self-loop 1/2, each of the four neighbours 1/8.
  EXPECT_EQ(p[0][0], Rational(1, 2));
  EXPECT_EQ(std::count(p[0].begin(), p[0].end(), Rational(1, 8)), 4);
  const int trials = 200000;
  std::vector<int> hits(m.size(), 0);
  WalkState state = StartWalk(m, 11);
  const SubsetMask start = state.current;
  for (int i = 0; i < trials; ++i) {
    state.current = start;
    state = WalkStep(m, std::move(state));
    ++hits[*m.IndexOf(state.current)];
  }
  for (std::size_t y = 0; y < m.size(); ++y) {
    EXPECT_NEAR(static_cast<double>(hits[y]) / trials, ToDouble(p[0][y]), 0.005);
  }
}

TEST(ExactDistributionTest, MatchesRationalOracle) {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const ExplicitMatroid m = BasesFromCircuits(RandomSparseFamily(6, 3, 3, 40, seed));
    const auto p = oracle::TransitionMatrix(m);
    std::vector<Rational> exact(m.size(), 0);
    exact[0] = 1;
    for (int t = 1; t <= 6; ++t) {
      exact = oracle::Step(p, exact);
      const std::vector<double> got = ExactWalkDistribution(m, m.bases()[0], t);
      for (std::size_t y = 0; y < m.size(); ++y) {
        EXPECT_NEAR(got[y], ToDouble(exact[y]), 1e-15);
      }
    }
  }
}

TEST(ExactDistributionTest, Examples) {
  const ExplicitMatroid k4 = BasesFromCircuits(HamiltonFamily(4));
  const std::vector<double> point = ExactWalkDistribution(k4, LexLeastBasis(k4), 0);
  EXPECT_EQ(point[*k4.IndexOf(LexLeastBasis(k4))], 1.0);
  EXPECT_EQ(std::accumulate(point.begin(), point.end(), 0.0), 1.0);

  const ExplicitMatroid u12 = UniformMatroid(1, 2);
  EXPECT_EQ(ExactWalkDistribution(u12, S({0}), 1), Uniform(2));

  const ExplicitMatroid u24 = UniformMatroid(2, 4);
  EXPECT_LT(MaxNorm(ExactWalkDistribution(u24, S({0, 1}), 200), Uniform(6)), 1e-12);

  EXPECT_EQ(CodeOf([&] { ExactWalkDistribution(k4, S({0, 1}), 1); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([&] { ExactWalkDistribution(u24, S({0, 1}), 1, 3); }),
            ErrorCode::kBudgetExceeded);
}

TEST(ExactDistributionTest, UniformIsAnExactFixedPoint) {
  std::vector<ExplicitMatroid> cases = {UniformMatroid(2, 4), UniformMatroid(3, 7),
                                        BasesFromCircuits(HamiltonFamily(4))};
  for (uint64_t seed = 0; seed < 20; ++seed) {
    cases.push_back(BasesFromCircuits(RandomSparseFamily(8, 3, 6, 80, seed)));
  }
  for (const ExplicitMatroid& m : cases) {
    ASSERT_LE(m.size(), 100u);
    const ExchangeGraph graph = BuildExchangeGraph(m);
    const std::vector<double> uniform = Uniform(m.size());
    EXPECT_EQ(ApplyTransition(graph, uniform), uniform);
  }
}

TEST(TvDistanceTest, Examples) {
  EXPECT_EQ(TvDistance(Uniform(5), Uniform(5)), 0.0);
  EXPECT_EQ(TvDistance(std::vector<double>{1, 0}, Uniform(2)), 0.5);
  EXPECT_EQ(CodeOf([] { TvDistance(Uniform(2), Uniform(3)); }), ErrorCode::kInvalidArgument);

  const ExplicitMatroid u24 = UniformMatroid(2, 4);
  const double at10 = TvDistance(ExactWalkDistribution(u24, S({0, 1}), 10), Uniform(6));
  const double at50 = TvDistance(ExactWalkDistribution(u24, S({0, 1}), 50), Uniform(6));
  EXPECT_GT(at50, 0.0);
  EXPECT_LT(at50, at10);
}

TEST(TvDistanceTest, NonIncreasingAlongTheWalk) {
  const ExplicitMatroid m = BasesFromCircuits(HamiltonFamily(5));
  const ExchangeGraph graph = BuildExchangeGraph(m);
  std::vector<double> p(m.size(), 0.0);
  p[0] = 1.0;
  const std::vector<double> uniform = Uniform(m.size());
  double previous = TvDistance(p, uniform);
  for (int t = 1; t <= 500; ++t) {
    p = ApplyTransition(graph, p);
    const double tv = TvDistance(p, uniform);
    // Up to one ulp of rounding per summed term.
    EXPECT_LE(tv, previous + m.size() * std::numeric_limits<double>::epsilon()) << "t=" << t;
    previous = tv;
  }
  EXPECT_LT(previous, 1e-6);
}

TEST(SampleBasisTest, DeterministicAndStartsAtLexLeast) {
  const ExplicitMatroid m = BasesFromCircuits(HamiltonFamily(5));
  EXPECT_EQ(SampleBasis(m, 0, 9), LexLeastBasis(m));
  EXPECT_EQ(SampleBasis(m, 1000, 9), SampleBasis(m, 1000, 9));
  int differing = 0;
  for (uint64_t seed = 0; seed < 20; ++seed) {
    differing += SampleBasis(m, 1000, seed) != SampleBasis(m, 1000, seed + 100);
  }
  EXPECT_GT(differing, 10);
}

void ExpectUniformSamples(const ExplicitMatroid& m, uint64_t steps, int samples) {
  std::map<SubsetMask, int> counts;
  for (int i = 0; i < samples; ++i) ++counts[SampleBasis(m, steps, DeriveSeed(5, i))];
  EXPECT_EQ(counts.size(), m.size());
  const double target = 1.0 / static_cast<double>(m.size());
  for (const auto& [basis, count] : counts) {
    EXPECT_NEAR(static_cast<double>(count) / samples, target, 0.01) << basis.ToString();
  }
}

TEST(SampleBasisTest, UniformMatroidFrequencies) {
  ExpectUniformSamples(UniformMatroid(2, 4), 500, 100000);
}

TEST(SampleBasisTest, HamiltonK4Frequencies) {
  ExpectUniformSamples(BasesFromCircuits(HamiltonFamily(4)), 1000, 100000);
}

TEST(ApproxCountTest, DefaultsFollowFormula) {
  EXPECT_EQ(DefaultSampleCount(0.05), 30000u);
  EXPECT_EQ(DefaultWalkLength(4, 2, 0.5),
            static_cast<uint64_t>(std::ceil(8 * (std::log(2.0) + std::log(2.0) + 5))));
  EXPECT_EQ(CodeOf([] { ApproxCount(CircuitFamily(4, 2, {}), 0.0, 1); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] { ApproxCount(CircuitFamily(4, 2, {}), 1.0, 1); }),
            ErrorCode::kInvalidArgument);
  EXPECT_EQ(CodeOf([] {
              ApproxCount(CircuitFamily(4, 3, {S({0, 1, 2}), S({0, 1, 3})}), 0.1, 1);
            }),
            ErrorCode::kNotPaving);
}

void ExpectWithinFivePercent(const CircuitFamily& family, double exact, uint64_t seed) {
  const CountEstimate estimate = ApproxCount(family, 0.05, seed);
  const double value = ToDouble(estimate.estimate);
  EXPECT_LE(std::abs(value - exact), 0.05 * exact) << "estimate " << value;
  EXPECT_EQ(RecomputeEstimate(estimate), estimate.estimate);
  EXPECT_EQ(estimate.samples_per_stage, 30000u);
  EXPECT_EQ(estimate.base_count, 1u);
}

TEST(ApproxCountTest, UniformMatroid) { ExpectWithinFivePercent(CircuitFamily(4, 2, {}), 6, 1); }
TEST(ApproxCountTest, HamiltonK4) { ExpectWithinFivePercent(HamiltonFamily(4), 12, 1); }
TEST(ApproxCountTest, HamiltonK5) { ExpectWithinFivePercent(HamiltonFamily(5), 240, 1); }

TEST(ApproxCountTest, ChainIsConsistentAndDeterministic) {
  const CircuitFamily family = HamiltonFamily(4);
  const CountOptions options{2000, 50};
  const CountEstimate a = ApproxCount(family, 0.1, 77, options);
  const CountEstimate b = ApproxCount(family, 0.1, 77, options);
  EXPECT_EQ(a.estimate, b.estimate);
  ASSERT_EQ(a.chain.size(), b.chain.size());
  // Replaying the chain's branches on the exact matroid must end in a
  // single basis. The pilot batch keeps sampled ratios near or above 1/2.
  ExplicitMatroid current = BasesFromCircuits(family);
  for (const StageRecord& record : a.chain) {
    const int index = current.IndexOfLabel(record.element).value();
    if (record.sampled) EXPECT_GT(record.ratio, Rational(2, 5));
    if (!record.sampled) EXPECT_EQ(record.ratio, Rational(1));
    current = record.branch == Branch::kContract ? Contract(current, index)
                                                 : Delete(current, index);
  }
  EXPECT_EQ(current.size(), a.base_count);
  EXPECT_EQ(a.samples_per_stage, 2000u);
}

// Choosing the branch on the same samples that give the ratio would bias
// every p = 1/2 stage upwards and the estimate downwards by several
// percent at this sample size; the mean over many runs exposes that.
TEST(ApproxCountTest, MeanEstimateIsUnbiased) {
  const CircuitFamily family(4, 2, {});
  const CountOptions options{200, 0};
  double sum = 0;
  const int runs = 300;
  for (int seed = 0; seed < runs; ++seed) {
    sum += ToDouble(ApproxCount(family, 0.1, seed, options).estimate);
  }
  EXPECT_NEAR(sum / runs, 6.0, 0.1);
}

}  // namespace
}  // namespace paving
