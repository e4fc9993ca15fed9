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

// The bases-exchange graph and the random walk on it.
//
// Two bases are adjacent when they differ by a single exchange. The walk
// moves from X to each neighbour with probability exactly 1/(r m) and stays
// put otherwise. Since every degree is at most r (m - r), the holding
// probability is positive and the chain is aperiodic; the transition matrix
// is symmetric, so the uniform distribution on bases is stationary.

#ifndef PAVING_WALK_H_
#define PAVING_WALK_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "paving/matroid.h"
#include "paving/numeric.h"
#include "paving/paving.h"
#include "paving/subset_mask.h"

namespace paving {

inline constexpr std::size_t kDefaultGraphBudget = 200'000;
inline constexpr std::size_t kDefaultExpansionLimit = 24;
inline constexpr std::size_t kDefaultDistributionLimit = 20'000;

class ExchangeGraph {
 public:
  ExchangeGraph(int ground_size, int rank, std::vector<SubsetMask> vertices,
                std::vector<std::vector<uint32_t>> adjacency);

  int ground_size() const { return ground_size_; }
  int rank() const { return rank_; }
  std::size_t size() const { return vertices_.size(); }
  std::span<const SubsetMask> vertices() const { return vertices_; }
  std::span<const uint32_t> neighbours(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].size(); }
  std::size_t edge_count() const;

 private:
  int ground_size_;
  int rank_;
  std::vector<SubsetMask> vertices_;  // sorted
  std::vector<std::vector<uint32_t>> adjacency_;
};

// Vertices in sorted mask order, neighbour lists ascending. Throws
// kBudgetExceeded above `max_vertices`.
ExchangeGraph BuildExchangeGraph(const ExplicitMatroid& m,
                                 std::size_t max_vertices = kDefaultGraphBudget);

bool IsConnected(const ExchangeGraph& graph);

// min |cut(A)| / |A| over nonempty A with |A| <= |B|/2, by enumerating every
// vertex subset. Refuses (kBudgetExceeded) above `max_vertices`; a graph with
// one vertex has no admissible A and is also rejected.
Rational EdgeExpansion(const ExchangeGraph& graph,
                       std::size_t max_vertices = kDefaultExpansionLimit);

struct WalkState {
  SubsetMask current;
  uint64_t step_count = 0;
  Rng rng;
  // Each step consumes 16 random bits; unused bits of the last rng output
  // are kept here so a trajectory does not depend on how it is advanced.
  uint64_t spare_bits = 0;
  int spare_chunks = 0;
};

// Start state at the lexicographically least basis.
WalkState StartWalk(const ExplicitMatroid& m, uint64_t seed);

// One transition: draw (i, g) uniformly from {0..r-1} x E; if g is outside
// X, move to X - x_i + g when that is a basis. Each neighbour is reached
// with probability 1/(r m).
WalkState WalkStep(const ExplicitMatroid& m, WalkState state);

// In-place variant used by the samplers.
void AdvanceWalk(const ExplicitMatroid& m, WalkState& state, uint64_t steps);

// One exact application of the transition rule to a distribution over
// graph.vertices().
std::vector<double> ApplyTransition(const ExchangeGraph& graph, std::span<const double> p);

// Distribution after t steps from `start`. Throws kBudgetExceeded above
// `max_vertices` and kInvalidArgument when `start` is not a basis.
std::vector<double> ExactWalkDistribution(const ExplicitMatroid& m, SubsetMask start,
                                          uint64_t steps,
                                          std::size_t max_vertices = kDefaultDistributionLimit);

// Half the L1 distance. Throws kInvalidArgument on a length mismatch.
double TvDistance(std::span<const double> p, std::span<const double> q);

// State after `steps` transitions from the lexicographically least basis.
SubsetMask SampleBasis(const ExplicitMatroid& m, uint64_t steps, uint64_t seed);

// Approximate counting by self-reduction.
//
// Each stage looks at the least-index remaining element e. Loops are
// deleted and coloops contracted with ratio 1. Otherwise the fraction p of
// sampled bases containing e is estimated; the estimator recurses into M/e
// with ratio p when p >= 1/2 and into M\e with ratio 1-p otherwise. The
// branch is decided on a pilot batch of ceil(samples/16) drawn before the
// main batch, so that the recorded ratio is not biased by the choice. Once
// only loops and coloops remain the minor has exactly one basis, and
//
//   estimate = base count / product of ratios.

enum class Branch { kDelete, kContract };

struct StageRecord {
  int element = 0;  // original label
  Branch branch = Branch::kDelete;
  Rational ratio;
  bool sampled = false;
};

struct CountEstimate {
  Rational estimate;
  double epsilon = 0;
  std::vector<StageRecord> chain;
  uint64_t base_count = 0;
  uint64_t samples_per_stage = 0;
};

struct CountOptions {
  // Zero selects the defaults: ceil(75 / epsilon^2) samples and
  // ceil(r m (ln r + ln(1/epsilon) + 5)) steps between samples, the latter
  // evaluated per stage.
  uint64_t samples = 0;
  uint64_t steps = 0;
};

uint64_t DefaultSampleCount(double epsilon);
uint64_t PilotSampleCount(uint64_t samples);
uint64_t DefaultWalkLength(int ground_size, int rank, double epsilon);

// Throws kNotPaving for non-paving families and kInvalidArgument unless
// 0 < epsilon < 1.
CountEstimate ApproxCount(const CircuitFamily& family, double epsilon, uint64_t seed,
                          const CountOptions& options = {});

// base_count / product of the chain's ratios.
Rational RecomputeEstimate(const CountEstimate& estimate);

}  // namespace paving

#endif  // PAVING_WALK_H_
