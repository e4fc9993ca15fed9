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

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "paving/error.h"

namespace paving {
namespace {

// i-th smallest element of s.
int NthElement(SubsetMask s, int i) {
  uint64_t bits = s.bits();
  for (; i > 0; --i) bits &= bits - 1;
  return std::countr_zero(bits);
}

// Per-byte popcounts and in-byte select, for a branch-free i-th element
// lookup on ground sets of at most 24 elements.
struct ByteTables {
  std::array<uint8_t, 256> count{};
  std::array<std::array<uint8_t, 8>, 256> select{};

  ByteTables() {
    for (int byte = 0; byte < 256; ++byte) {
      int seen = 0;
      for (int bit = 0; bit < 8; ++bit) {
        if ((byte >> bit) & 1) select[byte][seen++] = static_cast<uint8_t>(bit);
      }
      count[byte] = static_cast<uint8_t>(seen);
    }
  }
};

const ByteTables& Tables() {
  static const ByteTables tables;
  return tables;
}

// The inner loop of the walk, with everything that depends only on the
// matroid precomputed. Ground sets up to kMaxBitmapGround get a bitmap over
// all 2^m masks for basis membership and the table-driven element lookup;
// larger ones fall back to the matroid's own lookup.
class Stepper {
 public:
  static constexpr int kMaxBitmapGround = 22;

  explicit Stepper(const ExplicitMatroid& m)
      : matroid_(m), choices_(static_cast<uint64_t>(m.rank()) * m.ground_size()) {
    if (choices_ > 0) threshold_ = (uint64_t{1} << 16) % choices_;
    for (uint64_t k = 0; k < choices_; ++k) {
      position_.push_back(static_cast<uint8_t>(k / m.ground_size()));
      incoming_.push_back(uint64_t{1} << (k % m.ground_size()));
    }
    if (m.ground_size() > kMaxBitmapGround) return;
    bitmap_.assign(((uint64_t{1} << m.ground_size()) + 63) / 64, 0);
    for (SubsetMask b : m.bases()) bitmap_[b.bits() >> 6] |= uint64_t{1} << (b.bits() & 63);
  }

  void Advance(WalkState& state, uint64_t steps) const {
    state.step_count += steps;
    if (choices_ == 0) return;
    if (bitmap_.empty()) {
      for (uint64_t i = 0; i < steps; ++i) StepWithLookup(state);
    } else {
      for (uint64_t i = 0; i < steps; ++i) StepWithBitmap(state);
    }
  }

 private:
  void StepWithLookup(WalkState& state) const {
    const uint64_t k = Draw(state);
    const uint64_t current = state.current.bits();
    if (current & incoming_[k]) return;
    const uint64_t outgoing = uint64_t{1} << NthElement(state.current, position_[k]);
    const SubsetMask next(current ^ outgoing ^ incoming_[k]);
    if (matroid_.IsBasis(next)) state.current = next;
  }

  void StepWithBitmap(WalkState& state) const {
    const ByteTables& tables = Tables();
    const uint64_t k = Draw(state);
    const uint64_t current = state.current.bits();
    if (current & incoming_[k]) return;
    // Locate the byte holding the wanted element, then select within it.
    int position = position_[k];
    const int low = tables.count[current & 0xff];
    const int middle = tables.count[(current >> 8) & 0xff];
    const bool in_low = position < low;
    const bool in_middle = !in_low && position < low + middle;
    const int shift = in_low ? 0 : (in_middle ? 8 : 16);
    position -= in_low ? 0 : (in_middle ? low : low + middle);
    const uint64_t outgoing =
        uint64_t{1} << (shift + tables.select[(current >> shift) & 0xff][position]);
    const uint64_t next = current ^ outgoing ^ incoming_[k];
    if ((bitmap_[next >> 6] >> (next & 63)) & 1) state.current = SubsetMask(next);
  }

  // Uniform on [0, choices) from a 16-bit chunk by multiply-shift, with
  // rejection of the 2^16 mod choices biased low products.
  uint64_t Draw(WalkState& state) const {
    while (true) {
      if (state.spare_chunks == 0) {
        state.spare_bits = state.rng();
        state.spare_chunks = 4;
      }
      const uint64_t chunk = state.spare_bits & 0xffff;
      state.spare_bits >>= 16;
      --state.spare_chunks;
      const uint64_t product = chunk * choices_;
      if ((product & 0xffff) >= threshold_) return product >> 16;
    }
  }

  const ExplicitMatroid& matroid_;
  uint64_t choices_;
  uint64_t threshold_ = 0;
  std::vector<uint8_t> position_;
  std::vector<uint64_t> incoming_;  // single-bit masks
  std::vector<uint64_t> bitmap_;
};

}  // namespace

ExchangeGraph::ExchangeGraph(int ground_size, int rank, std::vector<SubsetMask> vertices,
                             std::vector<std::vector<uint32_t>> adjacency)
    : ground_size_(ground_size),
      rank_(rank),
      vertices_(std::move(vertices)),
      adjacency_(std::move(adjacency)) {
  if (vertices_.size() != adjacency_.size()) {
    throw MatroidError(ErrorCode::kInvalidArgument, "adjacency size differs from vertex count");
  }
}

std::size_t ExchangeGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& list : adjacency_) twice += list.size();
  return twice / 2;
}

ExchangeGraph BuildExchangeGraph(const ExplicitMatroid& m, std::size_t max_vertices) {
  if (m.size() > max_vertices) {
    throw MatroidError(ErrorCode::kBudgetExceeded,
                       "refused: too large: " + std::to_string(m.size()) +
                           " bases exceed the graph budget of " + std::to_string(max_vertices));
  }
  const std::span<const SubsetMask> bases = m.bases();
  std::vector<std::vector<uint32_t>> adjacency(bases.size());
  const SubsetMask ground = m.ground();
  for (std::size_t v = 0; v < bases.size(); ++v) {
    const SubsetMask x = bases[v];
    const SubsetMask outside = ground - x;
    x.ForEach([&](int out) {
      outside.ForEach([&](int in) {
        if (auto w = m.IndexOf(x.Exchange(out, in))) {
          adjacency[v].push_back(static_cast<uint32_t>(*w));
        }
      });
    });
    std::sort(adjacency[v].begin(), adjacency[v].end());
  }
  return ExchangeGraph(m.ground_size(), m.rank(),
                       std::vector<SubsetMask>(bases.begin(), bases.end()),
                       std::move(adjacency));
}

bool IsConnected(const ExchangeGraph& graph) {
  if (graph.size() == 0) return true;
  std::vector<bool> seen(graph.size(), false);
  std::vector<uint32_t> stack = {0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const uint32_t v = stack.back();
    stack.pop_back();
    for (uint32_t w : graph.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == graph.size();
}

Rational EdgeExpansion(const ExchangeGraph& graph, std::size_t max_vertices) {
  const std::size_t n = graph.size();
  if (n > max_vertices || n > 40) {
    throw MatroidError(ErrorCode::kBudgetExceeded,
                       "refused: too large: exhaustive expansion over " + std::to_string(n) +
                           " bases exceeds the limit of " +
                           std::to_string(std::min<std::size_t>(max_vertices, 40)));
  }
  if (n < 2) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "edge expansion needs at least two bases");
  }
  std::vector<uint64_t> adjacency(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (uint32_t w : graph.neighbours(v)) adjacency[v] |= uint64_t{1} << w;
  }
  // Walk all subsets in Gray-code order, updating |A| and |cut(A)| one
  // vertex at a time.
  uint64_t subset = 0;
  int64_t cut = 0;
  std::size_t size = 0;
  int64_t best_cut = -1;
  std::size_t best_size = 1;
  for (uint64_t i = 1; i < (uint64_t{1} << n); ++i) {
    const int v = std::countr_zero(i);
    const uint64_t bit = uint64_t{1} << v;
    const int64_t degree = std::popcount(adjacency[v]);
    if (subset & bit) {
      subset ^= bit;
      --size;
      cut -= degree - 2 * std::popcount(adjacency[v] & subset);
    } else {
      cut += degree - 2 * std::popcount(adjacency[v] & subset);
      subset ^= bit;
      ++size;
    }
    if (size == 0 || 2 * size > n) continue;
    if (best_cut < 0 || cut * static_cast<int64_t>(best_size) <
                            best_cut * static_cast<int64_t>(size)) {
      best_cut = cut;
      best_size = size;
    }
  }
  return Rational(best_cut, static_cast<int64_t>(best_size));
}

WalkState StartWalk(const ExplicitMatroid& m, uint64_t seed) {
  return WalkState{LexLeastBasis(m), 0, MakeRng(seed)};
}

WalkState WalkStep(const ExplicitMatroid& m, WalkState state) {
  Stepper(m).Advance(state, 1);
  return state;
}

void AdvanceWalk(const ExplicitMatroid& m, WalkState& state, uint64_t steps) {
  Stepper(m).Advance(state, steps);
}

std::vector<double> ApplyTransition(const ExchangeGraph& graph, std::span<const double> p) {
  if (p.size() != graph.size()) {
    throw MatroidError(ErrorCode::kInvalidArgument, "distribution length differs from |B|");
  }
  const double move = 1.0 / (static_cast<double>(graph.rank()) * graph.ground_size());
  std::vector<double> next(p.size());
  for (std::size_t y = 0; y < p.size(); ++y) {
    // Written as a sum of differences so a uniform input maps to itself
    // exactly.
    double flow = 0.0;
    for (uint32_t x : graph.neighbours(y)) flow += p[x] - p[y];
    next[y] = p[y] + move * flow;
  }
  return next;
}

std::vector<double> ExactWalkDistribution(const ExplicitMatroid& m, SubsetMask start,
                                          uint64_t steps, std::size_t max_vertices) {
  if (m.size() > max_vertices) {
    throw MatroidError(ErrorCode::kBudgetExceeded,
                       "refused: too large: " + std::to_string(m.size()) +
                           " bases exceed the distribution limit of " +
                           std::to_string(max_vertices));
  }
  const auto index = m.IndexOf(start);
  if (!index) {
    throw MatroidError(ErrorCode::kInvalidArgument, start.ToString() + " is not a basis");
  }
  const ExchangeGraph graph = BuildExchangeGraph(m, max_vertices);
  std::vector<double> p(m.size(), 0.0);
  p[*index] = 1.0;
  for (uint64_t t = 0; t < steps; ++t) p = ApplyTransition(graph, p);
  return p;
}

double TvDistance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "distributions of length " + std::to_string(p.size()) + " and " +
                           std::to_string(q.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += std::abs(p[i] - q[i]);
  return sum / 2;
}

SubsetMask SampleBasis(const ExplicitMatroid& m, uint64_t steps, uint64_t seed) {
  WalkState state = StartWalk(m, seed);
  AdvanceWalk(m, state, steps);
  return state.current;
}

uint64_t DefaultSampleCount(double epsilon) {
  return static_cast<uint64_t>(std::ceil(75.0 / (epsilon * epsilon)));
}

uint64_t PilotSampleCount(uint64_t samples) { return (samples + 15) / 16; }

uint64_t DefaultWalkLength(int ground_size, int rank, double epsilon) {
  const double log_rank = rank > 0 ? std::log(static_cast<double>(rank)) : 0.0;
  return static_cast<uint64_t>(std::ceil(static_cast<double>(rank) * ground_size *
                                         (log_rank + std::log(1.0 / epsilon) + 5.0)));
}

CountEstimate ApproxCount(const CircuitFamily& family, double epsilon, uint64_t seed,
                          const CountOptions& options) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw MatroidError(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1)");
  }
  ExplicitMatroid current = BasesFromCircuits(family);
  CountEstimate out;
  out.epsilon = epsilon;
  out.samples_per_stage = options.samples > 0 ? options.samples : DefaultSampleCount(epsilon);
  const uint64_t samples = out.samples_per_stage;

  for (uint64_t stage = 0;; ++stage) {
    const uint64_t total = current.size();
    std::vector<uint64_t> in_bases(current.ground_size(), 0);
    for (SubsetMask b : current.bases()) b.ForEach([&](int x) { ++in_bases[x]; });
    const bool settled = std::all_of(in_bases.begin(), in_bases.end(),
                                     [&](uint64_t c) { return c == 0 || c == total; });
    if (settled) break;

    StageRecord record;
    record.element = current.LabelOf(0);
    if (in_bases[0] == 0) {
      record.branch = Branch::kDelete;
      record.ratio = 1;
    } else if (in_bases[0] == total) {
      record.branch = Branch::kContract;
      record.ratio = 1;
    } else {
      const uint64_t steps =
          options.steps > 0 ? options.steps
                            : DefaultWalkLength(current.ground_size(), current.rank(), epsilon);
      const Stepper stepper(current);
      WalkState state = StartWalk(current, DeriveSeed(seed, stage));
      auto count_hits = [&](uint64_t n) {
        uint64_t hits = 0;
        for (uint64_t i = 0; i < n; ++i) {
          stepper.Advance(state, steps);
          hits += state.current.contains(0);
        }
        return hits;
      };
      // The branch is chosen on a separate pilot batch. Choosing it on the
      // batch that also supplies the ratio would record max(p, 1-p) of the
      // sample, which overestimates the ratio when p is near 1/2.
      const uint64_t pilot = PilotSampleCount(samples);
      const bool contract = 2 * count_hits(pilot) >= pilot;
      const uint64_t hits = count_hits(samples);
      record.sampled = true;
      if (contract) {
        record.branch = Branch::kContract;
        record.ratio = Rational(hits, samples);
      } else {
        record.branch = Branch::kDelete;
        record.ratio = Rational(samples - hits, samples);
      }
    }
    current = record.branch == Branch::kContract ? Contract(current, 0) : Delete(current, 0);
    out.chain.push_back(std::move(record));
  }
  out.base_count = current.size();
  out.estimate = RecomputeEstimate(out);
  return out;
}

Rational RecomputeEstimate(const CountEstimate& estimate) {
  Rational product = 1;
  for (const StageRecord& record : estimate.chain) product *= record.ratio;
  return Rational(estimate.base_count) / product;
}

}  // namespace paving
