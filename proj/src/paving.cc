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

#include "paving/paving.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "paving/error.h"

namespace paving {
namespace {

void CheckPair(const ExplicitMatroid& m, int e, int f) {
  for (int x : {e, f}) {
    if (x < 0 || x >= m.ground_size()) {
      throw MatroidError(ErrorCode::kOutOfRange,
                         "element " + std::to_string(x) + " outside ground set");
    }
  }
  if (e == f) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "correlation needs distinct elements, got " + std::to_string(e) +
                           " twice");
  }
}

// Calls f(neighbour) for every r-set differing from `s` in one exchange.
template <typename F>
void ForEachExchange(SubsetMask s, SubsetMask ground, F&& f) {
  const SubsetMask outside = ground - s;
  s.ForEach([&](int out) { outside.ForEach([&](int in) { f(s.Exchange(out, in)); }); });
}

// Drops every element of `removed`, compacting the indices above it.
SubsetMask Compact(SubsetMask s, SubsetMask removed) {
  for (int e = 63; e >= 0; --e) {
    if (removed.contains(e)) s = RemoveIndex(s, e);
  }
  return s;
}

}  // namespace

CircuitFamily::CircuitFamily(int ground_size, int rank, std::vector<SubsetMask> circuits)
    : ground_size_(ground_size), rank_(rank), circuits_(std::move(circuits)) {
  if (ground_size_ < 0 || ground_size_ > kMaxGroundSize) {
    throw MatroidError(ErrorCode::kInvalidArgument, "ground set size must lie in [0, 64]");
  }
  if (rank_ < 0 || rank_ > ground_size_) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "rank " + std::to_string(rank_) + " impossible on " +
                           std::to_string(ground_size_) + " elements");
  }
  for (SubsetMask c : circuits_) {
    if (!c.FitsIn(ground_size_)) {
      throw MatroidError(ErrorCode::kOutOfRange,
                         "circuit " + c.ToString() + " leaves the ground set");
    }
    if (c.size() != rank_) {
      throw MatroidError(ErrorCode::kInvalidArgument,
                         "circuit " + c.ToString() + " does not have " +
                             std::to_string(rank_) + " elements");
    }
  }
  std::sort(circuits_.begin(), circuits_.end());
  circuits_.erase(std::unique(circuits_.begin(), circuits_.end()), circuits_.end());
}

bool CircuitFamily::Contains(SubsetMask s) const {
  return std::binary_search(circuits_.begin(), circuits_.end(), s);
}

bool ValidatePaving(const CircuitFamily& family) {
  const SubsetMask ground = SubsetMask::Full(family.ground_size());
  for (SubsetMask c : family.circuits()) {
    bool ok = true;
    ForEachExchange(c, ground, [&](SubsetMask other) {
      if (!ok || !family.Contains(other)) return;
      const SubsetMask joined = c | other;
      joined.ForEach([&](int x) {
        if (!family.Contains(joined.Without(x))) ok = false;
      });
    });
    if (!ok) return false;
  }
  return true;
}

bool ValidateSparse(const CircuitFamily& family) {
  const SubsetMask ground = SubsetMask::Full(family.ground_size());
  for (SubsetMask c : family.circuits()) {
    bool close = false;
    ForEachExchange(c, ground, [&](SubsetMask other) {
      if (family.Contains(other)) close = true;
    });
    if (close) return false;
  }
  return true;
}

std::vector<SubsetMask> NonCircuitSubsets(const CircuitFamily& family) {
  std::vector<SubsetMask> out;
  out.reserve(Binomial(family.ground_size(), family.rank()) - family.size());
  ForEachSubsetOfSize(family.ground_size(), family.rank(), [&](SubsetMask s) {
    if (!family.Contains(s)) out.push_back(s);
  });
  return out;
}

ExplicitMatroid BasesFromCircuits(const CircuitFamily& family) {
  if (!ValidatePaving(family)) {
    throw MatroidError(ErrorCode::kNotPaving,
                       "circuit family does not define a paving matroid");
  }
  std::vector<SubsetMask> bases = NonCircuitSubsets(family);
  if (bases.empty()) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "every " + std::to_string(family.rank()) +
                           "-subset is a circuit; there are no bases");
  }
  return ExplicitMatroid(family.ground_size(), family.rank(), std::move(bases));
}

CircuitFamily MinorFamily(const CircuitFamily& family, const MinorSpec& spec) {
  spec.Validate(family.ground_size());
  const int rank = family.rank() - spec.contracted.size();
  if (rank < 0) {
    throw MatroidError(ErrorCode::kInvalidArgument, "contracting more elements than the rank");
  }
  const SubsetMask removed = spec.deleted | spec.contracted;
  std::vector<SubsetMask> circuits;
  for (SubsetMask c : family.circuits()) {
    if (spec.contracted.IsSubsetOf(c) && !c.Intersects(spec.deleted)) {
      circuits.push_back(Compact(c - spec.contracted, removed));
    }
  }
  return CircuitFamily(family.ground_size() - removed.size(), rank, std::move(circuits));
}

CircuitFamily DeletionFamily(const CircuitFamily& family, int e) {
  return MinorFamily(family, MinorSpec{SubsetMask::Singleton(e), SubsetMask()});
}

CircuitFamily ContractionFamily(const CircuitFamily& family, int e) {
  return MinorFamily(family, MinorSpec{SubsetMask(), SubsetMask::Singleton(e)});
}

CircuitFamily RandomSparseFamily(int ground_size, int rank, int max_circuits, int attempts,
                                 uint64_t seed) {
  Rng rng = MakeRng(seed);
  std::vector<int> points(ground_size);
  std::iota(points.begin(), points.end(), 0);
  std::vector<SubsetMask> kept;
  std::vector<int> draw;
  for (int i = 0; i < attempts && static_cast<int>(kept.size()) < max_circuits; ++i) {
    draw.clear();
    std::sample(points.begin(), points.end(), std::back_inserter(draw), rank, rng);
    const SubsetMask candidate = SubsetMask::FromIndices(draw);
    const bool far = std::all_of(kept.begin(), kept.end(), [&](SubsetMask c) {
      return (c ^ candidate).size() > 2;
    });
    if (far) kept.push_back(candidate);
  }
  return CircuitFamily(ground_size, rank, std::move(kept));
}

CircuitFamily FromHamiltonianCycles(const SimpleGraph& graph) {
  ValidateSimpleGraph(graph);
  const int n = graph.vertex_count;
  const int m = static_cast<int>(graph.edges.size());
  if (n < 3) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "Hamiltonian encoding needs at least 3 vertices, got " +
                           std::to_string(n));
  }
  if (n > m) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "rank " + std::to_string(n) + " exceeds the " + std::to_string(m) +
                           " edges of the graph");
  }
  // edge_index[u][v] = position of edge uv in the input, or -1.
  std::vector<std::vector<int>> edge_index(n, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i) {
    auto [u, v] = graph.edges[i];
    edge_index[u][v] = edge_index[v][u] = i;
  }

  std::vector<SubsetMask> cycles;
  std::vector<int> path = {0};
  std::vector<bool> visited(n, false);
  visited[0] = true;
  // Depth-first extension of paths from vertex 0. Each cycle is reached in
  // both directions; only the one whose second vertex is smaller than its
  // last is kept.
  auto extend = [&](auto&& self, SubsetMask used) -> void {
    const int last = path.back();
    if (static_cast<int>(path.size()) == n) {
      const int closing = edge_index[last][0];
      if (closing >= 0 && path[1] < path.back()) cycles.push_back(used.With(closing));
      return;
    }
    for (int next = 1; next < n; ++next) {
      const int edge = edge_index[last][next];
      if (visited[next] || edge < 0) continue;
      visited[next] = true;
      path.push_back(next);
      self(self, used.With(edge));
      path.pop_back();
      visited[next] = false;
    }
  };
  extend(extend, SubsetMask());
  return CircuitFamily(m, n, std::move(cycles));
}

HamiltonianIdentity HamiltonianCountIdentity(const SimpleGraph& graph) {
  const CircuitFamily family = FromHamiltonianCycles(graph);
  HamiltonianIdentity out;
  out.cycles = family.size();
  out.total_subsets = Binomial(family.ground_size(), family.rank());
  // m = r with a single cycle leaves no bases at all; the explicit matroid
  // cannot be built, so count directly.
  out.bases = NonCircuitSubsets(family).empty() ? 0 : ExactCount(BasesFromCircuits(family));
  out.complement = out.total_subsets - out.bases;
  out.holds = out.cycles == out.complement;
  return out;
}

CorrelationReport MakeCorrelationReport(uint64_t n_ef, uint64_t n_e_not_f, uint64_t n_not_e_f,
                                        uint64_t n_neither) {
  CorrelationReport report;
  report.n_ef = n_ef;
  report.n_e_not_f = n_e_not_f;
  report.n_not_e_f = n_not_e_f;
  report.n_neither = n_neither;
  report.lhs = BigInt(n_ef) * n_neither;
  report.rhs = BigInt(n_e_not_f) * n_not_e_f;
  report.negatively_correlated = report.lhs <= report.rhs;
  if (report.rhs != 0) report.ratio = Rational(report.lhs, report.rhs);
  return report;
}

CorrelationReport Correlation(const ExplicitMatroid& m, int e, int f) {
  CheckPair(m, e, f);
  if (IsLoop(m, f)) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "correlation conditions on " + std::to_string(f) + ", which is a loop",
                       m.LabelOf(f));
  }
  uint64_t counts[2][2] = {{0, 0}, {0, 0}};
  for (SubsetMask b : m.bases()) ++counts[b.contains(e)][b.contains(f)];
  return MakeCorrelationReport(counts[1][1], counts[1][0], counts[0][1], counts[0][0]);
}

bool ExchangeDegreeBounds(const ExplicitMatroid& m, int e, int f) {
  CheckPair(m, e, f);
  const int up = m.ground_size() - m.rank() - 1;
  const int down = m.rank() - 1;
  for (SubsetMask x : m.bases()) {
    // neighbours[has e][has f]
    int neighbours[2][2] = {{0, 0}, {0, 0}};
    ForEachExchange(x, m.ground(), [&](SubsetMask y) {
      if (m.IsBasis(y)) ++neighbours[y.contains(e)][y.contains(f)];
    });
    const bool has_e = x.contains(e);
    const bool has_f = x.contains(f);
    if (has_e && has_f && neighbours[1][0] < up) return false;
    if (has_e && !has_f && neighbours[1][1] > down) return false;
    if (!has_e && !has_f && neighbours[0][1] < down) return false;
    if (!has_e && has_f && neighbours[0][0] > up) return false;
  }
  return true;
}

ClassSizeBounds ClassSizeInequalities(const ExplicitMatroid& m, int e, int f) {
  CheckPair(m, e, f);
  uint64_t counts[2][2] = {{0, 0}, {0, 0}};
  for (SubsetMask b : m.bases()) ++counts[b.contains(e)][b.contains(f)];
  const BigInt up = m.ground_size() - m.rank() - 1;
  const BigInt down = m.rank() - 1;
  ClassSizeBounds out;
  out.sparse_inequality = up * counts[1][1] <= down * counts[1][0];
  out.paving_inequality = down * counts[0][0] <= up * counts[0][1];
  return out;
}

namespace {

// Negative correlation over one minor's bases (in the parent's indices).
// Returns the first positively correlated pair among `live` elements.
std::optional<std::pair<int, int>> FirstPositivePair(std::span<const SubsetMask> bases,
                                                     SubsetMask live, int ground_size,
                                                     CorrelationReport* report) {
  std::vector<uint64_t> single(ground_size, 0);
  std::vector<uint64_t> pair(static_cast<std::size_t>(ground_size) * ground_size, 0);
  std::vector<int> members;
  for (SubsetMask b : bases) {
    members.clear();
    b.ForEach([&](int x) { members.push_back(x); });
    for (std::size_t i = 0; i < members.size(); ++i) {
      ++single[members[i]];
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        ++pair[members[i] * ground_size + members[j]];
      }
    }
  }
  const uint64_t total = bases.size();
  std::optional<std::pair<int, int>> found;
  live.ForEach([&](int e) {
    live.ForEach([&](int f) {
      // Loops are either skipped (f) or trivially fine (e); the product
      // test is symmetric, so unordered pairs suffice.
      if (found || f <= e || single[e] == 0 || single[f] == 0) return;
      const uint64_t both = pair[e * ground_size + f];
      const uint64_t e_only = single[e] - both;
      const uint64_t f_only = single[f] - both;
      const uint64_t neither = total - single[e] - single[f] + both;
      using Wide = unsigned __int128;
      if (Wide{both} * neither > Wide{e_only} * f_only) {
        found = std::make_pair(e, f);
        *report = MakeCorrelationReport(both, e_only, f_only, neither);
      }
    });
  });
  return found;
}

// 3^n, saturating at UINT64_MAX.
uint64_t PowerOfThree(int n) {
  uint64_t out = 1;
  for (int i = 0; i < n; ++i) {
    if (out > UINT64_MAX / 3) return UINT64_MAX;
    out *= 3;
  }
  return out;
}

}  // namespace

BalanceResult IsBalanced(const ExplicitMatroid& m, uint64_t minor_limit) {
  const int n = m.ground_size();
  BalanceResult result;
  auto check = [&](const MinorSpec& spec) -> bool {
    const std::vector<SubsetMask> bases = MinorBases(m, spec);
    if (bases.empty()) return true;
    ++result.minors_checked;
    CorrelationReport report;
    const SubsetMask live = m.ground() - spec.deleted - spec.contracted;
    if (auto pair = FirstPositivePair(bases, live, n, &report)) {
      result.balanced = false;
      result.violation = BalanceViolation{spec, pair->first, pair->second, std::move(report)};
      return false;
    }
    return true;
  };

  const uint64_t minors = PowerOfThree(n);
  if (minors > minor_limit) {
    if (!check(MinorSpec{})) return result;
    throw MatroidError(ErrorCode::kBudgetExceeded,
                       "refused: too large: 3^" + std::to_string(n) +
                           " minors exceed the limit of " + std::to_string(minor_limit));
  }
  for (int removed_count = 0; removed_count <= n; ++removed_count) {
    bool stop = false;
    ForEachSubsetOfSize(n, removed_count, [&](SubsetMask removed) {
      if (stop) return;
      for (uint64_t packed = 0; packed < (uint64_t{1} << removed_count); ++packed) {
        const SubsetMask deleted = Deposit(packed, removed);
        if (!check(MinorSpec{deleted, removed - deleted})) {
          stop = true;
          return;
        }
      }
    });
    if (stop) break;
  }
  return result;
}

bool DyerDensityBound(const ExplicitMatroid& m) {
  const BigInt ground = m.ground_size();
  const BigInt twice_square = 2 * ground * ground;
  return BigInt(m.size()) * twice_square >=
         (twice_square - (ground - m.rank())) * Binomial(m.ground_size(), m.rank());
}

}  // namespace paving
