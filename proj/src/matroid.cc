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

#include "paving/matroid.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "paving/error.h"
#include "paving/numeric.h"

namespace paving {
namespace {

void CheckElement(const ExplicitMatroid& m, int e) {
  if (e < 0 || e >= m.ground_size()) {
    throw MatroidError(ErrorCode::kOutOfRange,
                       "element " + std::to_string(e) + " outside ground set of size " +
                           std::to_string(m.ground_size()));
  }
}

std::vector<int> LabelsWithout(std::span<const int> labels, int e) {
  std::vector<int> out(labels.begin(), labels.end());
  out.erase(out.begin() + e);
  return out;
}

}  // namespace

ExplicitMatroid::ExplicitMatroid(int ground_size, int rank,
                                 std::vector<SubsetMask> bases)
    : ExplicitMatroid(ground_size, rank, std::move(bases), {}) {}

ExplicitMatroid::ExplicitMatroid(int ground_size, int rank,
                                 std::vector<SubsetMask> bases,
                                 std::vector<int> labels)
    : ground_size_(ground_size),
      rank_(rank),
      bases_(std::move(bases)),
      labels_(std::move(labels)) {
  if (ground_size_ < 0 || ground_size_ > kMaxGroundSize) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "ground set size must lie in [0, 64], got " +
                           std::to_string(ground_size_));
  }
  if (rank_ < 0 || rank_ > ground_size_) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "rank " + std::to_string(rank_) + " impossible on " +
                           std::to_string(ground_size_) + " elements");
  }
  if (bases_.empty()) {
    throw MatroidError(ErrorCode::kInvalidArgument, "a matroid needs at least one basis");
  }
  for (SubsetMask b : bases_) {
    if (!b.FitsIn(ground_size_)) {
      throw MatroidError(ErrorCode::kOutOfRange,
                         "basis " + b.ToString() + " leaves the ground set");
    }
    if (b.size() != rank_) {
      throw MatroidError(ErrorCode::kInvalidArgument,
                         "basis " + b.ToString() + " has " + std::to_string(b.size()) +
                             " elements, rank is " + std::to_string(rank_));
    }
  }
  std::sort(bases_.begin(), bases_.end());
  bases_.erase(std::unique(bases_.begin(), bases_.end()), bases_.end());

  if (labels_.empty()) {
    labels_.resize(ground_size_);
    std::iota(labels_.begin(), labels_.end(), 0);
  } else if (static_cast<int>(labels_.size()) != ground_size_) {
    throw MatroidError(ErrorCode::kInvalidArgument, "label map size differs from ground set");
  }

  if (bases_.size() > kHashIndexThreshold) {
    auto index = std::make_shared<std::unordered_set<uint64_t>>();
    index->reserve(bases_.size());
    for (SubsetMask b : bases_) index->insert(b.bits());
    hash_index_ = std::move(index);
  }
}

std::optional<int> ExplicitMatroid::IndexOfLabel(int label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

bool ExplicitMatroid::IsBasis(SubsetMask s) const {
  if (hash_index_) return hash_index_->contains(s.bits());
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

std::optional<std::size_t> ExplicitMatroid::IndexOf(SubsetMask s) const {
  auto it = std::lower_bound(bases_.begin(), bases_.end(), s);
  if (it == bases_.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - bases_.begin());
}

void MinorSpec::Validate(int ground_size) const {
  if (deleted.Intersects(contracted)) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "minor deletes and contracts " + (deleted & contracted).ToString());
  }
  if (!deleted.FitsIn(ground_size) || !contracted.FitsIn(ground_size)) {
    throw MatroidError(ErrorCode::kOutOfRange, "minor touches elements outside the ground set");
  }
}

namespace {

// First e in X with no repairing f in Y.
std::optional<int> FailingExchange(const ExplicitMatroid& m, SubsetMask x, SubsetMask y) {
  std::optional<int> failing;
  x.ForEach([&](int e) {
    if (failing) return;
    bool repaired = false;
    y.ForEach([&](int f) {
      if (!repaired && m.IsBasis(x.Exchange(e, f))) repaired = true;
    });
    if (!repaired) failing = e;
  });
  return failing;
}

}  // namespace

std::optional<ExchangeViolation> FindExchangeViolation(const ExplicitMatroid& m) {
  for (SubsetMask x : m.bases()) {
    for (SubsetMask y : m.bases()) {
      if (auto e = FailingExchange(m, x, y)) return ExchangeViolation{x, y, *e};
    }
  }
  return std::nullopt;
}

bool VerifyExchangeAxiom(const ExplicitMatroid& m) {
  return !FindExchangeViolation(m).has_value();
}

bool VerifyExchangeAxiomSampled(const ExplicitMatroid& m, uint64_t pairs, uint64_t seed) {
  Rng rng = MakeRng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
  for (uint64_t i = 0; i < pairs; ++i) {
    const SubsetMask x = m.bases()[pick(rng)];
    const SubsetMask y = m.bases()[pick(rng)];
    if (FailingExchange(m, x, y)) return false;
  }
  return true;
}

bool IsLoop(const ExplicitMatroid& m, int e) {
  CheckElement(m, e);
  return std::none_of(m.bases().begin(), m.bases().end(),
                      [e](SubsetMask b) { return b.contains(e); });
}

bool IsColoop(const ExplicitMatroid& m, int e) {
  CheckElement(m, e);
  return std::all_of(m.bases().begin(), m.bases().end(),
                     [e](SubsetMask b) { return b.contains(e); });
}

ExplicitMatroid Delete(const ExplicitMatroid& m, int e) {
  CheckElement(m, e);
  std::vector<SubsetMask> bases;
  for (SubsetMask b : m.bases()) {
    if (!b.contains(e)) bases.push_back(RemoveIndex(b, e));
  }
  if (bases.empty()) {
    throw MatroidError(ErrorCode::kColoopDeletion,
                       "cannot delete coloop " + std::to_string(m.LabelOf(e)),
                       m.LabelOf(e));
  }
  return ExplicitMatroid(m.ground_size() - 1, m.rank(), std::move(bases),
                         LabelsWithout(m.labels(), e));
}

ExplicitMatroid Contract(const ExplicitMatroid& m, int e) {
  CheckElement(m, e);
  std::vector<SubsetMask> bases;
  for (SubsetMask b : m.bases()) {
    if (b.contains(e)) bases.push_back(RemoveIndex(b.Without(e), e));
  }
  if (bases.empty()) {
    throw MatroidError(ErrorCode::kLoopContraction,
                       "cannot contract loop " + std::to_string(m.LabelOf(e)),
                       m.LabelOf(e));
  }
  return ExplicitMatroid(m.ground_size() - 1, m.rank() - 1, std::move(bases),
                         LabelsWithout(m.labels(), e));
}

ExplicitMatroid ApplyMinor(const ExplicitMatroid& m, const MinorSpec& spec) {
  spec.Validate(m.ground_size());
  ExplicitMatroid result = m;
  for (int e = m.ground_size() - 1; e >= 0; --e) {
    if (spec.deleted.contains(e)) {
      result = Delete(result, e);
    } else if (spec.contracted.contains(e)) {
      result = Contract(result, e);
    }
  }
  return result;
}

std::vector<SubsetMask> MinorBases(const ExplicitMatroid& m, const MinorSpec& spec) {
  spec.Validate(m.ground_size());
  std::vector<SubsetMask> out;
  for (SubsetMask b : m.bases()) {
    if (spec.contracted.IsSubsetOf(b) && !b.Intersects(spec.deleted)) {
      out.push_back(b - spec.contracted);
    }
  }
  return out;
}

SubsetMask LexLeastBasis(const ExplicitMatroid& m) {
  return *std::min_element(m.bases().begin(), m.bases().end(), LexLess);
}

ExplicitMatroid UniformMatroid(int rank, int ground_size) {
  std::vector<SubsetMask> bases;
  ForEachSubsetOfSize(ground_size, rank, [&](SubsetMask s) { bases.push_back(s); });
  return ExplicitMatroid(ground_size, rank, std::move(bases));
}

}  // namespace paving
