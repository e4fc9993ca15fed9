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

#ifndef PAVING_MATROID_H_
#define PAVING_MATROID_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "paving/subset_mask.h"

namespace paving {

// A matroid given by its full list of bases.
//
// Bases are stored as a sorted, duplicate-free array of masks. Matroids with
// more than kHashIndexThreshold bases additionally carry a hash index for
// membership queries. The exchange axiom is not assumed: callers check it
// with VerifyExchangeAxiom, and the minor operations apply their set
// formulas mechanically to any family of equal-size sets.
//
// Every element carries a label, its index in the matroid the minor chain
// started from, so that results on minors can be reported in the parent's
// terms.
class ExplicitMatroid {
 public:
  static constexpr std::size_t kHashIndexThreshold = 100'000;

  // Labels default to the identity.
  ExplicitMatroid(int ground_size, int rank, std::vector<SubsetMask> bases);
  ExplicitMatroid(int ground_size, int rank, std::vector<SubsetMask> bases,
                  std::vector<int> labels);

  int ground_size() const { return ground_size_; }
  int rank() const { return rank_; }
  SubsetMask ground() const { return SubsetMask::Full(ground_size_); }
  std::span<const SubsetMask> bases() const { return bases_; }
  std::size_t size() const { return bases_.size(); }

  // labels()[i] is the original label of current element i.
  std::span<const int> labels() const { return labels_; }
  int LabelOf(int element) const { return labels_[element]; }
  std::optional<int> IndexOfLabel(int label) const;

  bool IsBasis(SubsetMask s) const;
  // Position of `s` in bases(), if it is a basis.
  std::optional<std::size_t> IndexOf(SubsetMask s) const;

 private:
  int ground_size_;
  int rank_;
  std::vector<SubsetMask> bases_;
  std::vector<int> labels_;
  std::shared_ptr<const std::unordered_set<uint64_t>> hash_index_;
};

// Elements to delete and to contract, in the current indices of the matroid
// the spec is applied to.
struct MinorSpec {
  SubsetMask deleted;
  SubsetMask contracted;

  // Throws kInvalidArgument unless the sets are disjoint and fit in m.
  void Validate(int ground_size) const;
  bool empty() const { return deleted.empty() && contracted.empty(); }
};

// True iff for all bases X, Y and every e in X some f in Y makes
// X u {f} \ {e} a basis. f = e is allowed when e lies in Y.
bool VerifyExchangeAxiom(const ExplicitMatroid& m);

// A failing (X, Y, e) triple, if any.
struct ExchangeViolation {
  SubsetMask x;
  SubsetMask y;
  int element;
};
std::optional<ExchangeViolation> FindExchangeViolation(const ExplicitMatroid& m);

// Checks the exchange axiom on `pairs` basis pairs drawn uniformly with the
// given seed. Intended for matroids too large for the quadratic check.
bool VerifyExchangeAxiomSampled(const ExplicitMatroid& m, uint64_t pairs,
                                uint64_t seed);

// Element e lies in no basis.
bool IsLoop(const ExplicitMatroid& m, int e);
// Element e lies in every basis.
bool IsColoop(const ExplicitMatroid& m, int e);

// M \ e: bases avoiding e, re-indexed to m-1 elements. Rejects coloops with
// kColoopDeletion.
ExplicitMatroid Delete(const ExplicitMatroid& m, int e);

// M / e: {X \ e : e in X in B}, rank r-1, re-indexed. Rejects loops with
// kLoopContraction.
ExplicitMatroid Contract(const ExplicitMatroid& m, int e);

// Deletes spec.deleted and contracts spec.contracted. The result does not
// depend on the order of the individual steps; elements are processed from
// the highest index down so lower indices stay put.
ExplicitMatroid ApplyMinor(const ExplicitMatroid& m, const MinorSpec& spec);

// Basis set of M \ deleted / contracted via the set formula, in M's indices
// (no re-indexing). Empty exactly when some step of ApplyMinor would be
// rejected.
std::vector<SubsetMask> MinorBases(const ExplicitMatroid& m,
                                   const MinorSpec& spec);

inline uint64_t ExactCount(const ExplicitMatroid& m) { return m.size(); }

// Least basis under LexLess.
SubsetMask LexLeastBasis(const ExplicitMatroid& m);

// All r-subsets of {0..m-1}: the uniform matroid U(r, m).
ExplicitMatroid UniformMatroid(int rank, int ground_size);

}  // namespace paving

#endif  // PAVING_MATROID_H_
