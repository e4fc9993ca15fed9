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

// Paving matroids described by their r-element circuits, and the
// negative-correlation machinery used to test balance.
//
// A paving matroid of rank r is determined by the family C of its
// r-element circuits: every r-subset of the ground set is either a basis or
// a member of C. A family defines a paving matroid iff whenever two members
// differ in exactly two elements, every r-subset of their union is also a
// member. It is sparse when no two members differ in only two elements.

#ifndef PAVING_PAVING_H_
#define PAVING_PAVING_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "paving/matroid.h"
#include "paving/matroid_io.h"
#include "paving/numeric.h"
#include "paving/subset_mask.h"

namespace paving {

// An r-uniform family of subsets of {0..m-1}. Duplicates collapse.
class CircuitFamily {
 public:
  CircuitFamily(int ground_size, int rank, std::vector<SubsetMask> circuits);

  int ground_size() const { return ground_size_; }
  int rank() const { return rank_; }
  std::span<const SubsetMask> circuits() const { return circuits_; }
  std::size_t size() const { return circuits_.size(); }
  bool Contains(SubsetMask s) const;

 private:
  int ground_size_;
  int rank_;
  std::vector<SubsetMask> circuits_;  // sorted
};

bool ValidatePaving(const CircuitFamily& family);
bool ValidateSparse(const CircuitFamily& family);

// All r-subsets outside the family, sorted. May be empty (e.g. m = r with
// the whole ground set as a circuit).
std::vector<SubsetMask> NonCircuitSubsets(const CircuitFamily& family);

// The paving matroid defined by `family`. Throws kNotPaving when the family
// fails ValidatePaving, and kInvalidArgument when every r-subset is a
// circuit.
ExplicitMatroid BasesFromCircuits(const CircuitFamily& family);

// r-circuits of M \ e (those avoiding e), re-indexed.
CircuitFamily DeletionFamily(const CircuitFamily& family, int e);
// (r-1)-circuits of M / e: {C \ e : e in C}, re-indexed.
CircuitFamily ContractionFamily(const CircuitFamily& family, int e);
// Both of the above for a whole MinorSpec, in the family's own indices
// re-indexed to the surviving elements.
CircuitFamily MinorFamily(const CircuitFamily& family, const MinorSpec& spec);

// Greedy packing: draws `attempts` random r-subsets and keeps each one whose
// symmetric difference with every kept set exceeds two, stopping at
// `max_circuits`. Deterministic in `seed`.
CircuitFamily RandomSparseFamily(int ground_size, int rank, int max_circuits,
                                 int attempts, uint64_t seed);

// Edge sets of all Hamiltonian cycles of `graph`. The ground set is the
// edge list in input order and the rank is the vertex count. Rejects graphs
// with fewer than three vertices.
CircuitFamily FromHamiltonianCycles(const SimpleGraph& graph);

struct HamiltonianIdentity {
  uint64_t cycles = 0;              // |C_r|, by exhaustive search
  uint64_t total_subsets = 0;       // C(m, r)
  uint64_t bases = 0;               // exact basis count
  uint64_t complement = 0;          // C(m, r) - bases
  bool holds = false;               // cycles == complement
};
HamiltonianIdentity HamiltonianCountIdentity(const SimpleGraph& graph);

// Four-way split of the bases by membership of e and f.
struct CorrelationReport {
  uint64_t n_ef = 0;
  uint64_t n_e_not_f = 0;
  uint64_t n_not_e_f = 0;
  uint64_t n_neither = 0;
  BigInt lhs;  // n_ef * n_neither
  BigInt rhs;  // n_e_not_f * n_not_e_f
  // lhs <= rhs, equivalently Pr(e | f) <= Pr(e).
  bool negatively_correlated = false;
  // lhs / rhs, absent when rhs = 0.
  std::optional<Rational> ratio;

  uint64_t total() const { return n_ef + n_e_not_f + n_not_e_f + n_neither; }
};

CorrelationReport MakeCorrelationReport(uint64_t n_ef, uint64_t n_e_not_f,
                                        uint64_t n_not_e_f, uint64_t n_neither);

// Rejects e == f and a loop f.
CorrelationReport Correlation(const ExplicitMatroid& m, int e, int f);

// Exchange-graph degree bounds between the four classes, checked basis by
// basis:
//   X in B_ef       has >= m-r-1 neighbours in B_e~f,
//   X in B_e~f      has <= r-1   neighbours in B_ef,
//   X in B_~e~f     has >= r-1   neighbours in B_~ef,
//   X in B_~ef      has <= m-r-1 neighbours in B_~e~f.
// The lower bounds rely on sparseness.
bool ExchangeDegreeBounds(const ExplicitMatroid& m, int e, int f);

struct ClassSizeBounds {
  bool sparse_inequality = false;  // (m-r-1)|B_ef| <= (r-1)|B_e~f|
  bool paving_inequality = false;  // (r-1)|B_~e~f| <= (m-r-1)|B_~ef|
};
ClassSizeBounds ClassSizeInequalities(const ExplicitMatroid& m, int e, int f);

// A positively correlated pair in some minor. `minor` and the pair are in
// the indices of the matroid passed to IsBalanced.
struct BalanceViolation {
  MinorSpec minor;
  int e = 0;
  int f = 0;
  CorrelationReport report;
};

struct BalanceResult {
  bool balanced = true;
  std::optional<BalanceViolation> violation;
  uint64_t minors_checked = 0;
};

// Checks negative correlation on every minor. Minors are the disjoint
// (deleted, contracted) pairs, 3^m of them, visited by total size then
// numerically; pairs with e < f; pairs whose f is a loop of the minor are
// skipped, as are pairs that would need a loop contraction or coloop
// deletion. The first failure is returned.
//
// When 3^m exceeds `minor_limit` only M itself is examined: a violation
// there is reported, otherwise kBudgetExceeded is thrown.
BalanceResult IsBalanced(const ExplicitMatroid& m, uint64_t minor_limit);

// |B| >= (1 - (m-r)/(2m^2)) C(m, r), exactly.
bool DyerDensityBound(const ExplicitMatroid& m);

}  // namespace paving

#endif  // PAVING_PAVING_H_
