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

// The Steiner system S(5,8,24) and a rank-6 paving matroid on its 24 points
// in which two elements are positively correlated.
//
// The blocks (octads) are the supports of the 759 weight-8 codewords of the
// extended binary Golay code. For distinguished points e != f, a 6-set is
// declared a circuit when it lies inside a block meeting {e, f} in exactly
// one point. Blocks share at most four points, so no two circuits from
// different blocks are exchange-adjacent and the family is paving; it is
// not sparse, and e and f end up positively correlated.

#ifndef PAVING_STEINER_H_
#define PAVING_STEINER_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "paving/matroid.h"
#include "paving/numeric.h"
#include "paving/paving.h"
#include "paving/subset_mask.h"

namespace paving {

inline constexpr int kSteinerPoints = 24;
inline constexpr int kSteinerBlockSize = 8;
inline constexpr std::size_t kSteinerBlockCount = 759;

struct SteinerSystem {
  std::vector<SubsetMask> blocks;  // sorted
};

// Enumerates the 4096 codewords spanned by the cyclic shifts of the Golay
// generator polynomial with an overall parity bit appended. Aborts with
// kVerification if the result fails VerifySteiner.
SteinerSystem BuildSteinerSystem();

enum class SteinerDefect {
  kNone,
  kBlockCount,         // not 759 blocks
  kBlockShape,         // a block is not an 8-subset of the 24 points
  kFiveSetCoverage,    // some 5-subset lies in zero or several blocks
  kBlockIntersection,  // two blocks share more than four points
};

std::string_view SteinerDefectName(SteinerDefect defect);

// First violated invariant, checked in the enum's order. The 5-set check
// runs over all C(24,5) = 42504 subsets.
SteinerDefect FindSteinerDefect(const SteinerSystem& system);
inline bool VerifySteiner(const SteinerSystem& system) {
  return FindSteinerDefect(system) == SteinerDefect::kNone;
}

struct BlockCounts {
  uint64_t with_e = 0;         // |V_e|
  uint64_t with_both = 0;      // |V_ef|
  uint64_t with_e_not_f = 0;   // |V_e~f|
};
BlockCounts CountBlocks(const SteinerSystem& system, int e, int f);

struct CircuitCounts {
  uint64_t with_e_only = 0;
  uint64_t with_f_only = 0;
  uint64_t with_neither = 0;
  uint64_t with_both = 0;
  uint64_t total() const { return with_e_only + with_f_only + with_neither + with_both; }
};

struct Counterexample {
  CircuitFamily family;
  // Circuits produced by more than one block; zero for a valid system.
  uint64_t collisions = 0;
};

// All 6-subsets of blocks meeting {e, f} in one point, deduplicated.
Counterexample BuildCounterexample(const SteinerSystem& system, int e, int f);

CircuitCounts CountCircuits(const CircuitFamily& family, int e, int f);

struct CounterexampleReport {
  int e = 0;
  int f = 0;
  uint64_t n_ef = 0;
  uint64_t n_e_not_f = 0;
  uint64_t n_not_e_f = 0;
  uint64_t n_neither = 0;
  Rational ratio;  // n_ef n_~e~f / (n_e~f n_~ef), lowest terms
  BlockCounts blocks;
  CircuitCounts circuits;
  uint64_t collisions = 0;
  bool paving = false;
  bool sparse = false;

  uint64_t bases() const { return n_ef + n_e_not_f + n_not_e_f + n_neither; }
  bool positively_correlated() const { return ratio > 1; }
};

// Classifies all C(24,6) = 134596 six-subsets as circuit or basis and splits
// the bases by membership of e and f.
CounterexampleReport VerifyCounterexample(const SteinerSystem& system, int e, int f);

// Differences between `report` and the published values, first one first;
// empty when everything matches. Each entry reads "name=got expected=want".
std::vector<std::string> CounterexampleMismatches(const CounterexampleReport& report);

// The paving matroid itself, 124740 bases.
ExplicitMatroid CounterexampleMatroid(const SteinerSystem& system, int e, int f);

}  // namespace paving

#endif  // PAVING_STEINER_H_
