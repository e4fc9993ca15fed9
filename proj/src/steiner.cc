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

#include "paving/steiner.h"

#include <algorithm>
#include <bit>
#include <string>
#include <type_traits>
#include <unordered_map>
#include <utility>
#include <vector>

#include "paving/error.h"

namespace paving {
namespace {

// x^11 + x^10 + x^6 + x^5 + x^4 + x^2 + 1, generator of the cyclic [23,12]
// Golay code.
constexpr uint64_t kGolayGenerator = 0xC75;
constexpr int kGolayLength = 23;

void CheckPoints(int e, int f) {
  for (int x : {e, f}) {
    if (x < 0 || x >= kSteinerPoints) {
      throw MatroidError(ErrorCode::kOutOfRange,
                         "point " + std::to_string(x) + " outside 0..23");
    }
  }
  if (e == f) {
    throw MatroidError(ErrorCode::kInvalidArgument, "distinguished points must differ");
  }
}

}  // namespace

SteinerSystem BuildSteinerSystem() {
  std::array<uint64_t, 12> rows{};
  for (int i = 0; i < 12; ++i) {
    const uint64_t word = kGolayGenerator << i;
    rows[i] = word | (static_cast<uint64_t>(std::popcount(word) & 1) << kGolayLength);
  }
  SteinerSystem system;
  uint64_t codeword = 0;
  // Gray-code walk over all 2^12 messages.
  for (uint32_t i = 1; i < (1u << 12); ++i) {
    codeword ^= rows[std::countr_zero(i)];
    if (std::popcount(codeword) == kSteinerBlockSize) system.blocks.emplace_back(codeword);
  }
  std::sort(system.blocks.begin(), system.blocks.end());
  if (const SteinerDefect defect = FindSteinerDefect(system); defect != SteinerDefect::kNone) {
    throw MatroidError(ErrorCode::kVerification,
                       "constructed octads fail: " + std::string(SteinerDefectName(defect)));
  }
  return system;
}

std::string_view SteinerDefectName(SteinerDefect defect) {
  switch (defect) {
    case SteinerDefect::kNone:
      return "none";
    case SteinerDefect::kBlockCount:
      return "block_count";
    case SteinerDefect::kBlockShape:
      return "block_shape";
    case SteinerDefect::kFiveSetCoverage:
      return "five_set_coverage";
    case SteinerDefect::kBlockIntersection:
      return "block_intersection";
  }
  return "?";
}

SteinerDefect FindSteinerDefect(const SteinerSystem& system) {
  if (system.blocks.size() != kSteinerBlockCount) return SteinerDefect::kBlockCount;
  for (SubsetMask block : system.blocks) {
    if (!block.FitsIn(kSteinerPoints) || block.size() != kSteinerBlockSize) {
      return SteinerDefect::kBlockShape;
    }
  }
  std::unordered_map<uint64_t, int> cover;
  cover.reserve(Binomial(kSteinerPoints, 5));
  for (SubsetMask block : system.blocks) {
    ForEachSubsetOfSize(block, 5, [&](SubsetMask five) { ++cover[five.bits()]; });
  }
  bool covered = true;
  ForEachSubsetOfSize(kSteinerPoints, 5, [&](SubsetMask five) {
    if (!covered) return;
    auto it = cover.find(five.bits());
    if (it == cover.end() || it->second != 1) covered = false;
  });
  if (!covered) return SteinerDefect::kFiveSetCoverage;
  for (std::size_t i = 0; i < system.blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < system.blocks.size(); ++j) {
      if ((system.blocks[i] & system.blocks[j]).size() > 4) {
        return SteinerDefect::kBlockIntersection;
      }
    }
  }
  return SteinerDefect::kNone;
}

BlockCounts CountBlocks(const SteinerSystem& system, int e, int f) {
  CheckPoints(e, f);
  BlockCounts out;
  for (SubsetMask block : system.blocks) {
    if (!block.contains(e)) continue;
    ++out.with_e;
    if (block.contains(f)) {
      ++out.with_both;
    } else {
      ++out.with_e_not_f;
    }
  }
  return out;
}

Counterexample BuildCounterexample(const SteinerSystem& system, int e, int f) {
  CheckPoints(e, f);
  std::vector<SubsetMask> circuits;
  for (SubsetMask block : system.blocks) {
    if (block.contains(e) == block.contains(f)) continue;
    ForEachSubsetOfSize(block, 6, [&](SubsetMask six) { circuits.push_back(six); });
  }
  std::sort(circuits.begin(), circuits.end());
  const auto unique_end = std::unique(circuits.begin(), circuits.end());
  const auto collisions = static_cast<uint64_t>(circuits.end() - unique_end);
  circuits.erase(unique_end, circuits.end());
  return Counterexample{CircuitFamily(kSteinerPoints, 6, std::move(circuits)), collisions};
}

CircuitCounts CountCircuits(const CircuitFamily& family, int e, int f) {
  CircuitCounts out;
  for (SubsetMask c : family.circuits()) {
    const bool has_e = c.contains(e);
    const bool has_f = c.contains(f);
    if (has_e && has_f) {
      ++out.with_both;
    } else if (has_e) {
      ++out.with_e_only;
    } else if (has_f) {
      ++out.with_f_only;
    } else {
      ++out.with_neither;
    }
  }
  return out;
}

CounterexampleReport VerifyCounterexample(const SteinerSystem& system, int e, int f) {
  CheckPoints(e, f);
  const Counterexample built = BuildCounterexample(system, e, f);
  CounterexampleReport report;
  report.e = e;
  report.f = f;
  report.blocks = CountBlocks(system, e, f);
  report.circuits = CountCircuits(built.family, e, f);
  report.collisions = built.collisions;
  report.paving = ValidatePaving(built.family);
  report.sparse = ValidateSparse(built.family);

  uint64_t counts[2][2] = {{0, 0}, {0, 0}};
  ForEachSubsetOfSize(kSteinerPoints, 6, [&](SubsetMask six) {
    if (!built.family.Contains(six)) ++counts[six.contains(e)][six.contains(f)];
  });
  report.n_ef = counts[1][1];
  report.n_e_not_f = counts[1][0];
  report.n_not_e_f = counts[0][1];
  report.n_neither = counts[0][0];
  const BigInt rhs = BigInt(report.n_e_not_f) * report.n_not_e_f;
  if (rhs != 0) report.ratio = Rational(BigInt(report.n_ef) * report.n_neither, rhs);
  return report;
}

std::vector<std::string> CounterexampleMismatches(const CounterexampleReport& report) {
  std::vector<std::string> out;
  auto expect = [&](const char* name, const auto& got, const auto& want) {
    if (got != want) {
      std::string got_text, want_text;
      using Value = std::decay_t<decltype(got)>;
      if constexpr (std::is_same_v<Value, Rational>) {
        got_text = FormatRational(got);
        want_text = FormatRational(want);
      } else if constexpr (std::is_same_v<Value, bool>) {
        got_text = got ? "true" : "false";
        want_text = want ? "true" : "false";
      } else {
        got_text = std::to_string(got);
        want_text = std::to_string(want);
      }
      out.push_back(std::string(name) + "=" + got_text + " expected=" + want_text);
    }
  };
  expect("blocks_with_e", report.blocks.with_e, uint64_t{253});
  expect("blocks_with_ef", report.blocks.with_both, uint64_t{77});
  expect("blocks_with_e_not_f", report.blocks.with_e_not_f, uint64_t{176});
  expect("circuit_collisions", report.collisions, uint64_t{0});
  expect("circuits_with_e_only", report.circuits.with_e_only, uint64_t{3696});
  expect("circuits_with_f_only", report.circuits.with_f_only, uint64_t{3696});
  expect("circuits_with_neither", report.circuits.with_neither, uint64_t{2464});
  expect("circuits_with_both", report.circuits.with_both, uint64_t{0});
  expect("paving", report.paving, true);
  expect("sparse", report.sparse, false);
  expect("n_ef", report.n_ef, uint64_t{7315});
  expect("n_e_not_f", report.n_e_not_f, uint64_t{22638});
  expect("n_not_e_f", report.n_not_e_f, uint64_t{22638});
  expect("n_neither", report.n_neither, uint64_t{72149});
  expect("ratio", report.ratio, Rational(89015, 86436));
  expect("positively_correlated", report.positively_correlated(), true);
  return out;
}

ExplicitMatroid CounterexampleMatroid(const SteinerSystem& system, int e, int f) {
  return BasesFromCircuits(BuildCounterexample(system, e, f).family);
}

}  // namespace paving
