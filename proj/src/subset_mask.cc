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

#include "paving/subset_mask.h"

#include <string>
#include <vector>

namespace paving {

SubsetMask SubsetMask::FromIndices(std::initializer_list<int> indices) {
  return FromIndices(std::span<const int>(indices.begin(), indices.size()));
}

SubsetMask SubsetMask::FromIndices(std::span<const int> indices) {
  uint64_t bits = 0;
  for (int i : indices) bits |= uint64_t{1} << i;
  return SubsetMask(bits);
}

std::vector<int> SubsetMask::Elements() const {
  std::vector<int> out;
  out.reserve(size());
  ForEach([&](int e) { out.push_back(e); });
  return out;
}

std::string SubsetMask::ToString() const {
  std::string out = "{";
  bool first = true;
  ForEach([&](int e) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  });
  out += '}';
  return out;
}

std::string SubsetMask::ToIndexList() const {
  std::string out;
  ForEach([&](int e) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e);
  });
  return out;
}

SubsetMask Deposit(uint64_t packed, SubsetMask ground) {
  uint64_t out = 0;
  uint64_t rest = ground.bits();
  for (; packed != 0 && rest != 0; packed >>= 1, rest &= rest - 1) {
    if (packed & 1) out |= rest & (~rest + 1);
  }
  return SubsetMask(out);
}

uint64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<uint64_t>(result);
}

}  // namespace paving
