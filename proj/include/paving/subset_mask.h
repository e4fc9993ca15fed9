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

#ifndef PAVING_SUBSET_MASK_H_
#define PAVING_SUBSET_MASK_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace paving {

// Ground sets are capped at one machine word.
inline constexpr int kMaxGroundSize = 64;

// A subset of the ground set {0, ..., m-1}, element i stored in bit i.
class SubsetMask {
 public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(uint64_t bits) : bits_(bits) {}

  static SubsetMask FromIndices(std::initializer_list<int> indices);
  static SubsetMask FromIndices(std::span<const int> indices);

  // {0, ..., m-1}.
  static constexpr SubsetMask Full(int m) {
    return SubsetMask(m >= 64 ? ~uint64_t{0} : (uint64_t{1} << m) - 1);
  }
  static constexpr SubsetMask Singleton(int e) {
    return SubsetMask(uint64_t{1} << e);
  }

  constexpr uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int e) const { return (bits_ >> e) & 1; }

  constexpr bool IsSubsetOf(SubsetMask other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool Intersects(SubsetMask other) const {
    return (bits_ & other.bits_) != 0;
  }
  // True iff no element >= m is present.
  constexpr bool FitsIn(int m) const { return IsSubsetOf(Full(m)); }

  constexpr SubsetMask With(int e) const {
    return SubsetMask(bits_ | (uint64_t{1} << e));
  }
  constexpr SubsetMask Without(int e) const {
    return SubsetMask(bits_ & ~(uint64_t{1} << e));
  }
  // X u {in} \ {out}.
  constexpr SubsetMask Exchange(int out, int in) const {
    return Without(out).With(in);
  }

  // Smallest element, or -1 for the empty set.
  constexpr int Min() const {
    return bits_ == 0 ? -1 : std::countr_zero(bits_);
  }

  std::vector<int> Elements() const;
  // "{0,3,5}"
  std::string ToString() const;
  // "0 3 5"
  std::string ToIndexList() const;

  template <typename F>
  void ForEach(F&& f) const {
    for (uint64_t rest = bits_; rest != 0; rest &= rest - 1) {
      f(std::countr_zero(rest));
    }
  }

  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ | b.bits_);
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & b.bits_);
  }
  friend constexpr SubsetMask operator^(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ ^ b.bits_);
  }
  // Set difference.
  friend constexpr SubsetMask operator-(SubsetMask a, SubsetMask b) {
    return SubsetMask(a.bits_ & ~b.bits_);
  }
  friend constexpr bool operator==(SubsetMask, SubsetMask) = default;
  // Numeric order on the underlying word; used for sorted storage.
  friend constexpr std::strong_ordering operator<=>(SubsetMask a,
                                                    SubsetMask b) {
    return a.bits_ <=> b.bits_;
  }

 private:
  uint64_t bits_ = 0;
};

// Lexicographic order on the sorted element lists, e.g. {0,3} < {1,2}.
constexpr bool LexLess(SubsetMask a, SubsetMask b) {
  const uint64_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  const uint64_t lowest = diff & (~diff + 1);
  const uint64_t at_or_above = ~(lowest - 1);
  // Below `lowest` the lists agree. The side holding `lowest` is smaller
  // unless the other list has already ended (a proper prefix).
  if (a.bits() & lowest) return (b.bits() & at_or_above) != 0;
  return (a.bits() & at_or_above) == 0;
}

// Drops element e and shifts every larger element down by one.
constexpr SubsetMask RemoveIndex(SubsetMask s, int e) {
  const uint64_t low = s.bits() & ((uint64_t{1} << e) - 1);
  const uint64_t high = e >= 63 ? 0 : (s.bits() >> (e + 1)) << e;
  return SubsetMask(low | high);
}

// Places bit i of `packed` at the i-th smallest element of `ground`.
SubsetMask Deposit(uint64_t packed, SubsetMask ground);

// C(n, k) for 0 <= n <= 64; zero when k is out of range.
uint64_t Binomial(int n, int k);

// Calls f(SubsetMask) for every k-subset of {0, ..., m-1} in increasing
// numeric order.
template <typename F>
void ForEachSubsetOfSize(int m, int k, F&& f) {
  if (k < 0 || k > m) return;
  if (k == 0) {
    f(SubsetMask());
    return;
  }
  using Wide = unsigned __int128;
  const Wide limit = Wide{1} << m;
  Wide s = (Wide{1} << k) - 1;
  while (s < limit) {
    f(SubsetMask(static_cast<uint64_t>(s)));
    // Gosper's hack.
    const Wide c = s & (~s + 1);
    const Wide r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

// Calls f(SubsetMask) for every k-subset of `ground`.
template <typename F>
void ForEachSubsetOfSize(SubsetMask ground, int k, F&& f) {
  ForEachSubsetOfSize(ground.size(), k,
                      [&](SubsetMask packed) { f(Deposit(packed.bits(), ground)); });
}

}  // namespace paving

#endif  // PAVING_SUBSET_MASK_H_
