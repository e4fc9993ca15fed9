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

#ifndef PAVING_NUMERIC_H_
#define PAVING_NUMERIC_H_

#include <cstdint>
#include <random>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace paving {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q" in lowest terms; integers print as "n/1".
std::string FormatRational(const Rational& value);

double ToDouble(const Rational& value);

// The library's pseudo-random engine. Seeds are 64-bit; independent streams
// are derived from (seed, stream) pairs so chains can be split
// reproducibly.
using Rng = std::mt19937_64;

Rng MakeRng(uint64_t seed, uint64_t stream = 0);

// Child seed for stream `stream` of `seed`.
uint64_t DeriveSeed(uint64_t seed, uint64_t stream);

}  // namespace paving

#endif  // PAVING_NUMERIC_H_
