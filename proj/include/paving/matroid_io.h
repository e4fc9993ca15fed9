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

// Text formats.
//
// Set lists:
//
//   m k
//   bases | circuits | blocks
//   0 1 5
//   ...
//
// one set per line as strictly increasing indices below m, each of size k.
// Graphs: the vertex count on the first line, then one "u v" edge per line.
// In both formats blank lines and everything after '#' are ignored.

#ifndef PAVING_MATROID_IO_H_
#define PAVING_MATROID_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "paving/subset_mask.h"

namespace paving {

enum class SetListKind { kBases, kCircuits, kBlocks };

std::string_view SetListKindName(SetListKind kind);

struct SetList {
  int ground_size = 0;
  int set_size = 0;
  SetListKind kind = SetListKind::kBases;
  std::vector<SubsetMask> sets;
};

// Throws MatroidError(kParse) with a line number on malformed input.
SetList ParseSetList(std::string_view text);
SetList ReadSetList(const std::filesystem::path& path);

// Sets are written in the order given. `comments` become leading '#' lines.
std::string FormatSetList(const SetList& list,
                          const std::vector<std::string>& comments = {});
void WriteSetList(const std::filesystem::path& path, const SetList& list,
                  const std::vector<std::string>& comments = {});

struct SimpleGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

// Rejects vertices out of range, self-loops, repeated edges and more than 64
// edges with kInvalidArgument.
void ValidateSimpleGraph(const SimpleGraph& graph);

// Throws kParse on malformed input, then validates.
SimpleGraph ParseGraph(std::string_view text);
SimpleGraph ReadGraph(const std::filesystem::path& path);

// Reads a whole file; throws kIo.
std::string ReadTextFile(const std::filesystem::path& path);

}  // namespace paving

#endif  // PAVING_MATROID_IO_H_
