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

#include "paving/matroid_io.h"

#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <system_error>
#include <utility>
#include <vector>

#include "paving/error.h"

namespace paving {
namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

// Non-empty lines with comments stripped, split on whitespace.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view() : text.substr(end + 1);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      std::size_t start = pos;
      while (pos < raw.size() && !std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos > start) line.tokens.push_back(raw.substr(start, pos - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] void ParseFail(int line, const std::string& message) {
  throw MatroidError(ErrorCode::kParse, "line " + std::to_string(line) + ": " + message);
}

int ToInt(std::string_view token, int line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    ParseFail(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

std::string_view SetListKindName(SetListKind kind) {
  switch (kind) {
    case SetListKind::kBases:
      return "bases";
    case SetListKind::kCircuits:
      return "circuits";
    case SetListKind::kBlocks:
      return "blocks";
  }
  return "?";
}

SetList ParseSetList(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.size() < 2) ParseFail(lines.empty() ? 1 : lines[0].number, "missing header");
  SetList out;
  if (lines[0].tokens.size() != 2) ParseFail(lines[0].number, "header must be 'm r'");
  out.ground_size = ToInt(lines[0].tokens[0], lines[0].number);
  out.set_size = ToInt(lines[0].tokens[1], lines[0].number);
  if (out.ground_size < 0 || out.ground_size > kMaxGroundSize) {
    ParseFail(lines[0].number, "ground set size must lie in [0, 64]");
  }
  if (out.set_size < 0 || out.set_size > out.ground_size) {
    ParseFail(lines[0].number, "set size must lie in [0, m]");
  }
  const Line& keyword = lines[1];
  if (keyword.tokens.size() != 1) ParseFail(keyword.number, "expected a single keyword");
  if (keyword.tokens[0] == "bases") {
    out.kind = SetListKind::kBases;
  } else if (keyword.tokens[0] == "circuits") {
    out.kind = SetListKind::kCircuits;
  } else if (keyword.tokens[0] == "blocks") {
    out.kind = SetListKind::kBlocks;
  } else {
    ParseFail(keyword.number, "unknown keyword '" + std::string(keyword.tokens[0]) + "'");
  }
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const Line& line = lines[i];
    uint64_t bits = 0;
    int previous = -1;
    for (std::string_view token : line.tokens) {
      const int e = ToInt(token, line.number);
      if (e <= previous) ParseFail(line.number, "indices must be strictly increasing");
      if (e >= out.ground_size) ParseFail(line.number, "index " + std::to_string(e) + " >= m");
      bits |= uint64_t{1} << e;
      previous = e;
    }
    if (static_cast<int>(line.tokens.size()) != out.set_size) {
      ParseFail(line.number, "set has " + std::to_string(line.tokens.size()) +
                                 " elements, expected " + std::to_string(out.set_size));
    }
    out.sets.emplace_back(bits);
  }
  return out;
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MatroidError(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SetList ReadSetList(const std::filesystem::path& path) {
  return ParseSetList(ReadTextFile(path));
}

std::string FormatSetList(const SetList& list, const std::vector<std::string>& comments) {
  std::string out;
  for (const std::string& c : comments) out += "# " + c + "\n";
  out += std::to_string(list.ground_size) + " " + std::to_string(list.set_size) + "\n";
  out += std::string(SetListKindName(list.kind)) + "\n";
  for (SubsetMask s : list.sets) out += s.ToIndexList() + "\n";
  return out;
}

void WriteSetList(const std::filesystem::path& path, const SetList& list,
                  const std::vector<std::string>& comments) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw MatroidError(ErrorCode::kIo, "cannot write " + path.string());
  out << FormatSetList(list, comments);
  if (!out) throw MatroidError(ErrorCode::kIo, "write failed for " + path.string());
}

void ValidateSimpleGraph(const SimpleGraph& graph) {
  if (graph.vertex_count < 0) {
    throw MatroidError(ErrorCode::kInvalidArgument, "negative vertex count");
  }
  if (graph.edges.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw MatroidError(ErrorCode::kInvalidArgument,
                       "graph has " + std::to_string(graph.edges.size()) +
                           " edges; at most 64 are supported");
  }
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : graph.edges) {
    if (u < 0 || v < 0 || u >= graph.vertex_count || v >= graph.vertex_count) {
      throw MatroidError(ErrorCode::kInvalidArgument,
                         "edge " + std::to_string(u) + "-" + std::to_string(v) +
                             " leaves the vertex range");
    }
    if (u == v) {
      throw MatroidError(ErrorCode::kInvalidArgument, "self-loop at " + std::to_string(u));
    }
    if (!seen.insert(std::minmax(u, v)).second) {
      throw MatroidError(ErrorCode::kInvalidArgument,
                         "repeated edge " + std::to_string(u) + "-" + std::to_string(v));
    }
  }
}

SimpleGraph ParseGraph(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) ParseFail(1, "missing vertex count");
  if (lines[0].tokens.size() != 1) ParseFail(lines[0].number, "expected the vertex count");
  SimpleGraph graph;
  graph.vertex_count = ToInt(lines[0].tokens[0], lines[0].number);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.size() != 2) ParseFail(line.number, "expected 'u v'");
    graph.edges.emplace_back(ToInt(line.tokens[0], line.number),
                             ToInt(line.tokens[1], line.number));
  }
  ValidateSimpleGraph(graph);
  return graph;
}

SimpleGraph ReadGraph(const std::filesystem::path& path) {
  return ParseGraph(ReadTextFile(path));
}

}  // namespace paving
