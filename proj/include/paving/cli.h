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

#ifndef PAVING_CLI_H_
#define PAVING_CLI_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "paving/steiner.h"

namespace paving {

// Runs the `paving` command line. `args` excludes the program name. Reports
// go to `out`; warnings and the single `ERROR: ...` line of a failed run go
// to `err`. Returns the process exit code.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// FNV-1a over the canonical text of the blocks, as stored in cache files.
uint64_t SteinerChecksum(const SteinerSystem& system);

// Cache file contents: the set-list text with a checksum comment.
std::string FormatSteinerFile(const SteinerSystem& system);

// Loads the system from `path`, building and writing it when the file is
// missing or its checksum comment disagrees with its contents. Anything
// actually loaded, with or without a checksum comment, must pass
// VerifySteiner; a failure throws kVerification naming the violated
// invariant. An empty path skips caching.
SteinerSystem LoadSteinerSystem(const std::filesystem::path& path, std::ostream& err);

}  // namespace paving

#endif  // PAVING_CLI_H_
