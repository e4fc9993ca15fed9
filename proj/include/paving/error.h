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

#ifndef PAVING_ERROR_H_
#define PAVING_ERROR_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace paving {

enum class ErrorCode {
  kInvalidArgument,
  kOutOfRange,
  kColoopDeletion,
  kLoopContraction,
  kNotPaving,
  kBudgetExceeded,
  kParse,
  kIo,
  kVerification,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. `element()` carries the offending
// ground-set element (in original labels) when one exists.
class MatroidError : public std::runtime_error {
 public:
  MatroidError(ErrorCode code, const std::string& message,
               std::optional<int> element = std::nullopt)
      : std::runtime_error(message), code_(code), element_(element) {}

  ErrorCode code() const { return code_; }
  std::optional<int> element() const { return element_; }

 private:
  ErrorCode code_;
  std::optional<int> element_;
};

}  // namespace paving

#endif  // PAVING_ERROR_H_
