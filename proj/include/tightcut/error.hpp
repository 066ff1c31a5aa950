// Copyright 2026 The tightcut Authors
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

#ifndef TIGHTCUT_ERROR_HPP_
#define TIGHTCUT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tightcut {

enum class ErrorCode {
  kLoopRejected,
  kBadVertex,
  kBadShore,
  kGraphMismatch,
  kEvenShore,
  kNotMatchingCovered,
  kTooSmall,
  kTooLarge,
  kTrivialCut,
  kNotTight,
  kEmptySet,
  kBadCertificate,
  kSearchBudgetExceeded,
  kBadSplice,
  kBadParameter,
  kUnknownGraph,
  kNeedExternalCorpus,
  kParseError,
  kInvariantViolation,
};

std::string_view error_code_name(ErrorCode code);

// Every precondition failure in the library surfaces as this exception; the
// code is stable and is what tests and the CLI dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tightcut

#endif  // TIGHTCUT_ERROR_HPP_
