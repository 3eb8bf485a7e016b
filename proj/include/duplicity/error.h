// Copyright 2026 The Duplicity Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DUPLICITY_ERROR_H_
#define DUPLICITY_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace duplicity {

enum class ErrorKind {
  kInvalidArgument,
  kZeroProbabilitySignal,
  kInconsistentSupport,
  kSpaceTooLarge,
  kNumericalFailure,
  kPreconditionViolated,
  kUnsupportedDimension,
  kNotCredible,
  kEmptyGrid,
  kInvalidParams,
  kDegenerateDenominator,
  kUnknownFigure,
  kParseError,
  kValidationError,
  kIoError,
};

std::string_view ErrorKindName(ErrorKind kind);

// Every failure raised by the library carries one of the kinds above so
// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace duplicity

#endif  // DUPLICITY_ERROR_H_
