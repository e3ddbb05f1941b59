// Copyright 2026 The qimf Authors
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

#ifndef QIMF_ERROR_H
#define QIMF_ERROR_H

#include <stdexcept>
#include <string>

namespace qimf {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kOutOfRange,
  kUnnormalizable,
  kEmptyTarget,
  kLambdaBelowFloor,
  kIo,
  kFormat,
};

/// Every failure raised by the library carries a code so the CLI can map it
/// onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qimf

#endif  // QIMF_ERROR_H
