// Copyright 2026 The zerosum Authors
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

#include "zerosum/error.h"

namespace zerosum {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kParse:
      return "ParseError";
    case ErrorCode::kZeroInverse:
      return "ZeroInverse";
    case ErrorCode::kTooLong:
      return "TooLong";
    case ErrorCode::kEmptySolutionSet:
      return "EmptySolutionSet";
    case ErrorCode::kLengthMismatch:
      return "LengthMismatch";
    case ErrorCode::kPreconditionViolated:
      return "PreconditionViolated";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kUnsupportedLength:
      return "UnsupportedLength";
  }
  return "Unknown";
}

}  // namespace zerosum
