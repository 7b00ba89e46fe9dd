// Copyright 2026 The tricount Authors.
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

#ifndef TRICOUNT_ERROR_HPP_
#define TRICOUNT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace tricount {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kIo,
  kOutOfRange,
  kBudgetExhausted,
  kInvariant,
  kInternal,
};

// All library failures are reported as tricount::Error (or a subclass).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Thrown by QueryOracle once the distinct graph-query cap is reached.
class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(const std::string& message)
      : Error(ErrorCode::kBudgetExhausted, message) {}
};

}  // namespace tricount

#endif  // TRICOUNT_ERROR_HPP_
