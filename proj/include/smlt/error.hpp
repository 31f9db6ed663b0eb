// Copyright 2026 The smlt Authors
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

#ifndef SMLT_ERROR_HPP
#define SMLT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace smlt {

// Error categories map onto the CLI exit-code contract:
// validation/precondition failures -> 2, resource ceilings -> 3, I/O and
// schema problems -> 4.
enum class ErrorCategory { kValidation, kCeiling, kIo };

class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message,
        ErrorCategory category = ErrorCategory::kValidation)
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        category_(category) {}

  const std::string& code() const { return code_; }
  ErrorCategory category() const { return category_; }

 private:
  std::string code_;
  ErrorCategory category_;
};

inline Error validation_error(std::string code, const std::string& message) {
  return Error(std::move(code), message, ErrorCategory::kValidation);
}

inline Error ceiling_error(std::string code, const std::string& message) {
  return Error(std::move(code), message, ErrorCategory::kCeiling);
}

inline Error io_error(std::string code, const std::string& message) {
  return Error(std::move(code), message, ErrorCategory::kIo);
}

}  // namespace smlt

#endif  // SMLT_ERROR_HPP
