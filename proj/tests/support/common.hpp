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

#ifndef SMLT_TESTS_SUPPORT_COMMON_HPP
#define SMLT_TESTS_SUPPORT_COMMON_HPP

#include <string>

#include "smlt/error.hpp"

namespace smlt_tests {

// Runs f and reports the smlt error code it throws, or "" if it does not.
template <typename F>
std::string thrown_code(F&& f) {
  try {
    f();
  } catch (const smlt::Error& e) {
    return e.code();
  } catch (...) {
    return "<not an smlt::Error>";
  }
  return "";
}

}  // namespace smlt_tests

#endif  // SMLT_TESTS_SUPPORT_COMMON_HPP
