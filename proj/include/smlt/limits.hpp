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

#ifndef SMLT_LIMITS_HPP
#define SMLT_LIMITS_HPP

#include <cstddef>

namespace smlt {

// Resource ceilings for the worst-case-exponential procedures.  Exceeding a
// ceiling raises a kCeiling error instead of hanging.
struct Limits {
  std::size_t max_terms = 1'000'000;   // expansion oracle term ceiling
  std::size_t max_types = 10'000;      // proof-tree-type enumeration ceiling
  std::size_t max_gates = 1'000'000;   // formula duplication ceiling
};

}  // namespace smlt

#endif  // SMLT_LIMITS_HPP
