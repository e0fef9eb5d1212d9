// Copyright 2026 The bvrelax Authors
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


#ifndef BVRELAX_ACCEPTANCE_HPP_
#define BVRELAX_ACCEPTANCE_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace bvrelax {

struct CriterionResult {
  std::string id;  // "A1" .. "A10"
  std::string title;
  bool correct = false;  // numerical checks only
  double seconds = 0.0;
  double limit_seconds = 0.0;
  std::string detail;
  bool pass() const { return correct && seconds <= limit_seconds; }
};

// ids selects a subset; empty runs all ten in order. Corpora are drawn from
// mt19937_64(seed + index of the criterion).
std::vector<CriterionResult> run_acceptance(const std::vector<std::string>& ids = {},
                                            std::uint64_t seed = 20240611);

CriterionResult run_criterion(const std::string& id, std::uint64_t seed);

const std::vector<std::string>& criterion_ids();

std::string format_line(const CriterionResult& r);

}  // namespace bvrelax

#endif  // BVRELAX_ACCEPTANCE_HPP_
