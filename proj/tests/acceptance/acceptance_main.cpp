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


#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "bvrelax/acceptance.hpp"

// Usage: bvrelax_acceptance [A1 A2 ...]. One line per criterion; the exit
// status is the number of failures.
int main(int argc, char** argv) {
  std::vector<std::string> ids(argv + 1, argv + argc);
  if (ids.empty()) ids = bvrelax::criterion_ids();
  std::uint64_t seed = 20240611;
  if (const char* env = std::getenv("BVRELAX_SEED")) seed = std::strtoull(env, nullptr, 10);
  int failures = 0;
  for (const auto& id : ids) {
    bvrelax::CriterionResult r = bvrelax::run_criterion(id, seed);
    std::printf("%s\n", bvrelax::format_line(r).c_str());
    std::fflush(stdout);
    if (!r.pass()) ++failures;
  }
  std::printf("%d passed, %d failed\n", static_cast<int>(ids.size()) - failures, failures);
  return failures;
}
