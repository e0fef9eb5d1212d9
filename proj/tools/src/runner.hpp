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


#ifndef BVRELAX_TOOLS_RUNNER_HPP_
#define BVRELAX_TOOLS_RUNNER_HPP_

#include <string>
#include <vector>

#include "bvrelax/io.hpp"

namespace bvrelax::tools {

struct Artifact {
  std::string name;  // relative to the output directory
  std::string content;
};

struct RunOutcome {
  bool passed = true;
  std::vector<Artifact> files;  // the JSON summary is last
  std::vector<std::string> log;
};

// Validation throws ConfigError before any computation; nothing touches the
// filesystem.
RunOutcome run_experiment(const ExperimentConfig& config);

}  // namespace bvrelax::tools

#endif  // BVRELAX_TOOLS_RUNNER_HPP_
