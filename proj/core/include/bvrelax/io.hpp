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


#ifndef BVRELAX_IO_HPP_
#define BVRELAX_IO_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "bvrelax/bvfunc.hpp"
#include "bvrelax/integrand.hpp"
#include "bvrelax/relax.hpp"
#include "bvrelax/space.hpp"

namespace bvrelax {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Validation failure; the message starts with a JSON pointer to the field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Rationals are "p/q" or decimal strings, or JSON integers.
Rational rational_from_json(const Json& j, const std::string& path);

// {"kind": "identity"} | {"kind": "kinked"} |
// {"kind": "piecewise", "f0": x, "breakpoints": [...], "slopes": [...]}
Integrand integrand_from_json(const Json& j, const std::string& path);

// {"a": q, "b": q, "w": q} | {"a": q, "b": q, "pieces": [{"lo","hi","w"}]} |
// {"cantor": m}
WeightedIntervalSpace space_from_json(const Json& j, const std::string& path);

// {"kind": "grid", "nodes": [q...], "values": [x...], "jumps": [{"x","height"}]} |
// {"kind": "cantor", "scale": x, "depth": d}
BVRepresentation target_from_json(const Json& j, const std::string& path);

// [[lo, hi], ...]
OpenSet open_set_from_json(const Json& j, const std::string& path);

// {"K": k} | {"points": [{"n": n, "eps": q}, ...]}, eps relative to length
// when "K" is used.
Schedule schedule_from_json(const Json& j, const std::string& path,
                            const Rational& length);

struct ExperimentConfig {
  std::string experiment;
  Json body;
  std::uint64_t seed = 1;
};

// Parses and checks the top level; experiment-specific fields are validated
// by the runner before any output is written.
ExperimentConfig parse_config(const std::string& text);

Json rational_to_json(const Rational& q);

}  // namespace bvrelax

#endif  // BVRELAX_IO_HPP_
