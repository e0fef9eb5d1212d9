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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bvrelax/io.hpp"
#include "runner.hpp"

namespace {

// 0: all checks hold, 1: a check failed, 2: bad usage or config, 3: I/O or
// solver error.
constexpr int kFailed = 1;
constexpr int kBadConfig = 2;
constexpr int kRuntimeError = 3;

bool write_all(const std::filesystem::path& dir,
               const std::vector<bvrelax::tools::Artifact>& files) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "bvrelax: cannot create " << dir << ": " << ec.message() << "\n";
    return false;
  }
  for (const auto& f : files) {
    std::filesystem::path p = dir / f.name;
    std::ofstream out(p, std::ios::binary);
    out << f.content;
    if (!out) {
      std::cerr << "bvrelax: cannot write " << p << "\n";
      return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Relaxation experiments for integral functionals on weighted intervals"};
  std::string experiment;
  std::string config_path;
  std::string out_dir = ".";
  std::vector<std::string> criteria;
  app.add_option("experiment", experiment, "coarea | relax | cantor | whitney | traces | minimize | suite")
      ->required();
  app.add_option("--config", config_path, "JSON configuration file");
  app.add_option("--out", out_dir, "output directory");
  auto* seed = app.add_option("--seed", "corpus seed, overrides the config");
  auto* m = app.add_option("--m", "Cantor level, overrides the config");
  auto* K = app.add_option("--K", "schedule length, overrides the config");
  app.add_option("--criterion", criteria, "suite: run only these criteria");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kBadConfig;
  }

  bvrelax::ExperimentConfig config;
  try {
    bvrelax::Json body = bvrelax::Json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path, std::ios::binary);
      if (!in) throw bvrelax::ConfigError("cannot read " + config_path);
      std::stringstream text;
      text << in.rdbuf();
      body = bvrelax::parse_config(text.str()).body;
      if (body.at("experiment") != experiment) {
        throw bvrelax::ConfigError("/experiment: config is for '" +
                                   body.at("experiment").get<std::string>() + "'");
      }
    }
    body["experiment"] = experiment;
    if (*seed) body["seed"] = seed->as<std::uint64_t>();
    if (*m) body["m"] = m->as<int>();
    if (*K) body["K"] = K->as<int>();
    if (!criteria.empty()) body["criteria"] = criteria;
    config = bvrelax::parse_config(body.dump());
  } catch (const std::exception& e) {
    std::cerr << "bvrelax: invalid config: " << e.what() << "\n";
    return kBadConfig;
  }

  bvrelax::tools::RunOutcome outcome;
  try {
    outcome = bvrelax::tools::run_experiment(config);
  } catch (const bvrelax::ConfigError& e) {
    std::cerr << "bvrelax: invalid config: " << e.what() << "\n";
    return kBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "bvrelax: " << e.what() << "\n";
    return kRuntimeError;
  }
  for (const auto& line : outcome.log) std::printf("%s\n", line.c_str());
  if (!write_all(out_dir, outcome.files)) return kRuntimeError;
  return outcome.passed ? 0 : kFailed;
}
