/*
 * Copyright 2026 The sector-kit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sector_kit/io.hpp"
#include "sector_kit/matrix_core.hpp"

namespace sector_kit::cli {

enum class Subcommand { kClassify, kPower, kVerify, kFamily, kSweep };

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitAssertion = 2;

// Named tolerances the subcommands assert against; overridable with --tol key=value.
std::map<std::string, double> default_tolerances();

struct RunConfig {
  Subcommand subcommand = Subcommand::kClassify;
  std::optional<std::filesystem::path> inputPath;
  std::optional<std::filesystem::path> outputPath;
  std::map<std::string, double> tolerances = default_tolerances();
  std::uint64_t seed = 42;

  // power
  double gamma = 0.5;
  std::string method = "all";  // eig | balakrishnan | nagy-foias | all
  bool compare = false;

  // family
  std::string kind = "ghbvths";
  std::vector<Index> dims{8, 16, 32, 64};
  std::string profile = "harmonic";
  std::optional<double> familyGamma;
  std::optional<double> t;
  std::optional<int> n;
  std::optional<double> alpha;
  std::optional<Complex> xi;
  std::optional<std::string> format;  // csv | json; default from the output extension

  // sweep
  int count = 200;
  int alphaCount = 10;
  Index sweepDim = 4;
};

// Runs one subcommand. The report goes to outputPath, or to `out` when unset.
// Diagnostics for the user go to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv (CLI11) and calls run(). Parse errors exit 1, --help exits 0.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sector_kit::cli
