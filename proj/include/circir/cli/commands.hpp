// Copyright 2026 The CircIR Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "circir/parse/parser.hpp"
#include "circir/runtime/interpreter.hpp"

namespace circir::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitMissingFile = 2;

struct RunConfig {
  std::string program_path;
  std::optional<std::string> script_path;
  bool script_from_stdin = false;
  std::uint64_t seed = 0;
  RunLimits limits;
  std::optional<std::string> trace_path;
  Mode mode = Mode::Strict;
};

int cmd_check(const std::string& path, Mode mode, std::ostream& out, std::ostream& err);
int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);
/// Writes the strict program to `out_path` (stdout when empty) and the
/// metrics report to stdout.
int cmd_split(const std::string& in_path, const std::optional<std::string>& out_path,
              std::ostream& out, std::ostream& err);
int cmd_fmt(const std::string& path, std::ostream& out, std::ostream& err);

/// Full command line, `args[0]` being the program name.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace circir::cli
