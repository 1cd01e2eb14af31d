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

#include "circir/cli/commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "circir/check/checker.hpp"
#include "circir/parse/printer.hpp"
#include "circir/runtime/script.hpp"
#include "circir/split/splitter.hpp"

namespace circir::cli {

namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_diagnostics(const std::vector<Diagnostic>& diags, const std::string& file,
                       std::ostream& err) {
  for (const auto& d : diags) err << format_diagnostic(d, file) << "\n";
}

// Reads and parses, reporting failures. Returns the exit code on failure.
std::variant<Program, int> load(const std::string& path, Mode mode, std::ostream& err) {
  auto text = read_file(path);
  if (!text) {
    err << "error: cannot open '" << path << "'\n";
    return kExitMissingFile;
  }
  auto parsed = parse_program(*text, mode);
  print_diagnostics(parsed.diagnostics, path, err);
  if (!parsed.ok()) return kExitFailure;
  return std::move(*parsed.program);
}

}  // namespace

int cmd_check(const std::string& path, Mode mode, std::ostream& /*out*/, std::ostream& err) {
  auto loaded = load(path, mode, err);
  if (const int* code = std::get_if<int>(&loaded)) return *code;
  auto diags = check_program(std::get<Program>(loaded), mode);
  print_diagnostics(diags, path, err);
  return has_errors(diags) ? kExitFailure : kExitOk;
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  auto loaded = load(cfg.program_path, cfg.mode, err);
  if (const int* code = std::get_if<int>(&loaded)) return *code;
  const auto& program = std::get<Program>(loaded);
  auto diags = check_program(program, cfg.mode);
  print_diagnostics(diags, cfg.program_path, err);
  if (has_errors(diags)) return kExitFailure;

  RunOptions options;
  try {
    if (cfg.script_path) {
      auto text = read_file(*cfg.script_path);
      if (!text) {
        err << "error: cannot open '" << *cfg.script_path << "'\n";
        return kExitMissingFile;
      }
      options.script = parse_script(*text);
    } else if (cfg.script_from_stdin) {
      std::ostringstream ss;
      ss << std::cin.rdbuf();
      options.script = parse_script(ss.str());
    }
  } catch (const Error& e) {
    err << "error: " << (cfg.script_path ? *cfg.script_path : "<stdin>") << ": " << e.what()
        << "\n";
    return kExitFailure;
  }
  options.seed = cfg.seed;
  options.limits = cfg.limits;
  auto result = run_program(program, std::move(options));

  for (const auto& ev : io_events(result.trace)) {
    if (const auto* o = std::get_if<OutputEvent>(&ev)) {
      out << o->host << ": " << o->value.to_string() << "\n";
    }
  }
  if (cfg.trace_path) {
    std::ofstream t(*cfg.trace_path, std::ios::binary);
    if (!t) {
      err << "error: cannot write '" << *cfg.trace_path << "'\n";
      return kExitFailure;
    }
    t << serialize_trace(result.trace);
  }
  switch (result.exit) {
    case ExitKind::Completed:
      return kExitOk;
    case ExitKind::StepLimit:
      err << "notice: step limit of " << cfg.limits.max_steps << " reached\n";
      return kExitOk;
    case ExitKind::Error:
      err << "error: " << to_string(result.error->code) << ": " << result.error->message << "\n";
      return kExitFailure;
  }
  return kExitFailure;
}

int cmd_split(const std::string& in_path, const std::optional<std::string>& out_path,
              std::ostream& out, std::ostream& err) {
  auto loaded = load(in_path, Mode::Surface, err);
  if (const int* code = std::get_if<int>(&loaded)) return *code;
  auto result = split(std::get<Program>(loaded));
  print_diagnostics(result.diagnostics, in_path, err);
  if (!result.program) return kExitFailure;
  const std::string text = pretty_print(*result.program);
  if (out_path) {
    std::ofstream f(*out_path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << *out_path << "'\n";
      return kExitFailure;
    }
    f << text;
  } else {
    out << text;
  }
  out << format_metrics(result.metrics);
  return kExitOk;
}

int cmd_fmt(const std::string& path, std::ostream& out, std::ostream& err) {
  auto loaded = load(path, Mode::Surface, err);
  if (const int* code = std::get_if<int>(&loaded)) return *code;
  out << pretty_print(std::get<Program>(loaded));
  return kExitOk;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"circir: parse, check, run and split circuit IR programs"};
  app.require_subcommand(1);

  bool strict = false;
  bool surface = false;
  std::string path;
  RunConfig run_cfg;
  std::string script;
  std::string trace;
  std::string split_out;

  auto add_mode = [&](CLI::App* sub) {
    auto* s = sub->add_flag("--strict", strict, "strict IR: no computation outside circuits");
    sub->add_flag("--surface", surface, "surface programs with inline computation")->excludes(s);
  };

  auto* check = app.add_subcommand("check", "check a program");
  check->add_option("file", path, "program file")->required();
  add_mode(check);

  auto* run = app.add_subcommand("run", "run a program against an input script");
  run->add_option("file", path, "program file")->required();
  add_mode(run);
  run->add_option("--script", script, "input script")->envname("CIRCIR_SCRIPT");
  run->add_flag("--stdin", run_cfg.script_from_stdin, "read the input script from stdin");
  run->add_option("--seed", run_cfg.seed, "randomness seed")->envname("CIRCIR_SEED");
  run->add_option("--max-steps", run_cfg.limits.max_steps, "statement limit")
      ->envname("CIRCIR_MAX_STEPS")
      ->check(CLI::PositiveNumber);
  run->add_option("--max-depth", run_cfg.limits.max_depth, "call depth limit")
      ->envname("CIRCIR_MAX_DEPTH")
      ->check(CLI::PositiveNumber);
  run->add_option("--trace-out", trace, "write the event trace here")->envname("CIRCIR_TRACE_OUT");

  auto* split_cmd = app.add_subcommand("split", "split a surface program into strict IR");
  split_cmd->add_option("file", path, "surface program file")->required();
  split_cmd->add_option("-o,--output", split_out, "write the strict program here");

  auto* fmt = app.add_subcommand("fmt", "print a program in canonical form");
  fmt->add_option("file", path, "program file")->required();

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitFailure;
  }

  const Mode mode = surface ? Mode::Surface : Mode::Strict;
  if (*check) return cmd_check(path, mode, out, err);
  if (*run) {
    run_cfg.program_path = path;
    run_cfg.mode = mode;
    if (!script.empty()) run_cfg.script_path = script;
    if (!trace.empty()) run_cfg.trace_path = trace;
    return cmd_run(run_cfg, out, err);
  }
  if (*split_cmd) {
    return cmd_split(path, split_out.empty() ? std::nullopt : std::optional(split_out), out, err);
  }
  return cmd_fmt(path, out, err);
}

}  // namespace circir::cli
