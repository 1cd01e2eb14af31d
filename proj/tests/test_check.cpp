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

#include <doctest.h>

#include "circir/check/checker.hpp"
#include "circir/parse/parser.hpp"
#include "circir/runtime/interpreter.hpp"
#include "support/gen.hpp"

using namespace circir;
using namespace circir::testing;

namespace {

std::vector<Diagnostic> check_text(const std::string& text, Mode mode = Mode::Strict) {
  auto r = parse_program(text, Mode::Surface);
  REQUIRE_MESSAGE(r.ok(), text);
  return check_program(*r.program, mode);
}

bool mentions(const std::vector<Diagnostic>& diags, std::string_view text) {
  for (const auto& d : diags) {
    if (d.message.find(text) != std::string::npos) return true;
  }
  return false;
}

std::vector<Diagnostic> check_circuit_text(const std::string& text) {
  auto r = parse_program(text, Mode::Strict);
  REQUIRE_MESSAGE(r.ok(), text);
  return check_shapes(std::get<CircuitFun>(r.program->decls.at(0)));
}

const char* kMain = "fun main() -> () { return }\n";

}  // namespace

TEST_CASE("corpus checks") {
  for (const auto& c : load_corpus()) {
    CAPTURE(c.name);
    CHECK(check_text(c.text, c.surface ? Mode::Surface : Mode::Strict).empty());
  }
}

TEST_CASE("circuit protocol must compute") {
  const std::string body = "(a: int) -> (r: int) { let r[] = a + 1; return r }\n";
  CHECK(check_text("circuit fun f@Local(Client)" + body + kMain).empty());
  auto diags = check_text("circuit fun f@Commit(Server; Client)" + body + kMain);
  CHECK(mentions(diags, "not a computation protocol"));
}

TEST_CASE("rank mismatch") {
  auto diags = check_circuit_text(
      "circuit fun f<n>@MPC(a: int[n]) -> (r: int[n]) { let r[i < n] = a[i, i]; return r }");
  CHECK(mentions(diags, "rank mismatch: expected 1 index"));
}

TEST_CASE("nominal shape checking") {
  CHECK(check_circuit_text("circuit fun f<n>@MPC(a: int[n], b: int[n]) -> (r: int[n]) { let "
                           "r[i < n] = a[i] + b[i]; return r }")
            .empty());
  auto diags = check_circuit_text(
      "circuit fun f<n, m>@MPC(a: int[m]) -> (r: int[n]) { let r[i < n] = a[i]; return r }");
  CHECK(mentions(diags, "shape mismatch"));
  CHECK(check_circuit_text("circuit fun f<d>@MPC(sample: int[d]) -> (r: int) { let r[] = "
                           "reduce(+, 0, i < d, sample[i]); return r }")
            .empty());
}

TEST_CASE("scoping rules") {
  CHECK(mentions(check_text("fun main() -> () { val x@Local(A) = y; return }"),
                 "unknown variable 'y'"));
  CHECK(mentions(check_text("fun main() -> () { val x@Local(A) = 1; val x@Local(A) = 2; return }"),
                 "already bound"));
  CHECK(mentions(check_text("fun f() -> () { return }"), "missing entry function 'main'"));
  CHECK(mentions(check_text("fun main() -> () { val x@Local(A) = g(); return }"),
                 "unknown function 'g'"));
}

TEST_CASE("conditions are public bools") {
  CHECK(mentions(check_text("fun main() -> () { val c@Local(A) = input A bool; if c { } return }"),
                 "must be public"));
  CHECK(mentions(check_text("fun main() -> () { val c@Repl(A, B) = input A int; if c { } return }"),
                 "bool scalar"));
  CHECK(check_text("fun main() -> () { val c@Repl(A, B) = input A bool; if c { } return }").empty());
}

TEST_CASE("storage and transfer rules") {
  CHECK(mentions(check_text("fun main() -> () { val x@MPC(A, B) = 1; return }"),
                 "'MPC' is not a storage format"));
  CHECK(mentions(check_text("fun main() -> () { val x@Commit(A; B) = input A int; val "
                            "y@Shares(A, B) = x; return }"),
                 "no transfer rule"));
  CHECK(mentions(check_text("fun main() -> () { val x@Shares(A, B) = input A int; val "
                            "_@Local(A) = output A x; return }"),
                 "not visible"));
  CHECK(mentions(check_text("fun main() -> () { val x@Local(B) = input B int; val "
                            "_@Local(A) = output A x; return }"),
                 "not visible"));
}

TEST_CASE("call arity") {
  const std::string f =
      "circuit fun f<n>@MPC(A, B)(a: int[n]) -> (r: int) { let r[] = reduce(+, 0, i < n, a[i]); "
      "return r }\n";
  CHECK(mentions(check_text(f + "fun main() -> () { val r@Shares(A, B) = f(1); return }"),
                 "size arguments"));
  CHECK(mentions(check_text(f + "fun main() -> () { val r@Shares(A, B) = f<3>(); return }"),
                 "arguments"));
}

TEST_CASE("sizes must be public and not computed") {
  const std::string pre = "fun main() -> () { val n@Repl(A, B) = input A int;";
  CHECK(check_text(pre + " val a@Local(A) = input A int[n]; return }").empty());
  CHECK(mentions(check_text("fun main() -> () { val n@Local(A) = input A int; val a@Local(A) = "
                            "input A int[n]; return }"),
                 "must be public"));
  CHECK(mentions(check_text(pre + " val m[]@Repl(A, B) = n + 1; val a@Local(A) = input A "
                                  "int[m]; return }",
                            Mode::Surface),
                 "known before computation"));
}

TEST_CASE("strict diagnostics include surface diagnostics") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto text = random_surface_program(seed);
    auto r = parse_program(text, Mode::Surface);
    REQUIRE(r.ok());
    auto surface = check_program(*r.program, Mode::Surface);
    auto strict = check_program(*r.program, Mode::Strict);
    CHECK(surface.empty());
    for (const auto& d : surface) {
      CHECK(std::find(strict.begin(), strict.end(), d) != strict.end());
    }
    CHECK(check_program(*r.program, Mode::Strict) == strict);
  }
}

TEST_CASE("accepted programs never fail on names or ranks") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    CAPTURE(seed);
    GenConfig cfg;
    cfg.max_size = 6;
    const auto text = random_surface_program(seed, cfg);
    auto r = parse_program(text, Mode::Surface);
    REQUIRE(r.ok());
    REQUIRE(check_program(*r.program, Mode::Surface).empty());
    RunOptions opts;
    opts.input_provider = recording_provider(seed, nullptr, 6);
    auto result = run_program(*r.program, std::move(opts));
    CAPTURE(text);
    if (result.error) {
      CHECK(result.error->code != ErrorCode::RankMismatch);
      CHECK(result.error->code != ErrorCode::UnknownVariable);
      CHECK(result.error->code != ErrorCode::ShapeMismatch);
      CHECK(result.error->code != ErrorCode::NoTransferRule);
      CHECK(result.error->code != ErrorCode::NotVisible);
      CHECK(result.error->code != ErrorCode::InternalError);
    }
  }
}
