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

#include <algorithm>

#include "circir/check/checker.hpp"
#include "circir/parse/parser.hpp"
#include "circir/parse/printer.hpp"
#include "circir/runtime/interpreter.hpp"
#include "circir/split/depgraph.hpp"
#include "circir/split/splitter.hpp"
#include "support/gen.hpp"

using namespace circir;
using namespace circir::testing;

namespace {

Program surface(const std::string& text) {
  auto r = parse_program(text, Mode::Surface);
  REQUIRE_MESSAGE(r.ok(), text);
  return *r.program;
}

struct Split {
  SplitResult result;
  std::vector<RegionReport> regions;
};

Split split_text(const std::string& text) {
  Split s;
  s.result = split(surface(text), &s.regions);
  for (const auto& d : s.result.diagnostics) INFO(format_diagnostic(d, "split"));
  REQUIRE(s.result.program.has_value());
  return s;
}

bool has_edge(const DepGraph& g, std::size_t from, std::size_t to, EdgeKind kind) {
  return std::find(g.edges.begin(), g.edges.end(), DepEdge{from, to, kind}) != g.edges.end();
}

std::size_t count_circuits(const Program& p) {
  return static_cast<std::size_t>(std::count_if(p.decls.begin(), p.decls.end(), [](const Decl& d) {
    return std::holds_alternative<CircuitFun>(d);
  }));
}

// Runs the surface program with recorded random inputs, then replays the
// recorded script on the split program.
void check_equivalent(const Program& original, const Program& split_program, std::uint64_t seed) {
  IoScript record;
  RunOptions a;
  a.seed = seed;
  a.limits.max_steps = 10'000;
  a.input_provider = recording_provider(seed, &record);
  auto ra = run_program(original, std::move(a));

  RunOptions b;
  b.seed = seed + 1;
  b.limits.max_steps = 10'000;
  b.script = record;
  auto rb = run_program(split_program, std::move(b));

  CHECK(rb.exit == ra.exit);
  CHECK(io_lines(rb.trace) == io_lines(ra.trace));
  CHECK(rb.outputs == ra.outputs);
  if (ra.error && rb.error) CHECK(to_string(ra.error->code) == to_string(rb.error->code));
}

const char* kChain =
    "host A, B;\n"
    "fun main() -> () {\n"
    "  val a@Local(A) = input A int;\n"
    "  val x@Local(A) = a + 1;\n"
    "  val y@Local(A) = x * 2;\n"
    "  val z@Local(A) = y - a;\n"
    "  val _@Local(A) = output A z;\n"
    "  return\n"
    "}\n";

const char* kPingPong =
    "host A, B;\n"
    "fun main() -> () {\n"
    "  val a@Local(A) = input A int;\n"
    "  val x@Local(A) = a + 1;\n"
    "  val y@Local(B) = x * 2;\n"
    "  val z@Local(A) = y - 1;\n"
    "  val _@Local(A) = output A z;\n"
    "  return\n"
    "}\n";

}  // namespace

TEST_CASE("dependence graph edges") {
  auto s = split_text(kChain);
  REQUIRE(s.regions.size() == 1);
  const auto& g = s.regions[0].graph;
  REQUIRE(g.nodes.size() == 5);
  CHECK(g.nodes[0].effect == Effect::Input);
  CHECK(g.nodes[1].groupable());
  CHECK(g.nodes[4].effect == Effect::Output);
  CHECK(has_edge(g, 0, 1, EdgeKind::Data));
  CHECK(has_edge(g, 1, 2, EdgeKind::Data));
  CHECK(has_edge(g, 0, 3, EdgeKind::Data));
  CHECK(has_edge(g, 3, 4, EdgeKind::Data));
  CHECK(has_edge(g, 0, 4, EdgeKind::Safety));
  CHECK_FALSE(has_edge(g, 1, 3, EdgeKind::Data));

  auto alt = split_text(read_text(corpus_dir() + "/alternating.cir"));
  const auto& ga = alt.regions[0].graph;
  for (const auto& e : ga.edges) {
    CHECK_FALSE((ga.nodes[e.from].is_compute() && ga.nodes[e.to].is_compute()));
  }
}

TEST_CASE("an output stays ahead of a later input") {
  auto s = split_text(
      "host A;\n"
      "fun main() -> () {\n"
      "  val a@Local(A) = input A int;\n"
      "  val _@Local(A) = output A a;\n"
      "  val i@Local(A) = input A int;\n"
      "  val x@Local(A) = i + a;\n"
      "  return\n"
      "}\n");
  const auto& g = s.regions[0].graph;
  CHECK(has_edge(g, 1, 2, EdgeKind::Safety));
  CHECK(has_edge(g, 0, 1, EdgeKind::Safety));
  CHECK_FALSE(has_edge(g, 1, 2, EdgeKind::Data));
}

TEST_CASE("effect classification") {
  auto s = split_text(read_text(corpus_dir() + "/commit_reveal.cir"));
  const auto& g = s.regions[0].graph;
  std::vector<Effect> effects;
  for (const auto& n : g.nodes) effects.push_back(n.effect);
  CHECK(effects == std::vector<Effect>{Effect::Input, Effect::Commit, Effect::Input, Effect::None,
                                       Effect::Reveal, Effect::Call, Effect::Output,
                                       Effect::Output});

  auto shares = split_text(
      "host A, B;\n"
      "fun main() -> () {\n"
      "  val a@Local(A) = input A int;\n"
      "  val m@MPC(A, B) = a * a;\n"
      "  val r@Local(B) = m + 1;\n"
      "  val _@Local(B) = output B r;\n"
      "  return\n"
      "}\n");
  const auto& gs = shares.regions[0].graph;
  CHECK(gs.nodes[1].effect == Effect::None);
  CHECK(gs.nodes[2].effect == Effect::Reveal);
  CHECK_FALSE(gs.nodes[2].groupable());
}

TEST_CASE("schedule examples") {
  auto alt = split_text(read_text(corpus_dir() + "/alternating.cir"));
  const auto& g = alt.regions[0].graph;
  CHECK(compute_block_count(alt.regions[0].blocking) == 2);
  CHECK(brute_force_min_blocks(g) == 2);
  CHECK(alt.result.metrics == Metrics{2, 0});
  CHECK(format_metrics(alt.result.metrics) == "num_blocks: 2\nnum_cross_edges: 0\n");

  // Source order would need six circuits.
  std::vector<std::size_t> source(g.nodes.size());
  for (std::size_t i = 0; i < source.size(); ++i) source[i] = i;
  CHECK(compute_block_count(g, source) == 6);

  auto chain = split_text(kChain);
  CHECK(chain.result.metrics == Metrics{1, 0});

  auto pp = split_text(kPingPong);
  CHECK(pp.result.metrics.num_blocks == 3);
  CHECK(brute_force_min_blocks(pp.regions[0].graph) == 3);
  CHECK(pp.result.metrics.num_cross_edges == 2);
}

TEST_CASE("scheduling respects every edge") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = random_dag(seed, 3 + seed % 8, 2 + seed % 2);
    auto blocking = schedule(g);
    std::vector<std::size_t> position(g.nodes.size(), g.nodes.size());
    std::size_t k = 0;
    for (const auto& b : blocking) {
      if (b.compute) {
        REQUIRE(b.protocol.has_value());
        for (auto n : b.nodes) CHECK(*g.nodes[n].protocol == *b.protocol);
        if (b.nodes.size() > 1) {
          for (auto n : b.nodes) CHECK(g.nodes[n].groupable());
        }
      } else {
        CHECK(b.nodes.size() == 1);
        CHECK_FALSE(g.nodes[b.nodes[0]].is_compute());
      }
      for (auto n : b.nodes) position[n] = k++;
    }
    CHECK(k == g.nodes.size());
    for (const auto& e : g.edges) CHECK(position[e.from] < position[e.to]);
  }
}

TEST_CASE("greedy stays within one block of optimal") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = random_dag(seed * 7 + 1, 2 + seed % 7, 2 + seed % 3);
    const auto greedy = compute_block_count(schedule(g));
    const auto best = brute_force_min_blocks(g);
    CAPTURE(seed);
    CHECK(greedy >= best);
    CHECK(greedy <= best + 1);
  }
}

TEST_CASE("programs without inline computation are unchanged") {
  for (const char* name : {"biometric", "echo", "commit_reveal", "equivocation", "loop"}) {
    auto p = surface(read_text(corpus_dir() + "/" + name + ".cir"));
    auto r = split(p);
    REQUIRE(r.program.has_value());
    CHECK(*r.program == p);
    CHECK(r.metrics == Metrics{0, 0});
  }
}

TEST_CASE("split output") {
  auto s = split_text(read_text(corpus_dir() + "/biometric_surface.cir"));
  const auto& out = *s.result.program;
  CHECK(check_program(out, Mode::Strict).empty());
  CHECK(count_circuits(out) == 1);
  CHECK(s.result.metrics == Metrics{1, 0});
  const auto* blk = out.find_circuit("blk_session_0");
  REQUIRE(blk != nullptr);
  CHECK(blk->protocol == Protocol::mpc({"Server", "Client"}));
  // dist is only read inside the block, so it is not an output.
  REQUIRE(blk->returns.size() == 1);
  CHECK(blk->returns[0] == "closest");
  CHECK(blk->inputs.size() == 2);

  // Each call imports the database and the sample and exports one result.
  RunOptions o;
  o.script = parse_script(read_text(corpus_dir() + "/biometric_surface.script"));
  auto run = run_program(out, std::move(o));
  std::size_t imports = 0;
  std::size_t exports = 0;
  std::size_t calls = 0;
  for (const auto& e : run.trace) {
    if (std::holds_alternative<CircuitEvalEvent>(e.data)) ++calls;
    if (const auto* i = std::get_if<ImportEvent>(&e.data)) imports += i->to.kind == ProtocolKind::MPC;
    if (const auto* x = std::get_if<ExportEvent>(&e.data)) exports += x->from.kind == ProtocolKind::MPC;
  }
  CHECK(calls == 2);
  CHECK(imports == 2 * calls);
  CHECK(exports == calls);

  auto again = split(out);
  REQUIRE(again.program.has_value());
  CHECK(*again.program == out);

  auto printed = parse_program(pretty_print(out), Mode::Strict);
  REQUIRE(printed.ok());
  CHECK(*printed.program == out);
}

TEST_CASE("split preserves the corpus sessions") {
  for (const auto& c : load_corpus()) {
    CAPTURE(c.name);
    auto p = surface(c.text);
    auto r = split(p);
    REQUIRE(r.program.has_value());
    RunOptions a;
    a.script = parse_script(c.script);
    a.limits.max_steps = 500;
    RunOptions b = a;
    auto ra = run_program(p, std::move(a));
    auto rb = run_program(*r.program, std::move(b));
    CHECK(io_lines(ra.trace) == io_lines(rb.trace));
    CHECK(ra.exit == rb.exit);
  }
}

TEST_CASE("split random programs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    CAPTURE(seed);
    const auto text = random_surface_program(seed);
    CAPTURE(text);
    auto p = surface(text);
    std::vector<RegionReport> regions;
    auto r = split(p, &regions);
    for (const auto& d : r.diagnostics) INFO(format_diagnostic(d, "gen"));
    REQUIRE(r.program.has_value());
    CHECK(check_program(*r.program, Mode::Strict).empty());
    std::size_t blocks = 0;
    for (const auto& region : regions) blocks += compute_block_count(region.blocking);
    CHECK(r.metrics.num_blocks == blocks);
    CHECK(count_circuits(*r.program) == count_circuits(p) + blocks);
    check_equivalent(p, *r.program, seed);
  }
}

TEST_CASE("split rejects ill-formed input") {
  auto p = surface(
      "host A;\nfun main() -> () { val x@Local(A) = y + 1; return }\n");
  auto r = split(p);
  CHECK_FALSE(r.program.has_value());
  CHECK_FALSE(r.diagnostics.empty());
}
