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

#include <limits>
#include <random>
#include <set>

#include "circir/check/checker.hpp"
#include "circir/ir/error.hpp"
#include "circir/parse/parser.hpp"
#include "circir/runtime/circuit_eval.hpp"
#include "circir/runtime/commitment.hpp"
#include "circir/runtime/interpreter.hpp"
#include "circir/runtime/sharing.hpp"
#include "circir/runtime/transfer.hpp"
#include "support/gen.hpp"

using namespace circir;
using namespace circir::testing;

namespace {

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InternalError;
}

std::string message_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

Program parse_ok(const std::string& text, Mode mode = Mode::Strict) {
  auto r = parse_program(text, mode);
  REQUIRE_MESSAGE(r.ok(), text);
  REQUIRE(check_program(*r.program, mode).empty());
  return *r.program;
}

template <class E>
std::size_t count_events(const Trace& t) {
  return static_cast<std::size_t>(std::count_if(
      t.begin(), t.end(), [](const TraceEvent& e) { return std::holds_alternative<E>(e.data); }));
}

const std::vector<std::string> kSC{"Server", "Client"};

const char* kSum =
    "circuit fun sum<n>@MPC(Server, Client)(a: int[n]) -> (r: int) {\n"
    "  let r[] = reduce(+, 0, i < n, a[i]);\n"
    "  return r\n"
    "}\n";

}  // namespace

TEST_CASE("reconstruct inverts share") {
  Rng rng(1);
  std::vector<std::int64_t> values{0, 1, -1, kMax, kMin, kMax - 1, kMin + 1};
  std::mt19937_64 pick(99);
  for (int i = 0; i < 1000; ++i) values.push_back(static_cast<std::int64_t>(pick()));
  for (auto v : values) {
    for (std::size_t hosts = 2; hosts <= 4; ++hosts) {
      std::vector<std::string> hs(kSC);
      if (hosts > 2) hs.push_back("C");
      if (hosts > 3) hs.push_back("D");
      auto shares = share(Value::of_int(v), hs, rng);
      REQUIRE(shares.size() == hosts);
      CHECK(reconstruct(shares, ElemType::Int) == Value::of_int(v));
    }
  }
  auto arr = Value::array(ElemType::Bool, {3}, {1, 0, 1});
  CHECK(reconstruct(share(arr, kSC, rng), ElemType::Bool) == arr);
}

TEST_CASE("shares depend on the seed") {
  Rng a(1);
  Rng b(2);
  auto sa = share(Value::of_int(0), kSC, a);
  auto sb = share(Value::of_int(0), kSC, b);
  CHECK(sa != sb);
  CHECK(reconstruct(sa, ElemType::Int) == reconstruct(sb, ElemType::Int));
  CHECK(code_of([] {
          Rng r(0);
          share(Value::of_int(1), {"Server"}, r);
        }) == ErrorCode::PreconditionViolated);
}

TEST_CASE("partial shares are not degenerate") {
  for (std::size_t k : {2, 3}) {
    std::vector<std::string> hosts{"A", "B", "C"};
    hosts.resize(k);
    for (std::size_t drop = 0; drop < k; ++drop) {
      std::set<std::vector<std::int64_t>> seen;
      for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        auto shares = share(Value::of_int(42), hosts, rng);
        std::vector<std::int64_t> partial;
        for (std::size_t h = 0; h < k; ++h) {
          if (h != drop) partial.push_back(shares.at(hosts[h]).as_int());
        }
        seen.insert(partial);
      }
      CHECK(seen.size() >= 100);
    }
  }
}

TEST_CASE("equivocation check") {
  World w({}, 0);
  StoredValue same;
  same.format = Protocol::repl(kSC);
  same.payload["Server"].value = Value::of_int(5);
  same.payload["Client"].value = Value::of_int(5);
  equivocation_check(same, w, "x");
  REQUIRE(w.trace().size() == 1);
  CHECK(std::get<EquivocationEvent>(w.trace()[0].data).ok);

  StoredValue differ = same;
  differ.payload["Client"].value = Value::of_int(6);
  const auto msg = message_of([&] { equivocation_check(differ, w, "x"); });
  CHECK(msg.find("Server") != std::string::npos);
  CHECK(msg.find("Client") != std::string::npos);
  CHECK(code_of([&] { equivocation_check(differ, w, "x"); }) == ErrorCode::EquivocationError);

  StoredValue single;
  single.format = Protocol::repl({"Server"});
  single.payload["Server"].value = Value::of_int(1);
  equivocation_check(single, w, "y");
}

TEST_CASE("transfer table") {
  World w({}, 3);
  auto local = StoredValue::cleartext(Protocol::local("Server"), "Server", Value::of_int(9));
  auto repl = transfer(local, Protocol::repl(kSC), w, "v");
  CHECK(repl.payload.at("Server").value == Value::of_int(9));
  CHECK(repl.payload.at("Client").value == Value::of_int(9));
  CHECK(count_events<EquivocationEvent>(w.trace()) == 1);
  CHECK(count_events<ExportEvent>(w.trace()) == 1);

  auto shared = transfer(local, Protocol::shares(kSC), w, "s");
  const auto s1 = static_cast<std::uint64_t>(shared.payload.at("Server").value->as_int());
  const auto s2 = static_cast<std::uint64_t>(shared.payload.at("Client").value->as_int());
  CHECK(static_cast<std::int64_t>(s1 + s2) == 9);

  StoredValue thirteen;
  thirteen.format = Protocol::shares(kSC);
  thirteen.payload["Server"].value = Value::of_int(kMax);
  thirteen.payload["Client"].value = Value::of_int(static_cast<std::int64_t>(
      std::uint64_t{13} - static_cast<std::uint64_t>(kMax)));
  auto opened = transfer(thirteen, Protocol::local("Client"), w, "t");
  CHECK(visible_value(opened, "Client") == Value::of_int(13));

  CHECK(code_of([&] { transfer(thirteen, Protocol::commit("Server", {"Client"}), w, "t"); }) ==
        ErrorCode::NoTransferRule);
  CHECK(code_of([&] { transfer(local, Protocol::mpc(kSC), w, "t"); }) == ErrorCode::CannotStore);
}

TEST_CASE("commitments") {
  Rng rng(4);
  const auto nonce = fresh_nonce(rng);
  const auto v = Value::of_int(4);
  CHECK(commitment_digest(v, nonce) == commitment_digest(v, nonce));
  CHECK(commitment_digest(v, nonce) != commitment_digest(Value::of_int(5), nonce));
  CHECK(commitment_digest(v, nonce) != commitment_digest(v, fresh_nonce(rng)));
  CHECK(commitment_digest(Value::of_int(1), nonce) != commitment_digest(Value::of_bool(true), nonce));
  CHECK(to_hex(commitment_digest(v, nonce)).size() == 64);

  World w({}, 0);
  auto local = StoredValue::cleartext(Protocol::local("Server"), "Server", v);
  auto committed = transfer(local, Protocol::commit("Server", {"Client"}), w, "c");
  CHECK_FALSE(committed.payload.at("Client").value.has_value());
  CHECK(committed.payload.at("Client").digest.has_value());
  auto opened = transfer(committed, Protocol::repl(kSC), w, "c");
  CHECK(public_value(opened) == v);

  auto tampered = committed;
  tampered.payload["Server"].value = Value::of_int(5);
  CHECK(code_of([&] { transfer(tampered, Protocol::repl(kSC), w, "c"); }) ==
        ErrorCode::CommitmentMismatch);
}

TEST_CASE("reduce is a left fold") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::int64_t>(rng() % 7);
    std::vector<std::int64_t> data(static_cast<std::size_t>(n));
    for (auto& x : data) x = static_cast<std::int64_t>(rng() % 2001) - 1000;
    const BinOp op = std::vector<BinOp>{BinOp::Add, BinOp::Sub, BinOp::Mul, BinOp::Min,
                                        BinOp::Max}[rng() % 5];
    const std::int64_t init = static_cast<std::int64_t>(rng() % 21) - 10;
    CircuitEnv env{{"a", Value::array(ElemType::Int, {n}, data)}, {"n", Value::of_int(n)}};
    auto e = make_reduce(op, make_atom(Atom::lit(Value::of_int(init))), {"i", Atom::var("n")},
                         make_lookup("a", {Atom::var("i")}));
    std::int64_t acc = init;
    for (auto x : data) acc = eval_binop(op, Value::of_int(acc), Value::of_int(x)).as_int();
    CHECK(eval_scalar(e, env) == Value::of_int(acc));
  }
}

TEST_CASE("sum circuit on the MPC backend") {
  auto p = parse_ok(std::string(kSum) + "fun main() -> () { return }");
  const auto& f = *p.find_circuit("sum");
  for (std::int64_t n : {3, 0}) {
    World w({}, 0);
    std::vector<std::int64_t> data;
    for (std::int64_t i = 1; i <= n; ++i) data.push_back(i);
    auto a = StoredValue::cleartext(Protocol::local("Server"), "Server",
                                    Value::array(ElemType::Int, {n}, data));
    auto out = eval_circuit_call(f, Protocol::mpc(kSC), {n}, {a}, {"a"},
                                 {Protocol::local("Client")}, {"r"}, w);
    std::int64_t oracle = 0;
    for (auto x : data) oracle += x;
    REQUIRE(out.size() == 1);
    CHECK(visible_value(out[0], "Client") == Value::of_int(oracle));
    CHECK(count_events<ImportEvent>(w.trace()) == 1);
    CHECK(count_events<CircuitEvalEvent>(w.trace()) == 1);
    CHECK(count_events<ExportEvent>(w.trace()) == 1);
    CHECK(count_events<InputEvent>(w.trace()) == 0);
    CHECK(w.lifecycle().built == 1);
    CHECK(w.lifecycle().destroyed == 1);
  }
}

TEST_CASE("MPC and replicated backends agree on the biometric circuit") {
  auto p = parse_ok(read_text(corpus_dir() + "/biometric.cir"));
  const auto& f = *p.find_circuit("biometric");
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const std::int64_t n = 1 + static_cast<std::int64_t>(rng() % 6);
    const std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 4);
    std::vector<std::int64_t> db(static_cast<std::size_t>(n * d));
    std::vector<std::int64_t> s(static_cast<std::size_t>(d));
    for (auto& x : db) x = static_cast<std::int64_t>(rng() % 201) - 100;
    for (auto& x : s) x = static_cast<std::int64_t>(rng() % 201) - 100;
    auto args = std::vector<StoredValue>{
        StoredValue::cleartext(Protocol::local("Server"), "Server",
                               Value::array(ElemType::Int, {n, d}, db)),
        StoredValue::cleartext(Protocol::local("Client"), "Client",
                               Value::array(ElemType::Int, {d}, s))};
    World w1({}, 1);
    World w2({}, 2);
    auto mpc = eval_circuit_call(f, Protocol::mpc(kSC), {n, d}, args, {"db", "sample"},
                                 {Protocol::local("Client")}, {"best"}, w1);
    auto repl = eval_circuit_call(f, Protocol::repl(kSC), {n, d}, args, {"db", "sample"},
                                  {Protocol::local("Client")}, {"best"}, w2);
    CHECK(visible_value(mpc[0], "Client") == visible_value(repl[0], "Client"));
  }
}

TEST_CASE("biometric example session") {
  auto p = parse_ok(read_text(corpus_dir() + "/biometric.cir"));
  RunOptions opts;
  opts.script = parse_script(
      "host Server: 2 2 int[2,2] [1,2,3,4]\nhost Client: true int[2] [1,1] false\n");
  auto r = run_program(p, std::move(opts));
  CHECK(r.exit == ExitKind::Completed);
  std::vector<std::vector<std::int64_t>> db{{1, 2}, {3, 4}};
  REQUIRE(r.outputs.at("Client").size() == 1);
  CHECK(r.outputs.at("Client").back() == Value::of_int(biometric_oracle(db, {1, 1})));
  CHECK(biometric_oracle(db, {1, 1}) == 1);
}

TEST_CASE("echo") {
  auto p = parse_ok(read_text(corpus_dir() + "/echo.cir"));
  RunOptions opts;
  opts.script = parse_script("host Client: 7");
  auto r = run_program(p, std::move(opts));
  CHECK(r.exit == ExitKind::Completed);
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].data == EventData{InputEvent{"Client", Value::of_int(7)}});
  CHECK(r.trace[1].data == EventData{OutputEvent{"Client", Value::of_int(7)}});
  CHECK(r.trace[0].seq < r.trace[1].seq);
}

TEST_CASE("limits") {
  auto deep = parse_ok(
      "fun f() -> (r: int) { val x@Local(A) = f(); return x }\n"
      "fun main() -> () { val y@Local(A) = f(); return }");
  RunOptions o1;
  o1.limits.max_depth = 50;
  auto r1 = run_program(deep, std::move(o1));
  CHECK(r1.exit == ExitKind::Error);
  CHECK(r1.error->code == ErrorCode::DepthExceeded);

  auto loop = parse_ok(read_text(corpus_dir() + "/loop.cir"));
  RunOptions o2;
  o2.limits.max_steps = 50;
  o2.input_provider = [](const std::string&, ElemType, const Shape&) { return Value::of_int(1); };
  auto r2 = run_program(loop, std::move(o2));
  CHECK(r2.exit == ExitKind::StepLimit);
  CHECK(r2.steps == 50);

  RunOptions o3;
  o3.script = parse_script("host Client: 1 2");
  auto r3 = run_program(loop, std::move(o3));
  CHECK(r3.error->code == ErrorCode::ScriptExhausted);
  CHECK(r3.error->message.find("Client") != std::string::npos);
  CHECK(r3.outputs.at("Client").size() == 2);
}

TEST_CASE("runtime errors") {
  auto echo = parse_ok(read_text(corpus_dir() + "/echo.cir"));
  RunOptions o1;
  o1.script = parse_script("host Client: true");
  CHECK(run_program(echo, std::move(o1)).error->code == ErrorCode::TypeMismatch);

  auto div = parse_ok(
      "circuit fun d@Local(A)(a: int, b: int) -> (r: int) { let r[] = a / b; return r }\n"
      "fun main() -> () { val x@Local(A) = input A int; val y@Local(A) = d(1, x); return }");
  RunOptions o2;
  o2.script = parse_script("host A: 0");
  CHECK(run_program(div, std::move(o2)).error->code == ErrorCode::DivisionByZero);
}

TEST_CASE("fault hooks") {
  auto p = parse_ok(read_text(corpus_dir() + "/equivocation.cir"));
  RunOptions opts;
  opts.script = parse_script(read_text(corpus_dir() + "/equivocation.script"));
  auto r = run_program(p, std::move(opts));
  CHECK(r.exit == ExitKind::Error);
  CHECK(r.error->code == ErrorCode::EquivocationError);
  CHECK(r.error->message.find("Server") != std::string::npos);
  CHECK(r.error->message.find("Client") != std::string::npos);

  auto cr = parse_ok(read_text(corpus_dir() + "/commit_reveal.cir"));
  RunOptions o2;
  o2.script = parse_script(read_text(corpus_dir() + "/commit_reveal.script") +
                           "fault tamper-commit sealed\n");
  auto r2 = run_program(cr, std::move(o2));
  CHECK(r2.error->code == ErrorCode::CommitmentMismatch);
}

TEST_CASE("runs are deterministic and match the cleartext reference") {
  for (const auto& c : load_corpus()) {
    CAPTURE(c.name);
    auto parsed = parse_program(c.text, Mode::Surface);
    REQUIRE(parsed.ok());
    auto script = parse_script(c.script);
    script.faults.clear();
    auto make = [&](bool reference) {
      RunOptions o;
      o.script = script;
      o.seed = 17;
      o.limits.max_steps = 500;
      o.cleartext_reference = reference;
      return run_program(*parsed.program, std::move(o));
    };
    auto a = make(false);
    auto b = make(false);
    auto ref = make(true);
    CHECK(serialize_trace(a.trace) == serialize_trace(b.trace));
    CHECK(io_lines(a.trace) == io_lines(ref.trace));
    CHECK(a.outputs == ref.outputs);
    CHECK(a.purity_violations == 0);
    CHECK(a.lifecycle.built == a.lifecycle.destroyed);
  }
}

TEST_CASE("purity instrumentation counts I/O inside circuits") {
  World w(parse_script("host A: 1"), 0);
  {
    CircuitScope scope(w);
    w.next_input("A", ElemType::Int, {});
  }
  CHECK(w.purity_violations() == 1);
}

TEST_CASE("script format") {
  auto s = parse_script(
      "# session\nhost Client: 7 true int[2,2] [1,2,3,4]\nhost Client: -3\nfault equivocate n "
      "Client\nfault tamper-commit c\n");
  REQUIRE(s.inputs.at("Client").size() == 4);
  CHECK(s.inputs.at("Client")[2] == Value::array(ElemType::Int, {2, 2}, {1, 2, 3, 4}));
  CHECK(s.inputs.at("Client")[3] == Value::of_int(-3));
  REQUIRE(s.faults.size() == 2);
  CHECK(parse_script(to_string(s)) == s);
  CHECK(code_of([] { parse_script("host Client 7"); }) == ErrorCode::TypeMismatch);
  CHECK(code_of([] { parse_script("host Client: int[2] [1]"); }) == ErrorCode::ShapeMismatch);
}

TEST_CASE("trace lines") {
  TraceEvent e{4, CircuitEvalEvent{"biometric", Protocol::mpc(kSC), {{"n", 2}, {"d", 2}}}};
  CHECK(format_event(e) == "4 circuit biometric MPC(Server, Client) n=2 d=2");
  TraceEvent i{1, ImportEvent{"db", Protocol::local("Server"), Protocol::mpc(kSC)}};
  CHECK(format_event(i) == "1 import db Local(Server) -> MPC(Server, Client)");
}
