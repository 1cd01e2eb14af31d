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

#include "circir/parse/parser.hpp"

#include <charconv>
#include <limits>

#include "circir/parse/lexer.hpp"

namespace circir {

namespace {

constexpr int kMaxNesting = 200;

struct SyntaxError {
  std::string message;
  SourceSpan span;
};

class Parser {
 public:
  Parser(std::string_view text, Mode mode) : tokens_(tokenize(text)), mode_(mode) {}

  ParseResult run() {
    Program program;
    if (is_kw("host")) {
      try {
        program.hosts = parse_host_decl();
      } catch (const SyntaxError& e) {
        report(e);
        skip_to_decl();
      }
    }
    while (!at_end()) {
      const auto before = pos_;
      try {
        program.decls.push_back(parse_decl());
      } catch (const SyntaxError& e) {
        report(e);
        if (pos_ == before) ++pos_;
        skip_to_decl();
      }
    }
    ParseResult result;
    result.diagnostics = std::move(diags_);
    if (!has_errors(result.diagnostics)) result.program = std::move(program);
    return result;
  }

 private:
  // ---- token helpers ----------------------------------------------------

  const Token& peek(std::size_t ahead = 0) const {
    auto i = std::min(pos_ + ahead, tokens_.size() - 1);
    return tokens_[i];
  }
  bool at_end() const { return peek().kind == Tok::End; }
  bool is_punct(std::string_view p, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Punct && peek(ahead).text == p;
  }
  bool is_kw(std::string_view k, std::size_t ahead = 0) const {
    return peek(ahead).kind == Tok::Keyword && peek(ahead).text == k;
  }
  const Token& next() {
    const Token& t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void error(const std::string& message) const {
    throw SyntaxError{message, peek().span};
  }

  std::string describe(const Token& t) const {
    switch (t.kind) {
      case Tok::End: return "end of input";
      case Tok::Invalid: return "invalid character '" + t.text + "'";
      default: return "'" + t.text + "'";
    }
  }

  void expect_punct(std::string_view p) {
    if (!is_punct(p)) error("expected '" + std::string(p) + "', found " + describe(peek()));
    next();
  }
  void expect_kw(std::string_view k) {
    if (!is_kw(k)) error("expected '" + std::string(k) + "', found " + describe(peek()));
    next();
  }
  std::string expect_ident(std::string_view what) {
    if (peek().kind != Tok::Ident) {
      error("expected " + std::string(what) + ", found " + describe(peek()));
    }
    return next().text;
  }

  SourceSpan span_from(const SourceSpan& start) const {
    SourceSpan s = start;
    s.end = pos_ > 0 ? tokens_[pos_ - 1].span.end : start.end;
    return s;
  }

  void report(const SyntaxError& e) { diags_.push_back({Severity::Error, e.message, e.span}); }

  void skip_to_decl() {
    while (!at_end() && !is_kw("fun") && !is_kw("circuit")) next();
  }

  struct NestingGuard {
    explicit NestingGuard(Parser& p) : p_(p) {
      if (++p_.nesting_ > kMaxNesting) {
        --p_.nesting_;
        p_.error("nesting too deep");
      }
    }
    ~NestingGuard() { --p_.nesting_; }
    NestingGuard(const NestingGuard&) = delete;
    NestingGuard& operator=(const NestingGuard&) = delete;
    Parser& p_;
  };

  // ---- top level --------------------------------------------------------

  std::vector<std::string> parse_host_decl() {
    expect_kw("host");
    std::vector<std::string> hosts{expect_ident("host name")};
    while (is_punct(",")) {
      next();
      hosts.push_back(expect_ident("host name"));
    }
    expect_punct(";");
    return hosts;
  }

  Decl parse_decl() {
    if (is_kw("circuit")) return parse_circuit_fun();
    if (is_kw("fun")) return parse_fun();
    error("expected 'fun' or 'circuit fun', found " + describe(peek()));
  }

  std::vector<std::string> parse_size_params() {
    std::vector<std::string> sizes;
    if (!is_punct("<")) return sizes;
    next();
    if (!is_punct(">")) {
      sizes.push_back(expect_ident("size parameter"));
      while (is_punct(",")) {
        next();
        sizes.push_back(expect_ident("size parameter"));
      }
    }
    expect_punct(">");
    return sizes;
  }

  std::vector<Param> parse_params() {
    expect_punct("(");
    std::vector<Param> params;
    if (!is_punct(")")) {
      while (true) {
        Param p;
        p.name = expect_ident("parameter name");
        expect_punct(":");
        p.type = parse_type();
        params.push_back(std::move(p));
        if (!is_punct(",")) break;
        next();
      }
    }
    expect_punct(")");
    return params;
  }

  std::vector<std::string> parse_returns() {
    expect_kw("return");
    std::vector<std::string> names;
    if (peek().kind == Tok::Ident) {
      names.push_back(next().text);
      while (is_punct(",")) {
        next();
        names.push_back(expect_ident("returned variable"));
      }
    }
    return names;
  }

  CircuitFun parse_circuit_fun() {
    CircuitFun f;
    const auto start = peek().span;
    expect_kw("circuit");
    expect_kw("fun");
    f.name = expect_ident("function name");
    f.sizes = parse_size_params();
    expect_punct("@");
    f.protocol = parse_protocol(/*in_header=*/true);
    f.inputs = parse_params();
    expect_punct("->");
    f.outputs = parse_params();
    expect_punct("{");
    while (!is_kw("return") && !at_end() && !is_punct("}")) {
      const auto before = pos_;
      try {
        f.body.push_back(parse_circuit_stmt());
      } catch (const SyntaxError& e) {
        report(e);
        resync_stmt(before);
      }
    }
    f.returns = parse_returns();
    expect_punct("}");
    f.span = span_from(start);
    return f;
  }

  Fun parse_fun() {
    Fun f;
    const auto start = peek().span;
    expect_kw("fun");
    f.name = expect_ident("function name");
    f.sizes = parse_size_params();
    f.inputs = parse_params();
    expect_punct("->");
    f.outputs = parse_params();
    expect_punct("{");
    f.body = parse_stmts(/*allow_return=*/true);
    f.returns = parse_returns();
    expect_punct("}");
    f.span = span_from(start);
    return f;
  }

  void resync_stmt(std::size_t before) {
    if (pos_ == before && !is_punct("}") && !at_end()) next();
    while (!at_end() && !is_punct(";") && !is_punct("}") && !is_kw("return") &&
           !is_kw("val") && !is_kw("let") && !is_kw("if")) {
      next();
    }
    if (is_punct(";")) next();
  }

  // ---- types, atoms, protocols -------------------------------------------

  Type parse_type() {
    Type t;
    if (is_kw("int")) {
      t.elem = ElemType::Int;
    } else if (is_kw("bool")) {
      t.elem = ElemType::Bool;
    } else {
      error("expected type, found " + describe(peek()));
    }
    next();
    if (is_punct("[")) {
      next();
      if (!is_punct("]")) {
        t.dims.push_back(parse_atom());
        while (is_punct(",")) {
          next();
          t.dims.push_back(parse_atom());
        }
      }
      expect_punct("]");
    }
    return t;
  }

  std::int64_t parse_int_literal(bool negative) {
    const Token& t = peek();
    std::uint64_t magnitude = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), magnitude);
    constexpr auto kMaxPos = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() ||
        magnitude > kMaxPos + (negative ? 1 : 0)) {
      error("integer literal out of range: " + std::string(negative ? "-" : "") + t.text);
    }
    next();
    if (negative) return static_cast<std::int64_t>(0 - magnitude);
    return static_cast<std::int64_t>(magnitude);
  }

  bool at_literal() const {
    return peek().kind == Tok::Int || is_kw("true") || is_kw("false") ||
           (is_punct("-") && peek(1).kind == Tok::Int);
  }

  Value parse_literal() {
    if (is_kw("true") || is_kw("false")) {
      bool v = peek().text == "true";
      next();
      return Value::of_bool(v);
    }
    bool negative = false;
    if (is_punct("-")) {
      negative = true;
      next();
    }
    if (peek().kind != Tok::Int) error("expected integer literal, found " + describe(peek()));
    return Value::of_int(parse_int_literal(negative));
  }

  Atom parse_atom() {
    Atom a;
    a.span = peek().span;
    if (at_literal()) {
      a.node = parse_literal();
    } else if (peek().kind == Tok::Ident) {
      a.node = next().text;
    } else {
      error("expected literal or variable, found " + describe(peek()));
    }
    a.span = span_from(a.span);
    return a;
  }

  std::vector<Atom> parse_atom_list(std::string_view close) {
    std::vector<Atom> atoms;
    if (!is_punct(close)) {
      atoms.push_back(parse_atom());
      while (is_punct(",")) {
        next();
        atoms.push_back(parse_atom());
      }
    }
    expect_punct(close);
    return atoms;
  }

  Protocol parse_protocol(bool in_header) {
    const auto name = expect_ident("protocol name");
    auto kind = protocol_from_name(name);
    if (!kind) {
      diags_.push_back({Severity::Error, "unknown protocol '" + name + "'", tokens_[pos_ - 1].span});
      kind = ProtocolKind::Local;
    }
    Protocol p;
    p.kind = *kind;
    if (!is_punct("(")) return p;
    if (in_header) {
      // `@MPC(a: int[n])` lists parameters, `@MPC(A, B)(a: ...)` lists hosts.
      bool params_follow = (peek(1).kind == Tok::Ident && is_punct(":", 2)) ||
                           (is_punct(")", 1) && !is_punct("(", 2));
      if (params_follow) return p;
    }
    next();
    if (!is_punct(")")) {
      p.hosts.push_back(expect_ident("host name"));
      while (is_punct(",")) {
        next();
        p.hosts.push_back(expect_ident("host name"));
      }
      if (is_punct(";")) {
        next();
        p.verifiers.push_back(expect_ident("host name"));
        while (is_punct(",")) {
          next();
          p.verifiers.push_back(expect_ident("host name"));
        }
      }
    }
    expect_punct(")");
    return p;
  }

  IndexBound parse_index_bound() {
    IndexBound ib;
    ib.var = expect_ident("index variable");
    expect_punct("<");
    ib.bound = parse_atom();
    return ib;
  }

  std::vector<IndexBound> parse_binders() {
    expect_punct("[");
    std::vector<IndexBound> out;
    if (!is_punct("]")) {
      out.push_back(parse_index_bound());
      while (is_punct(",")) {
        next();
        out.push_back(parse_index_bound());
      }
    }
    expect_punct("]");
    return out;
  }

  // ---- scalar expressions -----------------------------------------------

  std::optional<BinOp> peek_infix_op() const {
    if (peek().kind != Tok::Punct) return std::nullopt;
    auto op = op_from_symbol(peek().text);
    if (op && !op_is_prefix(*op)) return op;
    return std::nullopt;
  }

  ScalarExpr parse_expr(int min_prec = 1) {
    NestingGuard guard(*this);
    const auto start = peek().span;
    ScalarExpr lhs = parse_primary();
    while (true) {
      auto op = peek_infix_op();
      if (!op || op_precedence(*op) < min_prec) break;
      next();
      ScalarExpr rhs = parse_expr(op_precedence(*op) + 1);
      lhs = make_binary(*op, std::move(lhs), std::move(rhs));
      lhs.span = span_from(start);
    }
    return lhs;
  }

  BinOp parse_reduce_op() {
    const Token& t = peek();
    std::optional<BinOp> op;
    if (t.kind == Tok::Punct || (t.kind == Tok::Keyword && (t.text == "min" || t.text == "max"))) {
      op = op_from_symbol(t.text);
    }
    if (!op) error("expected reduction operator, found " + describe(t));
    next();
    return *op;
  }

  ScalarExpr parse_primary() {
    const auto start = peek().span;
    ScalarExpr e;
    if (at_literal()) {
      Atom a;
      a.span = start;
      a.node = parse_literal();
      a.span = span_from(start);
      e = make_atom(std::move(a));
    } else if (peek().kind == Tok::Ident) {
      auto name = next().text;
      if (is_punct("[")) {
        next();
        e = make_lookup(std::move(name), parse_atom_list("]"));
      } else {
        Atom a;
        a.node = std::move(name);
        a.span = span_from(start);
        e = make_atom(std::move(a));
      }
    } else if (is_punct("(")) {
      next();
      e = parse_expr();
      expect_punct(")");
      return e;
    } else if (is_kw("min") || is_kw("max")) {
      auto op = *op_from_symbol(next().text);
      expect_punct("(");
      auto lhs = parse_expr();
      expect_punct(",");
      auto rhs = parse_expr();
      expect_punct(")");
      e = make_binary(op, std::move(lhs), std::move(rhs));
    } else if (is_kw("reduce")) {
      next();
      expect_punct("(");
      auto op = parse_reduce_op();
      expect_punct(",");
      auto init = parse_expr();
      expect_punct(",");
      auto bound = parse_index_bound();
      expect_punct(",");
      auto body = parse_expr();
      expect_punct(")");
      e = make_reduce(op, std::move(init), std::move(bound), std::move(body));
    } else {
      error("expected expression, found " + describe(peek()));
    }
    e.span = span_from(start);
    return e;
  }

  // ---- statements ---------------------------------------------------------

  CircuitStmt parse_circuit_stmt() {
    CircuitStmt s;
    const auto start = peek().span;
    expect_kw("let");
    s.target = expect_ident("variable");
    if (is_punct("[")) s.binders = parse_binders();
    expect_punct("=");
    s.body = parse_expr();
    expect_punct(";");
    s.span = span_from(start);
    return s;
  }

  std::vector<Stmt> parse_stmts(bool allow_return) {
    std::vector<Stmt> body;
    while (!at_end() && !is_punct("}") && !(allow_return && is_kw("return"))) {
      const auto before = pos_;
      try {
        if (is_kw("return")) error("'return' is only allowed at the end of a function");
        body.push_back(parse_stmt());
      } catch (const SyntaxError& e) {
        report(e);
        resync_stmt(before);
      }
    }
    return body;
  }

  Binding parse_binding() {
    Binding b;
    b.var = expect_ident("variable");
    expect_punct("@");
    b.format = parse_protocol(false);
    return b;
  }

  // `f(...)` or `f<a, b>(...)`; restores the position and returns nullopt
  // when the tokens do not form a call.
  std::optional<CallCmd> try_parse_call() {
    if (peek().kind != Tok::Ident) return std::nullopt;
    const auto saved = pos_;
    CallCmd call;
    call.callee = next().text;
    try {
      if (is_punct("<")) {
        next();
        call.sizes = parse_atom_list(">");
      }
      if (!is_punct("(")) {
        pos_ = saved;
        return std::nullopt;
      }
    } catch (const SyntaxError&) {
      pos_ = saved;
      return std::nullopt;
    }
    next();
    call.args = parse_atom_list(")");
    return call;
  }

  Stmt parse_stmt() {
    NestingGuard guard(*this);
    const auto start = peek().span;
    Stmt s;
    if (is_kw("if")) {
      next();
      IfStmt i;
      i.cond = parse_atom();
      expect_punct("{");
      i.then_body = parse_stmts(false);
      expect_punct("}");
      if (is_kw("else")) {
        next();
        expect_punct("{");
        i.else_body = parse_stmts(false);
        expect_punct("}");
      }
      if (is_punct(";")) next();
      s.node = std::move(i);
      s.span = span_from(start);
      return s;
    }
    expect_kw("val");
    std::vector<Binding> bindings;
    std::vector<IndexBound> binders;
    bool brackets = false;
    bool parenthesised = false;
    if (is_punct("(")) {
      parenthesised = true;
      next();
      if (!is_punct(")")) {
        bindings.push_back(parse_binding());
        while (is_punct(",")) {
          next();
          bindings.push_back(parse_binding());
        }
      }
      expect_punct(")");
    } else {
      Binding b;
      b.var = expect_ident("variable");
      if (is_punct("[")) {
        brackets = true;
        binders = parse_binders();
      }
      expect_punct("@");
      b.format = parse_protocol(false);
      bindings.push_back(std::move(b));
    }
    expect_punct("=");

    auto finish_let = [&](Command cmd) {
      if (brackets) error("index binders are only allowed on computations");
      s.node = LetStmt{std::move(bindings), std::move(cmd)};
    };

    if (is_kw("input")) {
      next();
      InputCmd in;
      in.host = expect_ident("host name");
      in.type = parse_type();
      finish_let(Command{std::move(in)});
    } else if (is_kw("output")) {
      next();
      OutputCmd out;
      out.host = expect_ident("host name");
      out.value = parse_atom();
      finish_let(Command{std::move(out)});
    } else if (auto call = try_parse_call()) {
      finish_let(Command{std::move(*call)});
    } else {
      auto expr = parse_expr();
      const auto* atom = std::get_if<Atom>(&expr.node);
      if (atom && !brackets) {
        finish_let(Command{*atom});
      } else {
        if (parenthesised || bindings.size() != 1) {
          error("a computation binds exactly one variable");
        }
        ComputeLet c;
        c.var = bindings[0].var;
        c.protocol = bindings[0].format;
        c.binders = std::move(binders);
        c.explicit_binders = brackets;
        c.body = std::move(expr);
        if (mode_ == Mode::Strict) {
          diags_.push_back({Severity::Error, "computation not allowed in non-circuit function",
                            start});
        }
        s.node = std::move(c);
      }
    }
    expect_punct(";");
    s.span = span_from(start);
    return s;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  Mode mode_;
  int nesting_ = 0;
  std::vector<Diagnostic> diags_;
};

}  // namespace

ParseResult parse_program(std::string_view text, Mode mode) {
  return Parser(text, mode).run();
}

}  // namespace circir
