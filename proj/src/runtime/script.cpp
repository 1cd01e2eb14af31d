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

#include "circir/runtime/script.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

#include "circir/ir/error.hpp"

namespace circir {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_list(std::string_view s) {
  std::vector<std::string_view> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == ',') {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

std::int64_t parse_int(std::string_view s) {
  s = trim(s);
  std::int64_t x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorCode::TypeMismatch, "malformed integer '" + std::string(s) + "'");
  }
  return x;
}

std::int64_t parse_elem(std::string_view s, ElemType elem) {
  s = trim(s);
  if (elem == ElemType::Bool) {
    if (s == "true") return 1;
    if (s == "false") return 0;
    fail(ErrorCode::TypeMismatch, "malformed bool '" + std::string(s) + "'");
  }
  return parse_int(s);
}

// Splits a line of values. Array values span `elem[shape] [data]`.
std::vector<std::string_view> split_values(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    if (i >= s.size()) break;
    const std::size_t start = i;
    while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '[') ++i;
    if (i < s.size() && s[i] == '[') {
      auto close = s.find(']', i);
      if (close == std::string_view::npos) fail(ErrorCode::TypeMismatch, "unterminated shape");
      i = close + 1;
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
      if (i >= s.size() || s[i] != '[') fail(ErrorCode::TypeMismatch, "array value needs data");
      close = s.find(']', i);
      if (close == std::string_view::npos) fail(ErrorCode::TypeMismatch, "unterminated data");
      i = close + 1;
    }
    out.push_back(s.substr(start, i - start));
  }
  return out;
}

}  // namespace

Value parse_value(std::string_view text) {
  text = trim(text);
  auto open = text.find('[');
  if (open == std::string_view::npos) {
    if (text == "true") return Value::of_bool(true);
    if (text == "false") return Value::of_bool(false);
    return Value::of_int(parse_int(text));
  }
  auto head = trim(text.substr(0, open));
  ElemType elem;
  if (head == "int") {
    elem = ElemType::Int;
  } else if (head == "bool") {
    elem = ElemType::Bool;
  } else {
    fail(ErrorCode::TypeMismatch, "unknown element type '" + std::string(head) + "'");
  }
  auto close = text.find(']', open);
  if (close == std::string_view::npos) fail(ErrorCode::TypeMismatch, "unterminated shape");
  Shape shape;
  for (auto d : split_list(text.substr(open + 1, close - open - 1))) shape.push_back(parse_int(d));
  auto rest = trim(text.substr(close + 1));
  if (rest.size() < 2 || rest.front() != '[' || rest.back() != ']') {
    fail(ErrorCode::TypeMismatch, "array value needs bracketed data");
  }
  std::vector<std::int64_t> data;
  for (auto x : split_list(rest.substr(1, rest.size() - 2))) data.push_back(parse_elem(x, elem));
  return Value::array(elem, std::move(shape), std::move(data));
}

IoScript parse_script(std::string_view text) {
  IoScript script;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    auto line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    try {
      if (line.rfind("host ", 0) == 0) {
        auto colon = line.find(':');
        if (colon == std::string_view::npos) fail(ErrorCode::TypeMismatch, "expected ':'");
        auto host = std::string(trim(line.substr(5, colon - 5)));
        if (host.empty()) fail(ErrorCode::TypeMismatch, "missing host name");
        auto& queue = script.inputs[host];
        for (auto v : split_values(line.substr(colon + 1))) queue.push_back(parse_value(v));
      } else if (line.rfind("fault ", 0) == 0) {
        std::istringstream is{std::string(line.substr(6))};
        std::string kind;
        Fault f;
        is >> kind >> f.var;
        if (kind == "equivocate") {
          f.kind = Fault::Kind::Equivocate;
          is >> f.host;
          if (f.host.empty()) fail(ErrorCode::TypeMismatch, "equivocate fault needs a host");
        } else if (kind == "tamper-commit") {
          f.kind = Fault::Kind::TamperCommit;
        } else {
          fail(ErrorCode::TypeMismatch, "unknown fault '" + kind + "'");
        }
        if (f.var.empty()) fail(ErrorCode::TypeMismatch, "fault needs a variable");
        script.faults.push_back(std::move(f));
      } else {
        fail(ErrorCode::TypeMismatch, "expected 'host' or 'fault'");
      }
    } catch (const Error& e) {
      fail(e.code(), "script line " + std::to_string(line_no) + ": " + e.what());
    }
    if (eol == text.size()) break;
  }
  return script;
}

std::string to_string(const IoScript& s) {
  std::string out;
  for (const auto& [host, queue] : s.inputs) {
    out += "host " + host + ":";
    for (const auto& v : queue) out += " " + v.to_string();
    out += "\n";
  }
  for (const auto& f : s.faults) {
    if (f.kind == Fault::Kind::Equivocate) {
      out += "fault equivocate " + f.var + " " + f.host + "\n";
    } else {
      out += "fault tamper-commit " + f.var + "\n";
    }
  }
  return out;
}

}  // namespace circir
