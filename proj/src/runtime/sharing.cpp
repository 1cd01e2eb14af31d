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

#include "circir/runtime/sharing.hpp"

#include "circir/ir/error.hpp"

namespace circir {

std::map<std::string, Value> share(const Value& v, const std::vector<std::string>& hosts, Rng& rng) {
  if (hosts.size() < 2) {
    fail(ErrorCode::PreconditionViolated, "additive sharing needs at least two hosts");
  }
  const auto n = v.size();
  std::vector<std::vector<std::int64_t>> words(hosts.size(), std::vector<std::int64_t>(n));
  for (std::size_t e = 0; e < n; ++e) {
    std::uint64_t sum = 0;
    for (std::size_t h = 0; h + 1 < hosts.size(); ++h) {
      const std::uint64_t r = rng();
      words[h][e] = static_cast<std::int64_t>(r);
      sum += r;
    }
    words.back()[e] = static_cast<std::int64_t>(static_cast<std::uint64_t>(v.data()[e]) - sum);
  }
  std::map<std::string, Value> out;
  for (std::size_t h = 0; h < hosts.size(); ++h) {
    out.emplace(hosts[h], Value::array(ElemType::Int, v.shape(), std::move(words[h])));
  }
  return out;
}

Value reconstruct(const std::map<std::string, Value>& shares, ElemType elem) {
  if (shares.empty()) fail(ErrorCode::PreconditionViolated, "no shares to reconstruct");
  const auto& first = shares.begin()->second;
  std::vector<std::uint64_t> sum(first.size(), 0);
  for (const auto& [host, s] : shares) {
    if (s.shape() != first.shape()) {
      fail(ErrorCode::ShapeMismatch, "share held by " + host + " has a different shape");
    }
    for (std::size_t e = 0; e < sum.size(); ++e) sum[e] += static_cast<std::uint64_t>(s.data()[e]);
  }
  std::vector<std::int64_t> data(sum.begin(), sum.end());
  return Value::array(elem, first.shape(), std::move(data));
}

}  // namespace circir
