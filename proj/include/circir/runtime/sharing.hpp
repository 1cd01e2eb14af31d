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

#include <map>
#include <random>
#include <string>
#include <vector>

#include "circir/ir/value.hpp"

namespace circir {

using Rng = std::mt19937_64;

/// Additive sharing mod 2^64, element-wise. Every host but the last gets a
/// pseudo-random word; the last share balances the sum. Shares are int
/// arrays with the value's shape. Requires at least two hosts.
std::map<std::string, Value> share(const Value& v, const std::vector<std::string>& hosts, Rng& rng);

/// Sums the shares mod 2^64 and re-types the result as `elem`.
Value reconstruct(const std::map<std::string, Value>& shares, ElemType elem);

}  // namespace circir
