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

#include "circir/runtime/commitment.hpp"

#include <openssl/sha.h>

#include <vector>

namespace circir {

namespace {

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t x) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(x >> (8 * i)));
}

}  // namespace

Digest commitment_digest(const Value& v, const Nonce& nonce) {
  std::vector<std::uint8_t> bytes;
  bytes.push_back(static_cast<std::uint8_t>(v.elem()));
  put_u64(bytes, v.rank());
  for (auto d : v.shape()) put_u64(bytes, static_cast<std::uint64_t>(d));
  for (auto x : v.data()) put_u64(bytes, static_cast<std::uint64_t>(x));
  bytes.insert(bytes.end(), nonce.begin(), nonce.end());
  Digest out{};
  SHA256(bytes.data(), bytes.size(), out.data());
  return out;
}

Nonce fresh_nonce(Rng& rng) {
  Nonce n{};
  for (int half = 0; half < 2; ++half) {
    const std::uint64_t r = rng();
    for (int i = 0; i < 8; ++i) n[half * 8 + i] = static_cast<std::uint8_t>(r >> (8 * i));
  }
  return n;
}

std::string to_hex(const Digest& d) {
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (auto b : d) {
    out += kHex[b >> 4];
    out += kHex[b & 0xf];
  }
  return out;
}

}  // namespace circir
