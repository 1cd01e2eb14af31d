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

#include "circir/runtime/storage.hpp"

namespace circir {

StoredValue StoredValue::cleartext(const Protocol& format, const std::string& host, Value v) {
  StoredValue sv;
  sv.format = format;
  sv.elem = v.elem();
  sv.shape = v.shape();
  sv.payload[host].value = std::move(v);
  return sv;
}

StoredValue StoredValue::literal(Value v) {
  return cleartext(Protocol::pub(), std::string(kAnyHost), std::move(v));
}

}  // namespace circir
