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

#include <optional>
#include <string>
#include <vector>

#include "circir/ir/ast.hpp"
#include "circir/parse/diagnostic.hpp"
#include "circir/split/depgraph.hpp"

namespace circir {

struct Metrics {
  std::size_t num_blocks = 0;       // circuits emitted
  std::size_t num_cross_edges = 0;  // data edges between computations in different blocks
  friend bool operator==(const Metrics&, const Metrics&) = default;
};

/// `num_blocks: N` and `num_cross_edges: M`, one per line.
std::string format_metrics(const Metrics& m);

struct SplitResult {
  std::optional<Program> program;
  Metrics metrics;
  std::vector<Diagnostic> diagnostics;
};

/// Turns a surface program into strict IR. Every function body is cut into
/// straight-line regions at If statements (branches are split on their
/// own); each region is scheduled, and every compute block becomes a fresh
/// circuit `blk_<fun>_<k>` called in its place. Circuit inputs are the
/// values a block reads but does not define; its outputs are the values it
/// defines that are read anywhere else, stored in the protocol's storage
/// format. Programs without inline computation come back unchanged.
///
/// Fails with diagnostics when the input does not check in surface mode.
/// An output that does not check in strict mode is reported as an internal
/// error.
SplitResult split(const Program& p);

/// Same as `split`, also returning the blocking chosen for every region in
/// visiting order (function by function, branches after their region).
struct RegionReport {
  std::string function;
  DepGraph graph;
  Blocking blocking;
};
SplitResult split(const Program& p, std::vector<RegionReport>* regions);

}  // namespace circir
