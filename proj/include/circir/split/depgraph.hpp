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
#include <optional>
#include <string>
#include <vector>

#include "circir/check/checker.hpp"
#include "circir/ir/ast.hpp"

namespace circir {

/// Why a statement may not be reordered freely.
enum class Effect : std::uint8_t { None, Input, Output, Call, Commit, Reveal };

std::string_view to_string(Effect e);

struct DepNode {
  std::size_t id = 0;           // position in the region
  const Stmt* stmt = nullptr;   // null for synthetic graphs
  /// Protocol of an inline computation; unset for other statements.
  std::optional<Protocol> protocol;
  Effect effect = Effect::None;

  /// Groupable into a circuit with other computations of its protocol.
  [[nodiscard]] bool groupable() const { return protocol && effect == Effect::None; }
  [[nodiscard]] bool is_compute() const { return protocol.has_value(); }
};

enum class EdgeKind : std::uint8_t { Data, Safety };

struct DepEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeKind kind = EdgeKind::Data;
  friend bool operator==(const DepEdge&, const DepEdge&) = default;
};

struct DepGraph {
  std::vector<DepNode> nodes;
  std::vector<DepEdge> edges;

  [[nodiscard]] std::vector<std::vector<std::size_t>> predecessors() const;
};

/// What is known about the names visible at a region, keyed by name.
using ScopeInfo = std::map<std::string, VarInfo>;

/// Effect class of one statement. Inputs, outputs and calls are effects.
/// Binding into a commitment commits. Moving a value out of a hidden format
/// (shares, commitment, or a parameter of unknown format) into a cleartext
/// one reveals, whether by transfer or by computing on it at Local/Repl.
Effect classify(const Stmt& s, const ScopeInfo& scope, const std::vector<std::string>& universe);

/// Dependence graph of one straight-line region (no If statements). Data
/// edges run from each definition to its uses; Safety edges chain the
/// effectful statements in source order.
DepGraph build_dep_graph(const std::vector<const Stmt*>& region, const ScopeInfo& scope,
                         const std::vector<std::string>& universe);

/// A run of scheduled statements. Compute blocks hold groupable
/// computations of one protocol; every other block holds one statement.
struct Block {
  std::optional<Protocol> protocol;
  bool compute = false;
  std::vector<std::size_t> nodes;
  friend bool operator==(const Block&, const Block&) = default;
};

using Blocking = std::vector<Block>;

/// Greedy list scheduling. Keeps extending the open compute block while a
/// ready computation of its protocol exists (lowest id first). Otherwise
/// closes it, emits every ready non-groupable statement as a singleton
/// (lowest id first, until none is ready), then opens a block for a
/// protocol with a ready computation. Candidates are ranked by looking one
/// block ahead (fewest computations of that protocol left behind, then
/// largest block, then lowest id); each is rolled out to the end with that
/// ranking, and the one with the fewest compute blocks wins.
Blocking schedule(const DepGraph& g);

/// Number of compute blocks, i.e. circuits the blocking turns into.
std::size_t compute_block_count(const Blocking& b);

/// Data edges between two computations that land in different blocks.
std::size_t cross_edge_count(const DepGraph& g, const Blocking& b);

/// Compute block count of a given topological order: maximal runs of
/// groupable computations on one protocol, plus one per non-groupable
/// computation.
std::size_t compute_block_count(const DepGraph& g, const std::vector<std::size_t>& order);

}  // namespace circir
