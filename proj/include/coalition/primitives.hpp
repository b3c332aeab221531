/*
 * Copyright 2026 The Coalition Former Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef COALITION_PRIMITIVES_HPP
#define COALITION_PRIMITIVES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "coalition/graph.hpp"

namespace coalition {

inline constexpr std::size_t kDefaultMaxCliqueNodes = 128;
inline constexpr std::size_t kDefaultEnumerationLimit = 1'000'000;

/// A node sequence: a cycle (closing edge implied) or a path.
using NodeSequence = std::vector<NodeId>;

/// Maximal cliques ordered lexicographically by sorted member list.
using CliqueSet = std::vector<Coalition>;

/// Complement of the competing graph: adjacency means independence.
UndirectedGraph inverse_graph(const CompetingGraph& c);

/// All maximal cliques (Bron-Kerbosch with Tomita pivoting). Isolated nodes
/// come back as singleton cliques. Throws LimitExceeded when the graph has
/// more than `max_nodes` nodes.
CliqueSet maximal_cliques(const UndirectedGraph& g,
                          std::size_t max_nodes = kDefaultMaxCliqueNodes);

enum class CliqueTieBreak {
    /// Largest clique, then largest internal benefit weight (when a benefit
    /// graph is supplied), then smallest member list.
    max_cardinality,
    /// Smallest member list, regardless of size.
    lexicographic,
};

struct CliqueCoverOptions {
    CliqueTieBreak tie_break = CliqueTieBreak::max_cardinality;
    /// Forces the first selected clique. Must be a maximal clique of g.
    std::optional<Coalition> first;
    std::size_t max_nodes = kDefaultMaxCliqueNodes;
};

/// Greedy residual clique cover: pick a maximal clique by the configured
/// rule, delete its nodes, and repeat on what is left.
Partition clique_partition(const UndirectedGraph& g, const CliqueCoverOptions& options = {},
                           const BenefitGraph* benefit = nullptr);

/// Tarjan. Blocks are ordered by smallest member.
Partition strongly_connected_components(const DirectedGraph& g);

/// Johnson's elementary circuits. Each cycle starts at its smallest node;
/// the list is sorted by length, then lexicographically. Throws
/// LimitExceeded once more than `limit` cycles have been found.
std::vector<NodeSequence> enumerate_cycles(const DirectedGraph& g,
                                           std::size_t limit = kDefaultEnumerationLimit);

/// Every simple directed path from s to t, sorted by length then
/// lexicographically. Requires s != t.
std::vector<NodeSequence> enumerate_simple_paths(const DirectedGraph& g, NodeId s, NodeId t,
                                                 std::size_t limit = kDefaultEnumerationLimit);

/// A path of length >= 1 from s to t exists. reachable(g, s, s) holds only
/// when s lies on a cycle.
bool reachable(const DirectedGraph& g, NodeId s, NodeId t);

/// Orders node sequences by length, then lexicographically.
bool shortlex_less(const NodeSequence& a, const NodeSequence& b);

} // namespace coalition

#endif // COALITION_PRIMITIVES_HPP
