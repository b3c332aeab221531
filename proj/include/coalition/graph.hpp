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

#ifndef COALITION_GRAPH_HPP
#define COALITION_GRAPH_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace coalition {

/// Dense participant index in [0, n).
using NodeId = std::uint32_t;

/// Absolute tolerance used when utilities are compared.
inline constexpr double kUtilityTolerance = 1e-9;

/// Unweighted directed graph with sorted, duplicate-free adjacency.
/// Duplicate input pairs are collapsed; self-loops and out-of-range ids
/// are rejected.
class DirectedGraph {
public:
    DirectedGraph() = default;
    explicit DirectedGraph(std::size_t n,
                           std::vector<std::pair<NodeId, NodeId>> edges = {});

    std::size_t size() const noexcept { return out_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::span<const NodeId> successors(NodeId v) const { return out_.at(v); }
    bool has_edge(NodeId src, NodeId dst) const;
    /// All edges, ordered by (src, dst).
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    friend bool operator==(const DirectedGraph&, const DirectedGraph&) = default;

private:
    std::vector<std::vector<NodeId>> out_;
    std::size_t edge_count_ = 0;
};

/// Simple undirected graph. Pairs are stored once; duplicates collapse.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(std::size_t n,
                             std::vector<std::pair<NodeId, NodeId>> edges = {});

    std::size_t size() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    std::span<const NodeId> neighbors(NodeId v) const { return adj_.at(v); }
    bool adjacent(NodeId a, NodeId b) const;
    /// Edges as (a, b) with a < b, sorted.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

    friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
    std::vector<std::vector<NodeId>> adj_;
    std::size_t edge_count_ = 0;
};

struct BenefitEdge {
    NodeId src = 0;
    NodeId dst = 0;
    double weight = 0.0;

    friend bool operator==(const BenefitEdge&, const BenefitEdge&) = default;
};

/// Weighted directed graph: an edge (j, i, w) means participant j's data
/// improves participant i's model by w > 0. A missing edge means w = 0.
class BenefitGraph {
public:
    BenefitGraph() = default;
    /// Throws InvalidInput on self-loops, duplicate ordered pairs,
    /// non-positive or non-finite weights, and out-of-range ids.
    explicit BenefitGraph(std::size_t n, std::vector<BenefitEdge> edges = {});

    std::size_t size() const noexcept { return n_; }
    /// Edges ordered by (src, dst).
    std::span<const BenefitEdge> edges() const noexcept { return edges_; }
    double weight(NodeId src, NodeId dst) const;
    DirectedGraph topology() const;

    friend bool operator==(const BenefitGraph&, const BenefitGraph&) = default;

private:
    std::size_t n_ = 0;
    std::vector<BenefitEdge> edges_;
};

/// Conflict-of-interest pairs. Unlike UndirectedGraph, ingestion is strict:
/// a pair listed twice (in either orientation) is an error.
class CompetingGraph {
public:
    CompetingGraph() = default;
    explicit CompetingGraph(std::size_t n,
                            std::vector<std::pair<NodeId, NodeId>> pairs = {});

    std::size_t size() const noexcept { return graph_.size(); }
    bool competes(NodeId a, NodeId b) const { return graph_.adjacent(a, b); }
    std::vector<std::pair<NodeId, NodeId>> pairs() const { return graph_.edges(); }
    const UndirectedGraph& graph() const noexcept { return graph_; }

    friend bool operator==(const CompetingGraph&, const CompetingGraph&) = default;

private:
    UndirectedGraph graph_;
};

/// Non-empty set of participants, kept sorted.
class Coalition {
public:
    Coalition() = default;
    /// Throws InvalidInput when empty or when a member repeats.
    explicit Coalition(std::vector<NodeId> members);
    Coalition(std::initializer_list<NodeId> members)
        : Coalition(std::vector<NodeId>(members)) {}

    std::span<const NodeId> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    NodeId front() const { return members_.front(); }
    bool contains(NodeId v) const;

    friend bool operator==(const Coalition&, const Coalition&) = default;
    friend auto operator<=>(const Coalition&, const Coalition&) = default;

private:
    std::vector<NodeId> members_;
};

/// Disjoint cover of [0, n). Blocks are ordered by their smallest member.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidInput unless the blocks are disjoint and cover [0, n).
    Partition(std::size_t n, std::vector<Coalition> blocks);

    static Partition singletons(std::size_t n);
    static Partition grand(std::size_t n);

    std::size_t node_count() const noexcept { return block_of_.size(); }
    std::size_t size() const noexcept { return blocks_.size(); }
    std::span<const Coalition> blocks() const noexcept { return blocks_; }
    const Coalition& operator[](std::size_t k) const { return blocks_.at(k); }
    /// Index of the block holding v.
    std::size_t block_of(NodeId v) const { return block_of_.at(v); }

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.blocks_ == b.blocks_ && a.block_of_.size() == b.block_of_.size();
    }

private:
    std::vector<Coalition> blocks_;
    std::vector<std::size_t> block_of_;
};

/// Collaboration actually realized by a partition: the union of the induced
/// benefit subgraphs of its coalitions.
class DataUsageGraph {
public:
    DataUsageGraph() = default;
    explicit DataUsageGraph(DirectedGraph graph) : graph_(std::move(graph)) {}

    const DirectedGraph& graph() const noexcept { return graph_; }
    std::size_t size() const noexcept { return graph_.size(); }
    std::vector<std::pair<NodeId, NodeId>> edges() const { return graph_.edges(); }

private:
    DirectedGraph graph_;
};

/// Keeps the edges of g with both endpoints in s. The node universe is
/// unchanged.
BenefitGraph induced_benefit_subgraph(const BenefitGraph& g, const Coalition& s);

/// Sum of the induced edge weights of s.
double coalition_utility(const BenefitGraph& g, const Coalition& s);

/// Sum of the weights of induced edges pointing into i. Throws when i is
/// not a member of s.
double member_utility(const BenefitGraph& g, const Coalition& s, NodeId i);

/// Singletons are always valid. Larger coalitions need every member to both
/// give to and receive from the rest of the coalition.
bool is_coalition_valid(const BenefitGraph& g, const Coalition& s);

DataUsageGraph data_usage_graph(const BenefitGraph& g, const Partition& p);

double total_utility(const BenefitGraph& g, const Partition& p);

/// member_utility of every node under p, indexed by node.
std::vector<double> member_utilities(const BenefitGraph& g, const Partition& p);

/// True when every block of `fine` lies inside a single block of `coarse`.
bool is_coarsening_of(const Partition& coarse, const Partition& fine);

} // namespace coalition

#endif // COALITION_GRAPH_HPP
