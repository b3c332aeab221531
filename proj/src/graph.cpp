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

#include "coalition/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coalition/error.hpp"

namespace coalition {

namespace {

void check_node(std::size_t n, NodeId v, const char* what) {
    if (v >= n) {
        throw InvalidInput(std::string(what) + ": node " + std::to_string(v) +
                           " out of range [0, " + std::to_string(n) + ")");
    }
}

void check_members(const BenefitGraph& g, const Coalition& s) {
    if (s.size() == 0) {
        throw InvalidInput("coalition is empty");
    }
    for (NodeId v : s.members()) {
        check_node(g.size(), v, "coalition");
    }
}

} // namespace

// ---------------------------------------------------------------------------
// DirectedGraph

DirectedGraph::DirectedGraph(std::size_t n, std::vector<std::pair<NodeId, NodeId>> edges)
    : out_(n) {
    for (auto [src, dst] : edges) {
        check_node(n, src, "directed edge");
        check_node(n, dst, "directed edge");
        if (src == dst) {
            throw InvalidInput("directed edge: self-loop on node " + std::to_string(src));
        }
        out_[src].push_back(dst);
    }
    for (auto& succ : out_) {
        std::sort(succ.begin(), succ.end());
        succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
        edge_count_ += succ.size();
    }
}

bool DirectedGraph::has_edge(NodeId src, NodeId dst) const {
    if (src >= out_.size()) {
        return false;
    }
    return std::binary_search(out_[src].begin(), out_[src].end(), dst);
}

std::vector<std::pair<NodeId, NodeId>> DirectedGraph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> result;
    result.reserve(edge_count_);
    for (NodeId v = 0; v < out_.size(); ++v) {
        for (NodeId w : out_[v]) {
            result.emplace_back(v, w);
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// UndirectedGraph

UndirectedGraph::UndirectedGraph(std::size_t n, std::vector<std::pair<NodeId, NodeId>> edges)
    : adj_(n) {
    for (auto [a, b] : edges) {
        check_node(n, a, "undirected edge");
        check_node(n, b, "undirected edge");
        if (a == b) {
            throw InvalidInput("undirected edge: self-pair on node " + std::to_string(a));
        }
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    std::size_t degree_sum = 0;
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        degree_sum += nbrs.size();
    }
    edge_count_ = degree_sum / 2;
}

bool UndirectedGraph::adjacent(NodeId a, NodeId b) const {
    if (a >= adj_.size()) {
        return false;
    }
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

std::vector<std::pair<NodeId, NodeId>> UndirectedGraph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> result;
    result.reserve(edge_count_);
    for (NodeId a = 0; a < adj_.size(); ++a) {
        for (NodeId b : adj_[a]) {
            if (a < b) {
                result.emplace_back(a, b);
            }
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// BenefitGraph

BenefitGraph::BenefitGraph(std::size_t n, std::vector<BenefitEdge> edges)
    : n_(n), edges_(std::move(edges)) {
    for (const auto& e : edges_) {
        check_node(n, e.src, "benefit edge");
        check_node(n, e.dst, "benefit edge");
        if (e.src == e.dst) {
            throw InvalidInput("benefit edge: self-loop on node " + std::to_string(e.src));
        }
        if (!std::isfinite(e.weight) || e.weight <= 0.0) {
            throw InvalidInput("benefit edge (" + std::to_string(e.src) + ", " +
                               std::to_string(e.dst) + "): weight must be positive and finite");
        }
    }
    std::sort(edges_.begin(), edges_.end(), [](const BenefitEdge& a, const BenefitEdge& b) {
        return std::pair(a.src, a.dst) < std::pair(b.src, b.dst);
    });
    auto dup = std::adjacent_find(edges_.begin(), edges_.end(),
                                  [](const BenefitEdge& a, const BenefitEdge& b) {
                                      return a.src == b.src && a.dst == b.dst;
                                  });
    if (dup != edges_.end()) {
        throw InvalidInput("benefit edge (" + std::to_string(dup->src) + ", " +
                           std::to_string(dup->dst) + ") listed more than once");
    }
}

double BenefitGraph::weight(NodeId src, NodeId dst) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair(src, dst),
                               [](const BenefitEdge& e, const std::pair<NodeId, NodeId>& key) {
                                   return std::pair(e.src, e.dst) < key;
                               });
    if (it != edges_.end() && it->src == src && it->dst == dst) {
        return it->weight;
    }
    return 0.0;
}

DirectedGraph BenefitGraph::topology() const {
    std::vector<std::pair<NodeId, NodeId>> pairs;
    pairs.reserve(edges_.size());
    for (const auto& e : edges_) {
        pairs.emplace_back(e.src, e.dst);
    }
    return DirectedGraph(n_, std::move(pairs));
}

// ---------------------------------------------------------------------------
// CompetingGraph

CompetingGraph::CompetingGraph(std::size_t n, std::vector<std::pair<NodeId, NodeId>> pairs) {
    for (auto& [a, b] : pairs) {
        if (a > b) {
            std::swap(a, b);
        }
    }
    auto sorted = pairs;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        throw InvalidInput("competing pair {" + std::to_string(dup->first) + ", " +
                           std::to_string(dup->second) + "} listed more than once");
    }
    graph_ = UndirectedGraph(n, std::move(pairs));
}

// ---------------------------------------------------------------------------
// Coalition / Partition

Coalition::Coalition(std::vector<NodeId> members) : members_(std::move(members)) {
    if (members_.empty()) {
        throw InvalidInput("coalition is empty");
    }
    std::sort(members_.begin(), members_.end());
    auto dup = std::adjacent_find(members_.begin(), members_.end());
    if (dup != members_.end()) {
        throw InvalidInput("coalition lists node " + std::to_string(*dup) + " twice");
    }
}

bool Coalition::contains(NodeId v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

Partition::Partition(std::size_t n, std::vector<Coalition> blocks)
    : blocks_(std::move(blocks)), block_of_(n, n) {
    for (const auto& block : blocks_) {
        if (block.size() == 0) {
            throw InvalidInput("partition contains an empty coalition");
        }
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Coalition& a, const Coalition& b) { return a.front() < b.front(); });
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
        for (NodeId v : blocks_[k].members()) {
            check_node(n, v, "partition");
            if (block_of_[v] != n) {
                throw InvalidInput("partition: node " + std::to_string(v) +
                                   " belongs to more than one coalition");
            }
            block_of_[v] = k;
        }
    }
    for (NodeId v = 0; v < n; ++v) {
        if (block_of_[v] == n) {
            throw InvalidInput("partition: node " + std::to_string(v) +
                               " is not covered by any coalition");
        }
    }
}

Partition Partition::singletons(std::size_t n) {
    std::vector<Coalition> blocks;
    blocks.reserve(n);
    for (NodeId v = 0; v < n; ++v) {
        blocks.push_back(Coalition{v});
    }
    return Partition(n, std::move(blocks));
}

Partition Partition::grand(std::size_t n) {
    if (n == 0) {
        return Partition(0, {});
    }
    std::vector<NodeId> all(n);
    for (NodeId v = 0; v < n; ++v) {
        all[v] = v;
    }
    return Partition(n, {Coalition(std::move(all))});
}

// ---------------------------------------------------------------------------
// Utilities

BenefitGraph induced_benefit_subgraph(const BenefitGraph& g, const Coalition& s) {
    check_members(g, s);
    std::vector<BenefitEdge> kept;
    for (const auto& e : g.edges()) {
        if (s.contains(e.src) && s.contains(e.dst)) {
            kept.push_back(e);
        }
    }
    return BenefitGraph(g.size(), std::move(kept));
}

double coalition_utility(const BenefitGraph& g, const Coalition& s) {
    check_members(g, s);
    double sum = 0.0;
    for (const auto& e : g.edges()) {
        if (s.contains(e.src) && s.contains(e.dst)) {
            sum += e.weight;
        }
    }
    return sum;
}

double member_utility(const BenefitGraph& g, const Coalition& s, NodeId i) {
    check_members(g, s);
    if (!s.contains(i)) {
        throw InvalidInput("member_utility: node " + std::to_string(i) +
                           " is not a member of the coalition");
    }
    double sum = 0.0;
    for (NodeId j : s.members()) {
        if (j != i) {
            sum += g.weight(j, i);
        }
    }
    return sum;
}

bool is_coalition_valid(const BenefitGraph& g, const Coalition& s) {
    check_members(g, s);
    if (s.size() == 1) {
        return true;
    }
    for (NodeId i : s.members()) {
        double gives = 0.0;
        double receives = 0.0;
        for (NodeId j : s.members()) {
            if (j != i) {
                gives += g.weight(i, j);
                receives += g.weight(j, i);
            }
        }
        if (!(gives > 0.0 && receives > 0.0)) {
            return false;
        }
    }
    return true;
}

DataUsageGraph data_usage_graph(const BenefitGraph& g, const Partition& p) {
    if (p.node_count() != g.size()) {
        throw InvalidInput("data_usage_graph: partition covers " +
                           std::to_string(p.node_count()) + " nodes, graph has " +
                           std::to_string(g.size()));
    }
    std::vector<std::pair<NodeId, NodeId>> used;
    for (const auto& e : g.edges()) {
        if (p.block_of(e.src) == p.block_of(e.dst)) {
            used.emplace_back(e.src, e.dst);
        }
    }
    return DataUsageGraph(DirectedGraph(g.size(), std::move(used)));
}

double total_utility(const BenefitGraph& g, const Partition& p) {
    double sum = 0.0;
    for (const auto& block : p.blocks()) {
        sum += coalition_utility(g, block);
    }
    return sum;
}

std::vector<double> member_utilities(const BenefitGraph& g, const Partition& p) {
    if (p.node_count() != g.size()) {
        throw InvalidInput("member_utilities: partition does not match graph size");
    }
    std::vector<double> result(g.size(), 0.0);
    for (const auto& e : g.edges()) {
        if (p.block_of(e.src) == p.block_of(e.dst)) {
            result[e.dst] += e.weight;
        }
    }
    return result;
}

bool is_coarsening_of(const Partition& coarse, const Partition& fine) {
    if (coarse.node_count() != fine.node_count()) {
        return false;
    }
    for (const auto& block : fine.blocks()) {
        const std::size_t target = coarse.block_of(block.front());
        for (NodeId v : block.members()) {
            if (coarse.block_of(v) != target) {
                return false;
            }
        }
    }
    return true;
}

} // namespace coalition
