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

#include "coalition/primitives.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <string>

#include "coalition/error.hpp"

namespace coalition {

namespace {

/// Fixed-width bitset over local node indices.
class Bits {
public:
    explicit Bits(std::size_t n = 0) : words_((n + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
    bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) {
            c += static_cast<std::size_t>(std::popcount(w));
        }
        return c;
    }

    Bits operator&(const Bits& o) const {
        Bits r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            r.words_[k] &= o.words_[k];
        }
        return r;
    }

    Bits operator|(const Bits& o) const {
        Bits r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            r.words_[k] |= o.words_[k];
        }
        return r;
    }

    Bits without(const Bits& o) const {
        Bits r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            r.words_[k] &= ~o.words_[k];
        }
        return r;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                const int bit = std::countr_zero(w);
                f(k * 64 + static_cast<std::size_t>(bit));
                w &= w - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

class BronKerbosch {
public:
    BronKerbosch(const UndirectedGraph& g, std::span<const NodeId> nodes)
        : nodes_(nodes.begin(), nodes.end()), adj_(nodes_.size(), Bits(nodes_.size())) {
        for (std::size_t a = 0; a < nodes_.size(); ++a) {
            for (std::size_t b = a + 1; b < nodes_.size(); ++b) {
                if (g.adjacent(nodes_[a], nodes_[b])) {
                    adj_[a].set(b);
                    adj_[b].set(a);
                }
            }
        }
    }

    CliqueSet run() {
        Bits all(nodes_.size());
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            all.set(i);
        }
        if (!nodes_.empty()) {
            expand(all, Bits(nodes_.size()));
        }
        std::sort(found_.begin(), found_.end());
        return std::move(found_);
    }

private:
    void expand(Bits candidates, Bits excluded) {
        if (candidates.none()) {
            if (excluded.none()) {
                std::vector<NodeId> members;
                members.reserve(current_.size());
                for (std::size_t i : current_) {
                    members.push_back(nodes_[i]);
                }
                found_.emplace_back(std::move(members));
            }
            return;
        }
        // Tomita pivot: the node of P u X with most neighbours in P.
        std::size_t pivot = 0;
        std::size_t best = 0;
        bool have_pivot = false;
        (candidates | excluded).for_each([&](std::size_t u) {
            const std::size_t c = (candidates & adj_[u]).count();
            if (!have_pivot || c > best) {
                pivot = u;
                best = c;
                have_pivot = true;
            }
        });
        const Bits branch = candidates.without(adj_[pivot]);
        branch.for_each([&](std::size_t v) {
            current_.push_back(v);
            expand(candidates & adj_[v], excluded & adj_[v]);
            current_.pop_back();
            candidates.reset(v);
            excluded.set(v);
        });
    }

    std::vector<NodeId> nodes_;
    std::vector<Bits> adj_;
    std::vector<std::size_t> current_;
    CliqueSet found_;
};

CliqueSet cliques_within(const UndirectedGraph& g, std::span<const NodeId> nodes) {
    return BronKerbosch(g, nodes).run();
}

double internal_weight(const BenefitGraph& b, const Coalition& s) {
    return coalition_utility(b, s);
}

/// Tarjan over the nodes of g for which `inside` is true.
class Tarjan {
public:
    Tarjan(const DirectedGraph& g, const std::vector<bool>& inside)
        : g_(g), inside_(inside), index_(g.size(), kUnvisited), low_(g.size(), 0),
          on_stack_(g.size(), false) {}

    std::vector<std::vector<NodeId>> run() {
        for (NodeId v = 0; v < g_.size(); ++v) {
            if (inside_[v] && index_[v] == kUnvisited) {
                visit(v);
            }
        }
        return std::move(components_);
    }

private:
    static constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

    void visit(NodeId v) {
        index_[v] = low_[v] = counter_++;
        stack_.push_back(v);
        on_stack_[v] = true;
        for (NodeId w : g_.successors(v)) {
            if (!inside_[w]) {
                continue;
            }
            if (index_[w] == kUnvisited) {
                visit(w);
                low_[v] = std::min(low_[v], low_[w]);
            } else if (on_stack_[w]) {
                low_[v] = std::min(low_[v], index_[w]);
            }
        }
        if (low_[v] == index_[v]) {
            std::vector<NodeId> component;
            NodeId w;
            do {
                w = stack_.back();
                stack_.pop_back();
                on_stack_[w] = false;
                component.push_back(w);
            } while (w != v);
            std::sort(component.begin(), component.end());
            components_.push_back(std::move(component));
        }
    }

    const DirectedGraph& g_;
    const std::vector<bool>& inside_;
    std::vector<std::size_t> index_;
    std::vector<std::size_t> low_;
    std::vector<bool> on_stack_;
    std::vector<NodeId> stack_;
    std::size_t counter_ = 0;
    std::vector<std::vector<NodeId>> components_;
};

class Johnson {
public:
    Johnson(const DirectedGraph& g, std::size_t limit)
        : g_(g), limit_(limit), blocked_(g.size(), false), blocked_by_(g.size()),
          in_component_(g.size(), false) {}

    std::vector<NodeSequence> run() {
        const std::size_t n = g_.size();
        for (NodeId s = 0; s < n; ++s) {
            // Strong component of s in the subgraph induced by {s, ..., n-1}.
            std::vector<bool> tail(n, false);
            for (NodeId v = s; v < n; ++v) {
                tail[v] = true;
            }
            std::vector<NodeId> component;
            for (auto& c : Tarjan(g_, tail).run()) {
                if (c.front() == s) {
                    component = std::move(c);
                    break;
                }
            }
            if (component.size() < 2) {
                continue;
            }
            std::fill(in_component_.begin(), in_component_.end(), false);
            for (NodeId v : component) {
                in_component_[v] = true;
                blocked_[v] = false;
                blocked_by_[v].clear();
            }
            start_ = s;
            circuit(s);
        }
        std::sort(cycles_.begin(), cycles_.end(), shortlex_less);
        return std::move(cycles_);
    }

private:
    bool circuit(NodeId v) {
        bool found = false;
        stack_.push_back(v);
        blocked_[v] = true;
        for (NodeId w : g_.successors(v)) {
            if (!in_component_[w]) {
                continue;
            }
            if (w == start_) {
                emit();
                found = true;
            } else if (!blocked_[w] && circuit(w)) {
                found = true;
            }
        }
        if (found) {
            unblock(v);
        } else {
            for (NodeId w : g_.successors(v)) {
                if (in_component_[w]) {
                    auto& list = blocked_by_[w];
                    if (std::find(list.begin(), list.end(), v) == list.end()) {
                        list.push_back(v);
                    }
                }
            }
        }
        stack_.pop_back();
        return found;
    }

    void unblock(NodeId u) {
        blocked_[u] = false;
        auto pending = std::move(blocked_by_[u]);
        blocked_by_[u].clear();
        for (NodeId w : pending) {
            if (blocked_[w]) {
                unblock(w);
            }
        }
    }

    void emit() {
        if (cycles_.size() >= limit_) {
            throw LimitExceeded("cycle enumeration exceeded the limit of " +
                                std::to_string(limit_) + " cycles");
        }
        cycles_.push_back(stack_);
    }

    const DirectedGraph& g_;
    std::size_t limit_;
    std::vector<bool> blocked_;
    std::vector<std::vector<NodeId>> blocked_by_;
    std::vector<bool> in_component_;
    std::vector<NodeId> stack_;
    NodeId start_ = 0;
    std::vector<NodeSequence> cycles_;
};

void check_node(const DirectedGraph& g, NodeId v, const char* what) {
    if (v >= g.size()) {
        throw InvalidInput(std::string(what) + ": node " + std::to_string(v) + " out of range");
    }
}

} // namespace

bool shortlex_less(const NodeSequence& a, const NodeSequence& b) {
    if (a.size() != b.size()) {
        return a.size() < b.size();
    }
    return a < b;
}

UndirectedGraph inverse_graph(const CompetingGraph& c) {
    const std::size_t n = c.size();
    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = a + 1; b < n; ++b) {
            if (!c.competes(a, b)) {
                pairs.emplace_back(a, b);
            }
        }
    }
    return UndirectedGraph(n, std::move(pairs));
}

CliqueSet maximal_cliques(const UndirectedGraph& g, std::size_t max_nodes) {
    if (g.size() > max_nodes) {
        throw LimitExceeded("maximal clique search refused: " + std::to_string(g.size()) +
                            " nodes exceeds the guard of " + std::to_string(max_nodes));
    }
    std::vector<NodeId> nodes(g.size());
    for (NodeId v = 0; v < g.size(); ++v) {
        nodes[v] = v;
    }
    return cliques_within(g, nodes);
}

Partition clique_partition(const UndirectedGraph& g, const CliqueCoverOptions& options,
                           const BenefitGraph* benefit) {
    if (g.size() > options.max_nodes) {
        throw LimitExceeded("clique cover refused: " + std::to_string(g.size()) +
                            " nodes exceeds the guard of " + std::to_string(options.max_nodes));
    }
    if (benefit != nullptr && benefit->size() != g.size()) {
        throw InvalidInput("clique_partition: benefit graph size does not match");
    }

    auto better = [&](const Coalition& a, const Coalition& b) {
        if (options.tie_break == CliqueTieBreak::max_cardinality) {
            if (a.size() != b.size()) {
                return a.size() > b.size();
            }
            if (benefit != nullptr) {
                const double wa = internal_weight(*benefit, a);
                const double wb = internal_weight(*benefit, b);
                if (std::abs(wa - wb) > kUtilityTolerance) {
                    return wa > wb;
                }
            }
        }
        return a < b;
    };

    std::vector<bool> taken(g.size(), false);
    std::vector<Coalition> blocks;

    if (options.first) {
        const auto all = maximal_cliques(g, options.max_nodes);
        if (std::find(all.begin(), all.end(), *options.first) == all.end()) {
            throw InvalidInput("clique_partition: forced first clique is not a maximal clique");
        }
        for (NodeId v : options.first->members()) {
            taken[v] = true;
        }
        blocks.push_back(*options.first);
    }

    for (;;) {
        std::vector<NodeId> remaining;
        for (NodeId v = 0; v < g.size(); ++v) {
            if (!taken[v]) {
                remaining.push_back(v);
            }
        }
        if (remaining.empty()) {
            break;
        }
        const auto cliques = cliques_within(g, remaining);
        const Coalition* pick = &cliques.front();
        for (const auto& c : cliques) {
            if (better(c, *pick)) {
                pick = &c;
            }
        }
        for (NodeId v : pick->members()) {
            taken[v] = true;
        }
        blocks.push_back(*pick);
    }
    return Partition(g.size(), std::move(blocks));
}

Partition strongly_connected_components(const DirectedGraph& g) {
    const std::vector<bool> all(g.size(), true);
    std::vector<Coalition> blocks;
    for (auto& c : Tarjan(g, all).run()) {
        blocks.emplace_back(std::move(c));
    }
    return Partition(g.size(), std::move(blocks));
}

std::vector<NodeSequence> enumerate_cycles(const DirectedGraph& g, std::size_t limit) {
    return Johnson(g, limit).run();
}

std::vector<NodeSequence> enumerate_simple_paths(const DirectedGraph& g, NodeId s, NodeId t,
                                                 std::size_t limit) {
    check_node(g, s, "enumerate_simple_paths");
    check_node(g, t, "enumerate_simple_paths");
    if (s == t) {
        throw InvalidInput("enumerate_simple_paths: source and target must differ");
    }
    std::vector<NodeSequence> paths;
    std::vector<bool> on_path(g.size(), false);
    NodeSequence path{s};
    on_path[s] = true;

    std::function<void(NodeId)> dfs = [&](NodeId v) {
        for (NodeId w : g.successors(v)) {
            if (on_path[w]) {
                continue;
            }
            if (w == t) {
                if (paths.size() >= limit) {
                    throw LimitExceeded("simple path enumeration exceeded the limit of " +
                                        std::to_string(limit) + " paths");
                }
                paths.push_back(path);
                paths.back().push_back(t);
                continue;
            }
            on_path[w] = true;
            path.push_back(w);
            dfs(w);
            path.pop_back();
            on_path[w] = false;
        }
    };
    dfs(s);
    std::sort(paths.begin(), paths.end(), shortlex_less);
    return paths;
}

bool reachable(const DirectedGraph& g, NodeId s, NodeId t) {
    check_node(g, s, "reachable");
    check_node(g, t, "reachable");
    std::vector<bool> seen(g.size(), false);
    std::queue<NodeId> frontier;
    for (NodeId w : g.successors(s)) {
        if (!seen[w]) {
            seen[w] = true;
            frontier.push(w);
        }
    }
    while (!frontier.empty()) {
        const NodeId v = frontier.front();
        frontier.pop();
        if (v == t) {
            return true;
        }
        for (NodeId w : g.successors(v)) {
            if (!seen[w]) {
                seen[w] = true;
                frontier.push(w);
            }
        }
    }
    return false;
}

} // namespace coalition
