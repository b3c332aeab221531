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

#include "coalition/former.hpp"

#include <algorithm>
#include <string>

#include "coalition/error.hpp"

namespace coalition {

namespace {

/// Dense re-indexing of a QuotientState. Ids are ascending, so lexicographic
/// order over local indices equals lexicographic order over ids.
struct DenseView {
    std::vector<CoalitionId> ids;
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::vector<bool>> conflict;
    std::vector<bool> singleton;

    explicit DenseView(const QuotientState& q) {
        std::map<CoalitionId, std::size_t> local;
        for (const auto& [id, members] : q.coalitions) {
            local.emplace(id, ids.size());
            ids.push_back(id);
            singleton.push_back(members.size() == 1);
        }
        const std::size_t m = ids.size();
        out.resize(m);
        conflict.assign(m, std::vector<bool>(m, false));
        for (const auto& [id, succ] : q.zb) {
            for (CoalitionId t : succ) {
                out[local.at(id)].push_back(local.at(t));
            }
        }
        for (const auto& [id, nbrs] : q.zc) {
            for (CoalitionId t : nbrs) {
                conflict[local.at(id)][local.at(t)] = true;
            }
        }
    }

    std::size_t size() const { return ids.size(); }

    bool compatible(std::size_t w, const std::vector<std::size_t>& path) const {
        return std::none_of(path.begin(), path.end(),
                            [&](std::size_t v) { return conflict[v][w]; });
    }

    std::vector<CoalitionId> to_ids(const std::vector<std::size_t>& seq) const {
        std::vector<CoalitionId> result;
        result.reserve(seq.size());
        for (std::size_t v : seq) {
            result.push_back(ids[v]);
        }
        return result;
    }
};

/// Counts explored partial sequences and fails loudly past the limit.
class Budget {
public:
    Budget(std::size_t limit, const char* what) : limit_(limit), what_(what) {}

    void spend() {
        if (++used_ > limit_) {
            throw LimitExceeded(std::string(what_) + " exceeded the enumeration limit of " +
                                std::to_string(limit_) + " explored sequences");
        }
    }

private:
    std::size_t limit_;
    std::size_t used_ = 0;
    const char* what_;
};

void check_sizes(const BenefitGraph& b, const CompetingGraph& c) {
    if (b.size() != c.size()) {
        throw InvalidInput("benefit graph has " + std::to_string(b.size()) +
                           " nodes but competing graph has " + std::to_string(c.size()));
    }
}

} // namespace

std::string_view to_string(MergeKind kind) {
    switch (kind) {
    case MergeKind::cycle:
        return "cycle";
    case MergeKind::path:
        return "path";
    case MergeKind::neighbors:
        return "neighbors";
    }
    return "unknown";
}

bool QuotientState::benefits(CoalitionId from, CoalitionId to) const {
    auto it = zb.find(from);
    return it != zb.end() && it->second.contains(to);
}

bool QuotientState::competes(CoalitionId a, CoalitionId b) const {
    auto it = zc.find(a);
    return it != zc.end() && it->second.contains(b);
}

Partition QuotientState::partition() const {
    std::vector<Coalition> blocks;
    blocks.reserve(coalitions.size());
    for (const auto& [id, members] : coalitions) {
        blocks.push_back(members);
    }
    return Partition(node_count, std::move(blocks));
}

Partition baseline_partition(const BenefitGraph& b, const CompetingGraph& c,
                             const CliqueCoverOptions& options) {
    check_sizes(b, c);
    const Partition cover = clique_partition(inverse_graph(c), options, &b);
    std::vector<Coalition> blocks;
    for (const auto& clique : cover.blocks()) {
        const Partition sccs =
            strongly_connected_components(induced_benefit_subgraph(b, clique).topology());
        for (const auto& component : sccs.blocks()) {
            if (clique.contains(component.front())) {
                blocks.push_back(component);
            }
        }
    }
    return Partition(b.size(), std::move(blocks));
}

QuotientState build_quotient(const BenefitGraph& b, const CompetingGraph& c, const Partition& p) {
    check_sizes(b, c);
    if (p.node_count() != b.size()) {
        throw InvalidInput("build_quotient: partition covers " + std::to_string(p.node_count()) +
                           " nodes, graphs have " + std::to_string(b.size()));
    }
    QuotientState q;
    q.node_count = b.size();
    for (CoalitionId k = 0; k < p.size(); ++k) {
        q.coalitions.emplace(k, p[k]);
        q.zb[k];
        q.zc[k];
    }
    for (const auto& e : b.edges()) {
        const auto from = p.block_of(e.src);
        const auto to = p.block_of(e.dst);
        if (from != to) {
            q.zb[from].insert(to);
        }
    }
    for (auto [x, y] : c.pairs()) {
        const auto l = p.block_of(x);
        const auto r = p.block_of(y);
        if (l != r) {
            q.zc[l].insert(r);
            q.zc[r].insert(l);
        }
    }
    q.next_id = p.size();
    return q;
}

bool quotient_consistent(const QuotientState& q, const BenefitGraph& b, const CompetingGraph& c) {
    if (q.node_count != b.size() || q.node_count != c.size()) {
        return false;
    }
    std::vector<CoalitionId> keys;
    for (const auto& [id, members] : q.coalitions) {
        keys.push_back(id);
        if (id >= q.next_id) {
            return false;
        }
    }
    auto same_keys = [&](const std::map<CoalitionId, std::set<CoalitionId>>& g) {
        if (g.size() != keys.size()) {
            return false;
        }
        std::size_t k = 0;
        for (const auto& [id, nbrs] : g) {
            if (id != keys[k++]) {
                return false;
            }
        }
        return true;
    };
    if (!same_keys(q.zb) || !same_keys(q.zc)) {
        return false;
    }
    Partition p;
    try {
        p = q.partition();
    } catch (const InvalidInput&) {
        return false;
    }
    std::map<NodeId, CoalitionId> owner;
    for (const auto& [id, members] : q.coalitions) {
        for (NodeId v : members.members()) {
            owner[v] = id;
        }
    }
    std::map<CoalitionId, std::set<CoalitionId>> zb;
    std::map<CoalitionId, std::set<CoalitionId>> zc;
    for (CoalitionId id : keys) {
        zb[id];
        zc[id];
    }
    for (const auto& e : b.edges()) {
        if (owner[e.src] != owner[e.dst]) {
            zb[owner[e.src]].insert(owner[e.dst]);
        }
    }
    for (auto [x, y] : c.pairs()) {
        if (owner[x] == owner[y]) {
            return false;  // competitors share a coalition
        }
        zc[owner[x]].insert(owner[y]);
        zc[owner[y]].insert(owner[x]);
    }
    return zb == q.zb && zc == q.zc;
}

std::optional<MergeCandidate> find_cycle_candidate(const QuotientState& q, std::size_t limit) {
    const DenseView view(q);
    const std::size_t m = view.size();

    // Cycles live inside one strong component of zb.
    std::vector<std::pair<NodeId, NodeId>> local_edges;
    for (std::size_t v = 0; v < m; ++v) {
        for (std::size_t w : view.out[v]) {
            local_edges.emplace_back(static_cast<NodeId>(v), static_cast<NodeId>(w));
        }
    }
    const Partition components =
        strongly_connected_components(DirectedGraph(m, std::move(local_edges)));

    Budget budget(limit, "cycle candidate search");
    std::vector<std::size_t> path;
    std::vector<bool> on_path(m, false);
    std::optional<std::vector<std::size_t>> found;
    bool reached_length = false;

    // Depth-limited search for canonical cycles (smallest index first) of
    // exactly `length` nodes. Successors are tried in ascending order, so the
    // first hit is the lexicographically smallest cycle of that length.
    auto search = [&](auto&& self, std::size_t length, bool has_singleton) -> bool {
        const std::size_t start = path.front();
        const std::size_t last = path.back();
        if (path.size() == length) {
            reached_length = true;
            const auto& succ = view.out[last];
            if (has_singleton && std::binary_search(succ.begin(), succ.end(), start)) {
                found = path;
                return true;
            }
            return false;
        }
        for (std::size_t w : view.out[last]) {
            if (w <= start || on_path[w] ||
                components.block_of(static_cast<NodeId>(w)) !=
                    components.block_of(static_cast<NodeId>(start)) ||
                !view.compatible(w, path)) {
                continue;
            }
            budget.spend();
            on_path[w] = true;
            path.push_back(w);
            const bool hit = self(self, length, has_singleton || view.singleton[w]);
            path.pop_back();
            on_path[w] = false;
            if (hit) {
                return true;
            }
        }
        return false;
    };

    for (std::size_t length = 2; length <= m; ++length) {
        reached_length = false;
        for (std::size_t s = 0; s < m; ++s) {
            if (components[components.block_of(static_cast<NodeId>(s))].size() < 2) {
                continue;
            }
            path.assign(1, s);
            on_path[s] = true;
            const bool hit = search(search, length, view.singleton[s]);
            on_path[s] = false;
            if (hit) {
                return MergeCandidate{MergeKind::cycle, view.to_ids(*found)};
            }
        }
        if (!reached_length) {
            break;
        }
    }
    return std::nullopt;
}

std::optional<MergeCandidate> find_path_candidate(const QuotientState& q, std::size_t limit) {
    const DenseView view(q);
    const std::size_t m = view.size();

    Budget budget(limit, "path candidate search");
    std::vector<std::size_t> path;
    std::optional<std::vector<std::size_t>> found;
    bool reached_length = false;

    // A shortest qualifying path never has a large coalition in its interior:
    // cutting at that coalition leaves a strictly shorter qualifying path. So
    // interiors are searched over singletons only.
    auto search = [&](auto&& self, std::size_t length) -> bool {
        const std::size_t start = path.front();
        const std::size_t last = path.back();
        const bool closing = path.size() + 1 == length;
        for (std::size_t w : view.out[last]) {
            if (closing) {
                if (view.singleton[w] || w == start || !view.compatible(w, path)) {
                    continue;
                }
                reached_length = true;
                found = path;
                found->push_back(w);
                return true;
            }
            if (!view.singleton[w] || !view.compatible(w, path) ||
                std::find(path.begin(), path.end(), w) != path.end()) {
                continue;
            }
            budget.spend();
            path.push_back(w);
            if (path.size() + 1 == length) {
                reached_length = true;
            }
            const bool hit = self(self, length);
            path.pop_back();
            if (hit) {
                return true;
            }
        }
        return false;
    };

    for (std::size_t length = 3; length <= m; ++length) {
        reached_length = false;
        for (std::size_t s = 0; s < m; ++s) {
            if (view.singleton[s]) {
                continue;
            }
            path.assign(1, s);
            if (search(search, length)) {
                return MergeCandidate{MergeKind::path, view.to_ids(*found)};
            }
        }
        if (!reached_length) {
            break;
        }
    }
    return std::nullopt;
}

std::optional<MergeCandidate> find_neighbors_candidate(const QuotientState& q) {
    for (auto a = q.coalitions.begin(); a != q.coalitions.end(); ++a) {
        if (a->second.size() < 2) {
            continue;
        }
        for (auto b = std::next(a); b != q.coalitions.end(); ++b) {
            if (b->second.size() < 2 || q.competes(a->first, b->first)) {
                continue;
            }
            if (q.benefits(a->first, b->first) || q.benefits(b->first, a->first)) {
                return MergeCandidate{MergeKind::neighbors, {a->first, b->first}};
            }
        }
    }
    return std::nullopt;
}

std::pair<CoalitionId, QuotientState> merge(QuotientState q, const MergeCandidate& x) {
    if (x.coalition_ids.size() < 2) {
        throw InvalidInput("merge: a candidate needs at least two coalitions");
    }
    std::set<CoalitionId> merged;
    for (CoalitionId id : x.coalition_ids) {
        if (!q.coalitions.contains(id)) {
            throw InvalidInput("merge: stale candidate, coalition " + std::to_string(id) +
                               " no longer exists");
        }
        if (!merged.insert(id).second) {
            throw InvalidInput("merge: coalition " + std::to_string(id) + " listed twice");
        }
    }
    for (CoalitionId a : merged) {
        for (CoalitionId b : merged) {
            if (q.competes(a, b)) {
                throw InvalidInput("merge: coalitions " + std::to_string(a) + " and " +
                                   std::to_string(b) + " compete");
            }
        }
    }

    const CoalitionId fresh = q.next_id++;
    std::vector<NodeId> members;
    for (CoalitionId id : merged) {
        auto span = q.coalitions.at(id).members();
        members.insert(members.end(), span.begin(), span.end());
        q.coalitions.erase(id);
    }
    q.coalitions.emplace(fresh, Coalition(std::move(members)));

    auto redirect = [&](CoalitionId id) { return merged.contains(id) ? fresh : id; };
    auto rebuild = [&](const std::map<CoalitionId, std::set<CoalitionId>>& g) {
        std::map<CoalitionId, std::set<CoalitionId>> next;
        for (const auto& [id, members] : q.coalitions) {
            next[id];
        }
        for (const auto& [from, targets] : g) {
            for (CoalitionId to : targets) {
                const CoalitionId a = redirect(from);
                const CoalitionId b = redirect(to);
                if (a != b) {
                    next[a].insert(b);
                }
            }
        }
        return next;
    };
    q.zb = rebuild(q.zb);
    q.zc = rebuild(q.zc);
    return {fresh, std::move(q)};
}

FormationResult form_coalitions(const BenefitGraph& b, const CompetingGraph& c,
                                const FormationOptions& options) {
    check_sizes(b, c);
    if (b.size() == 0) {
        throw InvalidInput("form_coalitions: at least one participant is required");
    }
    FormationResult result;
    result.baseline = baseline_partition(b, c, options.clique);
    QuotientState q = build_quotient(b, c, result.baseline);
    const std::size_t limit = options.enumeration_limit;

    auto apply = [&](const MergeCandidate& candidate) {
        result.trace.push_back(candidate);
        q = merge(std::move(q), candidate).second;
    };
    auto merge_cycles = [&] {
        while (auto candidate = find_cycle_candidate(q, limit)) {
            apply(*candidate);
        }
    };
    auto merge_paths = [&] {
        while (auto candidate = find_path_candidate(q, limit)) {
            apply(*candidate);
            merge_cycles();
        }
    };
    auto merge_neighbors = [&] {
        while (auto candidate = find_neighbors_candidate(q)) {
            apply(*candidate);
            merge_cycles();
            merge_paths();
        }
    };

    merge_cycles();
    merge_paths();
    merge_neighbors();

    result.partition = q.partition();
    result.final_state = std::move(q);
    return result;
}

} // namespace coalition
