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

#include "coalition/oracle.hpp"

#include <string>

#include "coalition/error.hpp"
#include "coalition/primitives.hpp"

namespace coalition {

namespace {

void check_partition(const BenefitGraph& b, const Partition& p) {
    if (p.node_count() != b.size()) {
        throw InvalidInput("partition covers " + std::to_string(p.node_count()) +
                           " nodes, benefit graph has " + std::to_string(b.size()));
    }
}

std::string describe(const Partition& p, const std::vector<std::size_t>& blocks) {
    std::string text;
    for (std::size_t k : blocks) {
        text += text.empty() ? "{" : " + {";
        bool first = true;
        for (NodeId v : p[k].members()) {
            text += (first ? "" : ",") + std::to_string(v);
            first = false;
        }
        text += "}";
    }
    return text;
}

// Advances `combo` (strictly increasing indices below n) to the next
// combination of the same size in lexicographic order.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n) {
    const std::size_t k = combo.size();
    for (std::size_t i = k; i-- > 0;) {
        if (combo[i] < n - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

} // namespace

std::string_view to_string(MergeMode mode) {
    return mode == MergeMode::strict_independence ? "strict-independence" : "reachability";
}

MergeMode parse_merge_mode(std::string_view text) {
    if (text == "strict" || text == "strict-independence") {
        return MergeMode::strict_independence;
    }
    if (text == "reachability") {
        return MergeMode::reachability;
    }
    throw InvalidInput("unknown merge mode '" + std::string(text) + "'");
}

std::vector<Principle1Finding> check_principle1(const BenefitGraph& b, const Partition& p) {
    check_partition(b, p);
    std::vector<Principle1Finding> findings;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const Coalition& s = p[k];
        if (s.size() < 2) {
            continue;
        }
        for (NodeId i : s.members()) {
            double gives = 0.0;
            double receives = 0.0;
            for (NodeId j : s.members()) {
                if (j != i) {
                    gives += b.weight(i, j);
                    receives += b.weight(j, i);
                }
            }
            if (!(receives > 0.0)) {
                findings.push_back({k, i, Direction::incoming});
            }
            if (!(gives > 0.0)) {
                findings.push_back({k, i, Direction::outgoing});
            }
        }
    }
    return findings;
}

std::vector<Principle2Finding> check_principle2(const BenefitGraph& b, const CompetingGraph& c,
                                                const Partition& p) {
    check_partition(b, p);
    if (c.size() != b.size()) {
        throw InvalidInput("competing graph size does not match benefit graph");
    }
    const DataUsageGraph usage = data_usage_graph(b, p);
    std::vector<Principle2Finding> findings;
    for (auto [x, y] : c.pairs()) {
        if (reachable(usage.graph(), x, y)) {
            findings.push_back({x, y});
        }
        if (reachable(usage.graph(), y, x)) {
            findings.push_back({y, x});
        }
    }
    return findings;
}

bool merged_admissible(const BenefitGraph& b, const CompetingGraph& c, const Coalition& union_set,
                       MergeMode mode) {
    if (!is_coalition_valid(b, union_set)) {
        return false;
    }
    const auto members = union_set.members();
    if (mode == MergeMode::strict_independence) {
        for (std::size_t x = 0; x < members.size(); ++x) {
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                if (c.competes(members[x], members[y])) {
                    return false;
                }
            }
        }
        return true;
    }
    const DirectedGraph inside = induced_benefit_subgraph(b, union_set).topology();
    for (std::size_t x = 0; x < members.size(); ++x) {
        for (std::size_t y = x + 1; y < members.size(); ++y) {
            if (c.competes(members[x], members[y]) &&
                (reachable(inside, members[x], members[y]) ||
                 reachable(inside, members[y], members[x]))) {
                return false;
            }
        }
    }
    return true;
}

std::optional<std::vector<std::size_t>> find_blocking_merge(const BenefitGraph& b,
                                                            const CompetingGraph& c,
                                                            const Partition& p, MergeMode mode,
                                                            std::size_t cap) {
    check_partition(b, p);
    if (p.size() > cap) {
        throw LimitExceeded("blocking-merge search refused: " + std::to_string(p.size()) +
                            " coalitions exceeds the oracle cap of " + std::to_string(cap));
    }
    std::vector<double> utility(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        utility[k] = coalition_utility(b, p[k]);
    }
    for (std::size_t size = 2; size <= p.size(); ++size) {
        std::vector<std::size_t> combo(size);
        for (std::size_t i = 0; i < size; ++i) {
            combo[i] = i;
        }
        do {
            std::vector<NodeId> members;
            double parts = 0.0;
            for (std::size_t k : combo) {
                auto span = p[k].members();
                members.insert(members.end(), span.begin(), span.end());
                parts += utility[k];
            }
            const Coalition merged(std::move(members));
            if (coalition_utility(b, merged) > parts + kUtilityTolerance &&
                merged_admissible(b, c, merged, mode)) {
                return combo;
            }
        } while (next_combination(combo, p.size()));
    }
    return std::nullopt;
}

VerificationReport verify(const BenefitGraph& b, const CompetingGraph& c, const Partition& p,
                          MergeMode mode, std::size_t cap) {
    VerificationReport report;
    report.mode = mode;
    report.principle1 = check_principle1(b, p);
    report.principle2 = check_principle2(b, c, p);
    report.blocking = find_blocking_merge(b, c, p, mode, cap);
    report.principle1_ok = report.principle1.empty();
    report.principle2_ok = report.principle2.empty();
    report.optimal_ok = !report.blocking.has_value();

    for (const auto& f : report.principle1) {
        report.violations.push_back(
            "principle1: node " + std::to_string(f.member) + " in coalition " +
            describe(p, {f.coalition}) +
            (f.missing == Direction::incoming ? " receives no benefit" : " benefits no one"));
    }
    for (const auto& f : report.principle2) {
        report.violations.push_back("principle2: node " + std::to_string(f.from) +
                                    " reaches competitor " + std::to_string(f.to));
    }
    if (report.blocking) {
        report.violations.push_back("optimality: blocking merge " + describe(p, *report.blocking));
    }
    return report;
}

} // namespace coalition
