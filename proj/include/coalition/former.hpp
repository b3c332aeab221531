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

#ifndef COALITION_FORMER_HPP
#define COALITION_FORMER_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string_view>
#include <utility>
#include <vector>

#include "coalition/graph.hpp"
#include "coalition/primitives.hpp"

namespace coalition {

using CoalitionId = std::size_t;

/// Coalition-level view of the benefit and competing graphs. Nodes are
/// coalition ids; zb has an edge l -> l' when some member of l benefits some
/// member of l', and zc joins l and l' when some pair of their members
/// compete.
struct QuotientState {
    std::size_t node_count = 0;
    std::map<CoalitionId, Coalition> coalitions;
    std::map<CoalitionId, std::set<CoalitionId>> zb;
    std::map<CoalitionId, std::set<CoalitionId>> zc;
    CoalitionId next_id = 0;

    bool benefits(CoalitionId from, CoalitionId to) const;
    bool competes(CoalitionId a, CoalitionId b) const;
    Partition partition() const;

    friend bool operator==(const QuotientState&, const QuotientState&) = default;
};

enum class MergeKind { cycle, path, neighbors };

std::string_view to_string(MergeKind kind);

struct MergeCandidate {
    MergeKind kind = MergeKind::cycle;
    /// Cycle: canonical rotation starting at the smallest id. Path: source
    /// to sink. Neighbors: (min id, max id).
    std::vector<CoalitionId> coalition_ids;

    friend bool operator==(const MergeCandidate&, const MergeCandidate&) = default;
};

struct FormationOptions {
    CliqueCoverOptions clique;
    /// Upper bound on partial sequences explored by one candidate search.
    std::size_t enumeration_limit = kDefaultEnumerationLimit;
};

struct FormationResult {
    Partition baseline;
    Partition partition;
    std::vector<MergeCandidate> trace;
    QuotientState final_state;
};

/// Clique cover of the inverse competing graph, each block split into the
/// strong components of its induced benefit subgraph.
Partition baseline_partition(const BenefitGraph& b, const CompetingGraph& c,
                             const CliqueCoverOptions& options = {});

/// Ids follow the partition's block order, so next_id == p.size().
QuotientState build_quotient(const BenefitGraph& b, const CompetingGraph& c, const Partition& p);

/// Checks every QuotientState invariant against the source graphs.
bool quotient_consistent(const QuotientState& q, const BenefitGraph& b, const CompetingGraph& c);

/// Shortest zb cycle (ties: smallest canonical form) whose coalitions are
/// pairwise independent and include at least one singleton.
std::optional<MergeCandidate> find_cycle_candidate(
    const QuotientState& q, std::size_t limit = kDefaultEnumerationLimit);

/// Shortest simple zb path (ties: lexicographic) between two coalitions of
/// size >= 2 that passes through a singleton, all coalitions pairwise
/// independent.
std::optional<MergeCandidate> find_path_candidate(
    const QuotientState& q, std::size_t limit = kDefaultEnumerationLimit);

/// Smallest (min id, max id) zb-adjacent, independent pair of coalitions
/// that both have size >= 2.
std::optional<MergeCandidate> find_neighbors_candidate(const QuotientState& q);

/// Replaces the candidate's coalitions by their union under id next_id.
/// Throws InvalidInput on a stale or inadmissible candidate.
std::pair<CoalitionId, QuotientState> merge(QuotientState q, const MergeCandidate& x);

FormationResult form_coalitions(const BenefitGraph& b, const CompetingGraph& c,
                                const FormationOptions& options = {});

} // namespace coalition

#endif // COALITION_FORMER_HPP
