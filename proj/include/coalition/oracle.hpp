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

#ifndef COALITION_ORACLE_HPP
#define COALITION_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coalition/graph.hpp"

namespace coalition {

/// How "the union satisfies both principles" is judged for a candidate
/// merge.
enum class MergeMode {
    /// No competing pair inside the union.
    strict_independence,
    /// Competing pairs may share the union as long as neither reaches the
    /// other in the union's benefit subgraph.
    reachability,
};

std::string_view to_string(MergeMode mode);
/// Accepts "strict" / "strict-independence" and "reachability".
MergeMode parse_merge_mode(std::string_view text);

inline constexpr std::size_t kDefaultOracleCap = 15;

enum class Direction { incoming, outgoing };

/// A member of a multi-member coalition that receives nothing from, or
/// gives nothing to, the rest of its coalition.
struct Principle1Finding {
    std::size_t coalition = 0;  // block index in the partition
    NodeId member = 0;
    Direction missing = Direction::incoming;

    friend bool operator==(const Principle1Finding&, const Principle1Finding&) = default;
};

/// `from` reaches its competitor `to` in the data usage graph.
struct Principle2Finding {
    NodeId from = 0;
    NodeId to = 0;

    friend bool operator==(const Principle2Finding&, const Principle2Finding&) = default;
};

struct VerificationReport {
    bool principle1_ok = true;
    bool principle2_ok = true;
    bool optimal_ok = true;
    MergeMode mode = MergeMode::strict_independence;
    std::vector<Principle1Finding> principle1;
    std::vector<Principle2Finding> principle2;
    /// Block indices of the smallest blocking merge set, when one exists.
    std::optional<std::vector<std::size_t>> blocking;
    /// Findings rendered as text, one per line.
    std::vector<std::string> violations;
};

std::vector<Principle1Finding> check_principle1(const BenefitGraph& b, const Partition& p);

std::vector<Principle2Finding> check_principle2(const BenefitGraph& b, const CompetingGraph& c,
                                                const Partition& p);

bool merged_admissible(const BenefitGraph& b, const CompetingGraph& c, const Coalition& union_set,
                       MergeMode mode);

/// Exhaustive search, by size then lexicographically over block indices,
/// for a set of at least two blocks whose union is admissible and strictly
/// more useful than its parts. Throws LimitExceeded when p has more than
/// `cap` blocks.
std::optional<std::vector<std::size_t>> find_blocking_merge(
    const BenefitGraph& b, const CompetingGraph& c, const Partition& p,
    MergeMode mode = MergeMode::strict_independence, std::size_t cap = kDefaultOracleCap);

VerificationReport verify(const BenefitGraph& b, const CompetingGraph& c, const Partition& p,
                          MergeMode mode = MergeMode::strict_independence,
                          std::size_t cap = kDefaultOracleCap);

} // namespace coalition

#endif // COALITION_ORACLE_HPP
