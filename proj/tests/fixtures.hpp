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

// Instances shared by the unit and acceptance suites.

#ifndef COALITION_TESTS_FIXTURES_HPP
#define COALITION_TESTS_FIXTURES_HPP

#include <vector>

#include "coalition/instance.hpp"

namespace coalition::fixtures {

/// Ten hospitals: v0..v4 large, v5..v9 small. Competition is limited to
/// (v1,v4), (v2,v3), (v2,v4). Large hospitals {v0,v3,v4} help each other,
/// v1 and v2 help each other, the small hospitals form a ring, and each
/// large hospital helps one small hospital. Small hospitals help no large
/// one.
inline Instance hospitals() {
    std::vector<BenefitEdge> edges;
    auto both = [&](NodeId a, NodeId b, double w) {
        edges.push_back({a, b, w});
        edges.push_back({b, a, w});
    };
    both(0, 3, 0.3);
    both(0, 4, 0.3);
    both(3, 4, 0.3);
    both(1, 2, 0.4);
    for (NodeId v = 5; v <= 9; ++v) {
        edges.push_back({v, v == 9 ? NodeId{5} : NodeId(v + 1), 0.15});
    }
    edges.push_back({0, 5, 0.2});
    edges.push_back({3, 6, 0.2});
    edges.push_back({4, 7, 0.2});
    edges.push_back({1, 8, 0.2});
    edges.push_back({2, 9, 0.2});
    return Instance{BenefitGraph(10, std::move(edges)), CompetingGraph(10, {{1, 4}, {2, 3}, {2, 4}}),
                    {}};
}

/// A 2-cycle between two singletons that the clique cover separated.
inline Instance merge_cycle() {
    return Instance{BenefitGraph(3, {{1, 2, 1.0}, {2, 1, 1.0}}), CompetingGraph(3, {{0, 1}}), {}};
}

/// Condensation {0,1} -> {2} -> {3,4}, nobody competes.
inline Instance merge_path() {
    return Instance{BenefitGraph(5, {{0, 1, 1.0},
                                     {1, 0, 1.0},
                                     {1, 2, 1.0},
                                     {2, 3, 1.0},
                                     {3, 4, 1.0},
                                     {4, 3, 1.0}}),
                    CompetingGraph(5), {}};
}

/// Two 2-cycles joined by a single edge 1 -> 2, nobody competes.
inline Instance merge_neighbors() {
    return Instance{
        BenefitGraph(4, {{0, 1, 1.0}, {1, 0, 1.0}, {2, 3, 1.0}, {3, 2, 1.0}, {1, 2, 1.0}}),
        CompetingGraph(4), {}};
}

} // namespace coalition::fixtures

#endif // COALITION_TESTS_FIXTURES_HPP
