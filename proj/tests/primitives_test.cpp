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

#include <random>

#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "coalition/error.hpp"
#include "coalition/primitives.hpp"
#include "fixtures.hpp"

namespace coalition {
namespace {

std::vector<std::vector<NodeId>> as_lists(const CliqueSet& cliques) {
    std::vector<std::vector<NodeId>> out;
    for (const auto& c : cliques) {
        out.emplace_back(c.members().begin(), c.members().end());
    }
    return out;
}

std::vector<std::vector<NodeId>> as_lists(const Partition& p) {
    std::vector<std::vector<NodeId>> out;
    for (const auto& c : p.blocks()) {
        out.emplace_back(c.members().begin(), c.members().end());
    }
    return out;
}

using Lists = std::vector<std::vector<NodeId>>;

TEST(InverseGraph, ComplementsCompetition) {
    EXPECT_EQ(inverse_graph(CompetingGraph(3)).edges(),
              (std::vector<std::pair<NodeId, NodeId>>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_EQ(inverse_graph(CompetingGraph(3, {{0, 1}, {0, 2}, {1, 2}})).edge_count(), 0u);
    EXPECT_EQ(inverse_graph(fixtures::hospitals().competing).edge_count(), 42u);
}

TEST(MaximalCliques, SmallCases) {
    const UndirectedGraph triangle(3, {{0, 1}, {0, 2}, {1, 2}});
    EXPECT_EQ(as_lists(maximal_cliques(triangle)), (Lists{{0, 1, 2}}));
    EXPECT_EQ(as_lists(maximal_cliques(UndirectedGraph(3))), (Lists{{0}, {1}, {2}}));
    EXPECT_TRUE(maximal_cliques(UndirectedGraph(0)).empty());
}

TEST(MaximalCliques, HospitalInverseGraph) {
    // Frozen from brute-force subset enumeration: 1 and 3 are independent,
    // so {0,1,3,5..9} is maximal alongside the two large-hospital cliques.
    const auto cliques = maximal_cliques(inverse_graph(fixtures::hospitals().competing));
    EXPECT_EQ(as_lists(cliques), (Lists{{0, 1, 2, 5, 6, 7, 8, 9},
                                        {0, 1, 3, 5, 6, 7, 8, 9},
                                        {0, 3, 4, 5, 6, 7, 8, 9}}));
}

TEST(MaximalCliques, NodeGuard) {
    EXPECT_THROW(maximal_cliques(UndirectedGraph(129)), LimitExceeded);
    EXPECT_THROW(maximal_cliques(UndirectedGraph(10), 9), LimitExceeded);
    EXPECT_EQ(maximal_cliques(UndirectedGraph(129), 129).size(), 129u);
}

TEST(MaximalCliques, MatchesBruteForce) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const double p = 0.1 + 0.8 * (trial % 7) / 6.0;
        const UndirectedGraph g = brute::random_graph(n, p, rng);
        const auto cliques = maximal_cliques(g);
        ASSERT_EQ(as_lists(cliques), brute::maximal_cliques(g)) << "trial " << trial;
        for (const auto& c : cliques) {
            for (NodeId v = 0; v < n; ++v) {
                if (c.contains(v)) {
                    continue;
                }
                const bool extends = std::all_of(c.members().begin(), c.members().end(),
                                                 [&](NodeId u) { return g.adjacent(u, v); });
                EXPECT_FALSE(extends);
            }
        }
    }
}

TEST(CliquePartition, Extremes) {
    const UndirectedGraph complete = inverse_graph(CompetingGraph(5));
    EXPECT_EQ(clique_partition(complete), Partition::grand(5));
    EXPECT_EQ(clique_partition(UndirectedGraph(4)), Partition::singletons(4));
}

TEST(CliquePartition, TieBreaks) {
    const auto inst = fixtures::merge_cycle();
    const UndirectedGraph g = inverse_graph(inst.competing);  // {0,2}, {1,2}

    CliqueCoverOptions lex;
    lex.tie_break = CliqueTieBreak::lexicographic;
    EXPECT_EQ(as_lists(clique_partition(g, lex)), (Lists{{0, 2}, {1}}));

    // Equal sizes; {1,2} carries the benefit weight.
    EXPECT_EQ(as_lists(clique_partition(g, {}, &inst.benefit)), (Lists{{0}, {1, 2}}));
    // Without weights the size tie falls to lexicographic order.
    EXPECT_EQ(as_lists(clique_partition(g)), (Lists{{0, 2}, {1}}));
}

TEST(CliquePartition, ForcedFirstClique) {
    const auto inst = fixtures::hospitals();
    const UndirectedGraph g = inverse_graph(inst.competing);
    CliqueCoverOptions options;
    options.tie_break = CliqueTieBreak::lexicographic;
    options.first = Coalition{0, 3, 4, 5, 6, 7, 8, 9};
    EXPECT_EQ(as_lists(clique_partition(g, options)), (Lists{{0, 3, 4, 5, 6, 7, 8, 9}, {1, 2}}));

    options.first = Coalition{0, 1, 2, 5, 6, 7, 8, 9};
    EXPECT_EQ(as_lists(clique_partition(g, options)), (Lists{{0, 1, 2, 5, 6, 7, 8, 9}, {3, 4}}));

    options.first = Coalition{0, 3};
    EXPECT_THROW(clique_partition(g, options), InvalidInput);
}

TEST(CliquePartition, BlocksAreCliquesCoveringEverything) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 12;
        const UndirectedGraph g = brute::random_graph(n, 0.6, rng);
        for (auto tie : {CliqueTieBreak::max_cardinality, CliqueTieBreak::lexicographic}) {
            CliqueCoverOptions options;
            options.tie_break = tie;
            const Partition p = clique_partition(g, options);  // validates cover
            for (const auto& block : p.blocks()) {
                for (NodeId a : block.members()) {
                    for (NodeId b : block.members()) {
                        EXPECT_TRUE(a == b || g.adjacent(a, b));
                    }
                }
            }
            EXPECT_EQ(p, clique_partition(g, options));
        }
    }
}

TEST(StronglyConnectedComponents, SmallCases) {
    EXPECT_EQ(as_lists(strongly_connected_components(DirectedGraph(2, {{0, 1}, {1, 0}}))),
              (Lists{{0, 1}}));
    EXPECT_EQ(as_lists(strongly_connected_components(DirectedGraph(3, {{0, 1}, {1, 2}}))),
              (Lists{{0}, {1}, {2}}));
    EXPECT_EQ(as_lists(strongly_connected_components(
                  DirectedGraph(4, {{0, 1}, {1, 0}, {1, 2}, {2, 3}, {3, 2}}))),
              (Lists{{0, 1}, {2, 3}}));
}

TEST(StronglyConnectedComponents, MatchesMutualReachability) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const DirectedGraph g = brute::random_digraph(n, 0.05 + 0.5 * (trial % 5) / 4.0, rng);
        ASSERT_EQ(as_lists(strongly_connected_components(g)), brute::strong_components(g))
            << "trial " << trial;
    }
}

TEST(EnumerateCycles, SmallCases) {
    EXPECT_EQ(enumerate_cycles(DirectedGraph(2, {{0, 1}, {1, 0}})), (Lists{{0, 1}}));
    EXPECT_TRUE(enumerate_cycles(DirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}})).empty());
    EXPECT_EQ(enumerate_cycles(DirectedGraph(3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}})),
              (Lists{{0, 1}, {0, 1, 2}}));
}

TEST(EnumerateCycles, LimitFailsLoudly) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId a = 0; a < 9; ++a) {
        for (NodeId b = 0; b < 9; ++b) {
            if (a != b) {
                edges.emplace_back(a, b);
            }
        }
    }
    const DirectedGraph complete(9, edges);
    EXPECT_THROW(enumerate_cycles(complete, 1000), LimitExceeded);
    const DirectedGraph pair(2, {{0, 1}, {1, 0}});
    EXPECT_EQ(enumerate_cycles(pair, 1).size(), 1u);
}

TEST(EnumerateCycles, MatchesExhaustiveWalks) {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const DirectedGraph g = brute::random_digraph(n, 0.1 + 0.5 * (trial % 4) / 3.0, rng);
        ASSERT_EQ(enumerate_cycles(g), brute::cycles(g)) << "trial " << trial;
    }
}

TEST(EnumerateSimplePaths, SmallCases) {
    EXPECT_EQ(enumerate_simple_paths(DirectedGraph(2, {{0, 1}}), 0, 1), (Lists{{0, 1}}));
    EXPECT_TRUE(enumerate_simple_paths(DirectedGraph(2, {{1, 0}}), 0, 1).empty());
    EXPECT_EQ(enumerate_simple_paths(DirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 2),
              (Lists{{0, 2}, {0, 1, 2}}));
    EXPECT_THROW(enumerate_simple_paths(DirectedGraph(2), 1, 1), InvalidInput);
    EXPECT_THROW(enumerate_simple_paths(DirectedGraph(3, {{0, 1}, {1, 2}, {0, 2}}), 0, 2, 1),
                 LimitExceeded);
}

TEST(EnumerateSimplePaths, MatchesExhaustiveOrderings) {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + trial % 7;
        const DirectedGraph g = brute::random_digraph(n, 0.2 + 0.5 * (trial % 3) / 2.0, rng);
        const NodeId s = static_cast<NodeId>(rng() % n);
        NodeId t = static_cast<NodeId>(rng() % n);
        if (t == s) {
            t = static_cast<NodeId>((s + 1) % n);
        }
        ASSERT_EQ(enumerate_simple_paths(g, s, t), brute::simple_paths(g, s, t))
            << "trial " << trial;
    }
}

TEST(Reachable, Conventions) {
    const DirectedGraph chain(3, {{0, 1}, {1, 2}});
    EXPECT_TRUE(reachable(chain, 0, 2));
    EXPECT_FALSE(reachable(chain, 2, 0));
    EXPECT_FALSE(reachable(chain, 0, 0));
    EXPECT_TRUE(reachable(DirectedGraph(2, {{0, 1}, {1, 0}}), 0, 0));
}

TEST(Reachable, MatchesClosure) {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + trial % 8;
        const DirectedGraph g = brute::random_digraph(n, 0.25, rng);
        const auto r = brute::closure(g);
        for (NodeId s = 0; s < n; ++s) {
            for (NodeId t = 0; t < n; ++t) {
                ASSERT_EQ(reachable(g, s, t), r[s][t]);
            }
        }
    }
}

} // namespace
} // namespace coalition
