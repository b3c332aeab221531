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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "coalition/cli.hpp"
#include "coalition/error.hpp"
#include "coalition/former.hpp"
#include "coalition/instance.hpp"
#include "coalition/oracle.hpp"
#include "coalition/primitives.hpp"
#include "fixtures.hpp"

namespace {

using namespace coalition;
using Clock = std::chrono::steady_clock;
using Lists = std::vector<std::vector<NodeId>>;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Lists as_lists(const Partition& p) {
    Lists out;
    for (const auto& c : p.blocks()) {
        out.emplace_back(c.members().begin(), c.members().end());
    }
    return out;
}

Lists as_lists(const CliqueSet& cliques) {
    Lists out;
    for (const auto& c : cliques) {
        out.emplace_back(c.members().begin(), c.members().end());
    }
    return out;
}

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) {
            detail = why;
        }
        pass = false;
    }
};

struct Case {
    InstanceSpec spec;
    Instance instance;
    FormationResult result;
    double formation_s = 0.0;
};

constexpr double kAlphas[] = {0.05, 0.1, 0.2, 0.3, 0.4};
constexpr double kDensities[] = {0.2, 0.5, 0.8};

// Seeded sweep: n cycles through [2, max_n], alpha and density through the
// grids above.
std::vector<Case> build_sweep(std::size_t count, std::size_t max_n, std::uint64_t salt) {
    std::vector<Case> cases;
    cases.reserve(count);
    const std::size_t span = max_n - 1;
    for (std::size_t i = 0; i < count; ++i) {
        Case c;
        c.spec.n = 2 + i % span;
        c.spec.alpha = kAlphas[(i / span) % 5];
        c.spec.benefit_density = kDensities[(i / (span * 5)) % 3];
        c.spec.seed = mix_seed(salt + i);
        c.instance = generate_instance(c.spec);
        const auto start = Clock::now();
        c.result = form_coalitions(c.instance.benefit, c.instance.competing);
        c.formation_s = seconds_since(start);
        cases.push_back(std::move(c));
    }
    return cases;
}

std::string where(const Case& c) {
    std::ostringstream os;
    os << "n=" << c.spec.n << " alpha=" << c.spec.alpha << " density=" << c.spec.benefit_density
       << " seed=" << c.spec.seed;
    return os.str();
}

double formation_time(const std::vector<Case>& cases) {
    double total = 0.0;
    for (const auto& c : cases) {
        total += c.formation_s;
    }
    return total;
}

Outcome principle1(const std::vector<Case>& cases) {
    Outcome out;
    double elapsed = formation_time(cases);
    const auto start = Clock::now();
    for (const auto& c : cases) {
        if (!check_principle1(c.instance.benefit, c.result.partition).empty()) {
            out.fail("principle 1 finding at " + where(c));
        }
        for (const auto& block : c.result.partition.blocks()) {
            if (!is_coalition_valid(c.instance.benefit, block)) {
                out.fail("invalid coalition at " + where(c));
            }
        }
    }
    elapsed += seconds_since(start);
    if (elapsed >= 60.0) {
        out.fail("took " + std::to_string(elapsed) + " s");
    }
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(cases.size()) +
                  " instances in " + std::to_string(elapsed) + " s";
    return out;
}

Outcome principle2(const std::vector<Case>& cases) {
    Outcome out;
    double elapsed = formation_time(cases);
    const auto start = Clock::now();
    for (const auto& c : cases) {
        if (!check_principle2(c.instance.benefit, c.instance.competing, c.result.partition)
                 .empty()) {
            out.fail("principle 2 finding at " + where(c));
        }
        for (auto [x, y] : c.instance.competing.pairs()) {
            if (c.result.partition.block_of(x) == c.result.partition.block_of(y)) {
                out.fail("competitors share a coalition at " + where(c));
            }
        }
    }
    elapsed += seconds_since(start);
    if (elapsed >= 60.0) {
        out.fail("took " + std::to_string(elapsed) + " s");
    }
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(cases.size()) +
                  " instances in " + std::to_string(elapsed) + " s";
    return out;
}

Outcome optimality(const std::vector<Case>& cases) {
    Outcome out;
    double elapsed = formation_time(cases);
    const auto start = Clock::now();
    for (const auto& c : cases) {
        if (c.spec.n > 10) {
            out.fail("instance above n=10 in the optimality sweep");
        }
        const auto blocking =
            find_blocking_merge(c.instance.benefit, c.instance.competing, c.result.partition,
                                MergeMode::strict_independence, c.spec.n);
        if (blocking) {
            out.fail("blocking merge at " + where(c));
        }
    }
    elapsed += seconds_since(start);
    if (elapsed >= 300.0) {
        out.fail("took " + std::to_string(elapsed) + " s");
    }
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(cases.size()) +
                  " instances in " + std::to_string(elapsed) + " s";
    return out;
}

Outcome fixpoint(const std::vector<const std::vector<Case>*>& sweeps) {
    Outcome out;
    std::size_t checked = 0;
    std::size_t merges[3] = {0, 0, 0};
    for (const auto* cases : sweeps) {
        for (const auto& c : *cases) {
            for (const auto& m : c.result.trace) {
                ++merges[static_cast<int>(m.kind)];
            }
            const auto& q = c.result.final_state;
            if (!quotient_consistent(q, c.instance.benefit, c.instance.competing)) {
                out.fail("inconsistent final state at " + where(c));
            }
            if (find_cycle_candidate(q) || find_path_candidate(q) ||
                find_neighbors_candidate(q)) {
                out.fail("candidate left at " + where(c));
            }
            ++checked;
        }
    }
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(checked) +
                  " final states after " + std::to_string(merges[0]) + " cycle, " +
                  std::to_string(merges[1]) + " path and " + std::to_string(merges[2]) +
                  " neighbors merges";
    return out;
}

Outcome dominance(const std::vector<const std::vector<Case>*>& sweeps) {
    Outcome out;
    std::size_t checked = 0;
    for (const auto* cases : sweeps) {
        for (const auto& c : *cases) {
            const auto& b = c.instance.benefit;
            const auto& r = c.result;
            if (r.baseline != baseline_partition(b, c.instance.competing)) {
                out.fail("baseline mismatch at " + where(c));
            }
            if (!is_coarsening_of(r.partition, r.baseline)) {
                out.fail("not a coarsening at " + where(c));
            }
            const auto after = member_utilities(b, r.partition);
            const auto before = member_utilities(b, r.baseline);
            for (std::size_t v = 0; v < after.size(); ++v) {
                if (after[v] < before[v] - kUtilityTolerance) {
                    out.fail("member " + std::to_string(v) + " lost utility at " + where(c));
                }
            }
            if (total_utility(b, r.partition) < total_utility(b, r.baseline) - kUtilityTolerance) {
                out.fail("total utility dropped at " + where(c));
            }
            ++checked;
        }
    }
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(checked) + " instances";
    return out;
}

Outcome primitives() {
    Outcome out;
    std::mt19937 rng(20260101);
    constexpr int kGraphs = 250;
    for (int i = 0; i < kGraphs; ++i) {
        const std::size_t n = 1 + i % 8;
        const auto g = brute::random_graph(n, 0.1 + 0.8 * (i % 9) / 8.0, rng);
        if (as_lists(maximal_cliques(g)) != brute::maximal_cliques(g)) {
            out.fail("maximal cliques differ on graph " + std::to_string(i));
        }
    }
    for (int i = 0; i < kGraphs; ++i) {
        const std::size_t n = 1 + i % 8;
        const auto g = brute::random_digraph(n, 0.05 + 0.6 * (i % 7) / 6.0, rng);
        if (as_lists(strongly_connected_components(g)) != brute::strong_components(g)) {
            out.fail("components differ on digraph " + std::to_string(i));
        }
        if (enumerate_cycles(g) != brute::cycles(g)) {
            out.fail("cycles differ on digraph " + std::to_string(i));
        }
    }
    for (int i = 0; i < kGraphs; ++i) {
        const std::size_t n = 2 + i % 7;
        const auto g = brute::random_digraph(n, 0.2 + 0.6 * (i % 5) / 4.0, rng);
        for (NodeId s = 0; s < n; ++s) {
            for (NodeId t = 0; t < n; ++t) {
                if (s != t && enumerate_simple_paths(g, s, t) != brute::simple_paths(g, s, t)) {
                    out.fail("paths differ on digraph " + std::to_string(i));
                }
            }
        }
    }
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(kGraphs) +
                  " graphs per primitive";
    return out;
}

Outcome hospitals() {
    Outcome out;
    const auto inst = fixtures::hospitals();
    const Lists baseline{{0, 3, 4}, {1, 2}, {5, 6, 7, 8, 9}};
    const Lists formed{{0, 3, 4, 5, 6, 7, 8, 9}, {1, 2}};
    std::size_t matching = 0;
    for (const auto& first : maximal_cliques(inverse_graph(inst.competing))) {
        FormationOptions options;
        options.clique.first = first;
        const auto r = form_coalitions(inst.benefit, inst.competing, options);
        if (as_lists(r.baseline) == baseline && as_lists(r.partition) == formed) {
            ++matching;
        }
    }
    const auto r = form_coalitions(inst.benefit, inst.competing);
    if (matching == 0) {
        out.fail("no first clique reproduces the reported coalitions");
    }
    out.detail = std::to_string(matching) + " first-clique choice(s) reproduce; default " +
                 (as_lists(r.partition) == formed ? "reproduces" : "differs");
    return out;
}

Outcome fixtures_trace() {
    Outcome out;
    FormationOptions lex;
    lex.clique.tie_break = CliqueTieBreak::lexicographic;
    const auto cycle = fixtures::merge_cycle();
    const auto a = form_coalitions(cycle.benefit, cycle.competing, lex);
    if (as_lists(a.partition) != Lists{{0}, {1, 2}} ||
        a.trace != std::vector<MergeCandidate>{{MergeKind::cycle, {1, 2}}}) {
        out.fail("cycle fixture");
    }
    const auto path = fixtures::merge_path();
    const auto b = form_coalitions(path.benefit, path.competing);
    if (as_lists(b.baseline) != Lists{{0, 1}, {2}, {3, 4}} || b.partition != Partition::grand(5) ||
        b.trace != std::vector<MergeCandidate>{{MergeKind::path, {0, 1, 2}}}) {
        out.fail("path fixture");
    }
    const auto nb = fixtures::merge_neighbors();
    const auto c = form_coalitions(nb.benefit, nb.competing);
    if (as_lists(c.baseline) != Lists{{0, 1}, {2, 3}} || c.partition != Partition::grand(4) ||
        c.trace != std::vector<MergeCandidate>{{MergeKind::neighbors, {0, 1}}}) {
        out.fail("neighbors fixture");
    }
    if (out.pass) {
        out.detail = "cycle, path and neighbors traces exact";
    }
    return out;
}

std::string run_cli_capture(const std::vector<std::string>& args, int& code) {
    std::ostringstream out;
    std::ostringstream err;
    code = run_cli(args, out, err);
    return out.str();
}

Outcome determinism() {
    Outcome out;
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "coalition_acceptance_determinism";
    fs::remove_all(dir);
    fs::create_directories(dir);
    std::size_t commands = 0;
    for (int i = 0; i < 10; ++i) {
        const std::string seed = std::to_string(1000 + i);
        const std::string n = std::to_string(4 + i);
        const std::string alpha = std::to_string(kAlphas[i % 5]);
        const std::string inst = (dir / ("inst" + std::to_string(i) + ".json")).string();
        const std::string part = (dir / ("part" + std::to_string(i) + ".json")).string();
        std::vector<std::vector<std::string>> runs{
            {"--seed", seed, "generate", "--n", n, "--alpha", alpha, "-o", inst},
            {"partition", inst},
            {"baseline", inst},
            {"--mode", "reachability", "partition", inst},
            {"verify", inst, part},
            {"--seed", seed, "sweep", "--n", "5", "--trials", "2", "--jobs", "2"},
        };
        for (auto& args : runs) {
            int first_code = 0;
            int second_code = 0;
            if (args[0] == "verify") {
                int c = 0;
                std::ofstream(part) << run_cli_capture({"partition", inst}, c);
            }
            const std::string first = run_cli_capture(args, first_code);
            std::string first_file;
            if (args.back() == inst) {
                std::ifstream in(inst);
                first_file.assign(std::istreambuf_iterator<char>(in), {});
            }
            const std::string second = run_cli_capture(args, second_code);
            std::string second_file;
            if (args.back() == inst) {
                std::ifstream in(inst);
                second_file.assign(std::istreambuf_iterator<char>(in), {});
            }
            if (first_code != kExitOk || second_code != kExitOk) {
                out.fail("command failed for spot instance " + std::to_string(i));
            }
            if (first != second || first_file != second_file) {
                out.fail("output differs for spot instance " + std::to_string(i));
            }
            ++commands;
        }
    }
    fs::remove_all(dir);
    out.detail += (out.detail.empty() ? "" : "; ") + std::to_string(commands) +
                  " commands run twice";
    return out;
}

Outcome performance() {
    Outcome out;
    InstanceSpec spec;
    spec.n = 30;
    spec.alpha = 0.2;
    spec.benefit_density = 0.5;
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        spec.seed = seed;
        const auto inst = generate_instance(spec);
        const auto start = Clock::now();
        form_coalitions(inst.benefit, inst.competing);
        worst = std::max(worst, seconds_since(start));
    }
    if (worst >= 10.0) {
        out.fail("n=30 took " + std::to_string(worst) + " s");
    }

    const auto expect_loud = [&](const char* what, const std::function<void()>& body) {
        const auto start = Clock::now();
        try {
            body();
            out.fail(std::string(what) + " did not throw");
        } catch (const LimitExceeded&) {
        }
        if (seconds_since(start) > 5.0) {
            out.fail(std::string(what) + " was slow to fail");
        }
    };
    expect_loud("clique guard", [] { maximal_cliques(UndirectedGraph(129)); });
    expect_loud("cycle limit", [] {
        std::vector<std::pair<NodeId, NodeId>> edges;
        for (NodeId a = 0; a < 14; ++a) {
            for (NodeId b = 0; b < 14; ++b) {
                if (a != b) {
                    edges.emplace_back(a, b);
                }
            }
        }
        enumerate_cycles(DirectedGraph(14, edges), 100000);
    });
    expect_loud("candidate search limit", [] {
        const auto inst = fixtures::merge_cycle();
        FormationOptions options;
        options.clique.tie_break = CliqueTieBreak::lexicographic;
        options.enumeration_limit = 0;
        form_coalitions(inst.benefit, inst.competing, options);
    });
    expect_loud("formation clique guard", [] {
        InstanceSpec big;
        big.n = 129;
        big.alpha = 0.0;
        big.benefit_density = 0.0;
        const auto inst = generate_instance(big);
        form_coalitions(inst.benefit, inst.competing);
    });
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("n=30 worst ") +
                  std::to_string(worst) + " s";
    return out;
}

} // namespace

int main() {
    int failures = 0;
    const auto report = [&](const char* name, const Outcome& o) {
        std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
        failures += o.pass ? 0 : 1;
    };

    try {
        const auto principles = build_sweep(1000, 12, 0);
        const auto optimal = build_sweep(500, 10, 1u << 20);
        report("principle-1", principle1(principles));
        report("principle-2", principle2(principles));
        report("optimality", optimality(optimal));
        report("fixpoint", fixpoint({&principles, &optimal}));
        report("refinement-dominance", dominance({&principles, &optimal}));
        report("primitive-oracles", primitives());
        report("hospital-example", hospitals());
        report("hand-traced-fixtures", fixtures_trace());
        report("determinism", determinism());
        report("performance", performance());
    } catch (const std::exception& e) {
        std::cout << "FAIL acceptance aborted: " << e.what() << std::endl;
        return 1;
    }
    std::cout << (failures == 0 ? "all criteria passed" : "criteria failed: " +
                                                            std::to_string(failures))
              << std::endl;
    return failures == 0 ? 0 : 1;
}
