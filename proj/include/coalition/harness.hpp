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

#ifndef COALITION_HARNESS_HPP
#define COALITION_HARNESS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "json.hpp"

#include "coalition/former.hpp"
#include "coalition/instance.hpp"
#include "coalition/oracle.hpp"

namespace coalition {

struct RunOptions {
    FormationOptions formation;
    MergeMode mode = MergeMode::strict_independence;
    std::size_t oracle_cap = kDefaultOracleCap;
    /// Verify even when the baseline has more blocks than the oracle cap.
    bool force_verify = false;
    bool skip_verify = false;
};

struct PhaseTimings {
    double formation_ms = 0.0;
    double verification_ms = 0.0;
};

struct RunReport {
    Partition partition;
    Partition baseline;
    double total_utility = 0.0;
    double baseline_utility = 0.0;
    /// Indexed by node.
    std::vector<double> per_member_utilities;
    std::vector<MergeCandidate> merge_trace;
    std::optional<VerificationReport> verification;
    PhaseTimings timings;
};

/// Forms coalitions, scores them against the baseline and, within the
/// oracle cap, verifies them. Throws Error if the result fails to dominate
/// the baseline.
RunReport run(const Instance& instance, const RunOptions& options = {});

struct SweepOptions {
    std::size_t n = 10;
    std::vector<double> alphas{0.05, 0.1, 0.2, 0.3, 0.4};
    std::size_t trials = 5;
    std::uint64_t seed = 0;
    double benefit_density = 0.5;
    WeightDist weights = UniformWeights{};
    RunOptions run;
    unsigned jobs = 1;
};

struct SweepRow {
    double alpha = 0.0;
    std::size_t trials = 0;
    double mean_utility = 0.0;
    double std_utility = 0.0;
    double mean_baseline_utility = 0.0;
    double std_baseline_utility = 0.0;
    double mean_coalitions = 0.0;
    double mean_baseline_coalitions = 0.0;
    std::size_t verified = 0;
    /// Fraction of verified trials passing all three checks.
    double verification_pass_rate = 0.0;
    /// Formed utility >= baseline utility in every trial.
    bool dominates_baseline = true;
};

struct SweepReport {
    SweepOptions options;
    std::vector<SweepRow> rows;
};

/// Seed of trial `trial` at alpha index `alpha_index`.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t alpha_index, std::size_t trial);

/// Trials may run on `jobs` threads; rows are folded in trial order, so the
/// result does not depend on scheduling. Standard deviations are population
/// deviations (0 for a single trial).
SweepReport sweep(const SweepOptions& options);

nlohmann::json to_json(const MergeCandidate& candidate);
nlohmann::json to_json(const VerificationReport& report);
nlohmann::json to_json(const RunReport& report, bool include_timings = false);
nlohmann::json to_json(const SweepReport& report);

void write_text(std::ostream& os, const RunReport& report);
void write_text(std::ostream& os, const VerificationReport& report);
void write_text(std::ostream& os, const SweepReport& report);

/// Graphviz rendering: coalitions as clusters, benefit edges as weighted
/// arrows, competing pairs as dashed undirected edges.
void export_dot(const Instance& instance, const Partition& partition, std::ostream& os);
void export_dot(const Instance& instance, const Partition& partition,
                const std::filesystem::path& path);

} // namespace coalition

#endif // COALITION_HARNESS_HPP
