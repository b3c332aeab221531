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

#include "coalition/harness.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "coalition/error.hpp"

namespace coalition {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
    return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct TrialOutcome {
    double utility = 0.0;
    double baseline_utility = 0.0;
    std::size_t coalitions = 0;
    std::size_t baseline_coalitions = 0;
    bool verified = false;
    bool passed = false;
};

void mean_std(const std::vector<double>& xs, double& mean, double& stddev) {
    mean = 0.0;
    for (double x : xs) {
        mean += x;
    }
    mean /= static_cast<double>(xs.size());
    double var = 0.0;
    for (double x : xs) {
        var += (x - mean) * (x - mean);
    }
    stddev = std::sqrt(var / static_cast<double>(xs.size()));
}

void write_blocks(std::ostream& os, const Partition& p) {
    for (std::size_t k = 0; k < p.size(); ++k) {
        os << "  [" << k << "]";
        for (NodeId v : p[k].members()) {
            os << ' ' << v;
        }
        os << '\n';
    }
}

} // namespace

RunReport run(const Instance& instance, const RunOptions& options) {
    RunReport report;
    auto start = Clock::now();
    FormationResult formed = form_coalitions(instance.benefit, instance.competing,
                                             options.formation);
    report.timings.formation_ms = elapsed_ms(start);

    report.partition = std::move(formed.partition);
    report.baseline = std::move(formed.baseline);
    report.merge_trace = std::move(formed.trace);
    report.total_utility = total_utility(instance.benefit, report.partition);
    report.baseline_utility = total_utility(instance.benefit, report.baseline);
    report.per_member_utilities = member_utilities(instance.benefit, report.partition);

    if (report.total_utility + kUtilityTolerance < report.baseline_utility ||
        !is_coarsening_of(report.partition, report.baseline)) {
        throw Error("formed partition does not refine-dominate the baseline");
    }

    const bool within_cap = report.baseline.size() <= options.oracle_cap;
    if (!options.skip_verify && (within_cap || options.force_verify)) {
        start = Clock::now();
        const std::size_t cap = std::max(options.oracle_cap, report.partition.size());
        report.verification =
            verify(instance.benefit, instance.competing, report.partition, options.mode, cap);
        report.timings.verification_ms = elapsed_ms(start);
    }
    return report;
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t alpha_index, std::size_t trial) {
    return mix_seed(seed + 1000003ULL * alpha_index + trial);
}

SweepReport sweep(const SweepOptions& options) {
    if (options.trials == 0) {
        throw InvalidInput("sweep: trials must be at least 1");
    }
    const std::size_t per_alpha = options.trials;
    const std::size_t total = options.alphas.size() * per_alpha;
    std::vector<TrialOutcome> outcomes(total);

    auto run_trial = [&](std::size_t index) {
        const std::size_t a = index / per_alpha;
        const std::size_t t = index % per_alpha;
        InstanceSpec spec;
        spec.n = options.n;
        spec.alpha = options.alphas[a];
        spec.benefit_density = options.benefit_density;
        spec.weights = options.weights;
        spec.seed = trial_seed(options.seed, a, t);
        const RunReport r = run(generate_instance(spec), options.run);
        TrialOutcome& o = outcomes[index];
        o.utility = r.total_utility;
        o.baseline_utility = r.baseline_utility;
        o.coalitions = r.partition.size();
        o.baseline_coalitions = r.baseline.size();
        o.verified = r.verification.has_value();
        o.passed = o.verified && r.verification->principle1_ok && r.verification->principle2_ok &&
                   r.verification->optimal_ok;
    };

    const unsigned jobs = std::max(1u, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < total; ++i) {
            run_trial(i);
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::jthread> workers;
        for (unsigned w = 0; w < jobs; ++w) {
            workers.emplace_back([&] {
                for (std::size_t i = next++; i < total; i = next++) {
                    try {
                        run_trial(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
        workers.clear();
        if (failure) {
            std::rethrow_exception(failure);
        }
    }

    SweepReport report;
    report.options = options;
    for (std::size_t a = 0; a < options.alphas.size(); ++a) {
        SweepRow row;
        row.alpha = options.alphas[a];
        row.trials = per_alpha;
        std::vector<double> formed;
        std::vector<double> baseline;
        std::size_t passed = 0;
        for (std::size_t t = 0; t < per_alpha; ++t) {
            const TrialOutcome& o = outcomes[a * per_alpha + t];
            formed.push_back(o.utility);
            baseline.push_back(o.baseline_utility);
            row.mean_coalitions += static_cast<double>(o.coalitions);
            row.mean_baseline_coalitions += static_cast<double>(o.baseline_coalitions);
            row.verified += o.verified ? 1 : 0;
            passed += o.passed ? 1 : 0;
            if (o.utility + kUtilityTolerance < o.baseline_utility) {
                row.dominates_baseline = false;
            }
        }
        mean_std(formed, row.mean_utility, row.std_utility);
        mean_std(baseline, row.mean_baseline_utility, row.std_baseline_utility);
        row.mean_coalitions /= static_cast<double>(per_alpha);
        row.mean_baseline_coalitions /= static_cast<double>(per_alpha);
        row.verification_pass_rate =
            row.verified == 0 ? 0.0 : static_cast<double>(passed) / static_cast<double>(row.verified);
        report.rows.push_back(row);
    }
    return report;
}

json to_json(const MergeCandidate& candidate) {
    return {{"kind", std::string(to_string(candidate.kind))},
            {"coalition_ids", candidate.coalition_ids}};
}

json to_json(const VerificationReport& report) {
    json p1 = json::array();
    for (const auto& f : report.principle1) {
        p1.push_back({{"coalition", f.coalition},
                      {"member", f.member},
                      {"missing", f.missing == Direction::incoming ? "incoming" : "outgoing"}});
    }
    json p2 = json::array();
    for (const auto& f : report.principle2) {
        p2.push_back({{"from", f.from}, {"to", f.to}});
    }
    json doc;
    doc["mode"] = std::string(to_string(report.mode));
    doc["principle1_ok"] = report.principle1_ok;
    doc["principle2_ok"] = report.principle2_ok;
    doc["optimal_ok"] = report.optimal_ok;
    doc["principle1_findings"] = std::move(p1);
    doc["principle2_findings"] = std::move(p2);
    doc["blocking_merge"] = report.blocking ? json(*report.blocking) : json(nullptr);
    doc["violations"] = report.violations;
    return doc;
}

json to_json(const RunReport& report, bool include_timings) {
    json trace = json::array();
    for (const auto& step : report.merge_trace) {
        trace.push_back(to_json(step));
    }
    json doc;
    doc["n"] = report.partition.node_count();
    doc["partition"] = partition_to_json(report.partition);
    doc["baseline"] = partition_to_json(report.baseline);
    doc["total_utility"] = report.total_utility;
    doc["baseline_utility"] = report.baseline_utility;
    doc["per_member_utilities"] = report.per_member_utilities;
    doc["merge_trace"] = std::move(trace);
    doc["verification"] = report.verification ? to_json(*report.verification) : json(nullptr);
    if (include_timings) {
        doc["timings_ms"] = {{"formation", report.timings.formation_ms},
                             {"verification", report.timings.verification_ms}};
    }
    return doc;
}

json to_json(const SweepReport& report) {
    json rows = json::array();
    for (const auto& r : report.rows) {
        rows.push_back({{"alpha", r.alpha},
                        {"trials", r.trials},
                        {"mean_utility", r.mean_utility},
                        {"std_utility", r.std_utility},
                        {"mean_baseline_utility", r.mean_baseline_utility},
                        {"std_baseline_utility", r.std_baseline_utility},
                        {"mean_coalitions", r.mean_coalitions},
                        {"mean_baseline_coalitions", r.mean_baseline_coalitions},
                        {"verified", r.verified},
                        {"verification_pass_rate", r.verification_pass_rate},
                        {"dominates_baseline", r.dominates_baseline}});
    }
    const auto& o = report.options;
    return {{"n", o.n},
            {"trials", o.trials},
            {"seed", o.seed},
            {"benefit_density", o.benefit_density},
            {"weights", to_string(o.weights)},
            {"mode", std::string(to_string(o.run.mode))},
            {"rows", std::move(rows)}};
}

void write_text(std::ostream& os, const RunReport& report) {
    os << "coalitions (" << report.partition.size() << "):\n";
    write_blocks(os, report.partition);
    os << "baseline (" << report.baseline.size() << "):\n";
    write_blocks(os, report.baseline);
    os << "total utility: " << report.total_utility << '\n';
    os << "baseline utility: " << report.baseline_utility << '\n';
    os << "merges:";
    if (report.merge_trace.empty()) {
        os << " none";
    }
    os << '\n';
    for (const auto& step : report.merge_trace) {
        os << "  " << to_string(step.kind);
        for (auto id : step.coalition_ids) {
            os << ' ' << id;
        }
        os << '\n';
    }
    if (report.verification) {
        write_text(os, *report.verification);
    } else {
        os << "verification: skipped\n";
    }
}

void write_text(std::ostream& os, const VerificationReport& report) {
    os << "verification (" << to_string(report.mode) << "):"
       << " principle1=" << (report.principle1_ok ? "ok" : "FAIL")
       << " principle2=" << (report.principle2_ok ? "ok" : "FAIL")
       << " optimal=" << (report.optimal_ok ? "ok" : "FAIL") << '\n';
    for (const auto& v : report.violations) {
        os << "  " << v << '\n';
    }
}

void write_text(std::ostream& os, const SweepReport& report) {
    os << "n=" << report.options.n << " trials=" << report.options.trials
       << " seed=" << report.options.seed << '\n';
    os << std::left << std::setw(8) << "alpha" << std::setw(22) << "utility(mean+-std)"
       << std::setw(22) << "baseline(mean+-std)" << std::setw(12) << "coalitions"
       << "verified\n";
    os << std::fixed << std::setprecision(4);
    for (const auto& r : report.rows) {
        std::ostringstream formed;
        std::ostringstream base;
        formed << std::fixed << std::setprecision(4) << r.mean_utility << "+-" << r.std_utility;
        base << std::fixed << std::setprecision(4) << r.mean_baseline_utility << "+-"
             << r.std_baseline_utility;
        os << std::setw(8) << r.alpha << std::setw(22) << formed.str() << std::setw(22)
           << base.str() << std::setw(12) << r.mean_coalitions << r.verification_pass_rate
           << '\n';
    }
    os.unsetf(std::ios::fixed);
}

} // namespace coalition
