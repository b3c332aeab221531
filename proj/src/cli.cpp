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

#include "coalition/cli.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "coalition/error.hpp"
#include "coalition/harness.hpp"

namespace coalition {

namespace {

struct GlobalFlags {
    std::uint64_t seed = 0;
    std::string mode = "strict";
    std::size_t max_clique_nodes = kDefaultMaxCliqueNodes;
    std::size_t enum_limit = kDefaultEnumerationLimit;
    std::string output = "json";
    std::string strategy = "max-cardinality";
    std::vector<NodeId> first_clique;
    std::size_t oracle_cap = kDefaultOracleCap;
    bool timings = false;
};

RunOptions make_run_options(const GlobalFlags& flags) {
    RunOptions options;
    options.mode = parse_merge_mode(flags.mode);
    options.oracle_cap = flags.oracle_cap;
    options.formation.enumeration_limit = flags.enum_limit;
    options.formation.clique.max_nodes = flags.max_clique_nodes;
    options.formation.clique.tie_break = flags.strategy == "lexicographic"
                                             ? CliqueTieBreak::lexicographic
                                             : CliqueTieBreak::max_cardinality;
    if (!flags.first_clique.empty()) {
        options.formation.clique.first = Coalition(flags.first_clique);
    }
    return options;
}

void emit(std::ostream& out, const nlohmann::json& doc) { out << doc.dump(2) << '\n'; }

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::logic_error&) {
            throw InvalidInput("cannot parse '" + item + "' as a number");
        }
    }
    return values;
}

} // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Conflict-free, free-rider-free coalition formation", "coalition"};
    app.fallthrough();
    app.require_subcommand(1);

    GlobalFlags flags;
    app.add_option("--seed", flags.seed, "RNG seed for generate and sweep");
    app.add_option("--mode", flags.mode, "Merge admissibility mode for verification")
        ->check(CLI::IsMember({"strict", "strict-independence", "reachability"}));
    app.add_option("--max-cliques-nodes", flags.max_clique_nodes,
                   "Refuse clique enumeration above this many participants");
    app.add_option("--enum-limit", flags.enum_limit,
                   "Cap on sequences explored by one cycle/path search");
    app.add_option("--output", flags.output, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--strategy", flags.strategy, "Clique cover tie-break")
        ->check(CLI::IsMember({"max-cardinality", "lexicographic"}));
    app.add_option("--first-clique", flags.first_clique,
                   "Force the first clique of the cover (comma separated ids)")
        ->delimiter(',');
    app.add_option("--oracle-cap", flags.oracle_cap,
                   "Largest partition the brute-force oracle will search");
    app.add_flag("--timings", flags.timings, "Include phase timings in run reports");

    // generate
    auto* generate = app.add_subcommand("generate", "Generate a random instance");
    std::size_t gen_n = 10;
    double gen_alpha = 0.2;
    double gen_density = 0.5;
    std::string gen_weights = "uniform:0.1,1.0";
    std::string gen_out;
    generate->add_option("--n", gen_n, "Participant count")->required();
    generate->add_option("--alpha", gen_alpha, "Competition probability")->required();
    generate->add_option("--density", gen_density, "Benefit edge probability");
    generate->add_option("--weights", gen_weights, "uniform:LO,HI or constant:W");
    generate->add_option("-o,--out", gen_out, "Write the instance here instead of stdout");

    // partition / baseline
    std::string instance_path;
    auto* partition = app.add_subcommand("partition", "Form coalitions for an instance");
    partition->add_option("instance", instance_path, "Instance JSON")->required();
    bool force_verify = false;
    bool no_verify = false;
    partition->add_flag("--verify", force_verify, "Verify even above the oracle cap");
    partition->add_flag("--no-verify", no_verify, "Skip verification");

    auto* baseline = app.add_subcommand("baseline", "Clique/SCC baseline partition");
    baseline->add_option("instance", instance_path, "Instance JSON")->required();

    // verify
    std::string partition_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check a partition against an instance");
    verify_cmd->add_option("instance", instance_path, "Instance JSON")->required();
    verify_cmd->add_option("partition", partition_path, "Partition or run report JSON")
        ->required();

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "Utility-level alpha sweep");
    std::size_t sweep_n = 10;
    std::string sweep_alphas = "0.05,0.1,0.2,0.3,0.4";
    std::size_t sweep_trials = 5;
    double sweep_density = 0.5;
    std::string sweep_weights = "uniform:0.1,1.0";
    unsigned sweep_jobs = 1;
    sweep_cmd->add_option("--n", sweep_n, "Participant count");
    sweep_cmd->add_option("--alphas", sweep_alphas, "Comma separated competition probabilities");
    sweep_cmd->add_option("--trials", sweep_trials, "Trials per alpha");
    sweep_cmd->add_option("--density", sweep_density, "Benefit edge probability");
    sweep_cmd->add_option("--weights", sweep_weights, "uniform:LO,HI or constant:W");
    sweep_cmd->add_option("--jobs", sweep_jobs, "Worker threads");

    // export-dot
    auto* dot = app.add_subcommand("export-dot", "Render coalitions as Graphviz DOT");
    std::string dot_out;
    dot->add_option("instance", instance_path, "Instance JSON")->required();
    dot->add_option("--partition", partition_path,
                    "Partition to draw (default: form coalitions)");
    dot->add_option("-o,--out", dot_out, "Write DOT here instead of stdout");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        const RunOptions run_options = make_run_options(flags);
        const bool text = flags.output == "text";

        if (*generate) {
            InstanceSpec spec;
            spec.n = gen_n;
            spec.alpha = gen_alpha;
            spec.benefit_density = gen_density;
            spec.weights = parse_weight_dist(gen_weights);
            spec.seed = flags.seed;
            const Instance instance = generate_instance(spec);
            if (gen_out.empty()) {
                emit(out, instance_to_json(instance));
            } else {
                save_instance(instance, gen_out);
            }
            return kExitOk;
        }

        if (*partition) {
            RunOptions options = run_options;
            options.force_verify = force_verify;
            options.skip_verify = no_verify;
            const RunReport report = run(load_instance(instance_path), options);
            if (text) {
                write_text(out, report);
            } else {
                emit(out, to_json(report, flags.timings));
            }
            return kExitOk;
        }

        if (*baseline) {
            const Instance instance = load_instance(instance_path);
            const Partition p =
                baseline_partition(instance.benefit, instance.competing,
                                   run_options.formation.clique);
            if (text) {
                for (std::size_t k = 0; k < p.size(); ++k) {
                    out << "[" << k << "]";
                    for (NodeId v : p[k].members()) {
                        out << ' ' << v;
                    }
                    out << '\n';
                }
                out << "utility: " << total_utility(instance.benefit, p) << '\n';
            } else {
                emit(out, {{"n", instance.size()},
                           {"coalitions", partition_to_json(p)},
                           {"utility", total_utility(instance.benefit, p)}});
            }
            return kExitOk;
        }

        if (*verify_cmd) {
            const Instance instance = load_instance(instance_path);
            const Partition p = partition_from_json(read_json_file(partition_path),
                                                    instance.size());
            const VerificationReport report =
                verify(instance.benefit, instance.competing, p, run_options.mode,
                       run_options.oracle_cap);
            if (text) {
                write_text(out, report);
            } else {
                emit(out, to_json(report));
            }
            const bool ok = report.principle1_ok && report.principle2_ok && report.optimal_ok;
            return ok ? kExitOk : kExitVerificationFailed;
        }

        if (*sweep_cmd) {
            SweepOptions options;
            options.n = sweep_n;
            options.alphas = parse_list(sweep_alphas);
            options.trials = sweep_trials;
            options.seed = flags.seed;
            options.benefit_density = sweep_density;
            options.weights = parse_weight_dist(sweep_weights);
            options.run = run_options;
            options.jobs = sweep_jobs;
            const SweepReport report = sweep(options);
            if (text) {
                write_text(out, report);
            } else {
                emit(out, to_json(report));
            }
            return kExitOk;
        }

        if (*dot) {
            const Instance instance = load_instance(instance_path);
            const Partition p =
                partition_path.empty()
                    ? form_coalitions(instance.benefit, instance.competing,
                                      run_options.formation)
                          .partition
                    : partition_from_json(read_json_file(partition_path), instance.size());
            if (dot_out.empty()) {
                export_dot(instance, p, out);
            } else {
                export_dot(instance, p, std::filesystem::path(dot_out));
            }
            return kExitOk;
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitLimit;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    }
    return kExitOk;
}

} // namespace coalition
