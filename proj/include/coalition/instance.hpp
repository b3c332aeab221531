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

#ifndef COALITION_INSTANCE_HPP
#define COALITION_INSTANCE_HPP

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "json.hpp"

#include "coalition/graph.hpp"

namespace coalition {

/// A benefit graph and a competing graph over the same participants.
struct Instance {
    BenefitGraph benefit;
    CompetingGraph competing;
    /// Optional display names, one per participant.
    std::vector<std::string> labels;

    std::size_t size() const noexcept { return benefit.size(); }

    friend bool operator==(const Instance&, const Instance&) = default;
};

struct UniformWeights {
    double lo = 0.1;
    double hi = 1.0;
};

struct ConstantWeight {
    double value = 1.0;
};

using WeightDist = std::variant<UniformWeights, ConstantWeight>;

/// "uniform:LO,HI" or "constant:W".
WeightDist parse_weight_dist(std::string_view text);
std::string to_string(const WeightDist& dist);

struct InstanceSpec {
    std::size_t n = 10;
    /// Probability that two participants compete.
    double alpha = 0.2;
    WeightDist weights = UniformWeights{};
    /// Probability that an ordered pair carries a benefit edge.
    double benefit_density = 0.5;
    std::uint64_t seed = 0;

    /// Throws InvalidInput when a field is out of range.
    void validate() const;
};

/// Deterministic given spec.seed. Draws come from std::mt19937_64 seeded
/// with the seed; each uniform in [0, 1) is the top 53 bits of one engine
/// output times 2^-53. Competing pairs (a < b, row-major) are drawn first,
/// one uniform each, an edge when u < alpha. Benefit pairs (src, dst),
/// src != dst, row-major, follow: one uniform for presence (u < density)
/// and, for uniform weights, one more for lo + (hi - lo) * u.
Instance generate_instance(const InstanceSpec& spec);

/// SplitMix64 finalizer, used to derive per-trial seeds.
std::uint64_t mix_seed(std::uint64_t x);

nlohmann::json instance_to_json(const Instance& instance);
/// Throws ParseError with field context for structural problems and
/// InvalidInput for graph invariant violations.
Instance instance_from_json(const nlohmann::json& doc);

void save_instance(const Instance& instance, const std::filesystem::path& path);
Instance load_instance(const std::filesystem::path& path);

/// Reads a whole JSON document; parse failures carry line/column context.
nlohmann::json read_json_file(const std::filesystem::path& path);

/// {"coalitions": [[...]]} or a run report's {"partition": [[...]]}.
Partition partition_from_json(const nlohmann::json& doc, std::size_t n);
nlohmann::json partition_to_json(const Partition& p);

} // namespace coalition

#endif // COALITION_INSTANCE_HPP
