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

#include "coalition/instance.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "coalition/error.hpp"

namespace coalition {

using nlohmann::json;

namespace {

double parse_double(std::string_view text, std::string_view what) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) {
        throw InvalidInput(std::string(what) + ": cannot parse '" + std::string(text) +
                           "' as a number");
    }
    return value;
}

double uniform01(std::mt19937_64& engine) {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

const json& field(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object()) {
        throw ParseError(where + ": expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(where + ": missing field '" + key + "'");
    }
    return *it;
}

std::uint64_t as_index(const json& value, const std::string& where) {
    if (!value.is_number_integer() ||
        (!value.is_number_unsigned() && value.get<std::int64_t>() < 0)) {
        throw ParseError(where + ": expected a non-negative integer");
    }
    return value.get<std::uint64_t>();
}

NodeId as_node(const json& value, std::size_t n, const std::string& where) {
    const auto id = as_index(value, where);
    if (id >= n) {
        throw InvalidInput(where + ": node " + std::to_string(id) + " out of range [0, " +
                           std::to_string(n) + ")");
    }
    return static_cast<NodeId>(id);
}

} // namespace

WeightDist parse_weight_dist(std::string_view text) {
    const auto colon = text.find(':');
    const auto kind = text.substr(0, colon);
    const auto args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (kind == "uniform") {
        const auto comma = args.find(',');
        if (comma == std::string_view::npos) {
            throw InvalidInput("weights: expected uniform:LO,HI");
        }
        return UniformWeights{parse_double(args.substr(0, comma), "weights"),
                              parse_double(args.substr(comma + 1), "weights")};
    }
    if (kind == "constant") {
        return ConstantWeight{parse_double(args, "weights")};
    }
    throw InvalidInput("weights: unknown distribution '" + std::string(text) + "'");
}

std::string to_string(const WeightDist& dist) {
    std::ostringstream os;
    if (const auto* u = std::get_if<UniformWeights>(&dist)) {
        os << "uniform:" << u->lo << "," << u->hi;
    } else {
        os << "constant:" << std::get<ConstantWeight>(dist).value;
    }
    return os.str();
}

void InstanceSpec::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw InvalidInput("alpha must lie in [0, 1]");
    }
    if (!(benefit_density >= 0.0 && benefit_density <= 1.0)) {
        throw InvalidInput("benefit density must lie in [0, 1]");
    }
    if (const auto* u = std::get_if<UniformWeights>(&weights)) {
        if (!(u->lo > 0.0) || !(u->hi >= u->lo) || !std::isfinite(u->hi)) {
            throw InvalidInput("uniform weights need 0 < lo <= hi < inf");
        }
    } else if (const auto& c = std::get<ConstantWeight>(weights);
               !(c.value > 0.0) || !std::isfinite(c.value)) {
        throw InvalidInput("constant weight must be positive and finite");
    }
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Instance generate_instance(const InstanceSpec& spec) {
    spec.validate();
    std::mt19937_64 engine(spec.seed);
    const std::size_t n = spec.n;

    std::vector<std::pair<NodeId, NodeId>> competing;
    for (NodeId a = 0; a < n; ++a) {
        for (NodeId b = a + 1; b < n; ++b) {
            if (uniform01(engine) < spec.alpha) {
                competing.emplace_back(a, b);
            }
        }
    }

    std::vector<BenefitEdge> benefit;
    for (NodeId src = 0; src < n; ++src) {
        for (NodeId dst = 0; dst < n; ++dst) {
            if (src == dst) {
                continue;
            }
            if (!(uniform01(engine) < spec.benefit_density)) {
                continue;
            }
            double w = 0.0;
            if (const auto* u = std::get_if<UniformWeights>(&spec.weights)) {
                w = u->lo + (u->hi - u->lo) * uniform01(engine);
            } else {
                w = std::get<ConstantWeight>(spec.weights).value;
            }
            benefit.push_back({src, dst, w});
        }
    }
    return Instance{BenefitGraph(n, std::move(benefit)), CompetingGraph(n, std::move(competing)),
                    {}};
}

json instance_to_json(const Instance& instance) {
    json doc;
    doc["n"] = instance.size();
    json benefit = json::array();
    for (const auto& e : instance.benefit.edges()) {
        benefit.push_back({{"src", e.src}, {"dst", e.dst}, {"w", e.weight}});
    }
    doc["benefit"] = std::move(benefit);
    json competing = json::array();
    for (auto [a, b] : instance.competing.pairs()) {
        competing.push_back({a, b});
    }
    doc["competing"] = std::move(competing);
    if (!instance.labels.empty()) {
        doc["labels"] = instance.labels;
    }
    return doc;
}

Instance instance_from_json(const json& doc) {
    const std::size_t n = as_index(field(doc, "n", "instance"), "n");

    const json& benefit_doc = field(doc, "benefit", "instance");
    if (!benefit_doc.is_array()) {
        throw ParseError("benefit: expected an array");
    }
    std::vector<BenefitEdge> benefit;
    for (std::size_t k = 0; k < benefit_doc.size(); ++k) {
        const std::string where = "benefit[" + std::to_string(k) + "]";
        const json& e = benefit_doc[k];
        const NodeId src = as_node(field(e, "src", where), n, where + ".src");
        const NodeId dst = as_node(field(e, "dst", where), n, where + ".dst");
        const json& w = field(e, "w", where);
        if (!w.is_number()) {
            throw ParseError(where + ".w: expected a number");
        }
        benefit.push_back({src, dst, w.get<double>()});
    }

    const json& competing_doc = field(doc, "competing", "instance");
    if (!competing_doc.is_array()) {
        throw ParseError("competing: expected an array");
    }
    std::vector<std::pair<NodeId, NodeId>> competing;
    for (std::size_t k = 0; k < competing_doc.size(); ++k) {
        const std::string where = "competing[" + std::to_string(k) + "]";
        const json& pair = competing_doc[k];
        if (!pair.is_array() || pair.size() != 2) {
            throw ParseError(where + ": expected a pair [a, b]");
        }
        competing.emplace_back(as_node(pair[0], n, where), as_node(pair[1], n, where));
    }

    std::vector<std::string> labels;
    if (auto it = doc.find("labels"); it != doc.end() && !it->is_null()) {
        if (!it->is_array() || it->size() != n) {
            throw ParseError("labels: expected an array of " + std::to_string(n) + " strings");
        }
        for (std::size_t k = 0; k < it->size(); ++k) {
            if (!(*it)[k].is_string()) {
                throw ParseError("labels[" + std::to_string(k) + "]: expected a string");
            }
            labels.push_back((*it)[k].get<std::string>());
        }
    }
    return Instance{BenefitGraph(n, std::move(benefit)), CompetingGraph(n, std::move(competing)),
                    std::move(labels)};
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path.string() + "' for reading");
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void save_instance(const Instance& instance, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out << instance_to_json(instance).dump(2) << '\n';
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

Instance load_instance(const std::filesystem::path& path) {
    const json doc = read_json_file(path);
    try {
        return instance_from_json(doc);
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    } catch (const InvalidInput& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

Partition partition_from_json(const json& doc, std::size_t n) {
    const json* blocks = nullptr;
    if (doc.is_array()) {
        blocks = &doc;
    } else if (doc.is_object() && doc.contains("coalitions")) {
        blocks = &doc["coalitions"];
    } else if (doc.is_object() && doc.contains("partition")) {
        blocks = &doc["partition"];
    } else {
        throw ParseError("partition: expected 'coalitions' or 'partition' array");
    }
    if (!blocks->is_array()) {
        throw ParseError("partition: expected an array of coalitions");
    }
    std::vector<Coalition> coalitions;
    for (std::size_t k = 0; k < blocks->size(); ++k) {
        const std::string where = "coalitions[" + std::to_string(k) + "]";
        const json& block = (*blocks)[k];
        if (!block.is_array()) {
            throw ParseError(where + ": expected an array of node ids");
        }
        std::vector<NodeId> members;
        for (const auto& v : block) {
            members.push_back(as_node(v, n, where));
        }
        coalitions.emplace_back(std::move(members));
    }
    return Partition(n, std::move(coalitions));
}

json partition_to_json(const Partition& p) {
    json blocks = json::array();
    for (const auto& block : p.blocks()) {
        blocks.push_back(std::vector<NodeId>(block.members().begin(), block.members().end()));
    }
    return blocks;
}

} // namespace coalition
