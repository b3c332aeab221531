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

#include <charconv>
#include <fstream>

#include "coalition/error.hpp"
#include "coalition/harness.hpp"

namespace coalition {

namespace {

std::string shortest(double value) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string quoted(const std::string& text) {
    std::string out = "\"";
    for (char ch : text) {
        if (ch == '"' || ch == '\\') {
            out += '\\';
        }
        out += ch;
    }
    return out + '"';
}

} // namespace

void export_dot(const Instance& instance, const Partition& partition, std::ostream& os) {
    if (partition.node_count() != instance.size()) {
        throw InvalidInput("export_dot: partition does not match the instance size");
    }
    auto label = [&](NodeId v) {
        return instance.labels.empty() ? "v" + std::to_string(v) : instance.labels[v];
    };

    os << "digraph coalitions {\n";
    os << "  node [shape=circle];\n";
    for (std::size_t k = 0; k < partition.size(); ++k) {
        os << "  subgraph cluster_" << k << " {\n";
        os << "    label=\"coalition " << k << "\";\n";
        for (NodeId v : partition[k].members()) {
            os << "    n" << v << " [label=" << quoted(label(v)) << "];\n";
        }
        os << "  }\n";
    }
    for (const auto& e : instance.benefit.edges()) {
        os << "  n" << e.src << " -> n" << e.dst << " [label=\"" << shortest(e.weight)
           << "\"];\n";
    }
    for (auto [a, b] : instance.competing.pairs()) {
        os << "  n" << a << " -> n" << b
           << " [dir=none, style=dashed, color=red, constraint=false];\n";
    }
    os << "}\n";
}

void export_dot(const Instance& instance, const Partition& partition,
                const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    export_dot(instance, partition, out);
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

} // namespace coalition
