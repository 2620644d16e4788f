// Copyright 2026 The AQM Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AQM_PROFILES_GRAPH_H
#define AQM_PROFILES_GRAPH_H

#include <cstddef>
#include <set>
#include <utility>
#include <vector>

namespace aqm::profiles {

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected coupling graph. Edges are stored as (min, max).
class ConnectivityGraph {
   public:
    explicit ConnectivityGraph(std::size_t num_qubits = 0);
    /// Throws std::invalid_argument on self-loops or out-of-range indices.
    ConnectivityGraph(std::size_t num_qubits, const std::vector<Edge> &edges);

    static ConnectivityGraph complete(std::size_t num_qubits);
    static ConnectivityGraph line(std::size_t num_qubits);
    static ConnectivityGraph ring(std::size_t num_qubits);

    void add_edge(std::size_t a, std::size_t b);

    std::size_t num_qubits() const noexcept {
        return num_qubits_;
    }
    const std::set<Edge> &edges() const noexcept {
        return edges_;
    }
    bool has_edge(std::size_t a, std::size_t b) const;
    /// Sorted ascending.
    std::vector<std::size_t> neighbors(std::size_t q) const;
    bool is_connected() const;
    bool is_complete() const;

    bool operator==(const ConnectivityGraph &) const = default;

   private:
    std::size_t num_qubits_;
    std::set<Edge> edges_;
};

/// Minimal-hop path from a to b, both ends included. Among equally short paths
/// the lexicographically smallest is returned. Throws RuleViolation
/// (connectivity) when b is unreachable from a.
std::vector<std::size_t> shortest_path(const ConnectivityGraph &g, std::size_t a, std::size_t b);

/// Hop count, or SIZE_MAX when b is unreachable from a.
std::size_t hop_distance(const ConnectivityGraph &g, std::size_t a, std::size_t b);

}  // namespace aqm::profiles

#endif
