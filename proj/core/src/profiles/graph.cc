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

#include "aqm/profiles/graph.h"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

#include "aqm/core/errors.h"

namespace aqm::profiles {

ConnectivityGraph::ConnectivityGraph(std::size_t num_qubits) : num_qubits_(num_qubits) {
}

ConnectivityGraph::ConnectivityGraph(std::size_t num_qubits, const std::vector<Edge> &edges)
    : num_qubits_(num_qubits) {
    for (auto [a, b] : edges) {
        add_edge(a, b);
    }
}

ConnectivityGraph ConnectivityGraph::complete(std::size_t num_qubits) {
    ConnectivityGraph g(num_qubits);
    for (std::size_t a = 0; a < num_qubits; ++a) {
        for (std::size_t b = a + 1; b < num_qubits; ++b) {
            g.add_edge(a, b);
        }
    }
    return g;
}

ConnectivityGraph ConnectivityGraph::line(std::size_t num_qubits) {
    ConnectivityGraph g(num_qubits);
    for (std::size_t a = 0; a + 1 < num_qubits; ++a) {
        g.add_edge(a, a + 1);
    }
    return g;
}

ConnectivityGraph ConnectivityGraph::ring(std::size_t num_qubits) {
    ConnectivityGraph g = line(num_qubits);
    if (num_qubits > 2) {
        g.add_edge(0, num_qubits - 1);
    }
    return g;
}

void ConnectivityGraph::add_edge(std::size_t a, std::size_t b) {
    if (a == b) {
        throw std::invalid_argument("self-loop on qubit " + std::to_string(a));
    }
    if (a >= num_qubits_ || b >= num_qubits_) {
        throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) + ") out of range for " +
                                    std::to_string(num_qubits_) + " qubits");
    }
    edges_.insert(a < b ? Edge{a, b} : Edge{b, a});
}

bool ConnectivityGraph::has_edge(std::size_t a, std::size_t b) const {
    return edges_.count(a < b ? Edge{a, b} : Edge{b, a}) > 0;
}

std::vector<std::size_t> ConnectivityGraph::neighbors(std::size_t q) const {
    std::vector<std::size_t> out;
    for (auto [a, b] : edges_) {
        if (a == q) {
            out.push_back(b);
        } else if (b == q) {
            out.push_back(a);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool ConnectivityGraph::is_connected() const {
    if (num_qubits_ <= 1) {
        return true;
    }
    for (std::size_t q = 1; q < num_qubits_; ++q) {
        if (hop_distance(*this, 0, q) == std::numeric_limits<std::size_t>::max()) {
            return false;
        }
    }
    return true;
}

bool ConnectivityGraph::is_complete() const {
    return edges_.size() == num_qubits_ * (num_qubits_ - (num_qubits_ > 0 ? 1 : 0)) / 2;
}

namespace {

std::vector<std::size_t> bfs_distances(const ConnectivityGraph &g, std::size_t source) {
    constexpr auto kInf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.num_qubits(), kInf);
    std::deque<std::size_t> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        std::size_t q = queue.front();
        queue.pop_front();
        for (std::size_t n : g.neighbors(q)) {
            if (dist[n] == kInf) {
                dist[n] = dist[q] + 1;
                queue.push_back(n);
            }
        }
    }
    return dist;
}

void check_index(const ConnectivityGraph &g, std::size_t q) {
    if (q >= g.num_qubits()) {
        throw std::invalid_argument("qubit " + std::to_string(q) + " out of range for " +
                                    std::to_string(g.num_qubits()) + " qubits");
    }
}

}  // namespace

std::size_t hop_distance(const ConnectivityGraph &g, std::size_t a, std::size_t b) {
    check_index(g, a);
    check_index(g, b);
    return bfs_distances(g, a)[b];
}

std::vector<std::size_t> shortest_path(const ConnectivityGraph &g, std::size_t a, std::size_t b) {
    check_index(g, a);
    check_index(g, b);
    // Distances to b; walking from a through the smallest neighbour that is one
    // hop closer gives the lexicographically smallest shortest path.
    auto dist = bfs_distances(g, b);
    if (dist[a] == std::numeric_limits<std::size_t>::max()) {
        throw RuleViolation(AqmRule::connectivity, "no path between qubits " + std::to_string(a) + " and " +
                                                       std::to_string(b) + " in the connectivity graph");
    }
    std::vector<std::size_t> path{a};
    std::size_t q = a;
    while (q != b) {
        for (std::size_t n : g.neighbors(q)) {
            if (dist[n] + 1 == dist[q]) {
                q = n;
                break;
            }
        }
        path.push_back(q);
    }
    return path;
}

}  // namespace aqm::profiles
