// Copyright 2026 The spacking Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace spack {

/// Simple undirected graph on at most 62 vertices, one 64-bit adjacency
/// row per vertex. Vertex indices are 0-based. Immutable once built
/// (add_edge is only used during construction).
class Graph {
public:
    static constexpr int kMaxVertices = 62;

    Graph() = default;
    explicit Graph(int n);

    int n() const { return n_; }
    int edge_count() const;

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return (adj_[u] >> v) & 1u; }
    std::uint64_t neighbors(int u) const { return adj_[u]; }
    int degree(int u) const;
    std::vector<int> degree_sequence() const;  // ascending

    /// G - u: vertices above u shift down by one.
    Graph delete_vertex(int u) const;
    /// Induced subgraph on the vertices of `mask`, in increasing index order.
    Graph induced(std::uint64_t mask) const;

    bool is_connected() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// All-pairs hop distances. d(u,u) = 0; kUnreachable marks distinct
/// components (it compares greater than every real distance).
class DistanceMatrix {
public:
    static constexpr int kUnreachable = std::numeric_limits<int>::max();

    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<int> d) : n_(n), d_(std::move(d)) {}

    int n() const { return n_; }
    int at(int u, int v) const { return d_[u * n_ + v]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

private:
    int n_ = 0;
    std::vector<int> d_;
};

DistanceMatrix bfs_all_pairs(const Graph& g);

struct BasicStats {
    bool connected = false;
    std::optional<int> diameter;  // absent when disconnected or n <= 1
    int max_degree = 0;
    std::vector<int> degree_sequence;  // ascending
};

BasicStats basic_stats(const Graph& g);

// Named families from the small-graph characterizations.
enum class FamilyTag { Path, Cycle, Clique, Star, Z1, K4MinusE };

struct NamedFamily {
    FamilyTag tag;
    int size = 0;  // paths/cycles/cliques: vertex count; star: leaf count
};

/// Canonical vertex numbering: paths and cycles in traversal order, star
/// center first, Z1 as triangle (0,1,2) plus leaf 3 attached to 2.
Graph generate(const NamedFamily& f);

Graph make_path(int k);
Graph make_cycle(int k);
Graph make_clique(int k);
Graph make_star(int leaves);  // K_{1,leaves}
Graph make_z1();
Graph make_k4_minus_e();

// Structure predicates used by the characterization theorems.
bool is_bipartite(const Graph& g);
bool is_star(const Graph& g);        // K_{1,m}, m >= 1 (includes K_2)
bool is_path_graph(const Graph& g);  // P_k, k >= 1
bool is_cycle_graph(const Graph& g);

// graph6 interchange, short form only (n <= 62).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Graph from the upper-triangle bitmask: bit j*(j-1)/2 + i (i < j) is the
/// edge {i,j}. The same pair order as graph6.
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_from_graph(const Graph& g);

/// True when deg(v_0) >= deg(v_1) >= ... Every isomorphism class has at
/// least one such labeling, so iso-invariant scans may restrict to them.
bool degrees_non_increasing(const Graph& g);

/// Calls fn on at least one labeled representative of every isomorphism
/// class of connected graphs on exactly n vertices (duplicates possible).
template <typename Fn>
void for_each_connected_representative(int n, Fn&& fn) {
    std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (!degrees_non_increasing(g) || !g.is_connected()) continue;
        fn(g);
    }
}

/// Lexicographically minimal upper-triangle bit string over all vertex
/// permutations, as '0'/'1' characters in pair order. Equal strings iff
/// isomorphic (for equal n). Guarded to n <= 9.
std::string canonical_form(const Graph& g);
/// graph6 of the canonically relabeled graph; the dedup key used throughout.
std::string canonical_graph6(const Graph& g);

}  // namespace spack
