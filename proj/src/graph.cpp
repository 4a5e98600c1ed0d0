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

#include "spack/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "spack/errors.hpp"

namespace spack {

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
    if (n < 0 || n > kMaxVertices) {
        throw BadParameter("vertex count must be in [0, 62]");
    }
}

int Graph::edge_count() const {
    int twice = 0;
    for (std::uint64_t row : adj_) twice += std::popcount(row);
    return twice / 2;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) {
        throw IndexOutOfRange("bad edge endpoints");
    }
    adj_[u] |= std::uint64_t{1} << v;
    adj_[v] |= std::uint64_t{1} << u;
}

int Graph::degree(int u) const { return std::popcount(adj_[u]); }

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> deg(n_);
    for (int u = 0; u < n_; ++u) deg[u] = degree(u);
    std::sort(deg.begin(), deg.end());
    return deg;
}

Graph Graph::delete_vertex(int u) const {
    if (u < 0 || u >= n_) throw IndexOutOfRange("vertex index out of range");
    std::uint64_t keep = ~(std::uint64_t{1} << u);
    if (n_ < 64) keep &= (std::uint64_t{1} << n_) - 1;
    return induced(keep);
}

Graph Graph::induced(std::uint64_t mask) const {
    std::vector<int> verts;
    for (int v = 0; v < n_; ++v) {
        if ((mask >> v) & 1u) verts.push_back(v);
    }
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            if (has_edge(verts[i], verts[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return h;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::uint64_t visited = 1;
    std::uint64_t frontier = 1;
    while (frontier != 0) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f != 0) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj_[v];
        }
        frontier = next & ~visited;
        visited |= frontier;
    }
    return std::popcount(visited) == n_;
}

DistanceMatrix bfs_all_pairs(const Graph& g) {
    int n = g.n();
    std::vector<int> d(static_cast<std::size_t>(n) * n, DistanceMatrix::kUnreachable);
    for (int s = 0; s < n; ++s) {
        std::uint64_t visited = std::uint64_t{1} << s;
        std::uint64_t frontier = visited;
        int dist = 0;
        while (frontier != 0) {
            std::uint64_t f = frontier;
            while (f != 0) {
                int v = std::countr_zero(f);
                f &= f - 1;
                d[s * n + v] = dist;
            }
            std::uint64_t next = 0;
            f = frontier;
            while (f != 0) {
                int v = std::countr_zero(f);
                f &= f - 1;
                next |= g.neighbors(v);
            }
            frontier = next & ~visited;
            visited |= frontier;
            ++dist;
        }
    }
    return DistanceMatrix(n, std::move(d));
}

BasicStats basic_stats(const Graph& g) {
    BasicStats st;
    st.connected = g.is_connected();
    st.degree_sequence = g.degree_sequence();
    st.max_degree = st.degree_sequence.empty() ? 0 : st.degree_sequence.back();
    if (st.connected && g.n() > 1) {
        DistanceMatrix d = bfs_all_pairs(g);
        int diam = 0;
        for (int u = 0; u < g.n(); ++u) {
            for (int v = u + 1; v < g.n(); ++v) diam = std::max(diam, d.at(u, v));
        }
        st.diameter = diam;
    }
    return st;
}

Graph make_path(int k) {
    if (k < 1) throw BadParameter("path needs at least 1 vertex");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int k) {
    if (k < 3) throw BadParameter("cycle needs at least 3 vertices");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph make_clique(int k) {
    if (k < 1) throw BadParameter("clique needs at least 1 vertex");
    Graph g(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    }
    return g;
}

Graph make_star(int leaves) {
    if (leaves < 1) throw BadParameter("star needs at least 1 leaf");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph make_z1() {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(0, 2);
    g.add_edge(2, 3);
    return g;
}

Graph make_k4_minus_e() {
    Graph g = make_clique(4);
    Graph h(4);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            if (!(i == 0 && j == 1)) h.add_edge(i, j);
        }
    }
    return h;
}

Graph generate(const NamedFamily& f) {
    switch (f.tag) {
        case FamilyTag::Path:
            return make_path(f.size);
        case FamilyTag::Cycle:
            return make_cycle(f.size);
        case FamilyTag::Clique:
            return make_clique(f.size);
        case FamilyTag::Star:
            return make_star(f.size);
        case FamilyTag::Z1:
            return make_z1();
        case FamilyTag::K4MinusE:
            return make_k4_minus_e();
    }
    throw BadParameter("unknown family");
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (side[s] != -1) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            std::uint64_t nb = g.neighbors(u);
            while (nb != 0) {
                int v = std::countr_zero(nb);
                nb &= nb - 1;
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_star(const Graph& g) {
    int n = g.n();
    if (n < 2 || !g.is_connected()) return false;
    if (g.edge_count() != n - 1) return false;
    auto deg = g.degree_sequence();
    return deg.back() == n - 1;
}

bool is_path_graph(const Graph& g) {
    int n = g.n();
    if (!g.is_connected()) return false;
    if (n == 1) return true;
    if (g.edge_count() != n - 1) return false;
    auto deg = g.degree_sequence();
    return deg.back() <= 2;
}

bool is_cycle_graph(const Graph& g) {
    int n = g.n();
    if (n < 3 || !g.is_connected()) return false;
    if (g.edge_count() != n) return false;
    auto deg = g.degree_sequence();
    return deg.front() == 2 && deg.back() == 2;
}

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw MalformedGraph6("empty graph6 string");
    for (char c : text) {
        if (c < 63 || c > 126) throw MalformedGraph6("byte out of graph6 range");
    }
    if (text[0] == 126) throw TooLarge("only short-form graph6 (n <= 62) is supported");
    int n = text[0] - 63;
    int m = n * (n - 1) / 2;
    int need = 1 + (m + 5) / 6;
    if (static_cast<int>(text.size()) != need) {
        throw MalformedGraph6("graph6 string has wrong length for its order");
    }
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = 1 + bit / 6;
            int shift = 5 - bit % 6;
            if ((text[byte] - 63) >> shift & 1) g.add_edge(i, j);
        }
    }
    // Padding bits must be zero.
    for (int b = m; b < 6 * ((m + 5) / 6); ++b) {
        int byte = 1 + b / 6;
        int shift = 5 - b % 6;
        if ((text[byte] - 63) >> shift & 1) throw MalformedGraph6("nonzero padding bits");
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    int n = g.n();
    if (n > Graph::kMaxVertices) throw TooLarge("only short-form graph6 (n <= 62) is supported");
    int m = n * (n - 1) / 2;
    std::string out(1 + (m + 5) / 6, 63);
    out[0] = static_cast<char>(63 + n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) out[1 + bit / 6] += 1 << (5 - bit % 6);
        }
    }
    return out;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if ((mask >> bit) & 1u) g.add_edge(i, j);
        }
    }
    return g;
}

std::uint64_t mask_from_graph(const Graph& g) {
    std::uint64_t mask = 0;
    int bit = 0;
    for (int j = 1; j < g.n(); ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(i, j)) mask |= std::uint64_t{1} << bit;
        }
    }
    return mask;
}

bool degrees_non_increasing(const Graph& g) {
    for (int v = 0; v + 1 < g.n(); ++v) {
        if (g.degree(v) < g.degree(v + 1)) return false;
    }
    return true;
}

namespace {

// Upper-triangle bits of g relabeled by perm (new label -> old vertex),
// pair p as bit (m-1-p) so integer order matches lexicographic bit order.
std::uint64_t relabeled_bits(const Graph& g, const std::vector<int>& perm) {
    int n = g.n();
    int m = n * (n - 1) / 2;
    std::uint64_t bits = 0;
    int p = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++p) {
            if (g.has_edge(perm[i], perm[j])) bits |= std::uint64_t{1} << (m - 1 - p);
        }
    }
    return bits;
}

std::pair<std::uint64_t, std::vector<int>> minimal_relabeling(const Graph& g) {
    int n = g.n();
    if (n > 9) throw TooLarge("canonical_form is limited to n <= 9");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> best_perm = perm;
    do {
        std::uint64_t bits = relabeled_bits(g, perm);
        if (bits < best) {
            best = bits;
            best_perm = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n <= 1) best = 0;
    return {best, best_perm};
}

}  // namespace

std::string canonical_form(const Graph& g) {
    auto [bits, perm] = minimal_relabeling(g);
    int m = g.n() * (g.n() - 1) / 2;
    std::string out(static_cast<std::size_t>(m), '0');
    for (int p = 0; p < m; ++p) {
        if ((bits >> (m - 1 - p)) & 1u) out[p] = '1';
    }
    return out;
}

std::string canonical_graph6(const Graph& g) {
    auto [bits, perm] = minimal_relabeling(g);
    int n = g.n();
    Graph h(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (g.has_edge(perm[i], perm[j])) h.add_edge(i, j);
        }
    }
    return write_graph6(h);
}

}  // namespace spack
