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

#include "spack/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "spack/errors.hpp"

namespace spack {

std::vector<Violation> verify_coloring(const Graph& g, const PackingSequence& s,
                                       const Coloring& c, int k) {
    int n = g.n();
    if (static_cast<int>(c.size()) != n) throw BadColoring("coloring does not cover all vertices");
    for (int v = 0; v < n; ++v) {
        if (c[v] < 1) throw BadColoring("uncolored vertex " + std::to_string(v));
        if (c[v] > k) throw BadColoring("color exceeds k at vertex " + std::to_string(v));
    }
    DistanceMatrix dist = bfs_all_pairs(g);
    std::vector<Violation> out;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (c[u] != c[v]) continue;
            int d = dist.at(u, v);
            if (d != DistanceMatrix::kUnreachable && d <= s.term(c[u])) {
                out.push_back({u, v, c[u], d});
            }
        }
    }
    return out;
}

namespace {

class BacktrackSolver {
public:
    BacktrackSolver(const Graph& g, const DistanceMatrix& dist, std::span<const int> svals)
        : g_(g), n_(g.n()), k_(static_cast<int>(svals.size())), svals_(svals.begin(), svals.end()) {
        // Conflict balls: ball(c, v) = vertices within distance s_c of v.
        // Distinct s-values share one table.
        distinct_.reserve(svals_.size());
        ball_index_.resize(svals_.size());
        for (int c = 0; c < k_; ++c) {
            auto it = std::find(distinct_.begin(), distinct_.end(), svals_[c]);
            if (it == distinct_.end()) {
                distinct_.push_back(svals_[c]);
                it = distinct_.end() - 1;
            }
            ball_index_[c] = static_cast<int>(it - distinct_.begin());
        }
        balls_.assign(distinct_.size(), std::vector<std::uint64_t>(n_, 0));
        connected_ = true;
        diameter_ = 0;
        for (int u = 0; u < n_; ++u) {
            for (int v = 0; v < n_; ++v) {
                if (u == v) continue;
                int d = dist.at(u, v);
                if (d == DistanceMatrix::kUnreachable) {
                    connected_ = false;
                    continue;
                }
                diameter_ = std::max(diameter_, d);
                for (std::size_t b = 0; b < distinct_.size(); ++b) {
                    if (d <= distinct_[b]) balls_[b][u] |= std::uint64_t{1} << v;
                }
            }
        }
        // First color of each run of equal s-values (colors within a run are
        // interchangeable; only the first unused one may open a class).
        block_start_.resize(k_);
        for (int c = 0; c < k_; ++c) {
            block_start_[c] = (c > 0 && svals_[c] == svals_[c - 1]) ? block_start_[c - 1] : c;
        }
        order_.resize(n_);
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        colors_.assign(n_, 0);
        conflict_.assign(k_, 0);
        used_.assign(k_, false);
        unassigned_ = n_ < 64 ? (std::uint64_t{1} << n_) - 1 : ~std::uint64_t{0};
    }

    std::optional<Coloring> solve() {
        if (n_ == 0) return Coloring{};
        if (k_ == 0) return std::nullopt;
        if (recurse(0)) return colors_;
        return std::nullopt;
    }

private:
    bool prune(int pos) const {
        // Upper bound on colorable vertices: used classes can absorb the
        // non-conflicting remainder; an unused class is a singleton whenever
        // its s-value reaches the diameter.
        int capacity = pos;
        for (int c = 0; c < k_; ++c) {
            if (used_[c]) {
                capacity += std::popcount(unassigned_ & ~conflict_[c]);
            } else if (connected_ && svals_[c] >= diameter_) {
                capacity += 1;
            } else {
                return false;  // unbounded estimate, no prune possible
            }
            if (capacity >= n_) return false;
        }
        return capacity < n_;
    }

    bool recurse(int pos) {
        if (pos == n_) return true;
        if (prune(pos)) return false;
        int v = order_[pos];
        std::uint64_t vbit = std::uint64_t{1} << v;
        for (int c = 0; c < k_; ++c) {
            if ((conflict_[c] >> v) & 1u) continue;
            if (!used_[c]) {
                bool blocked = false;
                for (int c2 = block_start_[c]; c2 < c; ++c2) {
                    if (!used_[c2]) {
                        blocked = true;
                        break;
                    }
                }
                if (blocked) continue;
            }
            std::uint64_t saved = conflict_[c];
            bool was_used = used_[c];
            colors_[v] = c + 1;
            conflict_[c] |= balls_[ball_index_[c]][v] | vbit;
            used_[c] = true;
            unassigned_ &= ~vbit;
            if (recurse(pos + 1)) return true;
            unassigned_ |= vbit;
            used_[c] = was_used;
            conflict_[c] = saved;
            colors_[v] = 0;
        }
        return false;
    }

    const Graph& g_;
    int n_, k_;
    std::vector<int> svals_;
    std::vector<int> distinct_;
    std::vector<int> ball_index_;
    std::vector<std::vector<std::uint64_t>> balls_;
    std::vector<int> block_start_;
    std::vector<int> order_;
    Coloring colors_;
    std::vector<std::uint64_t> conflict_;
    std::vector<bool> used_;
    std::uint64_t unassigned_ = 0;
    bool connected_ = true;
    int diameter_ = 0;
};

}  // namespace

std::optional<Coloring> exists_coloring(const Graph& g, const DistanceMatrix& dist,
                                        std::span<const int> svals) {
    return BacktrackSolver(g, dist, svals).solve();
}

std::optional<Coloring> exists_coloring(const Graph& g, const PackingSequence& s, int k) {
    if (k < 0) throw BadParameter("k must be >= 0");
    if (g.n() == 0) return Coloring{};
    if (k == 0) return std::nullopt;
    std::vector<int> svals = s.truncate(k);
    DistanceMatrix dist = bfs_all_pairs(g);
    return exists_coloring(g, dist, svals);
}

SolveResult chi_S(const Graph& g, const PackingSequence& s) {
    int n = g.n();
    if (n == 0) return {0, std::nullopt};
    DistanceMatrix dist = bfs_all_pairs(g);
    int lb = 1;
    if (g.edge_count() > 0) lb = 2;
    if (s.term(1) >= 2) {
        // Every closed neighborhood is pairwise within distance 2 <= s_i.
        int maxdeg = 0;
        for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
        lb = std::max(lb, maxdeg + 1);
    }
    int kmax = s.is_finite() ? std::min(s.length(), n) : n;
    for (int k = lb; k <= kmax; ++k) {
        std::vector<int> svals = s.truncate(k);
        if (auto c = exists_coloring(g, dist, svals)) return {k, std::move(c)};
    }
    throw NoFiniteColoring("no k <= " + std::to_string(kmax) +
                           " admits an S-packing coloring for S = " + s.format());
}

namespace {

bool chromatic_at_most(const Graph& g, int ell) {
    int n = g.n();
    if (n == 0) return true;
    // Greedy proof of feasibility first; fall back to the exact search.
    std::vector<int> color(n, 0);
    bool greedy_ok = true;
    for (int v = 0; v < n && greedy_ok; ++v) {
        unsigned taken = 0;
        std::uint64_t nb = g.neighbors(v);
        while (nb != 0) {
            int u = std::countr_zero(nb);
            nb &= nb - 1;
            if (color[u] > 0) taken |= 1u << (color[u] - 1);
        }
        int c = std::countr_one(taken) + 1;
        if (c > ell) greedy_ok = false;
        color[v] = c;
    }
    if (greedy_ok) return true;
    std::vector<int> ones(ell, 1);
    return exists_coloring(g, bfs_all_pairs(g), ones).has_value();
}

void alpha_recurse(const Graph& g, int ell, int idx, std::uint64_t mask, int count, int& best) {
    int n = g.n();
    if (count + (n - idx) <= best) return;
    if (idx == n) {
        best = count;
        return;
    }
    std::uint64_t with = mask | (std::uint64_t{1} << idx);
    if (chromatic_at_most(g.induced(with), ell)) {
        alpha_recurse(g, ell, idx + 1, with, count + 1, best);
    }
    alpha_recurse(g, ell, idx + 1, mask, count, best);
}

}  // namespace

int alpha_k(const Graph& g, int ell) {
    if (ell < 1) throw BadParameter("ell must be >= 1");
    int best = 0;
    alpha_recurse(g, ell, 0, 0, 0, best);
    return best;
}

int chromatic_number(const Graph& g) {
    int n = g.n();
    if (n == 0) return 0;
    DistanceMatrix dist = bfs_all_pairs(g);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> ones(k, 1);
        if (exists_coloring(g, dist, ones)) return k;
    }
    return n;  // unreachable: k = n always succeeds
}

int chi_S_diam2_formula(const Graph& g, const PackingSequence& s) {
    BasicStats st = basic_stats(g);
    if (!st.connected || !st.diameter || *st.diameter != 2) {
        throw PreconditionViolated("formula requires a connected graph of diameter 2");
    }
    if (s.is_all_ones()) throw PreconditionViolated("sequence must not be all ones");
    int ell = 0;
    while (s.has_term(ell + 1) && s.term(ell + 1) == 1) ++ell;
    if (ell < 1 || !s.has_term(ell + 1) || s.term(ell + 1) < 2) {
        throw PreconditionViolated("sequence must have shape (1^ell, s, ...) with s >= 2");
    }
    return g.n() - alpha_k(g, ell) + std::min(ell, chromatic_number(g));
}

}  // namespace spack
