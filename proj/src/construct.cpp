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

#include "spack/construct.hpp"

#include <algorithm>
#include <numeric>

#include "spack/errors.hpp"

namespace spack {

ConstructionResult realization_cycle_cliques(int ell, const std::vector<int>& a) {
    int k = static_cast<int>(a.size());
    if (ell < 1) throw BadParameter("ell must be >= 1");
    if (k < 1) throw BadParameter("need at least one a_i");
    if (a.front() < 2) throw BadParameter("a_1 must be >= 2");
    for (int i = 0; i + 1 < k; ++i) {
        if (a[i] >= a[i + 1]) throw BadParameter("a must be strictly increasing");
    }
    int cycle_len = 2 * k + 1;
    auto clique_size = [&](int i) {  // i is 1-based
        return (i <= 2 * k ? a[(i + 1) / 2 - 1] : a[k - 1]) + ell - 1;
    };
    int n = cycle_len;
    for (int i = 1; i <= cycle_len; ++i) n += clique_size(i);
    ConstructionResult res;
    res.graph = Graph(n);
    res.roles.resize(n);
    for (int i = 0; i < cycle_len; ++i) {
        res.roles[i] = "x" + std::to_string(i + 1);
        res.graph.add_edge(i, (i + 1) % cycle_len);
    }
    // Odd offsets 3, 5, ..., 2k-1 beyond the two cycle endpoints of Q_i.
    std::vector<int> offsets{0, 1};
    for (int o = 3; o <= 2 * k - 1; o += 2) offsets.push_back(o);
    int next = cycle_len;
    for (int i = 1; i <= cycle_len; ++i) {
        int sz = clique_size(i);
        for (int p = 0; p < sz; ++p) {
            int v = next + p;
            res.roles[v] = "Q" + std::to_string(i) + ".v" + std::to_string(p + 1);
            for (int q = 0; q < p; ++q) res.graph.add_edge(v, next + q);
            for (int o : offsets) res.graph.add_edge(v, (i - 1 + o) % cycle_len);
        }
        next += sz;
    }
    int sum = std::accumulate(a.begin(), a.end(), 0);
    res.predicted_chi = 2 * sum + a.back() + ell;
    std::set<int> delta(a.begin(), a.end());
    delta.insert(1);
    res.predicted_delta = std::move(delta);
    return res;
}

ConstructionResult realization_clique_of_cliques(const PackingSequence& s,
                                                 const std::vector<int>& a) {
    int k = static_cast<int>(a.size());
    if (k < 1) throw BadParameter("need at least one a_i");
    for (int ai : a) {
        if (ai < 2) throw BadParameter("every a_i must be >= 2");
    }
    ConstructionResult res;
    std::set<int> delta(a.begin(), a.end());
    delta.insert(1);
    if (k == 1) {
        int ell = s.first_term_at_least(2);
        if (ell == 0) throw BadParameter("S must contain a term >= 2");
        int sz = a[0] + ell - 1;
        int n = 2 * sz - 1;
        res.graph = Graph(n);
        res.roles.resize(n, "");
        res.roles[0] = "x";
        // Vertices 1..sz-1 and sz..n-1 complete the two glued cliques.
        for (int side = 0; side < 2; ++side) {
            int base = 1 + side * (sz - 1);
            for (int p = 0; p < sz - 1; ++p) {
                int v = base + p;
                res.roles[v] = "X" + std::to_string(side + 1) + ".v" + std::to_string(p + 1);
                res.graph.add_edge(v, 0);
                for (int q = 0; q < p; ++q) res.graph.add_edge(v, base + q);
            }
        }
        res.predicted_chi = 2 * a[0] + ell - 2;
        res.predicted_delta = std::move(delta);
        return res;
    }
    int ell = s.first_term_at_least(3);
    if (ell == 0) throw BadParameter("S must contain a term >= 3 when k >= 2");
    int sum = std::accumulate(a.begin(), a.end(), 0);
    for (int i = 0; i < k; ++i) {
        if (sum - a[i] < a[i] - 1) {
            throw HypothesisViolated("sum of the other a_j must be >= a_i - 1");
        }
    }
    int n = sum + k * (ell - 1);
    res.graph = Graph(n);
    res.roles.resize(n, "");
    for (int i = 0; i < k; ++i) {
        res.roles[i] = "x" + std::to_string(i + 1);
        for (int j = 0; j < i; ++j) res.graph.add_edge(i, j);
    }
    int next = k;
    for (int i = 0; i < k; ++i) {
        int extra = a[i] + ell - 2;  // X_i minus the glued vertex x_i
        for (int p = 0; p < extra; ++p) {
            int v = next + p;
            res.roles[v] = "X" + std::to_string(i + 1) + ".v" + std::to_string(p + 1);
            res.graph.add_edge(v, i);
            for (int q = 0; q < p; ++q) res.graph.add_edge(v, next + q);
        }
        next += extra;
    }
    res.predicted_chi = (ell - 1) + sum;
    res.predicted_delta = std::move(delta);
    return res;
}

ConstructionResult tree_T(int k) {
    if (k < 2) throw BadParameter("k must be >= 2");
    int n = 1 + (k - 1) * (k - 1);
    ConstructionResult res;
    res.graph = Graph(n);
    res.roles.resize(n);
    res.roles[0] = "u";
    int next = k;
    for (int i = 1; i <= k - 1; ++i) {
        res.roles[i] = "w" + std::to_string(i);
        res.graph.add_edge(0, i);
        for (int p = 0; p < k - 2; ++p) {
            res.roles[next] = "leaf.w" + std::to_string(i) + "." + std::to_string(p + 1);
            res.graph.add_edge(i, next);
            ++next;
        }
    }
    res.predicted_chi = k;
    return res;
}

ConstructionResult caterpillar(CaterpillarVariant variant, int k, std::optional<int> s2) {
    int min_k = variant == CaterpillarVariant::G3 ? 6 : 2;
    if (k < min_k) {
        throw BadParameter("caterpillar variant needs k >= " + std::to_string(min_k));
    }
    int spine = k - 1;
    ConstructionResult res;
    auto leaves_at = [&](int i) {  // 1-based spine position
        switch (variant) {
            case CaterpillarVariant::G1:
                return 1;
            case CaterpillarVariant::G2:
                return i == spine ? 2 : 1;
            case CaterpillarVariant::G3:
                return (i <= 2 || i >= spine - 1) ? 2 : (i >= 3 && i <= k - 3 ? 1 : 0);
        }
        return 0;
    };
    int n = spine;
    for (int i = 1; i <= spine; ++i) n += leaves_at(i);
    res.graph = Graph(n);
    res.roles.resize(n);
    for (int i = 0; i < spine; ++i) {
        res.roles[i] = "x" + std::to_string(i + 1);
        if (i > 0) res.graph.add_edge(i - 1, i);
    }
    int next = spine;
    for (int i = 1; i <= spine; ++i) {
        int cnt = leaves_at(i);
        for (int p = 0; p < cnt; ++p) {
            res.roles[next] = std::string(p == 0 ? "y" : "z") + std::to_string(i);
            res.graph.add_edge(i - 1, next);
            ++next;
        }
    }
    if (s2) {
        bool in_regime = false;
        switch (variant) {
            case CaterpillarVariant::G1:
                in_regime = k <= *s2;
                break;
            case CaterpillarVariant::G2:
                // k = 3 is excluded: deleting the doubled leaf z_2 leaves P_4,
                // which still needs 3 colors under (1,2,2), so that instance
                // is not vertex-critical.
                in_regime = k == *s2 + 1 && k >= 4;
                break;
            case CaterpillarVariant::G3:
                in_regime = k == *s2 + 2;
                break;
        }
        if (in_regime) res.predicted_chi = k;
    }
    return res;
}

}  // namespace spack
