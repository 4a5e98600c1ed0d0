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

// End-to-end acceptance checks: every characterization and construction is
// verified exhaustively on small graphs, at exact tolerance. One line per
// criterion; exit code is the number of failures.
//
//   acceptance [criterion numbers...]

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "spack/construct.hpp"
#include "spack/critical.hpp"
#include "spack/errors.hpp"
#include "spack/solver.hpp"
#include "../tests/test_helpers.hpp"

using namespace spack;

namespace {

int failures_seen = 0;

bool check(bool ok, const std::string& what) {
    if (!ok) {
        std::printf("    violation: %s\n", what.c_str());
        ++failures_seen;
    }
    return ok;
}

// ---- 1. chi_S = 2 characterization ----------------------------------------
bool criterion1() {
    struct Case {
        PackingSequence s;
        std::function<bool(const Graph&)> predicate;
        const char* name;
    };
    const std::vector<Case> cases = {
        {PackingSequence::parse("1,1,2^inf"), [](const Graph& g) { return is_bipartite(g); },
         "(1,1,2^inf) bipartite"},
        {PackingSequence::parse("1,2^inf"), [](const Graph& g) { return is_star(g); },
         "(1,2^inf) star"},
        {PackingSequence::parse("2^inf"),
         [](const Graph& g) { return g.n() == 2 && g.edge_count() == 1; }, "(2^inf) K2"},
    };
    bool ok = true;
    for (int n = 2; n <= 7; ++n) {
        for_each_connected_representative(n, [&](const Graph& g) {
            for (const auto& c : cases) {
                bool chi_is_2 = exists_coloring(g, c.s, 2).has_value() &&
                                !exists_coloring(g, c.s, 1).has_value();
                if (chi_is_2 != c.predicate(g)) {
                    ok = check(false, std::string(c.name) + " on " + write_graph6(g));
                }
            }
        });
    }
    return ok;
}

// ---- 2. (2,2,2)-colorability ------------------------------------------------
bool criterion2() {
    const PackingSequence s = PackingSequence::parse("2^3");
    bool ok = true;
    for (int n = 1; n <= 7; ++n) {
        for_each_connected_representative(n, [&](const Graph& g) {
            bool colorable = exists_coloring(g, s, std::min(3, g.n())).has_value();
            bool predicted = is_path_graph(g) || (is_cycle_graph(g) && g.n() % 3 == 0);
            if (colorable != predicted) ok = check(false, "(2,2,2) on " + write_graph6(g));
        });
    }
    return ok;
}

// ---- 3. n <= 5 bound for (2,2,3) -------------------------------------------
bool criterion3() {
    const PackingSequence s = PackingSequence::parse("2,2,3");
    bool ok = true;
    for_each_connected_representative(6, [&](const Graph& g) {
        if (exists_coloring(g, s, 3).has_value()) {
            ok = check(false, "(2,2,3)-colorable 6-vertex graph " + write_graph6(g));
        }
    });
    return ok;
}

// ---- 4. diameter-2 formula --------------------------------------------------
bool criterion4() {
    const PackingSequence seqs[] = {PackingSequence::parse("1,2^inf"),
                                    PackingSequence::parse("1^2,2^inf"),
                                    PackingSequence::parse("1^3,2^inf")};
    bool ok = true;
    for (int n = 2; n <= 7; ++n) {
        for_each_connected_representative(n, [&](const Graph& g) {
            auto st = basic_stats(g);
            if (!st.diameter || *st.diameter != 2) return;
            for (const auto& s : seqs) {
                if (chi_S_diam2_formula(g, s) != chi_S(g, s).chi) {
                    ok = check(false, "diam-2 formula on " + write_graph6(g) + " S=" + s.format());
                }
            }
        });
    }
    return ok;
}

// ---- 5. cycle-of-cliques realization ---------------------------------------
bool criterion5() {
    struct Case {
        int ell;
        std::vector<int> a;
    };
    bool ok = true;
    for (const Case& c : {Case{1, {2}}, Case{1, {2, 3}}, Case{2, {2}}}) {
        auto res = realization_cycle_cliques(c.ell, c.a);
        PackingSequence s =
            PackingSequence::constant_tail(std::vector<int>(c.ell, 1), 2);
        auto st = basic_stats(res.graph);
        ok &= check(st.diameter == 2, "realization diameter");
        auto rep = criticality_report(res.graph, s);
        ok &= check(rep.chi == *res.predicted_chi, "realization chi");
        ok &= check(rep.delta_set == *res.predicted_delta, "realization delta set");
        ok &= check(rep.critical, "realization criticality");
    }
    return ok;
}

// ---- 6. clique-of-cliques realization --------------------------------------
bool criterion6() {
    bool ok = true;
    {
        auto res = realization_clique_of_cliques(PackingSequence::parse("1,3^inf"), {2, 3});
        auto rep = criticality_report(res.graph, PackingSequence::parse("1,3^inf"));
        ok &= check(rep.chi == 6 && rep.chi == *res.predicted_chi, "glued cliques k=2 chi");
        ok &= check(rep.delta_set == std::set<int>{1, 2, 3}, "glued cliques k=2 delta");
        ok &= check(rep.critical, "glued cliques k=2 criticality");
    }
    {
        auto res = realization_clique_of_cliques(PackingSequence::parse("2^inf"), {3});
        auto rep = criticality_report(res.graph, PackingSequence::parse("2^inf"));
        ok &= check(rep.chi == 5 && rep.chi == *res.predicted_chi, "bowtie chi");
        ok &= check(rep.delta_set == std::set<int>{1, 3}, "bowtie delta");
        ok &= check(rep.critical, "bowtie criticality");
    }
    return ok;
}

// ---- 7. 3-critical characterization ----------------------------------------
bool criterion7() {
    bool ok = true;
    auto run = [&](const char* seq, const ExpectedFamily& expected) {
        auto rep = verify_characterization(PackingSequence::parse(seq), 3, 7, expected);
        ok &= check(rep.pass, std::string("3-critical under ") + seq);
    };
    run("1^inf", ExpectedFamily::odd_cycles());
    auto c3c4p4 = ExpectedFamily::explicit_list({make_cycle(3), make_cycle(4), make_path(4)});
    run("1,2^inf", c3c4p4);
    run("1,3^inf", c3c4p4);
    auto c3p3 = ExpectedFamily::explicit_list({make_cycle(3), make_path(3)});
    run("2^inf", c3p3);
    run("3^inf", c3p3);
    return ok;
}

// ---- 8. 4-critical characterization ----------------------------------------
bool criterion8() {
    bool ok = true;
    std::vector<Graph> base{make_star(3), make_cycle(4), make_z1(), make_k4_minus_e(),
                            make_clique(4)};
    auto with = [&](std::vector<Graph> more) {
        more.insert(more.end(), base.begin(), base.end());
        return ExpectedFamily::explicit_list(std::move(more));
    };
    auto run = [&](const char* seq, const ExpectedFamily& expected) {
        auto rep = verify_characterization(PackingSequence::parse(seq), 4, 6, expected);
        ok &= check(rep.pass, std::string("4-critical under ") + seq);
    };
    run("2^inf", with({}));
    run("2,2,3^inf", with({make_path(6), make_cycle(6)}));
    run("2,3^inf", with({make_path(5)}));
    run("3^inf", with({make_path(4)}));
    return ok;
}

// ---- 9. trees T_k and iterated leaf deletion -------------------------------
bool criterion9() {
    const PackingSequence s = PackingSequence::parse("1,2^inf");
    bool ok = true;
    for (int k = 2; k <= 5; ++k) {
        Graph t = tree_T(k).graph;
        ok &= check(chi_S(t, s).chi == k, "chi_S(T_" + std::to_string(k) + ")");
        // Delete leaves that keep chi_S at k until the tree is k-critical.
        int guard = t.n();
        while (!is_k_critical(t, s, k) && guard-- > 0) {
            bool removed = false;
            for (int v = 0; v < t.n() && !removed; ++v) {
                if (t.degree(v) != 1) continue;
                Graph h = t.delete_vertex(v);
                if (chi_S(h, s).chi == k) {
                    t = h;
                    removed = true;
                }
            }
            if (!removed) break;
        }
        ok &= check(is_k_critical(t, s, k),
                    "leaf deletion reaches a " + std::to_string(k) + "-critical subtree");
    }
    return ok;
}

// ---- 10. caterpillars --------------------------------------------------------
bool criterion10() {
    bool ok = true;
    auto seq_for = [](int s2, int k) {
        std::vector<int> v{1};
        v.insert(v.end(), k - 1, s2);
        return PackingSequence::finite(v);
    };
    struct Case {
        CaterpillarVariant variant;
        int k, s2;
        const char* name;
    };
    const Case cases[] = {
        {CaterpillarVariant::G1, 3, 3, "G1 k=3"}, {CaterpillarVariant::G1, 4, 4, "G1 k=4"},
        {CaterpillarVariant::G2, 4, 3, "G2 k=4"}, {CaterpillarVariant::G2, 5, 4, "G2 k=5"},
        {CaterpillarVariant::G3, 6, 4, "G3 k=6"},
    };
    for (const Case& c : cases) {
        auto res = caterpillar(c.variant, c.k, c.s2);
        ok &= check(res.predicted_chi == c.k, std::string(c.name) + " regime");
        ok &= check(is_k_critical(res.graph, seq_for(c.s2, c.k), c.k),
                    std::string(c.name) + " criticality");
    }
    // G2 at k=3 is a genuine counterexample to the doubled-leaf argument:
    // removing z_2 leaves P_4, still 3-chromatic under (1,2,2). The solver
    // must agree, and a 3-critical caterpillar still exists (P_4 itself).
    {
        auto res = caterpillar(CaterpillarVariant::G2, 3, 2);
        PackingSequence s122 = seq_for(2, 3);
        ok &= check(!res.predicted_chi.has_value(), "G2 k=3 carries no prediction");
        ok &= check(!is_k_critical(res.graph, s122, 3), "G2 k=3 is not critical");
        ok &= check(is_k_critical(make_path(4), s122, 3), "P4 is 3-critical under (1,2,2)");
    }
    // Bound chi_S(T) <= s2+2 on random caterpillars.
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> n_dist(2, 14);
    std::uniform_int_distribution<int> s2_dist(2, 5);
    for (int iter = 0; iter < 10000; ++iter) {
        int s2 = s2_dist(rng);
        Graph g = testing::random_caterpillar(rng, n_dist(rng));
        std::vector<int> v{1};
        v.insert(v.end(), s2 + 1, s2);
        if (!exists_coloring(g, PackingSequence::finite(v), s2 + 2)) {
            ok = check(false, "caterpillar above the s2+2 bound: " + write_graph6(g));
        }
    }
    return ok;
}

// ---- 11. property suites ------------------------------------------------------
bool criterion11() {
    bool ok = true;
    std::mt19937 rng(20260823);
    const PackingSequence pool[] = {
        PackingSequence::parse("1,2^inf"), PackingSequence::parse("1,1,2^inf"),
        PackingSequence::parse("2^inf"), PackingSequence::parse("3^inf"),
        PackingSequence::parse("id")};
    auto pick = [&](std::mt19937& r) -> const PackingSequence& {
        std::uniform_int_distribution<std::size_t> d(0, std::size(pool) - 1);
        return pool[d(r)];
    };

    // Subgraph monotonicity under vertex and edge deletion.
    for (int iter = 0; iter < 2500; ++iter) {
        std::uniform_int_distribution<int> n_dist(2, 8);
        int n = n_dist(rng);
        Graph g = testing::random_graph(rng, n, 0.4);
        const PackingSequence& s = pick(rng);
        int chi = chi_S(g, s).chi;
        std::uniform_int_distribution<int> v_dist(0, n - 1);
        if (chi_S(g.delete_vertex(v_dist(rng)), s).chi > chi) {
            ok = check(false, "vertex-deletion monotonicity on " + write_graph6(g));
        }
        if (g.edge_count() > 0) {
            int u = 0, w = 0;
            do {
                u = v_dist(rng);
                w = v_dist(rng);
            } while (u == w || !g.has_edge(u, w));
            Graph h(n);
            for (int i = 0; i < n; ++i) {
                for (int j = i + 1; j < n; ++j) {
                    if (g.has_edge(i, j) && !(i == std::min(u, w) && j == std::max(u, w))) {
                        h.add_edge(i, j);
                    }
                }
            }
            if (chi_S(h, s).chi > chi) {
                ok = check(false, "edge-deletion monotonicity on " + write_graph6(g));
            }
        }
    }

    // Leaf lemma window.
    for (int iter = 0; iter < 2500; ++iter) {
        std::uniform_int_distribution<int> n_dist(2, 10);
        Graph t = testing::random_tree(rng, n_dist(rng));
        const PackingSequence& s = pick(rng);
        int chi = chi_S(t, s).chi;
        for (int v = 0; v < t.n(); ++v) {
            if (t.degree(v) != 1) continue;
            int chi_del = chi_S(t.delete_vertex(v), s).chi;
            if (chi_del < chi - 1 || chi_del > chi) {
                ok = check(false, "leaf lemma window on " + write_graph6(t));
            }
            break;
        }
    }

    // Certificate soundness.
    for (int iter = 0; iter < 2500; ++iter) {
        std::uniform_int_distribution<int> n_dist(1, 8);
        Graph g = testing::random_graph(rng, n_dist(rng), 0.5);
        const PackingSequence& s = pick(rng);
        SolveResult res = chi_S(g, s);
        if (!res.certificate || !verify_coloring(g, s, *res.certificate, res.chi).empty()) {
            ok = check(false, "certificate fails verification on " + write_graph6(g));
        }
        if (res.chi > 0 && exists_coloring(g, s, res.chi - 1)) {
            ok = check(false, "chi not minimal on " + write_graph6(g));
        }
    }

    // Brute-force oracle equivalence on every labeled graph with n <= 5.
    for (int n = 1; n <= 5; ++n) {
        std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            Graph g = graph_from_mask(n, mask);
            for (const auto& s : pool) {
                for (int k = 1; k <= 4; ++k) {
                    if (exists_coloring(g, s, k).has_value() !=
                        testing::brute_force_coloring(g, s, k).has_value()) {
                        ok = check(false, "oracle mismatch on " + write_graph6(g) +
                                              " S=" + s.format() + " k=" + std::to_string(k));
                    }
                }
            }
        }
    }
    return ok;
}

struct Criterion {
    int number;
    const char* description;
    bool (*run)();
};

const Criterion kCriteria[] = {
    {1, "chi_S=2 characterization (bipartite / star / K2), connected n <= 7", criterion1},
    {2, "(2,2,2)-colorable iff path or cycle with 3 | n, connected n <= 7", criterion2},
    {3, "no connected 6-vertex graph is (2,2,3)-colorable", criterion3},
    {4, "diameter-2 formula equals exhaustive chi_S, n <= 7, three sequences", criterion4},
    {5, "cycle-of-cliques realization: diameter, chi, delta set", criterion5},
    {6, "clique-of-cliques realization: chi and delta set", criterion6},
    {7, "3-critical characterization, five sequences, n_max = 7", criterion7},
    {8, "4-critical characterization, four sequences, n_max = 6", criterion8},
    {9, "trees T_k: chi_S = k and leaf deletion reaches a critical subtree", criterion9},
    {10, "caterpillars G1/G2/G3 critical; random caterpillars within s2+2", criterion10},
    {11, "property suites: monotonicity, leaf lemma, soundness, brute force", criterion11},
};

}  // namespace

int main(int argc, char** argv) {
    std::set<int> selected;
    for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));
    int failed = 0;
    for (const Criterion& c : kCriteria) {
        if (!selected.empty() && !selected.count(c.number)) continue;
        auto start = std::chrono::steady_clock::now();
        bool pass = false;
        try {
            pass = c.run();
        } catch (const std::exception& e) {
            std::printf("    exception: %s\n", e.what());
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::printf("criterion %2d: %s (%lld ms) %s\n", c.number, pass ? "PASS" : "FAIL",
                    static_cast<long long>(ms), c.description);
        std::fflush(stdout);
        if (!pass) ++failed;
    }
    return failed;
}
