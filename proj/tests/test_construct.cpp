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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "spack/construct.hpp"
#include "spack/critical.hpp"
#include "spack/errors.hpp"
#include "spack/solver.hpp"
#include "test_helpers.hpp"

using namespace spack;

TEST_CASE("cycle-of-cliques realization, small instance checked by brute force") {
    auto res = realization_cycle_cliques(1, {2});
    CHECK(res.graph.n() == 9);
    CHECK(res.predicted_chi == 7);
    CHECK(res.predicted_delta == std::set<int>{1, 2});
    auto st = basic_stats(res.graph);
    CHECK(st.connected);
    CHECK(st.diameter == 2);
    const PackingSequence s = PackingSequence::parse("1,2^inf");
    auto rep = criticality_report(res.graph, s);
    CHECK(rep.chi == 7);
    CHECK(rep.delta_set == std::set<int>{1, 2});
    CHECK(rep.critical);
}

TEST_CASE("cycle-of-cliques sizing for the two-clique-parameter case") {
    auto res = realization_cycle_cliques(2, {2, 4});
    CHECK(res.graph.n() == 26);
    CHECK(res.predicted_chi == 2 * 6 + 4 + 2);
    CHECK(basic_stats(res.graph).diameter == 2);
    CHECK(res.roles[0] == "x1");
    CHECK(res.roles[5] == "Q1.v1");
    CHECK_THROWS_AS(realization_cycle_cliques(0, {2}), spack::BadParameter);
    CHECK_THROWS_AS(realization_cycle_cliques(1, {1}), spack::BadParameter);
    CHECK_THROWS_AS(realization_cycle_cliques(1, {3, 2}), spack::BadParameter);
}

TEST_CASE("clique-of-cliques k=1 gives the bowtie") {
    auto res = realization_clique_of_cliques(PackingSequence::parse("2^inf"), {3});
    CHECK(res.graph.n() == 5);
    CHECK(canonical_form(res.graph) == canonical_form(testing::bowtie()));
    CHECK(res.predicted_chi == 5);
    CHECK(res.predicted_delta == std::set<int>{1, 3});
}

TEST_CASE("clique-of-cliques k=2") {
    const PackingSequence s = PackingSequence::parse("1,3^inf");
    auto res = realization_clique_of_cliques(s, {2, 3});
    CHECK(res.graph.n() == 7);
    CHECK(res.predicted_chi == 6);  // ell = 2
    CHECK(res.predicted_delta == std::set<int>{1, 2, 3});
    CHECK_THROWS_AS(realization_clique_of_cliques(s, {2, 5}), spack::HypothesisViolated);
    CHECK_THROWS_AS(realization_clique_of_cliques(PackingSequence::parse("1^3"), {2, 3}),
                    spack::BadParameter);
    CHECK_THROWS_AS(realization_clique_of_cliques(s, {1, 2}), spack::BadParameter);
}

TEST_CASE("clique-of-cliques k=1 degenerate case is P3") {
    // With a=2 and ell=1 the two glued cliques are both K2, so the
    // construction degenerates to P_3; 2a+ell-2 = 3 matches the solver.
    const PackingSequence s = PackingSequence::parse("3^inf");
    auto res = realization_clique_of_cliques(s, {2});
    CHECK(canonical_form(res.graph) == canonical_form(make_path(3)));
    CHECK(res.predicted_chi == 3);
    CHECK(chi_S(res.graph, s).chi == 3);
    auto rep = criticality_report(res.graph, s);
    CHECK(rep.delta_set == std::set<int>{1, 2});
    CHECK(rep.critical);
}

TEST_CASE("tree_T") {
    CHECK(canonical_form(tree_T(2).graph) == canonical_form(make_clique(2)));
    CHECK(canonical_form(tree_T(3).graph) == canonical_form(make_path(5)));
    auto t4 = tree_T(4);
    CHECK(t4.graph.n() == 10);
    CHECK(chi_S(t4.graph, PackingSequence::parse("1,2^inf")).chi == 4);
    CHECK_THROWS_AS(tree_T(1), spack::BadParameter);
}

TEST_CASE("caterpillars") {
    auto g1 = caterpillar(CaterpillarVariant::G1, 4, 4);
    CHECK(g1.graph.n() == 6);
    CHECK(g1.predicted_chi == 4);
    const PackingSequence s143 = PackingSequence::parse("1,4^3");
    CHECK(chi_S(g1.graph, s143).chi == 4);
    CHECK(is_k_critical(g1.graph, s143, 4));

    auto g2 = caterpillar(CaterpillarVariant::G2, 4, 3);
    CHECK(g2.graph.n() == 7);
    CHECK(g2.predicted_chi == 4);
    const PackingSequence s133 = PackingSequence::parse("1,3^3");
    CHECK(chi_S(g2.graph, s133).chi == 4);
    CHECK(is_k_critical(g2.graph, s133, 4));

    // The doubled-leaf construction breaks down at k=3: removing z_2 leaves
    // P_4, which is itself 3-chromatic under (1,2,2). No prediction is made,
    // and the instance really is non-critical.
    auto g2_small = caterpillar(CaterpillarVariant::G2, 3, 2);
    CHECK_FALSE(g2_small.predicted_chi.has_value());
    const PackingSequence s122 = PackingSequence::parse("1,2^2");
    CHECK(chi_S(g2_small.graph, s122).chi == 3);
    CHECK_FALSE(is_k_critical(g2_small.graph, s122, 3));

    auto g3 = caterpillar(CaterpillarVariant::G3, 6, 4);
    CHECK(g3.graph.n() == 14);
    CHECK(g3.predicted_chi == 6);
    const PackingSequence s145 = PackingSequence::parse("1,4^5");
    CHECK(chi_S(g3.graph, s145).chi == 6);
    CHECK(is_k_critical(g3.graph, s145, 6));

    CHECK_THROWS_AS(caterpillar(CaterpillarVariant::G3, 5), spack::BadParameter);
    // Out of regime: no prediction is made.
    CHECK_FALSE(caterpillar(CaterpillarVariant::G1, 5, 4).predicted_chi.has_value());
    CHECK_FALSE(caterpillar(CaterpillarVariant::G1, 4).predicted_chi.has_value());
}

TEST_CASE("realization delta values land on the predicted vertex classes") {
    auto res = realization_cycle_cliques(1, {2});
    const PackingSequence s = PackingSequence::parse("1,2^inf");
    int chi = chi_S(res.graph, s).chi;
    for (int v = 0; v < res.graph.n(); ++v) {
        int diff = chi - chi_S(res.graph.delete_vertex(v), s).chi;
        if (res.roles[v].front() == 'Q') {
            CHECK(diff == 1);
        } else if (res.roles[v] == "x2") {
            CHECK(diff == 2);  // a_1 at the even cycle vertex
        }
    }
}
