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

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "spack/graph.hpp"
#include "spack/seq.hpp"

namespace spack {

/// A constructed graph with role-labeled vertices and, where the underlying
/// formula applies, predicted chi_S / delta values for cross-checking.
struct ConstructionResult {
    Graph graph;
    std::vector<std::string> roles;  // one label per vertex
    std::optional<int> predicted_chi;
    std::optional<std::set<int>> predicted_delta;
};

/// Odd cycle C_{2k+1} with a clique hung on every cycle edge position:
/// clique Q_i has a_{ceil(i/2)} + ell - 1 vertices (a_k for Q_{2k+1}) and each
/// of its vertices is joined to x_i, x_{i+1} and to x_{i+o} for odd offsets
/// o = 3, 5, ..., 2k-1 (mod 2k+1; none when k = 1). Under S = (1^ell, 2^inf):
/// predicted chi = 2*sum(a) + a_k + ell, predicted delta = {1} union a.
/// Requires ell >= 1 and strictly increasing a with a_1 >= 2.
ConstructionResult realization_cycle_cliques(int ell, const std::vector<int>& a);

/// Cliques glued on a central clique. For |a| >= 2: K_k on x_1..x_k, clique of
/// order a_i + ell - 1 glued at x_i, where ell is the least index with
/// s_ell >= 3; predicted chi = (ell - 1) + sum(a). For |a| = 1: two cliques
/// K_{a+ell-1} sharing one vertex with ell the least index with s_ell >= 2;
/// predicted chi = 2a + ell - 2. Predicted delta = {1} union a.
/// Requires all a_i >= 2 and, for |a| >= 2, sum_{j != i} a_j >= a_i - 1
/// (HypothesisViolated otherwise).
ConstructionResult realization_clique_of_cliques(const PackingSequence& s,
                                                 const std::vector<int>& a);

/// Star K_{1,k-1} with k-2 extra leaves on every original leaf; n = 1+(k-1)^2.
/// Predicted chi = k for any S with s_1 = 1, s_2 >= 2.
ConstructionResult tree_T(int k);

enum class CaterpillarVariant { G1, G2, G3 };

/// The three explicit critical caterpillars for S = (1, s2^{k-1}):
///   G1: spine of k-1 vertices, one leaf each          (regime k <= s2)
///   G2: G1 plus a second leaf on the last spine vertex (regime k = s2+1)
///   G3: spine of k-1 vertices, one leaf on x_3..x_{k-3},
///       two leaves on x_1, x_2, x_{k-2}, x_{k-1}       (regime k = s2+2, k >= 6)
/// predicted_chi = k is filled in only when s2 is given and the regime holds.
ConstructionResult caterpillar(CaterpillarVariant variant, int k,
                               std::optional<int> s2 = std::nullopt);

}  // namespace spack
