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
#include <span>
#include <vector>

#include "spack/graph.hpp"
#include "spack/seq.hpp"

namespace spack {

/// Vertex -> color map; colors are 1-based, in [1, k].
using Coloring = std::vector<int>;

struct Violation {
    int u, v;      // offending pair, u < v
    int color;     // shared color
    int distance;  // d(u,v) <= s_color
};

/// Empty result iff c is an S-packing k-coloring of g.
/// Throws BadColoring when a vertex is uncolored or a color exceeds k.
std::vector<Violation> verify_coloring(const Graph& g, const PackingSequence& s,
                                       const Coloring& c, int k);

/// Exhaustive backtracking decision: is there an S-packing k-coloring?
/// Vertices are tried in descending-degree order; colors with equal s-values
/// are interchangeable, so only the first unused color of each equal-s block
/// may open a new class.
std::optional<Coloring> exists_coloring(const Graph& g, const PackingSequence& s, int k);

/// Core variant for callers that reuse a precomputed distance matrix.
/// `svals` must hold (s_1, ..., s_k).
std::optional<Coloring> exists_coloring(const Graph& g, const DistanceMatrix& dist,
                                        std::span<const int> svals);

struct SolveResult {
    int chi = 0;
    std::optional<Coloring> certificate;  // absent when n = 0
};

/// Exact chi_S by ascending k-search from a sound lower bound.
/// chi_S(empty graph) = 0 by convention. Throws NoFiniteColoring when a
/// finite sequence is exhausted without any valid coloring.
SolveResult chi_S(const Graph& g, const PackingSequence& s);

/// Largest number of vertices inducing a subgraph with chromatic number <= ell
/// (the ell-independence number). Exact branch and bound.
int alpha_k(const Graph& g, int ell);

/// Exact proper chromatic number.
int chromatic_number(const Graph& g);

/// n(G) - alpha_ell(G) + min(ell, chi(G)) for diameter-2 graphs under
/// S = (1^ell, s_{ell+1}, ...) with s_{ell+1} >= 2.
/// Throws PreconditionViolated on the wrong diameter or sequence shape.
int chi_S_diam2_formula(const Graph& g, const PackingSequence& s);

}  // namespace spack
