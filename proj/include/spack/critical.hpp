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

#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "spack/graph.hpp"
#include "spack/seq.hpp"
#include "spack/solver.hpp"

namespace spack {

struct CriticalityReport {
    int chi = 0;
    std::vector<std::pair<int, int>> per_vertex;  // (vertex, chi of G - vertex)
    std::set<int> delta_set;                      // { chi - chi(G-u) }
    bool critical = false;                        // every difference >= 1
};

CriticalityReport criticality_report(const Graph& g, const PackingSequence& s);

/// chi_S(G) = k and every vertex deletion drops chi_S. Avoids full reports:
/// decided by three rounds of coloring decisions with cheap lower-bound cuts.
bool is_k_critical(const Graph& g, const PackingSequence& s, int k);

/// Every connected graph on <= n_max vertices (n_max <= 7) that is
/// k-chi_S-critical, as sorted canonical graph6. Scans all upper-triangle
/// bitmasks, restricted to labelings with non-increasing degree order
/// (criticality is isomorphism-invariant, so one representative suffices),
/// then dedups survivors by canonical form.
std::vector<std::string> enumerate_critical(int n_max, const PackingSequence& s, int k,
                                            int jobs = 1);

/// Serial reference for the OpenMP scan above; identical output.
std::vector<std::string> enumerate_critical_serial(int n_max, const PackingSequence& s, int k);

/// Same test applied to an external newline-delimited graph6 stream
/// (the escape hatch past the n_max <= 7 wall).
std::vector<std::string> enumerate_critical_stream(std::istream& in, const PackingSequence& s,
                                                   int k);

/// A theorem's answer set: an explicit list of graphs, or all odd cycles.
class ExpectedFamily {
public:
    static ExpectedFamily explicit_list(std::vector<Graph> graphs);
    static ExpectedFamily odd_cycles();

    /// Canonical graph6 of every member with n <= n_max.
    std::set<std::string> realize(int n_max) const;

private:
    bool odd_cycles_ = false;
    std::vector<Graph> graphs_;
};

struct VerifyReport {
    bool pass = false;
    int n_max = 0;
    std::vector<std::string> found;    // enumerated, sorted canonical graph6
    std::vector<std::string> missing;  // expected but not enumerated
    std::vector<std::string> extra;    // enumerated but not expected
};

VerifyReport verify_characterization(const PackingSequence& s, int k, int n_max,
                                     const ExpectedFamily& expected, int jobs = 1);

}  // namespace spack
