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

#include "spack/critical.hpp"

#include <algorithm>
#include <istream>

#include "spack/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace spack {

CriticalityReport criticality_report(const Graph& g, const PackingSequence& s) {
    if (g.n() < 1) throw PreconditionViolated("criticality needs at least one vertex");
    CriticalityReport rep;
    rep.chi = chi_S(g, s).chi;
    rep.critical = true;
    for (int u = 0; u < g.n(); ++u) {
        int chi_del = chi_S(g.delete_vertex(u), s).chi;
        rep.per_vertex.emplace_back(u, chi_del);
        rep.delta_set.insert(rep.chi - chi_del);
        if (chi_del >= rep.chi) rep.critical = false;
    }
    return rep;
}

bool is_k_critical(const Graph& g, const PackingSequence& s, int k) {
    int n = g.n();
    if (n < 1 || k < 1) return false;
    if (s.is_finite() && s.length() < k) return false;
    if (g.edge_count() > 0 && k < 2) return false;
    if (s.term(1) >= 2) {
        int maxdeg = 0;
        for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
        if (maxdeg + 1 > k) return false;  // chi_S >= Delta + 1 when s_1 >= 2
    }
    DistanceMatrix dist = bfs_all_pairs(g);
    std::vector<int> svals = s.truncate(k);
    if (!exists_coloring(g, dist, svals)) return false;  // chi > k
    if (k >= 2) {
        std::vector<int> below(svals.begin(), svals.end() - 1);
        if (exists_coloring(g, dist, below)) return false;  // chi < k
    }
    for (int u = 0; u < n; ++u) {
        Graph h = g.delete_vertex(u);
        if (k == 1) {
            if (h.n() > 0) return false;
            continue;
        }
        std::vector<int> below(svals.begin(), svals.end() - 1);
        if (!exists_coloring(h, bfs_all_pairs(h), below)) return false;
    }
    return true;
}

namespace {

bool scan_candidate(int n, std::uint64_t mask, const PackingSequence& s, int k, Graph& g) {
    g = graph_from_mask(n, mask);
    return degrees_non_increasing(g) && g.is_connected() && is_k_critical(g, s, k);
}

std::vector<std::string> sorted_unique(std::set<std::string>&& found) {
    return {found.begin(), found.end()};
}

}  // namespace

std::vector<std::string> enumerate_critical_serial(int n_max, const PackingSequence& s, int k) {
    if (n_max < 1 || n_max > 7) {
        throw TooLarge("built-in enumeration is limited to n_max <= 7; stream graph6 for more");
    }
    std::set<std::string> found;
    Graph g;
    for (int n = 1; n <= n_max; ++n) {
        std::uint64_t total = std::uint64_t{1} << (n * (n - 1) / 2);
        for (std::uint64_t mask = 0; mask < total; ++mask) {
            if (scan_candidate(n, mask, s, k, g)) found.insert(canonical_graph6(g));
        }
    }
    return sorted_unique(std::move(found));
}

std::vector<std::string> enumerate_critical(int n_max, const PackingSequence& s, int k,
                                            int jobs) {
    if (jobs <= 1) return enumerate_critical_serial(n_max, s, k);
    if (n_max < 1 || n_max > 7) {
        throw TooLarge("built-in enumeration is limited to n_max <= 7; stream graph6 for more");
    }
    std::set<std::string> found;
#ifdef _OPENMP
    for (int n = 1; n <= n_max; ++n) {
        std::int64_t total = std::int64_t{1} << (n * (n - 1) / 2);
#pragma omp parallel num_threads(jobs)
        {
            std::set<std::string> local;
            Graph g;
#pragma omp for schedule(dynamic, 4096)
            for (std::int64_t mask = 0; mask < total; ++mask) {
                if (scan_candidate(n, static_cast<std::uint64_t>(mask), s, k, g)) {
                    local.insert(canonical_graph6(g));
                }
            }
#pragma omp critical
            found.merge(local);
        }
    }
#else
    return enumerate_critical_serial(n_max, s, k);
#endif
    return sorted_unique(std::move(found));
}

std::vector<std::string> enumerate_critical_stream(std::istream& in, const PackingSequence& s,
                                                   int k) {
    std::set<std::string> found;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        Graph g = parse_graph6(line);
        if (!g.is_connected() || !is_k_critical(g, s, k)) continue;
        // Past the canonical_form guard we trust the generator to emit one
        // graph per isomorphism class.
        found.insert(g.n() <= 9 ? canonical_graph6(g) : write_graph6(g));
    }
    return sorted_unique(std::move(found));
}

ExpectedFamily ExpectedFamily::explicit_list(std::vector<Graph> graphs) {
    ExpectedFamily f;
    f.graphs_ = std::move(graphs);
    return f;
}

ExpectedFamily ExpectedFamily::odd_cycles() {
    ExpectedFamily f;
    f.odd_cycles_ = true;
    return f;
}

std::set<std::string> ExpectedFamily::realize(int n_max) const {
    std::set<std::string> out;
    if (odd_cycles_) {
        for (int len = 3; len <= n_max; len += 2) out.insert(canonical_graph6(make_cycle(len)));
        return out;
    }
    for (const Graph& g : graphs_) {
        if (g.n() <= n_max) out.insert(canonical_graph6(g));
    }
    return out;
}

VerifyReport verify_characterization(const PackingSequence& s, int k, int n_max,
                                     const ExpectedFamily& expected, int jobs) {
    VerifyReport rep;
    rep.n_max = n_max;
    rep.found = enumerate_critical(n_max, s, k, jobs);
    std::set<std::string> want = expected.realize(n_max);
    std::set<std::string> got(rep.found.begin(), rep.found.end());
    std::set_difference(want.begin(), want.end(), got.begin(), got.end(),
                        std::back_inserter(rep.missing));
    std::set_difference(got.begin(), got.end(), want.begin(), want.end(),
                        std::back_inserter(rep.extra));
    rep.pass = rep.missing.empty() && rep.extra.empty();
    return rep;
}

}  // namespace spack
