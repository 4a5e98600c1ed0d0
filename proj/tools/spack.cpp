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

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "spack/construct.hpp"
#include "spack/critical.hpp"
#include "spack/errors.hpp"
#include "spack/graph.hpp"
#include "spack/seq.hpp"
#include "spack/solver.hpp"

using json = nlohmann::json;
using namespace spack;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 ok, 1 verification failed, 2 bad input, 3 no finite coloring.
enum ExitCode { kOk = 0, kVerifyFailed = 1, kBadInput = 2, kNoFiniteColoring = 3 };

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

json base_report(const std::string& command, const Stopwatch& sw) {
    json j;
    j["schema"] = 1;
    j["version"] = kVersion;
    j["command"] = command;
    j["elapsed_ms"] = sw.elapsed_ms();
    return j;
}

void emit(json& j, const Stopwatch& sw) {
    j["elapsed_ms"] = sw.elapsed_ms();
    std::cout << j.dump(2) << "\n";
}

Graph family_from_spec(const std::string& spec) {
    std::string name = spec;
    std::vector<int> params;
    std::size_t colon = spec.find(':');
    if (colon != std::string::npos) {
        name = spec.substr(0, colon);
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                params.push_back(std::stoi(item));
            } catch (const std::exception&) {
                throw BadParameter("bad family parameter '" + item + "'");
            }
        }
    }
    auto need = [&](std::size_t n) {
        if (params.size() != n) {
            throw BadParameter("family '" + name + "' takes " + std::to_string(n) +
                               " parameter(s)");
        }
    };
    if (name == "path") {
        need(1);
        return make_path(params[0]);
    }
    if (name == "cycle") {
        need(1);
        return make_cycle(params[0]);
    }
    if (name == "clique") {
        need(1);
        return make_clique(params[0]);
    }
    if (name == "star") {
        need(1);
        return make_star(params[0]);
    }
    if (name == "z1") {
        need(0);
        return make_z1();
    }
    if (name == "k4-e") {
        need(0);
        return make_k4_minus_e();
    }
    throw BadParameter("unknown family '" + name + "'");
}

struct GraphSource {
    std::string graph_arg;   // file path or "-"
    std::string family_arg;  // name:params

    Graph load(json& inputs) const {
        if (!graph_arg.empty() && !family_arg.empty()) {
            throw BadParameter("--graph and --family are mutually exclusive");
        }
        if (!family_arg.empty()) {
            inputs["graph"] = "family:" + family_arg;
            return family_from_spec(family_arg);
        }
        if (graph_arg.empty()) throw BadParameter("one of --graph or --family is required");
        inputs["graph"] = graph_arg == "-" ? "stdin" : graph_arg;
        std::string line;
        if (graph_arg == "-") {
            if (!std::getline(std::cin, line)) throw MalformedGraph6("no graph6 line on stdin");
        } else {
            std::ifstream in(graph_arg);
            if (!in) throw BadParameter("cannot open " + graph_arg);
            if (!std::getline(in, line)) throw MalformedGraph6("empty graph6 file");
        }
        return parse_graph6(line);
    }
};

int cmd_chi(const std::string& sequence, const GraphSource& src) {
    Stopwatch sw;
    json j = base_report("chi", sw);
    PackingSequence s = PackingSequence::parse(sequence);
    j["inputs"]["sequence"] = s.format();
    Graph g = src.load(j["inputs"]);
    try {
        SolveResult res = chi_S(g, s);
        j["outputs"]["chi"] = res.chi;
        if (res.certificate) j["outputs"]["coloring"] = *res.certificate;
        emit(j, sw);
        std::cerr << "chi_S = " << res.chi << "\n";
        return kOk;
    } catch (const NoFiniteColoring& e) {
        j["outputs"]["error"] = "NoFiniteColoring";
        emit(j, sw);
        std::cerr << e.what() << "\n";
        return kNoFiniteColoring;
    }
}

int cmd_delta(const std::string& sequence, const GraphSource& src) {
    Stopwatch sw;
    json j = base_report("delta", sw);
    PackingSequence s = PackingSequence::parse(sequence);
    j["inputs"]["sequence"] = s.format();
    Graph g = src.load(j["inputs"]);
    try {
        CriticalityReport rep = criticality_report(g, s);
        j["outputs"]["chi"] = rep.chi;
        json table = json::array();
        for (auto [v, chi_del] : rep.per_vertex) {
            table.push_back({{"vertex", v}, {"chi_without", chi_del}});
        }
        j["outputs"]["per_vertex"] = table;
        j["outputs"]["delta_set"] = rep.delta_set;
        j["outputs"]["critical"] = rep.critical;
        emit(j, sw);
        std::cerr << "chi_S = " << rep.chi << ", critical = " << (rep.critical ? "yes" : "no")
                  << "\n";
        return kOk;
    } catch (const NoFiniteColoring& e) {
        j["outputs"]["error"] = "NoFiniteColoring";
        emit(j, sw);
        std::cerr << e.what() << "\n";
        return kNoFiniteColoring;
    }
}

int cmd_enumerate(const std::string& sequence, int k, int n_max, const std::string& stream,
                  int jobs) {
    Stopwatch sw;
    json j = base_report("enumerate", sw);
    PackingSequence s = PackingSequence::parse(sequence);
    j["inputs"]["sequence"] = s.format();
    j["inputs"]["k"] = k;
    std::vector<std::string> found;
    if (!stream.empty()) {
        j["inputs"]["stream"] = stream == "-" ? "stdin" : stream;
        if (stream == "-") {
            found = enumerate_critical_stream(std::cin, s, k);
        } else {
            std::ifstream in(stream);
            if (!in) throw BadParameter("cannot open " + stream);
            found = enumerate_critical_stream(in, s, k);
        }
    } else {
        j["inputs"]["n_max"] = n_max;
        found = enumerate_critical(n_max, s, k, jobs);
    }
    j["outputs"]["count"] = found.size();
    j["outputs"]["graphs"] = found;
    emit(j, sw);
    for (const auto& g6 : found) std::cerr << g6 << "\n";
    std::cerr << found.size() << " graph(s)\n";
    return kOk;
}

ExpectedFamily expected_3critical(const PackingSequence& s) {
    if (s.is_all_ones()) return ExpectedFamily::odd_cycles();
    if (s.term(1) == 1 && s.term(2) >= 2) {
        return ExpectedFamily::explicit_list({make_cycle(3), make_cycle(4), make_path(4)});
    }
    if (s.term(1) >= 2) return ExpectedFamily::explicit_list({make_cycle(3), make_path(3)});
    throw BadParameter("no 3-critical characterization for S = " + s.format());
}

ExpectedFamily expected_4critical(const PackingSequence& s) {
    if (s.term(1) < 2) {
        throw BadParameter("the 4-critical characterization needs s_1 >= 2");
    }
    std::vector<Graph> base{make_star(3), make_cycle(4), make_z1(), make_k4_minus_e(),
                            make_clique(4)};
    if (s.term(1) >= 3) {
        base.push_back(make_path(4));
    } else if (s.term(2) >= 3) {
        base.push_back(make_path(5));
    } else if (s.term(3) >= 3) {
        base.push_back(make_path(6));
        base.push_back(make_cycle(6));
    }
    // s_3 = 2: the base set alone.
    return ExpectedFamily::explicit_list(std::move(base));
}

int finish_verify(json& j, const Stopwatch& sw, bool pass, std::size_t count,
                  const std::vector<std::string>& missing,
                  const std::vector<std::string>& extra) {
    j["outputs"]["count"] = count;
    j["outputs"]["pass"] = pass;
    j["outputs"]["missing"] = missing;
    j["outputs"]["extra"] = extra;
    emit(j, sw);
    std::cerr << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kOk : kVerifyFailed;
}

int cmd_verify(const std::string& theorem, const std::string& sequence, int n_max, int jobs) {
    Stopwatch sw;
    json j = base_report("verify", sw);
    j["inputs"]["theorem"] = theorem;
    j["inputs"]["n_max"] = n_max;

    if (theorem == "3crit" || theorem == "4crit") {
        PackingSequence s = PackingSequence::parse(sequence);
        j["inputs"]["sequence"] = s.format();
        int k = theorem == "3crit" ? 3 : 4;
        j["inputs"]["k"] = k;
        ExpectedFamily expected =
            theorem == "3crit" ? expected_3critical(s) : expected_4critical(s);
        VerifyReport rep = verify_characterization(s, k, n_max, expected, jobs);
        return finish_verify(j, sw, rep.pass, rep.found.size(), rep.missing, rep.extra);
    }

    std::vector<std::string> failures;
    std::size_t count = 0;
    if (theorem == "diam2") {
        PackingSequence s = PackingSequence::parse(sequence);
        j["inputs"]["sequence"] = s.format();
        for (int n = 2; n <= n_max; ++n) {
            for_each_connected_representative(n, [&](const Graph& g) {
                auto st = basic_stats(g);
                if (!st.diameter || *st.diameter != 2) return;
                ++count;
                if (chi_S_diam2_formula(g, s) != chi_S(g, s).chi) {
                    failures.push_back(write_graph6(g));
                }
            });
        }
    } else if (theorem == "col222") {
        const PackingSequence s = PackingSequence::parse("2^3");
        for (int n = 1; n <= n_max; ++n) {
            for_each_connected_representative(n, [&](const Graph& g) {
                ++count;
                bool colorable = exists_coloring(g, s, std::min(3, g.n())).has_value();
                bool predicted = is_path_graph(g) || (is_cycle_graph(g) && g.n() % 3 == 0);
                if (colorable != predicted) failures.push_back(write_graph6(g));
            });
        }
    } else if (theorem == "n5bound") {
        const PackingSequence s = PackingSequence::parse("2,2,3");
        for (int n = 6; n <= std::max(n_max, 6); ++n) {
            for_each_connected_representative(n, [&](const Graph& g) {
                ++count;
                if (exists_coloring(g, s, 3).has_value()) failures.push_back(write_graph6(g));
            });
        }
    } else {
        throw BadParameter("unknown theorem '" + theorem + "'");
    }
    return finish_verify(j, sw, failures.empty(), count, {}, failures);
}

int cmd_construct(const std::string& family, int ell, const std::string& a_arg, int k, int s2,
                  const std::string& sequence, bool check) {
    Stopwatch sw;
    json j = base_report("construct", sw);
    j["inputs"]["family"] = family;

    std::vector<int> a;
    if (!a_arg.empty()) {
        std::stringstream ss(a_arg);
        std::string item;
        while (std::getline(ss, item, ',')) a.push_back(std::stoi(item));
    }

    ConstructionResult res;
    std::optional<PackingSequence> s;
    if (!sequence.empty()) {
        s = PackingSequence::parse(sequence);
        j["inputs"]["sequence"] = s->format();
    }
    if (family == "realization1") {
        j["inputs"]["ell"] = ell;
        j["inputs"]["a"] = a;
        res = realization_cycle_cliques(ell, a);
        std::vector<int> ones(ell, 1);
        if (!s) s = PackingSequence::constant_tail(ones, 2);
    } else if (family == "realization2") {
        if (!s) throw BadParameter("realization2 needs --sequence");
        j["inputs"]["a"] = a;
        res = realization_clique_of_cliques(*s, a);
    } else if (family == "treeT") {
        j["inputs"]["k"] = k;
        res = tree_T(k);
        if (!s) s = PackingSequence::constant_tail({1}, 2);
    } else if (family == "cat1" || family == "cat2" || family == "cat3") {
        j["inputs"]["k"] = k;
        CaterpillarVariant variant = family == "cat1"   ? CaterpillarVariant::G1
                                     : family == "cat2" ? CaterpillarVariant::G2
                                                        : CaterpillarVariant::G3;
        std::optional<int> s2_opt;
        if (s2 > 0) {
            s2_opt = s2;
            j["inputs"]["s2"] = s2;
        }
        res = caterpillar(variant, k, s2_opt);
        if (!s && s2 > 0) {
            s = PackingSequence::finite([&] {
                std::vector<int> v{1};
                v.insert(v.end(), k - 1, s2);
                return v;
            }());
        }
    } else {
        throw BadParameter("unknown construction family '" + family + "'");
    }

    j["outputs"]["graph6"] = write_graph6(res.graph);
    j["outputs"]["n"] = res.graph.n();
    j["outputs"]["roles"] = res.roles;
    j["outputs"]["predicted_chi"] = res.predicted_chi ? json(*res.predicted_chi) : json();
    j["outputs"]["predicted_delta"] =
        res.predicted_delta ? json(*res.predicted_delta) : json();

    if (check) {
        if (!s) throw BadParameter("--check needs --sequence (or a family default)");
        CriticalityReport rep = criticality_report(res.graph, *s);
        j["outputs"]["check"]["sequence"] = s->format();
        j["outputs"]["check"]["chi"] = rep.chi;
        j["outputs"]["check"]["delta_set"] = rep.delta_set;
        j["outputs"]["check"]["critical"] = rep.critical;
        bool chi_match = !res.predicted_chi || *res.predicted_chi == rep.chi;
        bool delta_match = !res.predicted_delta || *res.predicted_delta == rep.delta_set;
        j["outputs"]["check"]["matches_prediction"] = chi_match && delta_match;
    }
    emit(j, sw);
    std::cerr << write_graph6(res.graph) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact S-packing coloring and vertex-criticality toolkit"};
    app.require_subcommand(1);

    std::string sequence, theorem, stream, family;
    GraphSource src;
    int k = 0, n_max = 7, jobs = 1, ell = 1, s2 = 0;
    std::string a_arg;
    bool check = false;

    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--graph", src.graph_arg, "graph6 file, or - for stdin");
        cmd->add_option("--family", src.family_arg,
                        "named graph: path:K, cycle:K, clique:K, star:M, z1, k4-e");
    };

    auto* chi_cmd = app.add_subcommand("chi", "compute chi_S and a certificate coloring");
    chi_cmd->add_option("--sequence", sequence, "packing sequence, e.g. 1,2^inf")->required();
    add_graph_opts(chi_cmd);

    auto* delta_cmd = app.add_subcommand("delta", "per-vertex deletion analysis");
    delta_cmd->add_option("--sequence", sequence)->required();
    add_graph_opts(delta_cmd);

    auto* enum_cmd = app.add_subcommand("enumerate", "all k-chi_S-critical connected graphs");
    enum_cmd->add_option("--sequence", sequence)->required();
    enum_cmd->add_option("--k", k)->required();
    enum_cmd->add_option("--n-max", n_max, "built-in scan bound (<= 7)");
    enum_cmd->add_option("--stream", stream, "external graph6 stream file, or -");
    enum_cmd->add_option("--jobs", jobs, "enumeration workers (default 1)");

    auto* verify_cmd = app.add_subcommand("verify", "check a characterization exhaustively");
    verify_cmd->add_option("--theorem", theorem, "3crit|4crit|diam2|col222|n5bound")->required();
    verify_cmd->add_option("--sequence", sequence);
    verify_cmd->add_option("--n-max", n_max);
    verify_cmd->add_option("--jobs", jobs);

    auto* con_cmd = app.add_subcommand("construct", "build a named critical graph family");
    con_cmd->add_option("--family", family,
                        "realization1|realization2|treeT|cat1|cat2|cat3")
        ->required();
    con_cmd->add_option("--ell", ell);
    con_cmd->add_option("--a", a_arg, "comma-separated a values");
    con_cmd->add_option("--k", k);
    con_cmd->add_option("--s2", s2);
    con_cmd->add_option("--sequence", sequence);
    con_cmd->add_flag("--check", check, "solve and compare against predictions");

    try {
        app.parse(argc, argv);
        if (chi_cmd->parsed()) return cmd_chi(sequence, src);
        if (delta_cmd->parsed()) return cmd_delta(sequence, src);
        if (enum_cmd->parsed()) return cmd_enumerate(sequence, k, n_max, stream, jobs);
        if (verify_cmd->parsed()) return cmd_verify(theorem, sequence, n_max, jobs);
        if (con_cmd->parsed()) return cmd_construct(family, ell, a_arg, k, s2, sequence, check);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kBadInput;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    }
    return kBadInput;
}
