#include "perfdiv/campaign.hpp"
#include "perfdiv/canonical.hpp"
#include "perfdiv/catalog.hpp"
#include "perfdiv/decompose.hpp"
#include "perfdiv/detect.hpp"
#include "perfdiv/divide_color.hpp"
#include "perfdiv/enumerate.hpp"
#include "perfdiv/errors.hpp"
#include "perfdiv/graph6.hpp"
#include "perfdiv/serialize.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace perfdiv;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_counterexample = 1;
constexpr int exit_usage = 2;

int pd_guard()
{
    if (const char* env = std::getenv("PERFDIV_MAX_N")) {
        try {
            int g = std::stoi(env);
            if (g >= 1 && g <= max_vertices)
                return g;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring invalid PERFDIV_MAX_N value '" << env << "'\n";
    }
    return 12;
}

// one graph6 per line; '-' reads standard input; empty lines skipped
std::vector<Graph> read_graphs(const std::string& input)
{
    std::istream* in = &std::cin;
    std::ifstream file;
    if (input != "-") {
        file.open(input);
        if (!file)
            throw std::runtime_error("cannot open input file '" + input + "'");
        in = &file;
    }
    std::vector<Graph> out;
    std::string line;
    long lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        while (!line.empty() && (line.back() == '\r' || line.back() == '\n'))
            line.pop_back();
        if (line.empty())
            continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const graph6_error& e) {
            throw std::runtime_error("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

struct gen_spec {
    int n = 0;
    bool connected = false;
};

gen_spec parse_gen(const std::string& text)
{
    gen_spec spec;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.rfind("n=", 0) == 0)
            spec.n = std::stoi(part.substr(2));
        else if (part == "connected")
            spec.connected = true;
        else
            throw std::runtime_error("bad --gen component '" + part + "'");
    }
    if (spec.n < 1)
        throw std::runtime_error("--gen needs n=<k>");
    return spec;
}

json classify_json(const Graph& g)
{
    json j;
    j["g6"] = emit_graph6(g);
    j["n"] = g.size();
    j["m"] = g.edge_count();
    j["omega"] = clique_number(g).omega;
    j["connected"] = is_connected(g);
    j["perfect"] = is_perfect(g);
    j["locally_perfect"] = is_locally_perfect(g);
    j["C3_free"] = is_C3_free(g);
    j["C5_free"] = is_C5_free(g);
    j["P5_free"] = is_P5_free(g);
    j["P6_free"] = is_P6_free(g);
    j["P7_free"] = is_P7_free(g);
    j["P8_free"] = is_P8_free(g);
    j["bull_free"] = is_bull_free(g);
    j["fork_free"] = is_fork_free(g);
    j["E_free"] = is_E_free(g);
    j["F_free"] = is_F_free(g);
    j["odd_torch_free"] = is_odd_torch_free(g);
    j["basic_bullfree"] = is_bull_free(g) ? json(is_basic_bullfree(g)) : json(nullptr);
    j["has_homogeneous_set"] = find_homogeneous_set(g).has_value();
    return j;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"structural graph toolkit: divisibility, decomposition, coloring, "
                 "and theorem verification over small graphs"};
    app.require_subcommand(1);

    auto* cat = app.add_subcommand("catalog", "construct a named graph");
    std::string catName, catEmit = "g6";
    cat->add_option("--name", catName,
           "constructor expression, e.g. groetzsch, cycle(7), odd_torch(5,{0})")
        ->required();
    cat->add_option("--emit", catEmit, "g6|dot|json")->check(CLI::IsMember({"g6", "dot", "json"}));

    auto* det = app.add_subcommand("detect", "search for an induced pattern in each input graph");
    std::string detPattern, detInput = "-";
    det->add_option("--pattern", detPattern, "catalog name of the pattern")->required();
    det->add_option("--input", detInput, "graph6 file or - for stdin");

    auto* cls = app.add_subcommand("classify", "evaluate all class predicates per input graph");
    std::string clsInput = "-";
    cls->add_option("--input", clsInput, "graph6 file or - for stdin");

    auto* pd = app.add_subcommand("check-pd", "perfect divisibility check with certificates");
    std::string pdInput = "-";
    pd->add_option("--input", pdInput, "graph6 file or - for stdin");

    auto* col = app.add_subcommand("color", "produce a coloring certificate per input graph");
    std::string colMethod, colInput = "-";
    bool colFallback = false;
    col->add_option("--method", colMethod, "exact|pd|basic|p6bull")
        ->required()
        ->check(CLI::IsMember({"exact", "pd", "basic", "p6bull"}));
    col->add_option("--input", colInput, "graph6 file or - for stdin");
    col->add_flag("--fallback-bruteforce", colFallback,
        "recover with an exact coloring when a pipeline reports a structure violation");

    auto* ver = app.add_subcommand("verify", "run a theorem campaign over a graph stream");
    std::string verTheorem, verGen, verInput, verOut;
    bool verClassRestricted = false;
    ver->add_option("--theorem", verTheorem, "theorem id (see README)")->required();
    ver->add_option("--gen", verGen, "n=<k>[,connected]: enumerate all graphs with 1..k vertices");
    ver->add_option("--input", verInput, "graph6 file or - for stdin");
    ver->add_option("--out", verOut, "write the JSON-lines report here instead of stdout");
    ver->add_flag("--class-restricted", verClassRestricted,
        "restrict enumeration to the theorem's (hereditary) class; lifts the size cap to 12");

    auto* shr = app.add_subcommand("shrink", "greedily minimize a counterexample");
    std::string shrClaim, shrInput = "-";
    shr->add_option("--claim", shrClaim, "theorem id whose claim fails on the input")->required();
    shr->add_option("--input", shrInput, "graph6 file or - for stdin");

    auto* gen = app.add_subcommand("gen", "emit graph streams as graph6 lines");
    int genN = 0;
    bool genConnected = false;
    std::string genRandom;
    gen->add_option("--n", genN, "vertex count")->required();
    gen->add_flag("--connected", genConnected, "connected graphs only");
    gen->add_option("--random", genRandom, "p=<p>,seed=<s>,count=<c>: random instead of exhaustive");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*cat) {
            NamedGraph ng = catalog(catName);
            if (catEmit == "g6") {
                std::cout << emit_graph6(ng.graph) << "\n";
            } else if (catEmit == "dot") {
                std::cout << to_dot(ng.graph);
            } else {
                json j{{"name", ng.name}, {"g6", emit_graph6(ng.graph)},
                    {"n", ng.graph.size()}, {"m", ng.graph.edge_count()},
                    {"provenance", ng.provenance}};
                std::cout << j.dump() << "\n";
            }
            return exit_ok;
        }

        if (*det) {
            Graph pattern = catalog(detPattern).graph;
            for (const Graph& g : read_graphs(detInput)) {
                json j{{"g6", emit_graph6(g)}};
                auto w = find_induced(g, pattern, detPattern);
                j["witness"] = w ? to_json(*w) : json(nullptr);
                std::cout << j.dump() << "\n";
            }
            return exit_ok;
        }

        if (*cls) {
            for (const Graph& g : read_graphs(clsInput))
                std::cout << classify_json(g).dump() << "\n";
            return exit_ok;
        }

        if (*pd) {
            int bad = 0;
            for (const Graph& g : read_graphs(pdInput)) {
                json j{{"g6", emit_graph6(g)}};
                PdResult r = is_perfectly_divisible(g, pd_guard());
                j["perfectly_divisible"] = r.divisible;
                if (r.divisible) {
                    j["partition"] = to_json(*pd_partition(g));
                } else {
                    j["non_divisible_subgraph"] = emit_graph6(*r.counterexample);
                    ++bad;
                }
                std::cout << j.dump() << "\n";
            }
            return bad ? exit_counterexample : exit_ok;
        }

        if (*col) {
            int bad = 0;
            for (const Graph& g : read_graphs(colInput)) {
                json j{{"g6", emit_graph6(g)}, {"method", colMethod}};
                try {
                    ColoringCertificate cert;
                    if (colMethod == "exact")
                        cert = chromatic_number(g);
                    else if (colMethod == "pd")
                        cert = pd_coloring(g);
                    else if (colMethod == "basic")
                        cert = color_basic_p6bull(g);
                    else
                        cert = color_p6bull(g);
                    j["certificate"] = to_json(cert);
                } catch (const not_perfectly_divisible& e) {
                    j["error"] = e.what();
                    j["non_divisible_subgraph"] = e.subgraph_g6;
                    ++bad;
                } catch (const std::domain_error& e) {
                    j["error"] = e.what();
                    ++bad;
                } catch (const structure_violation& e) {
                    if (colFallback) {
                        j["certificate"] = to_json(chromatic_number(g));
                        j["fallback"] = "exact";
                        j["violation"] = e.what();
                    } else {
                        j["error"] = e.what();
                        ++bad;
                    }
                }
                std::cout << j.dump() << "\n";
            }
            return bad ? exit_counterexample : exit_ok;
        }

        if (*ver) {
            auto registry = theorem_registry(pd_guard());
            const TheoremSpec& spec = find_theorem(registry, verTheorem);
            std::vector<Graph> graphs;
            if (!verGen.empty()) {
                gen_spec gs = parse_gen(verGen);
                if (verClassRestricted)
                    graphs = enumerate_graphs_upto(gs.n, gs.connected, spec.filter);
                else
                    graphs = enumerate_graphs_upto(gs.n, gs.connected);
            } else if (!verInput.empty()) {
                graphs = read_graphs(verInput);
            } else {
                std::cerr << "verify needs --gen or --input\n";
                return exit_usage;
            }
            std::ofstream outFile;
            std::ostream* out = &std::cout;
            if (!verOut.empty()) {
                outFile.open(verOut);
                if (!outFile)
                    throw std::runtime_error("cannot open output file '" + verOut + "'");
                out = &outFile;
            }
            CampaignReport report = run_campaign(spec, graphs, out);
            return report.failures > 0 ? exit_counterexample : exit_ok;
        }

        if (*shr) {
            auto registry = theorem_registry(pd_guard());
            const TheoremSpec& spec = find_theorem(registry, shrClaim);
            auto fails = [&spec](const Graph& g) {
                if (!spec.filter(g))
                    return false;
                try {
                    return !spec.claim(g).pass;
                } catch (const std::exception&) {
                    return true;
                }
            };
            for (const Graph& g : read_graphs(shrInput)) {
                Graph minimal
                    = shrink_counterexample(g, [&fails](const Graph& h) { return !fails(h); });
                json j{{"g6", emit_graph6(g)}, {"shrunk_g6", emit_graph6(minimal)},
                    {"n", minimal.size()}};
                std::cout << j.dump() << "\n";
            }
            return exit_ok;
        }

        if (*gen) {
            std::vector<Graph> graphs;
            if (!genRandom.empty()) {
                double p = -1;
                std::uint64_t seed = 0;
                int count = -1;
                std::stringstream ss(genRandom);
                std::string part;
                while (std::getline(ss, part, ',')) {
                    if (part.rfind("p=", 0) == 0)
                        p = std::stod(part.substr(2));
                    else if (part.rfind("seed=", 0) == 0)
                        seed = std::stoull(part.substr(5));
                    else if (part.rfind("count=", 0) == 0)
                        count = std::stoi(part.substr(6));
                    else
                        throw std::runtime_error("bad --random component '" + part + "'");
                }
                if (p < 0 || p > 1 || count < 0)
                    throw std::runtime_error("--random needs p=<0..1>,seed=<s>,count=<c>");
                graphs = random_graphs(genN, p, seed, count);
            } else {
                graphs = enumerate_graphs(genN, genConnected);
            }
            for (const Graph& g : graphs)
                std::cout << emit_graph6(g) << "\n";
            return exit_ok;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
