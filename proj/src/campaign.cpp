#include "perfdiv/campaign.hpp"

#include "perfdiv/catalog.hpp"
#include "perfdiv/decompose.hpp"
#include "perfdiv/detect.hpp"
#include "perfdiv/divide_color.hpp"
#include "perfdiv/graph6.hpp"
#include "perfdiv/serialize.hpp"

#include <chrono>
#include <cmath>
#include <ostream>

namespace perfdiv {

CampaignReport run_campaign(const TheoremSpec& spec, const std::vector<Graph>& graphs,
    std::ostream* jsonl)
{
    auto t0 = std::chrono::steady_clock::now();
    CampaignReport r;
    r.theorem = spec.id;
    for (const Graph& g : graphs) {
        ++r.scanned;
        if (!spec.filter(g))
            continue;
        ++r.filter_hits;
        std::string g6 = emit_graph6(g);
        nlohmann::json line;
        line["g6"] = g6;
        try {
            ClaimOutcome out = spec.claim(g);
            line["pass"] = out.pass;
            if (!out.detail.is_null())
                line["detail"] = out.detail;
            if (out.pass) {
                ++r.passes;
            } else {
                ++r.failures;
                r.counterexamples.push_back({g6, out.detail});
            }
        } catch (const std::exception& e) {
            ++r.failures;
            ++r.errors;
            line["pass"] = false;
            line["error"] = e.what();
            r.counterexamples.push_back({g6, nlohmann::json{{"error", e.what()}}});
        }
        if (jsonl)
            *jsonl << line.dump() << "\n";
    }
    auto t1 = std::chrono::steady_clock::now();
    r.wall_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (jsonl)
        *jsonl << report_json(r).dump() << "\n";
    return r;
}

nlohmann::json report_json(const CampaignReport& r, bool include_timing)
{
    nlohmann::json j;
    j["summary"] = {
        {"theorem", r.theorem},
        {"scanned", r.scanned},
        {"filter_hits", r.filter_hits},
        {"passes", r.passes},
        {"failures", r.failures},
        {"errors", r.errors},
    };
    nlohmann::json cx = nlohmann::json::array();
    for (const auto& c : r.counterexamples)
        cx.push_back({{"g6", c.g6}, {"detail", c.detail}});
    j["summary"]["counterexamples"] = std::move(cx);
    if (include_timing)
        j["summary"]["wall_ms"] = r.wall_ms;
    return j;
}

namespace {

    long binomial2(long k) { return k * (k + 1) / 2; }

    long ipow(long b, int e)
    {
        long r = 1;
        while (e--)
            r *= b;
        return r;
    }

    bool neighborhood_split_ok(const Graph& g)
    {
        for (int v = 0; v < g.size(); ++v) {
            bool nOk = is_perfect(induced_subgraph(g, neighborhood(g, v)));
            bool mOk = nOk || is_perfect(induced_subgraph(g, non_neighborhood(g, v)));
            if (!nOk && !mOk)
                return false;
        }
        return true;
    }

} // namespace

std::vector<TheoremSpec> theorem_registry(int pd_size_guard)
{
    std::vector<TheoremSpec> specs;
    int guard = pd_size_guard;

    auto pd_claim = [guard](const Graph& g) -> ClaimOutcome {
        PdResult r = is_perfectly_divisible(g, guard);
        if (r.divisible)
            return {true, nullptr};
        return {false, {{"non_divisible_subgraph", emit_graph6(*r.counterexample)}}};
    };

    specs.push_back({"thm-odd-torch-pd",
        "every (odd torch, bull)-free graph is perfectly divisible",
        [](const Graph& g) { return is_bull_free(g) && is_odd_torch_free(g); },
        pd_claim});

    specs.push_back({"thm-P8C5-pd",
        "every (P8, C5, bull)-free graph is perfectly divisible",
        [](const Graph& g) { return is_C5_free(g) && is_bull_free(g) && is_P8_free(g); },
        pd_claim});

    specs.push_back({"thm-P6-iff-F",
        "a (P6, bull)-free graph is perfectly divisible iff it has no induced Groetzsch graph",
        [](const Graph& g) { return is_bull_free(g) && is_P6_free(g); },
        [guard](const Graph& g) -> ClaimOutcome {
            bool fFree = is_F_free(g);
            PdResult r = is_perfectly_divisible(g, guard);
            nlohmann::json detail{{"F_free", fFree}, {"perfectly_divisible", r.divisible}};
            if (!r.divisible)
                detail["non_divisible_subgraph"] = emit_graph6(*r.counterexample);
            return {r.divisible == fFree, detail};
        }});

    specs.push_back({"cor-chromatic",
        "perfectly divisible graphs in the studied classes color within binomial(omega+1, 2)",
        [guard](const Graph& g) {
            bool inClass = (is_bull_free(g)
                && (is_odd_torch_free(g) || is_P6_free(g)
                    || (is_C5_free(g) && is_P8_free(g))));
            return inClass && is_perfectly_divisible(g, guard).divisible;
        },
        [](const Graph& g) -> ClaimOutcome {
            ColoringCertificate c = pd_coloring(g);
            int omega = clique_number(g).omega;
            long bound = binomial2(omega);
            return {c.palette <= bound,
                {{"palette", c.palette}, {"omega", omega}, {"bound", bound}}};
        }});

    specs.push_back({"cor-odd-torch-C3",
        "every (odd torch, triangle)-free graph is 3-colorable",
        [](const Graph& g) { return is_C3_free(g) && is_odd_torch_free(g); },
        [](const Graph& g) -> ClaimOutcome {
            int chi = chromatic_number(g).palette;
            return {chi <= 3, {{"chi", chi}}};
        }});

    specs.push_back({"lem-P6C3",
        "every (P6, triangle)-free graph is 4-colorable, and 4 is reached only with an "
        "induced Groetzsch graph",
        [](const Graph& g) { return is_C3_free(g) && is_P6_free(g); },
        [](const Graph& g) -> ClaimOutcome {
            int chi = chromatic_number(g).palette;
            bool pass = chi <= 4 && (chi != 4 || !is_F_free(g));
            return {pass, {{"chi", chi}}};
        }});

    specs.push_back({"lem-P8C3",
        "every (P8, C5, triangle)-free graph is 3-colorable",
        [](const Graph& g) { return is_C3_free(g) && is_C5_free(g) && is_P8_free(g); },
        [](const Graph& g) -> ClaimOutcome {
            int chi = chromatic_number(g).palette;
            return {chi <= 3, {{"chi", chi}}};
        }});

    specs.push_back({"lem-bullfree",
        "every bull-free graph has a homogeneous set or every vertex has perfect N(v) or M(v)",
        [](const Graph& g) { return is_bull_free(g); },
        [](const Graph& g) -> ClaimOutcome {
            if (find_homogeneous_set(g))
                return {true, {{"via", "homogeneous set"}}};
            return {neighborhood_split_ok(g), {{"via", "neighborhood split"}}};
        }});

    specs.push_back({"lem-bull2",
        "in a basic bull-free graph every vertex has perfect N(v) or M(v)",
        [](const Graph& g) { return is_bull_free(g) && is_basic_bullfree(g); },
        [](const Graph& g) -> ClaimOutcome { return {neighborhood_split_ok(g), nullptr}; }});

    specs.push_back({"lem-oddantihole",
        "connected locally perfect bull-free graphs have no odd antihole on 7 or more "
        "vertices inside any M(v)",
        [](const Graph& g) {
            return is_connected(g) && is_bull_free(g) && is_locally_perfect(g);
        },
        [](const Graph& g) -> ClaimOutcome {
            for (int v = 0; v < g.size(); ++v) {
                Graph m = induced_subgraph(g, non_neighborhood(g, v));
                if (auto w = find_odd_antihole_ge7(m))
                    return {false, {{"vertex", v}, {"antihole", to_json(*w)}}};
            }
            return {true, nullptr};
        }});

    specs.push_back({"lem-MNPD",
        "vertex-minimal non-divisible bull-free graphs are connected, locally perfect, "
        "and have every M(v) imperfect",
        [guard](const Graph& g) {
            if (!is_bull_free(g) || is_perfectly_divisible(g, guard).divisible)
                return false;
            for (int v = 0; v < g.size(); ++v) {
                VertexSet rest = g.vertices() - VertexSet::single(v);
                if (!is_perfectly_divisible(induced_subgraph(g, rest), guard).divisible)
                    return false;
            }
            return true;
        },
        [](const Graph& g) -> ClaimOutcome {
            if (!is_connected(g))
                return {false, {{"violated", "connected"}}};
            if (!is_locally_perfect(g))
                return {false, {{"violated", "locally perfect"}}};
            for (int v = 0; v < g.size(); ++v)
                if (is_perfect(induced_subgraph(g, non_neighborhood(g, v))))
                    return {false, {{"violated", "M(v) imperfect"}, {"vertex", v}}};
            return {true, nullptr};
        }});

    specs.push_back({"lem-bull5",
        "locally perfect (P6, bull)-free graphs split into two perfect parts",
        [](const Graph& g) {
            return is_bull_free(g) && is_P6_free(g) && is_locally_perfect(g);
        },
        [](const Graph& g) -> ClaimOutcome {
            PartitionCertificate c = two_perfect_partition(g);
            validate_partition(g, c);
            return {true, to_json(c)};
        }});

    specs.push_back({"lem-bull6",
        "basic (P6, bull)-free graphs color within omega squared",
        [](const Graph& g) {
            return is_bull_free(g) && is_P6_free(g) && is_basic_bullfree(g);
        },
        [](const Graph& g) -> ClaimOutcome {
            ColoringCertificate c = color_basic_p6bull(g);
            int omega = clique_number(g).omega;
            long bound = std::max(1l, static_cast<long>(omega) * omega);
            return {c.palette <= bound,
                {{"palette", c.palette}, {"omega", omega}, {"bound", bound}}};
        }});

    specs.push_back({"thm-omega7",
        "(P6, bull)-free graphs color within omega to the seventh",
        [](const Graph& g) { return is_bull_free(g) && is_P6_free(g); },
        [](const Graph& g) -> ClaimOutcome {
            ColoringCertificate c = color_p6bull(g);
            int omega = clique_number(g).omega;
            long bound = std::max(1l, ipow(omega, 7));
            return {c.palette <= bound,
                {{"palette", c.palette}, {"omega", omega}, {"bound", bound}}};
        }});

    specs.push_back({"sanity-all-perfect",
        "every graph is perfect (deliberately false, exercises the counterexample path)",
        [](const Graph&) { return true; },
        [](const Graph& g) -> ClaimOutcome { return {is_perfect(g), nullptr}; }});

    specs.push_back({"is-pd",
        "the graph is perfectly divisible (utility claim, mainly for shrinking)",
        [](const Graph&) { return true; },
        pd_claim});

    return specs;
}

const TheoremSpec& find_theorem(const std::vector<TheoremSpec>& registry, const std::string& id)
{
    for (const TheoremSpec& s : registry)
        if (s.id == id)
            return s;
    throw std::invalid_argument("unknown theorem id '" + id + "'");
}

Graph shrink_counterexample(const Graph& g, const std::function<bool(const Graph&)>& claim_pass)
{
    if (claim_pass(g))
        throw std::invalid_argument("shrink_counterexample: claim passes on the input");
    Graph cur = g;
    bool shrunk = true;
    while (shrunk && cur.size() > 1) {
        shrunk = false;
        for (int v = 0; v < cur.size(); ++v) {
            Graph cand = induced_subgraph(cur, cur.vertices() - VertexSet::single(v));
            if (!claim_pass(cand)) {
                cur = std::move(cand);
                shrunk = true;
                break;
            }
        }
    }
    return cur;
}

} // namespace perfdiv
