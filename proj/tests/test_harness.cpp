#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "perfdiv/campaign.hpp"
#include "perfdiv/canonical.hpp"
#include "perfdiv/catalog.hpp"
#include "perfdiv/detect.hpp"
#include "perfdiv/divide_color.hpp"
#include "perfdiv/enumerate.hpp"
#include "perfdiv/errors.hpp"
#include "perfdiv/graph6.hpp"

#include <set>
#include <sstream>
#include <unordered_set>

using namespace perfdiv;

TEST_CASE("enumeration counts match the known values")
{
    const long all[] = {1, 2, 4, 11, 34, 156, 1044};
    const long conn[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        CHECK(static_cast<long>(enumerate_graphs(n, false).size()) == all[n - 1]);
        CHECK(static_cast<long>(enumerate_graphs(n, true).size()) == conn[n - 1]);
    }
    CHECK_THROWS_AS(enumerate_graphs(9, false), capacity_error);
    CHECK_THROWS_AS(enumerate_graphs(0, false), std::invalid_argument);
}

TEST_CASE("enumeration agrees with brute-force dedup of labeled graphs")
{
    for (int n = 1; n <= 5; ++n) {
        std::set<std::string> classes;
        for (const Graph& g : oracles::all_labeled_graphs(n))
            classes.insert(oracles::brute_canonical_key(g));
        CHECK(classes.size() == enumerate_graphs(n, false).size());
    }
}

TEST_CASE("enumeration emits pairwise non-isomorphic graphs")
{
    std::unordered_set<std::string> seen;
    for (const Graph& g : enumerate_graphs(6, false)) {
        CHECK(g.size() == 6);
        CHECK(seen.insert(canonical_form(g)).second);
    }
}

TEST_CASE("class-restricted enumeration matches filtering afterwards")
{
    auto triFree = [](const Graph& g) { return is_C3_free(g); };
    for (int n = 4; n <= 7; ++n) {
        long filtered = 0;
        for (const Graph& g : enumerate_graphs(n, false))
            if (is_C3_free(g))
                ++filtered;
        CHECK(static_cast<long>(enumerate_graphs(n, false, triFree).size()) == filtered);
    }
    // triangle-free counts at 8..9 vertices, beyond the unfiltered cap
    CHECK(enumerate_graphs(8, false, triFree).size() == 410);
    CHECK(enumerate_graphs(9, false, triFree).size() == 1897);
}

TEST_CASE("random graph streams are deterministic")
{
    auto a = random_graphs(9, 0.5, 123, 20);
    auto b = random_graphs(9, 0.5, 123, 20);
    CHECK(a.size() == 20);
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(a[i] == b[i]);
    for (const Graph& g : random_graphs(7, 0.0, 5, 3))
        CHECK(g.edge_count() == 0);
    for (const Graph& g : random_graphs(7, 1.0, 5, 3))
        CHECK(g.edge_count() == 21);
}

TEST_CASE("substitution composites stay in class and in budget")
{
    auto graphs = substitution_composites(20, 20250101, 100);
    CHECK(graphs.size() == 100);
    auto again = substitution_composites(20, 20250101, 100);
    int composite = 0;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        CHECK(graphs[i] == again[i]);
        CHECK(graphs[i].size() <= 20);
        CHECK(is_bull_free(graphs[i]));
        CHECK(is_P6_free(graphs[i]));
        if (graphs[i].size() >= 6)
            ++composite;
    }
    CHECK(composite > 50);
}

TEST_CASE("campaign totals stay consistent and counterexamples replay")
{
    auto registry = theorem_registry();
    const TheoremSpec& sanity = find_theorem(registry, "sanity-all-perfect");
    auto graphs = enumerate_graphs(5, true);
    std::ostringstream lines;
    CampaignReport r = run_campaign(sanity, graphs, &lines);
    CHECK(r.scanned == 21);
    CHECK(r.filter_hits == 21);
    CHECK(r.passes + r.failures == r.filter_hits);
    CHECK(r.failures > 0);
    bool foundC5 = false;
    for (const auto& cx : r.counterexamples) {
        Graph g = parse_graph6(cx.g6);
        CHECK_FALSE(sanity.claim(g).pass); // replay fails identically
        if (canonical_form(g) == canonical_form(cycle_graph(5)))
            foundC5 = true;
    }
    CHECK(foundC5);
}

TEST_CASE("campaign reports are deterministic modulo timing")
{
    auto registry = theorem_registry();
    const TheoremSpec& spec = find_theorem(registry, "lem-P6C3");
    auto graphs = enumerate_graphs_upto(6, true);
    std::ostringstream a, b;
    run_campaign(spec, graphs, &a);
    run_campaign(spec, graphs, &b);
    auto strip = [](const std::string& text) {
        std::string out;
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) {
            auto pos = line.find("\"wall_ms\"");
            if (pos == std::string::npos)
                out += line + "\n";
        }
        return out;
    };
    CHECK(strip(a.str()) == strip(b.str()));
    CHECK(a.str().find("\"wall_ms\"") != std::string::npos);
}

TEST_CASE("small campaigns hold on every built-in statement")
{
    auto registry = theorem_registry();
    auto graphs = enumerate_graphs_upto(6, true);
    for (const TheoremSpec& spec : registry) {
        if (spec.id == "sanity-all-perfect")
            continue;
        CampaignReport r = run_campaign(spec, graphs);
        CHECK_MESSAGE(r.failures == 0, spec.id);
        CHECK_MESSAGE(r.errors == 0, spec.id);
        CHECK(r.passes + r.failures == r.filter_hits);
    }
}

TEST_CASE("registry ids resolve")
{
    auto registry = theorem_registry();
    std::unordered_set<std::string> ids;
    for (const TheoremSpec& s : registry) {
        CHECK(ids.insert(s.id).second);
        CHECK_FALSE(s.statement.empty());
    }
    CHECK(ids.count("thm-odd-torch-pd") == 1);
    CHECK(ids.count("thm-P8C5-pd") == 1);
    CHECK(ids.count("thm-P6-iff-F") == 1);
    CHECK(ids.count("cor-chromatic") == 1);
    CHECK(ids.count("lem-P6C3") == 1);
    CHECK_THROWS_AS(find_theorem(registry, "no-such-id"), std::invalid_argument);
}

TEST_CASE("shrinking a padded obstruction recovers the core")
{
    Graph f = groetzsch_graph();
    Graph fPlus(12); // F plus one isolated vertex
    for (int v = 0; v < 11; ++v)
        for (int u : f.row(v))
            if (u < v)
                fPlus.add_edge(u, v);

    auto pdPass = [](const Graph& g) { return is_perfectly_divisible(g).divisible; };
    CHECK_FALSE(pdPass(fPlus));
    Graph minimal = shrink_counterexample(fPlus, pdPass);
    CHECK(minimal.size() == 11);
    CHECK(canonical_form(minimal) == canonical_form(f));

    // vertex-minimal non-divisible bull-free graphs are connected,
    // locally perfect, and have every M(v) imperfect
    CHECK(is_bull_free(minimal));
    CHECK(is_connected(minimal));
    CHECK(is_locally_perfect(minimal));
    for (int v = 0; v < minimal.size(); ++v)
        CHECK_FALSE(is_perfect(induced_subgraph(minimal, non_neighborhood(minimal, v))));
}

TEST_CASE("shrinking stops at already-minimal failures")
{
    auto perfectPass = [](const Graph& g) { return is_perfect(g); };
    Graph shrunk = shrink_counterexample(cycle_graph(5), perfectPass);
    CHECK(shrunk == cycle_graph(5));
    CHECK_THROWS_AS(shrink_counterexample(path_graph(4), perfectPass), std::invalid_argument);
}
