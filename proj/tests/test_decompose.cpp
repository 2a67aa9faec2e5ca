#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "perfdiv/canonical.hpp"
#include "perfdiv/catalog.hpp"
#include "perfdiv/decompose.hpp"
#include "perfdiv/detect.hpp"
#include "perfdiv/divide_color.hpp"
#include "perfdiv/enumerate.hpp"
#include "perfdiv/errors.hpp"
#include "perfdiv/serialize.hpp"

using namespace perfdiv;

namespace {

// 5-hole construction fixture: v = 0 sits in the triangle {0,1,2}; the
// edge {1,2} of N(0) sees the hole 3-4-5-6-7 exactly at {3,5}
Graph five_hole_fixture()
{
    Graph g(8);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(1, 5);
    g.add_edge(2, 3);
    g.add_edge(2, 5);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    g.add_edge(7, 3);
    return g;
}

// 7-hole analogue on the cycle 3-4-5-6-7-8-9
Graph seven_hole_fixture()
{
    Graph g(10);
    g.add_edge(0, 1);
    g.add_edge(0, 2);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(1, 5);
    g.add_edge(2, 3);
    g.add_edge(2, 5);
    for (int i = 3; i < 9; ++i)
        g.add_edge(i, i + 1);
    g.add_edge(9, 3);
    return g;
}

void check_tree_invariants(const Graph& g, const ModularTree& t)
{
    CHECK(t.nodes[t.root].block == g.vertices());
    for (const auto& node : t.nodes) {
        switch (node.kind) {
        case ModularTree::Kind::leaf:
            CHECK(node.children.empty());
            CHECK(node.block.count() == 1);
            CHECK(node.vertex == node.block.min());
            break;
        case ModularTree::Kind::prime:
            CHECK(node.quotient.size() >= 3);
            CHECK_FALSE(find_homogeneous_set(node.quotient).has_value());
            break;
        case ModularTree::Kind::series:
            CHECK(node.quotient.edge_count()
                == static_cast<long>(node.quotient.size()) * (node.quotient.size() - 1) / 2);
            break;
        case ModularTree::Kind::parallel:
            CHECK(node.quotient.edge_count() == 0);
            break;
        }
        if (!node.children.empty()) {
            CHECK(node.children.size() == static_cast<std::size_t>(node.quotient.size()));
            VertexSet covered;
            for (int c : node.children) {
                CHECK((covered & t.nodes[c].block).empty());
                covered = covered | t.nodes[c].block;
            }
            CHECK(covered == node.block);
            // children blocks are modules of G[block]
            Graph sub = induced_subgraph(g, node.block);
            for (int c : node.children) {
                VertexSet local;
                for (int v : t.nodes[c].block)
                    local.add(node.block.index_of(v));
                if (local.count() >= 2 && local.count() < sub.size())
                    CHECK(is_homogeneous_set(sub, local));
            }
        }
    }
    CHECK(canonical_form(expand(t)) == canonical_form(g));
}

} // namespace

TEST_CASE("homogeneous set predicate")
{
    Graph c4 = cycle_graph(4);
    CHECK(is_homogeneous_set(c4, VertexSet::of({0, 2})));
    CHECK_FALSE(is_homogeneous_set(c4, VertexSet::of({0, 1})));
    Graph c5 = cycle_graph(5);
    for (std::uint64_t mask = 0; mask < 32; ++mask)
        CHECK_FALSE(is_homogeneous_set(c5, VertexSet{mask}));
    CHECK_FALSE(is_homogeneous_set(c4, c4.vertices()));
    CHECK_FALSE(is_homogeneous_set(c4, VertexSet::of({1})));
}

TEST_CASE("find_homogeneous_set fixed cases")
{
    CHECK(find_homogeneous_set(substitute(cycle_graph(5), 0, complete_graph(2)))
        == VertexSet::of({4, 5}));
    CHECK_FALSE(find_homogeneous_set(cycle_graph(5)).has_value());
    auto k3 = find_homogeneous_set(complete_graph(3));
    REQUIRE(k3.has_value());
    CHECK(k3->count() == 2);
}

TEST_CASE("find_homogeneous_set agrees with the subset scan")
{
    for (const Graph& g : enumerate_graphs_upto(6, false)) {
        auto fast = find_homogeneous_set(g);
        auto brute = oracles::brute_homogeneous_set(g);
        CHECK(fast.has_value() == brute.has_value());
        if (fast)
            CHECK(is_homogeneous_set(g, *fast));
    }
    for (const Graph& g : random_graphs(10, 0.5, 424242, 50)) {
        auto fast = find_homogeneous_set(g);
        CHECK(fast.has_value() == oracles::brute_homogeneous_set(g).has_value());
    }
}

TEST_CASE("modular decomposition fixed cases")
{
    ModularTree c5t = modular_decompose(cycle_graph(5));
    CHECK(c5t.nodes[c5t.root].kind == ModularTree::Kind::prime);
    CHECK(canonical_form(c5t.nodes[c5t.root].quotient) == canonical_form(cycle_graph(5)));
    CHECK(c5t.nodes[c5t.root].children.size() == 5);
    check_tree_invariants(cycle_graph(5), c5t);

    ModularTree k4t = modular_decompose(complete_graph(4));
    for (const auto& node : k4t.nodes)
        CHECK((node.kind == ModularTree::Kind::leaf || node.kind == ModularTree::Kind::series));
    check_tree_invariants(complete_graph(4), k4t);

    // substituting into a prime host leaves the substituted block as a child
    Graph host = cycle_graph(5);
    Graph inner = path_graph(3);
    Graph s = substitute(host, 1, inner);
    ModularTree st = modular_decompose(s);
    VertexSet image = VertexSet::of({4, 5, 6});
    bool found = false;
    for (const auto& node : st.nodes)
        if (node.block == image)
            found = true;
    CHECK(found);
    check_tree_invariants(s, st);
}

TEST_CASE("modular decomposition reconstructs every small graph")
{
    for (const Graph& g : enumerate_graphs_upto(7, false))
        check_tree_invariants(g, modular_decompose(g));
    for (const Graph& g : random_graphs(9, 0.4, 31337, 25))
        check_tree_invariants(g, modular_decompose(g));
    for (const Graph& g : substitution_composites(14, 99, 15))
        check_tree_invariants(g, modular_decompose(g));
}

TEST_CASE("modular tree serializes to nested json")
{
    auto j = to_json(modular_decompose(substitute(cycle_graph(5), 0, complete_graph(2))));
    CHECK(j["kind"] == "prime");
    CHECK(j["children"].size() == 5);
    CHECK(j.contains("quotient"));
}

TEST_CASE("5-hole homogeneous set construction")
{
    Graph g = five_hole_fixture();
    REQUIRE(is_connected(g));
    REQUIRE(is_locally_perfect(g));
    REQUIRE(is_P6_free(g));
    REQUIRE(is_bull_free(g));
    REQUIRE(clique_number(g).omega == 3);

    Witness hole{"odd-hole", {3, 4, 5, 6, 7}};
    VertexSet s = homogeneous_set_from_5hole(g, 0, hole);
    CHECK(s == VertexSet::of({1, 2}));
    CHECK(is_homogeneous_set(g, s));
    CHECK(s.count() > 1);
    CHECK(s.count() < g.size());
}

TEST_CASE("5-hole construction rejects bad inputs")
{
    Graph c5 = cycle_graph(5);
    Witness self{"odd-hole", {0, 1, 2, 3, 4}};
    CHECK_THROWS_AS(homogeneous_set_from_5hole(c5, 0, self), std::domain_error);

    Graph g = five_hole_fixture();
    Witness wrongLen{"odd-hole", {3, 4, 5, 6}};
    CHECK_THROWS_AS(homogeneous_set_from_5hole(g, 0, wrongLen), std::domain_error);
    Witness notInM{"odd-hole", {1, 4, 5, 6, 7}};
    CHECK_THROWS_AS(homogeneous_set_from_5hole(g, 0, notInM), std::domain_error);
    Witness notCycle{"odd-hole", {3, 5, 4, 6, 7}};
    CHECK_THROWS_AS(homogeneous_set_from_5hole(g, 0, notCycle), std::domain_error);
}

TEST_CASE("7-hole homogeneous set construction")
{
    Graph g = seven_hole_fixture();
    REQUIRE(is_connected(g));
    REQUIRE(is_locally_perfect(g));
    REQUIRE(is_P8_free(g));
    REQUIRE(is_C5_free(g));
    REQUIRE(is_bull_free(g));
    REQUIRE(clique_number(g).omega == 3);

    Witness hole{"odd-hole", {3, 4, 5, 6, 7, 8, 9}};
    VertexSet s = homogeneous_set_from_7hole(g, 0, hole);
    CHECK(s == VertexSet::of({1, 2}));
    CHECK(is_homogeneous_set(g, s));

    CHECK_THROWS_AS(
        homogeneous_set_from_7hole(cycle_graph(7), 0, Witness{"odd-hole", {0, 1, 2, 3, 4, 5, 6}}),
        std::domain_error);
}

TEST_CASE("bull-free graphs split through homogeneous sets or neighborhoods")
{
    // every bull-free graph has a homogeneous set, or each vertex has a
    // perfect neighborhood or non-neighborhood
    auto bullFree = [](const Graph& g) { return is_bull_free(g); };
    for (const Graph& g : enumerate_graphs_upto(8, false, bullFree)) {
        if (find_homogeneous_set(g))
            continue;
        for (int v = 0; v < g.size(); ++v) {
            bool ok = is_perfect(induced_subgraph(g, neighborhood(g, v)))
                || is_perfect(induced_subgraph(g, non_neighborhood(g, v)));
            CHECK(ok);
        }
    }
}

TEST_CASE("basic bull-free graphs have a perfect side at every vertex")
{
    auto bullFree = [](const Graph& g) { return is_bull_free(g); };
    for (const Graph& g : enumerate_graphs_upto(8, false, bullFree)) {
        if (!is_basic_bullfree(g))
            continue;
        for (int v = 0; v < g.size(); ++v) {
            bool ok = is_perfect(induced_subgraph(g, neighborhood(g, v)))
                || is_perfect(induced_subgraph(g, non_neighborhood(g, v)));
            CHECK(ok);
        }
    }
}

TEST_CASE("no large odd antihole inside any non-neighborhood")
{
    // connected locally perfect bull-free graphs keep M(v) free of odd
    // antiholes on seven or more vertices
    auto bullFree = [](const Graph& g) { return is_bull_free(g); };
    long checked = 0;
    for (const Graph& g : enumerate_graphs_upto(9, true, bullFree)) {
        if (!is_locally_perfect(g))
            continue;
        ++checked;
        for (int v = 0; v < g.size(); ++v) {
            Graph m = induced_subgraph(g, non_neighborhood(g, v));
            CHECK_FALSE(find_odd_antihole_ge7(m).has_value());
        }
    }
    CHECK(checked > 0);
}
