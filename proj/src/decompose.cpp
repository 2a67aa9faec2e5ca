#include "perfdiv/decompose.hpp"

#include "perfdiv/divide_color.hpp"
#include "perfdiv/errors.hpp"

#include <algorithm>

namespace perfdiv {

bool is_homogeneous_set(const Graph& g, VertexSet s)
{
    if (s.count() <= 1 || s.count() >= g.size())
        return false;
    if (!s.subset_of(g.vertices()))
        return false;
    for (int w : g.vertices() - s) {
        VertexSet rel = g.row(w) & s;
        if (!rel.empty() && rel != s)
            return false;
    }
    return true;
}

std::optional<VertexSet> find_homogeneous_set(const Graph& g)
{
    int n = g.size();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            VertexSet s = VertexSet::of({u, v});
            bool grew = true;
            while (grew && s.count() < n) {
                grew = false;
                for (int w : g.vertices() - s) {
                    VertexSet rel = g.row(w) & s;
                    if (!rel.empty() && rel != s) {
                        s.add(w);
                        grew = true;
                    }
                }
            }
            if (s.count() < n)
                return s;
        }
    }
    return std::nullopt;
}

namespace {

    Graph quotient_graph(const Graph& g, const std::vector<VertexSet>& blocks)
    {
        Graph q(static_cast<int>(blocks.size()));
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j)
                if (g.has_edge(blocks[i].min(), blocks[j].min()))
                    q.add_edge(static_cast<int>(i), static_cast<int>(j));
        return q;
    }

    bool is_complete_graph(const Graph& g)
    {
        return g.edge_count() == static_cast<long>(g.size()) * (g.size() - 1) / 2;
    }

    int build(const Graph& g, VertexSet mask, ModularTree& t)
    {
        if (mask.count() == 1) {
            ModularTree::Node node;
            node.kind = ModularTree::Kind::leaf;
            node.quotient = Graph(1);
            node.block = mask;
            node.vertex = mask.min();
            t.nodes.push_back(std::move(node));
            return static_cast<int>(t.nodes.size()) - 1;
        }

        std::vector<VertexSet> blocks;
        for (int v : mask)
            blocks.push_back(VertexSet::single(v));
        for (;;) {
            Graph q = quotient_graph(g, blocks);
            auto s = find_homogeneous_set(q);
            if (!s)
                break;
            VertexSet merged;
            std::vector<VertexSet> next;
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                if (s->contains(static_cast<int>(i)))
                    merged = merged | blocks[i];
                else
                    next.push_back(blocks[i]);
            }
            next.push_back(merged);
            std::sort(next.begin(), next.end(),
                [](VertexSet a, VertexSet b) { return a.min() < b.min(); });
            blocks = std::move(next);
        }

        ModularTree::Node node;
        node.quotient = quotient_graph(g, blocks);
        node.block = mask;
        if (is_complete_graph(node.quotient))
            node.kind = ModularTree::Kind::series;
        else if (node.quotient.edge_count() == 0)
            node.kind = ModularTree::Kind::parallel;
        else
            node.kind = ModularTree::Kind::prime;
        node.children.assign(blocks.size(), -1);
        t.nodes.push_back(std::move(node));
        int id = static_cast<int>(t.nodes.size()) - 1;
        for (std::size_t i = 0; i < blocks.size(); ++i) {
            int child = build(g, blocks[i], t);
            t.nodes[id].children[i] = child;
        }
        return id;
    }

} // namespace

ModularTree modular_decompose(const Graph& g)
{
    if (g.size() < 1)
        throw std::invalid_argument("modular_decompose needs at least one vertex");
    ModularTree t;
    t.root = build(g, g.vertices(), t);
    return t;
}

namespace {

    Graph expand_node(const ModularTree& t, int id)
    {
        const ModularTree::Node& node = t.nodes[id];
        if (node.kind == ModularTree::Kind::leaf)
            return Graph(1);
        Graph acc = node.quotient;
        // substitute children back, last position first so earlier
        // positions keep their indices
        for (int i = static_cast<int>(node.children.size()) - 1; i >= 0; --i)
            acc = substitute(acc, i, expand_node(t, node.children[i]));
        return acc;
    }

} // namespace

Graph expand(const ModularTree& t)
{
    return expand_node(t, t.root);
}

namespace {

    // shared shell of the two hole constructions
    struct hole_context {
        const Graph& g;
        int v;
        std::vector<int> c; // hole in cyclic order
        VertexSet cmask;
        int k;
    };

    void check_common_preconditions(const hole_context& ctx, bool p6_case)
    {
        const Graph& g = ctx.g;
        if (ctx.v < 0 || ctx.v >= g.size())
            throw std::domain_error("hole construction: vertex out of range");
        if (static_cast<int>(ctx.c.size()) != ctx.k)
            throw std::domain_error("hole construction: wrong hole length");
        VertexSet mv = non_neighborhood(g, ctx.v);
        if (!ctx.cmask.subset_of(mv))
            throw std::domain_error("hole construction: hole not inside M(v)");
        for (int i = 0; i < ctx.k; ++i)
            for (int j = i + 1; j < ctx.k; ++j) {
                bool edge = g.has_edge(ctx.c[i], ctx.c[j]);
                bool consecutive = (j - i == 1) || (i == 0 && j == ctx.k - 1);
                if (edge != consecutive)
                    throw std::domain_error("hole construction: witness is not an induced cycle");
            }
        if (!is_connected(g))
            throw std::domain_error("hole construction: graph not connected");
        if (!is_locally_perfect(g))
            throw std::domain_error("hole construction: graph not locally perfect");
        if (!is_bull_free(g))
            throw std::domain_error("hole construction: graph not bull-free");
        if (p6_case) {
            if (!is_P6_free(g))
                throw std::domain_error("hole construction: graph not P6-free");
        } else {
            if (!is_P8_free(g))
                throw std::domain_error("hole construction: graph not P8-free");
            if (!is_C5_free(g))
                throw std::domain_error("hole construction: graph not C5-free");
        }
        int omega = clique_number(g).omega;
        if (omega < 3)
            throw std::domain_error("hole construction: clique number below 3");
        VertexSet closed = g.row(ctx.v) | VertexSet::single(ctx.v);
        if (clique_number(induced_subgraph(g, closed)).omega != omega)
            throw std::domain_error("hole construction: vertex not in a maximum clique");
    }

    // classification of u against the hole:
    //   1 neighbor            -> X
    //   2 at cyclic distance 2 -> Y
    //   3 consecutive          -> Z
    //   4 consecutive          -> W (5-hole case only)
    enum class hole_class { X, Y, Z, W };

    std::optional<hole_class> classify(const hole_context& ctx, int u)
    {
        VertexSet onHole = ctx.g.row(u) & ctx.cmask;
        int cnt = onHole.count();
        auto has = [&](int i) { return onHole.contains(ctx.c[((i % ctx.k) + ctx.k) % ctx.k]); };
        if (cnt == 1)
            return hole_class::X;
        if (cnt == 2) {
            for (int i = 0; i < ctx.k; ++i)
                if (has(i) && has(i + 2) && onHole.count() == 2)
                    return hole_class::Y;
            return std::nullopt;
        }
        if (cnt == 3) {
            for (int i = 0; i < ctx.k; ++i)
                if (has(i) && has(i + 1) && has(i + 2))
                    return hole_class::Z;
            return std::nullopt;
        }
        if (cnt == 4 && ctx.k == 5) {
            for (int i = 0; i < ctx.k; ++i)
                if (has(i) && has(i + 1) && has(i + 2) && has(i + 3))
                    return hole_class::W;
            return std::nullopt;
        }
        return std::nullopt;
    }

    VertexSet construct(const hole_context& ctx)
    {
        const Graph& g = ctx.g;
        VertexSet nc = neighborhood_of(g, ctx.cmask);

        for (int u : nc)
            if (!classify(ctx, u))
                throw structure_violation(
                    ctx.k == 5 ? "vertex in N(V(C)) outside X, Y, Z, W"
                               : "vertex in N(V(C)) outside X, Y, Z",
                    {u});

        VertexSet nv = g.row(ctx.v);
        for (int u : nv) {
            if (!nc.contains(u))
                throw structure_violation("neighbor of v has no neighbor on the hole", {ctx.v, u});
            if (classify(ctx, u) != hole_class::Y)
                throw structure_violation("neighbor of v is not of Y type", {ctx.v, u});
        }
        for (int x : nv)
            for (int y : g.row(x) & nv) {
                if (y < x)
                    continue;
                if ((g.row(x) & ctx.cmask) != (g.row(y) & ctx.cmask))
                    throw structure_violation(
                        "adjacent pair in N(v) with different hole neighborhoods", {x, y});
            }

        VertexSet s;
        for (const VertexSet& comp : components_in(g, nv)) {
            bool hasEdge = false;
            for (int u : comp)
                if ((g.row(u) & comp).bits) {
                    hasEdge = true;
                    break;
                }
            if (hasEdge) {
                s = comp;
                break;
            }
        }
        if (s.empty())
            throw structure_violation("no component of N(v) contains an edge", {ctx.v});
        if (!is_homogeneous_set(g, s))
            throw structure_violation("constructed component is not a homogeneous set",
                s.to_vector());
        return s;
    }

} // namespace

VertexSet homogeneous_set_from_5hole(const Graph& g, int v, const Witness& hole)
{
    hole_context ctx{g, v, hole.vertices, hole.vertex_set(), 5};
    check_common_preconditions(ctx, true);
    return construct(ctx);
}

VertexSet homogeneous_set_from_7hole(const Graph& g, int v, const Witness& hole)
{
    hole_context ctx{g, v, hole.vertices, hole.vertex_set(), 7};
    check_common_preconditions(ctx, false);
    return construct(ctx);
}

} // namespace perfdiv
