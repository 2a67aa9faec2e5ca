#include "perfdiv/divide_color.hpp"

#include "perfdiv/canonical.hpp"
#include "perfdiv/decompose.hpp"
#include "perfdiv/detect.hpp"
#include "perfdiv/errors.hpp"
#include "perfdiv/graph6.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace perfdiv {

namespace {

    void clique_expand(const Graph& g, VertexSet r, VertexSet p, CliqueResult& best)
    {
        if (p.empty()) {
            if (r.count() > best.omega)
                best = {r.count(), r};
            return;
        }
        while (!p.empty()) {
            if (r.count() + p.count() <= best.omega)
                return;
            int v = p.min();
            p.remove(v);
            clique_expand(g, r | VertexSet::single(v), p & g.row(v), best);
        }
    }

    void max_cliques_expand(const Graph& g, VertexSet r, VertexSet p, int omega,
        std::vector<VertexSet>& out)
    {
        if (r.count() == omega) {
            out.push_back(r);
            return;
        }
        while (!p.empty()) {
            if (r.count() + p.count() < omega)
                return;
            int v = p.min();
            p.remove(v);
            max_cliques_expand(g, r | VertexSet::single(v), p & g.row(v), omega, out);
        }
    }

    std::vector<VertexSet> all_max_cliques(const Graph& g, int omega)
    {
        std::vector<VertexSet> out;
        if (omega > 0)
            max_cliques_expand(g, VertexSet{}, g.vertices(), omega, out);
        return out;
    }

} // namespace

CliqueResult clique_number(const Graph& g)
{
    CliqueResult best{0, VertexSet{}};
    clique_expand(g, VertexSet{}, g.vertices(), best);
    return best;
}

namespace {

    ColoringCertificate dsatur_greedy(const Graph& g)
    {
        int n = g.size();
        ColoringCertificate cert;
        cert.colors.assign(n, -1);
        std::vector<std::uint64_t> neighborColors(n, 0);
        for (int step = 0; step < n; ++step) {
            int pick = -1, pickSat = -1, pickDeg = -1;
            for (int v = 0; v < n; ++v) {
                if (cert.colors[v] >= 0)
                    continue;
                int sat = std::popcount(neighborColors[v]);
                int deg = g.degree(v);
                if (sat > pickSat || (sat == pickSat && deg > pickDeg)) {
                    pick = v;
                    pickSat = sat;
                    pickDeg = deg;
                }
            }
            int c = std::countr_one(neighborColors[pick]);
            cert.colors[pick] = c;
            cert.palette = std::max(cert.palette, c + 1);
            for (int u : g.row(pick))
                neighborColors[u] |= 1ull << c;
        }
        return cert;
    }

    struct k_color_search {
        const Graph& g;
        int n, k;
        std::vector<int> colors;
        std::vector<std::uint64_t> neighborColors;
        int used = 0;
        int colored = 0;

        k_color_search(const Graph& g_, int k_)
            : g(g_), n(g_.size()), k(k_), colors(n, -1), neighborColors(n, 0)
        {
        }

        void assign(int v, int c)
        {
            colors[v] = c;
            ++colored;
            for (int u : g.row(v))
                neighborColors[u] |= 1ull << c;
        }
        void unassign(int v, int c)
        {
            colors[v] = -1;
            --colored;
            for (int u : g.row(v)) {
                neighborColors[u] &= ~(1ull << c);
                for (int w : g.row(u))
                    if (w != v && colors[w] == c)
                        neighborColors[u] |= 1ull << c;
            }
        }

        bool solve()
        {
            if (colored == n)
                return true;
            int pick = -1, pickSat = -1, pickDeg = -1;
            for (int v = 0; v < n; ++v) {
                if (colors[v] >= 0)
                    continue;
                int sat = std::popcount(neighborColors[v]);
                int deg = g.degree(v);
                if (sat > pickSat || (sat == pickSat && deg > pickDeg)) {
                    pick = v;
                    pickSat = sat;
                    pickDeg = deg;
                }
            }
            int limit = std::min(k, used + 1);
            for (int c = 0; c < limit; ++c) {
                if (neighborColors[pick] >> c & 1ull)
                    continue;
                int prevUsed = used;
                used = std::max(used, c + 1);
                assign(pick, c);
                if (solve())
                    return true;
                unassign(pick, c);
                used = prevUsed;
            }
            return false;
        }
    };

    std::optional<ColoringCertificate> try_k_coloring(const Graph& g, int k, VertexSet seedClique)
    {
        k_color_search s(g, k);
        int c = 0;
        for (int v : seedClique)
            s.assign(v, c++);
        s.used = c;
        if (!s.solve())
            return std::nullopt;
        ColoringCertificate cert;
        cert.colors = s.colors;
        cert.palette = k;
        return cert;
    }

    void normalize_palette(ColoringCertificate& cert)
    {
        int maxc = -1;
        for (int c : cert.colors)
            maxc = std::max(maxc, c);
        cert.palette = maxc + 1;
    }

} // namespace

ColoringCertificate chromatic_number(const Graph& g)
{
    int n = g.size();
    if (n == 0)
        return {};
    CliqueResult cl = clique_number(g);
    ColoringCertificate greedy = dsatur_greedy(g);
    if (greedy.palette > cl.omega) {
        for (int k = cl.omega; k < greedy.palette; ++k) {
            if (auto cert = try_k_coloring(g, k, cl.witness)) {
                normalize_palette(*cert);
                validate_coloring(g, *cert);
                return *cert;
            }
        }
    }
    normalize_palette(greedy);
    validate_coloring(g, greedy);
    return greedy;
}

namespace {

    // vertices of an induced subgraph witness mapped back to host indices
    std::vector<int> map_back(const std::vector<int>& local, VertexSet mask)
    {
        std::vector<int> out;
        out.reserve(local.size());
        for (int v : local)
            out.push_back(mask.nth(v));
        return out;
    }

    VertexSet map_back_set(VertexSet local, VertexSet mask)
    {
        VertexSet out;
        for (int v : local)
            out.add(mask.nth(v));
        return out;
    }

    // some odd hole or odd antihole of G[a], or nothing if G[a] is perfect
    std::optional<VertexSet> imperfection_witness(const Graph& g, VertexSet a)
    {
        Graph sub = induced_subgraph(g, a);
        if (auto h = find_odd_hole(sub)) {
            VertexSet w;
            for (int v : h->vertices)
                w.add(a.nth(v));
            return w;
        }
        if (auto h = find_odd_hole(complement(sub))) {
            VertexSet w;
            for (int v : h->vertices)
                w.add(a.nth(v));
            return w;
        }
        return std::nullopt;
    }

    struct pd_search {
        const Graph& g;
        const std::vector<VertexSet>& maxCliques;
        int limit;
        std::unordered_set<std::uint64_t> visited;

        std::optional<VertexSet> run(VertexSet b)
        {
            if (!visited.insert(b.bits).second)
                return std::nullopt;
            for (const VertexSet& k : maxCliques)
                if (k.subset_of(b))
                    return std::nullopt;
            auto witness = imperfection_witness(g, g.vertices() - b);
            if (!witness)
                return b;
            if (b.count() == limit)
                return std::nullopt;
            for (int v : *witness)
                if (auto r = run(b | VertexSet::single(v)))
                    return r;
            return std::nullopt;
        }
    };

} // namespace

std::optional<PartitionCertificate> pd_partition(const Graph& g)
{
    int n = g.size();
    if (n < 1)
        throw std::invalid_argument("pd_partition needs a nonempty graph");
    if (is_perfect(g)) {
        PartitionCertificate cert{PartitionCertificate::Kind::PD, g.vertices(), VertexSet{}};
        validate_partition(g, cert);
        return cert;
    }
    int omega = clique_number(g).omega;
    std::vector<VertexSet> maxCliques = all_max_cliques(g, omega);
    for (int limit = 1; limit < n; ++limit) {
        pd_search search{g, maxCliques, limit, {}};
        if (auto b = search.run(VertexSet{})) {
            PartitionCertificate cert{
                PartitionCertificate::Kind::PD, g.vertices() - *b, *b};
            validate_partition(g, cert);
            return cert;
        }
    }
    return std::nullopt;
}

PdResult is_perfectly_divisible(const Graph& g, int size_guard)
{
    int n = g.size();
    if (n > size_guard)
        throw capacity_error("is_perfectly_divisible: size guard " + std::to_string(size_guard)
            + " exceeded (n = " + std::to_string(n) + ")");
    std::unordered_map<std::string, bool> memo;
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        VertexSet s{mask};
        if (!is_connected_in(g, s))
            continue;
        Graph sub = induced_subgraph(g, s);
        std::string key = canonical_form(sub);
        auto it = memo.find(key);
        bool ok;
        if (it != memo.end()) {
            ok = it->second;
        } else {
            ok = pd_partition(sub).has_value();
            memo.emplace(std::move(key), ok);
        }
        if (!ok)
            return {false, std::move(sub)};
    }
    return {true, std::nullopt};
}

namespace {

    int pd_color_rec(const Graph& g, VertexSet mask, std::vector<int>& colors)
    {
        if (mask.empty())
            return 0;
        Graph sub = induced_subgraph(g, mask);
        auto part = pd_partition(sub);
        if (!part)
            throw not_perfectly_divisible(emit_graph6(sub));
        VertexSet a = map_back_set(part->a, mask);
        VertexSet b = map_back_set(part->b, mask);
        int base = pd_color_rec(g, b, colors);
        ColoringCertificate certA = chromatic_number(induced_subgraph(g, a));
        for (int v : a)
            colors[v] = base + certA.colors[a.index_of(v)];
        return base + certA.palette;
    }

} // namespace

ColoringCertificate pd_coloring(const Graph& g)
{
    ColoringCertificate cert;
    cert.colors.assign(g.size(), -1);
    cert.palette = pd_color_rec(g, g.vertices(), cert.colors);
    validate_coloring(g, cert);
    return cert;
}

namespace {

    // partition of G[mask] into two perfect parts, original coordinates
    std::pair<VertexSet, VertexSet> two_perfect_rec(const Graph& g, VertexSet mask)
    {
        if (mask.empty())
            return {VertexSet{}, VertexSet{}};
        auto comps = components_in(g, mask);
        if (comps.size() > 1) {
            VertexSet x, y;
            for (const VertexSet& comp : comps) {
                auto [cx, cy] = two_perfect_rec(g, comp);
                x = x | cx;
                y = y | cy;
            }
            return {x, y};
        }
        Graph sub = induced_subgraph(g, mask);
        int omega = clique_number(sub).omega;
        if (omega <= 2) {
            ColoringCertificate cert = chromatic_number(sub);
            if (cert.palette > 4)
                throw structure_violation(
                    "triangle-free P6-free part needs more than 4 colors", mask.to_vector());
            VertexSet x, y;
            for (int v : mask) {
                if (cert.colors[mask.index_of(v)] <= 1)
                    x.add(v);
                else
                    y.add(v);
            }
            return {x, y};
        }
        // any maximum-clique vertex serves; prefer one whose M(v) is
        // already perfect, then try the 5-hole construction over the
        // remaining choices and holes before declaring a violation
        std::vector<int> cliqueVertices;
        for (int u = 0; u < sub.size(); ++u) {
            VertexSet closed = sub.row(u) | VertexSet::single(u);
            if (clique_number(induced_subgraph(sub, closed)).omega == omega)
                cliqueVertices.push_back(u);
        }
        for (int v : cliqueVertices) {
            VertexSet mv = non_neighborhood(sub, v);
            if (is_perfect(induced_subgraph(sub, mv)))
                return {map_back_set(sub.row(v), mask),
                    map_back_set(mv | VertexSet::single(v), mask)};
        }
        std::optional<structure_violation> firstViolation;
        for (int v : cliqueVertices) {
            VertexSet mv = non_neighborhood(sub, v);
            Graph msub = induced_subgraph(sub, mv);
            auto holes = all_odd_holes(msub);
            if (holes.empty()) {
                if (!firstViolation)
                    firstViolation = structure_violation(
                        "imperfect M(v) without an odd hole", {mask.nth(v)});
                continue;
            }
            for (const Witness& hole : holes) {
                if (hole.vertices.size() != 5) {
                    if (!firstViolation)
                        firstViolation = structure_violation(
                            "odd hole in M(v) longer than 5 in a P6-free graph",
                            map_back(map_back(hole.vertices, mv), mask));
                    continue;
                }
                Witness hole5{"odd-hole", map_back(hole.vertices, mv)};
                VertexSet s;
                try {
                    s = homogeneous_set_from_5hole(sub, v, hole5);
                } catch (const structure_violation& e) {
                    if (!firstViolation)
                        firstViolation = e;
                    continue;
                }
                int keepRep = s.min();
                VertexSet keep = sub.vertices() - (s - VertexSet::single(keepRep));
                auto [x1, y1] = two_perfect_rec(g, map_back_set(keep, mask));
                VertexSet sOrig = map_back_set(s, mask);
                int repOrig = mask.nth(keepRep);
                if (x1.contains(repOrig))
                    return {x1 | sOrig, y1};
                return {x1, y1 | sOrig};
            }
        }
        if (firstViolation)
            throw *firstViolation;
        throw structure_violation("no maximum-clique vertex admits a two-perfect split",
            mask.to_vector());
    }

} // namespace

PartitionCertificate two_perfect_partition(const Graph& g)
{
    if (!is_locally_perfect(g))
        throw std::domain_error("two_perfect_partition requires a locally perfect graph");
    if (!is_P6_free(g))
        throw std::domain_error("two_perfect_partition requires a P6-free graph");
    if (!is_bull_free(g))
        throw std::domain_error("two_perfect_partition requires a bull-free graph");
    auto [x, y] = two_perfect_rec(g, g.vertices());
    PartitionCertificate cert{PartitionCertificate::Kind::TwoPerfect, x, y};
    validate_partition(g, cert);
    return cert;
}

namespace {

    // colors written in original coordinates; returns palette used
    int color_basic_rec(const Graph& g, VertexSet mask, std::vector<int>& colors)
    {
        if (mask.empty())
            return 0;
        auto comps = components_in(g, mask);
        if (comps.size() > 1) {
            int palette = 0;
            for (const VertexSet& comp : comps)
                palette = std::max(palette, color_basic_rec(g, comp, colors));
            return palette;
        }
        Graph sub = induced_subgraph(g, mask);
        int omega = clique_number(sub).omega;
        if (omega <= 1) {
            for (int v : mask)
                colors[v] = 0;
            return 1;
        }
        if (is_locally_perfect(sub)) {
            PartitionCertificate part = two_perfect_partition(sub);
            VertexSet x = map_back_set(part.a, mask);
            VertexSet y = map_back_set(part.b, mask);
            ColoringCertificate cx = chromatic_number(induced_subgraph(g, x));
            ColoringCertificate cy = chromatic_number(induced_subgraph(g, y));
            for (int v : x)
                colors[v] = cx.colors[x.index_of(v)];
            for (int v : y)
                colors[v] = cx.palette + cy.colors[y.index_of(v)];
            return cx.palette + cy.palette;
        }
        int v = -1;
        for (int u = 0; u < sub.size(); ++u)
            if (!is_perfect(induced_subgraph(sub, sub.row(u)))) {
                v = u;
                break;
            }
        VertexSet mv = non_neighborhood(sub, v);
        if (!is_perfect(induced_subgraph(sub, mv)))
            throw structure_violation(
                "basic graph has a vertex with both N(v) and M(v) imperfect", {mask.nth(v)});
        int p1 = color_basic_rec(g, map_back_set(sub.row(v), mask), colors);
        VertexSet vm = map_back_set(mv | VertexSet::single(v), mask);
        ColoringCertificate c2 = chromatic_number(induced_subgraph(g, vm));
        for (int u : vm)
            colors[u] = p1 + c2.colors[vm.index_of(u)];
        return p1 + c2.palette;
    }

} // namespace

ColoringCertificate color_basic_p6bull(const Graph& g)
{
    if (!is_bull_free(g))
        throw std::domain_error("color_basic_p6bull requires a bull-free graph");
    if (!is_P6_free(g))
        throw std::domain_error("color_basic_p6bull requires a P6-free graph");
    if (!is_basic_bullfree(g))
        throw std::domain_error("color_basic_p6bull requires a basic bull-free graph");
    ColoringCertificate cert;
    cert.colors.assign(g.size(), -1);
    cert.palette = color_basic_rec(g, g.vertices(), cert.colors);
    validate_coloring(g, cert);
    return cert;
}

namespace {

    Graph expanded_quotient(const Graph& q, const std::vector<int>& weights,
        std::vector<int>& offsets)
    {
        int total = 0;
        offsets.assign(weights.size(), 0);
        for (std::size_t i = 0; i < weights.size(); ++i) {
            offsets[i] = total;
            total += weights[i];
        }
        Graph r(total);
        for (std::size_t i = 0; i < weights.size(); ++i)
            for (int a = 0; a < weights[i]; ++a)
                for (int b = a + 1; b < weights[i]; ++b)
                    r.add_edge(offsets[i] + a, offsets[i] + b);
        for (int i = 0; i < q.size(); ++i)
            for (int j : q.row(i)) {
                if (j < i)
                    continue;
                for (int a = 0; a < weights[i]; ++a)
                    for (int b = 0; b < weights[static_cast<std::size_t>(j)]; ++b)
                        r.add_edge(offsets[i] + a, offsets[static_cast<std::size_t>(j)] + b);
            }
        return r;
    }

    int color_tree_node(const Graph& g, const ModularTree& t, int id, std::vector<int>& colors)
    {
        const ModularTree::Node& node = t.nodes[id];
        if (node.kind == ModularTree::Kind::leaf) {
            colors[node.vertex] = 0;
            return 1;
        }
        std::vector<int> weights(node.children.size());
        for (std::size_t i = 0; i < node.children.size(); ++i)
            weights[i] = color_tree_node(g, t, node.children[i], colors);

        std::vector<int> offsets;
        Graph qstar = expanded_quotient(node.quotient, weights, offsets);
        ColoringCertificate qcert;
        switch (node.kind) {
        case ModularTree::Kind::series: {
            // complete join of cliques: one fresh block per child
            qcert.colors.resize(qstar.size());
            for (int v = 0; v < qstar.size(); ++v)
                qcert.colors[v] = v;
            qcert.palette = qstar.size();
            break;
        }
        case ModularTree::Kind::parallel: {
            // disjoint cliques: blocks share the palette
            qcert.colors.resize(qstar.size());
            int palette = 0;
            for (std::size_t i = 0; i < weights.size(); ++i) {
                for (int c = 0; c < weights[i]; ++c)
                    qcert.colors[offsets[i] + c] = c;
                palette = std::max(palette, weights[i]);
            }
            qcert.palette = palette;
            break;
        }
        default: {
            if (!is_basic_bullfree(node.quotient))
                throw structure_violation("prime quotient is not basic bull-free",
                    node.block.to_vector());
            if (is_basic_bullfree(qstar))
                qcert = color_basic_p6bull(qstar);
            else
                qcert = chromatic_number(qstar);
            break;
        }
        }

        for (std::size_t i = 0; i < node.children.size(); ++i) {
            const ModularTree::Node& child = t.nodes[node.children[i]];
            for (int v : child.block)
                colors[v] = qcert.colors[offsets[i] + colors[v]];
        }
        return qcert.palette;
    }

} // namespace

ColoringCertificate color_p6bull(const Graph& g)
{
    if (!is_bull_free(g))
        throw std::domain_error("color_p6bull requires a bull-free graph");
    if (!is_P6_free(g))
        throw std::domain_error("color_p6bull requires a P6-free graph");
    if (g.size() == 0)
        return {};
    ModularTree t = modular_decompose(g);
    ColoringCertificate cert;
    cert.colors.assign(g.size(), -1);
    cert.palette = color_tree_node(g, t, t.root, cert.colors);
    validate_coloring(g, cert);
    return cert;
}

void validate_coloring(const Graph& g, const ColoringCertificate& c)
{
    if (static_cast<int>(c.colors.size()) != g.size())
        throw std::logic_error("coloring certificate: wrong vertex count");
    std::set<int> distinct;
    for (int v = 0; v < g.size(); ++v) {
        int col = c.colors[v];
        if (col < 0 || col >= c.palette)
            throw std::logic_error("coloring certificate: color out of range");
        distinct.insert(col);
        for (int u : g.row(v))
            if (c.colors[u] == col)
                throw std::logic_error("coloring certificate: monochromatic edge "
                    + std::to_string(v) + "-" + std::to_string(u));
    }
    if (static_cast<int>(distinct.size()) != c.palette)
        throw std::logic_error("coloring certificate: palette does not match distinct colors");
}

void validate_partition(const Graph& g, const PartitionCertificate& p)
{
    if ((p.a & p.b).bits || (p.a | p.b) != g.vertices())
        throw std::logic_error("partition certificate: not a partition of V");
    if (p.kind == PartitionCertificate::Kind::PD) {
        if (!is_perfect(induced_subgraph(g, p.a)))
            throw std::logic_error("partition certificate: A side not perfect");
        int omegaB = p.b.empty() ? 0 : clique_number(induced_subgraph(g, p.b)).omega;
        if (omegaB >= clique_number(g).omega)
            throw std::logic_error("partition certificate: clique number did not drop");
    } else {
        if (!is_perfect(induced_subgraph(g, p.a)))
            throw std::logic_error("partition certificate: X side not perfect");
        if (!is_perfect(induced_subgraph(g, p.b)))
            throw std::logic_error("partition certificate: Y side not perfect");
    }
}

} // namespace perfdiv
