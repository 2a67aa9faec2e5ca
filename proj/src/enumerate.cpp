#include "perfdiv/enumerate.hpp"

#include "perfdiv/canonical.hpp"
#include "perfdiv/catalog.hpp"
#include "perfdiv/errors.hpp"

#include <random>
#include <unordered_set>

namespace perfdiv {

std::vector<Graph> enumerate_graphs(int n, bool connected_only,
    const std::function<bool(const Graph&)>& hereditary_filter)
{
    if (n < 1)
        throw std::invalid_argument("enumerate_graphs needs n >= 1");
    int cap = hereditary_filter ? 12 : 8;
    if (n > cap)
        throw capacity_error("enumeration capped at n = " + std::to_string(cap)
            + (hereditary_filter ? " (class-filtered)" : " (exhaustive)"));

    std::vector<Graph> level;
    Graph k1(1);
    if (!hereditary_filter || hereditary_filter(k1))
        level.push_back(k1);
    for (int k = 2; k <= n; ++k) {
        std::vector<Graph> next;
        std::unordered_set<std::string> seen;
        std::uint64_t maskLo = connected_only ? 1 : 0;
        std::uint64_t maskHi = 1ull << (k - 1);
        for (const Graph& parent : level) {
            for (std::uint64_t mask = maskLo; mask < maskHi; ++mask) {
                Graph h(k);
                for (int v = 0; v < k - 1; ++v)
                    for (int u : parent.row(v))
                        if (u < v)
                            h.add_edge(u, v);
                for (int v : VertexSet{mask})
                    h.add_edge(v, k - 1);
                if (hereditary_filter && !hereditary_filter(h))
                    continue;
                if (seen.insert(canonical_form(h)).second)
                    next.push_back(std::move(h));
            }
        }
        level = std::move(next);
    }
    return level;
}

std::vector<Graph> enumerate_graphs_upto(int n, bool connected_only,
    const std::function<bool(const Graph&)>& hereditary_filter)
{
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k) {
        std::vector<Graph> level = enumerate_graphs(k, connected_only, hereditary_filter);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

std::vector<Graph> random_graphs(int n, double edge_probability, std::uint64_t seed, int count)
{
    if (n < 0 || n > max_vertices)
        throw capacity_error("random_graphs: n out of range");
    std::mt19937_64 rng(seed);
    auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int c = 0; c < count; ++c) {
        Graph g(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (uniform() < edge_probability)
                    g.add_edge(i, j);
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> substitution_composites(int max_n, std::uint64_t seed, int count)
{
    const std::vector<Graph> pool = {
        complete_graph(1), complete_graph(2), complete_graph(3), complete_graph(4),
        path_graph(3), path_graph(4), path_graph(5),
        cycle_graph(4), cycle_graph(5),
        graph_e(),
        Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}}), // paw
        Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}}), // diamond
    };
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int c = 0; c < count; ++c) {
        Graph g = pool[rng() % pool.size()];
        int steps = 1 + static_cast<int>(rng() % 3);
        for (int s = 0; s < steps; ++s) {
            std::vector<const Graph*> fits;
            for (const Graph& h : pool)
                if (h.size() >= 2 && g.size() - 1 + h.size() <= max_n)
                    fits.push_back(&h);
            if (fits.empty())
                break;
            const Graph& h = *fits[rng() % fits.size()];
            int v = static_cast<int>(rng() % g.size());
            g = substitute(g, v, h);
        }
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace perfdiv
