#include "perfdiv/detect.hpp"

#include "perfdiv/catalog.hpp"

#include <algorithm>

namespace perfdiv {

namespace {

    bool match(const Graph& g, const Graph& p, std::vector<int>& map, VertexSet used, int depth)
    {
        if (depth == p.size())
            return true;
        VertexSet cand = g.vertices() - used;
        for (int i = 0; i < depth; ++i) {
            if (p.has_edge(i, depth))
                cand = cand & g.row(map[i]);
            else
                cand = cand - g.row(map[i]);
        }
        int need = p.degree(depth);
        for (int v : cand) {
            if (g.degree(v) < need)
                continue;
            map[depth] = v;
            if (match(g, p, map, used | VertexSet::single(v), depth + 1))
                return true;
        }
        return false;
    }

} // namespace

std::optional<Witness> find_induced(const Graph& g, const Graph& pattern, const std::string& kind)
{
    if (pattern.size() > g.size())
        return std::nullopt;
    std::vector<int> map(pattern.size());
    if (match(g, pattern, map, VertexSet{}, 0))
        return Witness{kind, map};
    return std::nullopt;
}

bool is_Pk_free(const Graph& g, int k)
{
    return !find_induced(g, path_graph(k)).has_value();
}
bool is_P5_free(const Graph& g) { return is_Pk_free(g, 5); }
bool is_P6_free(const Graph& g) { return is_Pk_free(g, 6); }
bool is_P7_free(const Graph& g) { return is_Pk_free(g, 7); }
bool is_P8_free(const Graph& g) { return is_Pk_free(g, 8); }

bool is_C3_free(const Graph& g)
{
    for (int v = 0; v < g.size(); ++v)
        for (int u : g.row(v))
            if (u > v && (g.row(v) & g.row(u)).bits)
                return false;
    return true;
}

bool is_C5_free(const Graph& g)
{
    return !find_induced(g, cycle_graph(5)).has_value();
}

bool is_bull_free(const Graph& g)
{
    return !find_induced(g, bull_graph()).has_value();
}

bool is_fork_free(const Graph& g)
{
    return !find_induced(g, fork_graph()).has_value();
}

bool is_E_free(const Graph& g)
{
    return !find_induced(g, graph_e()).has_value();
}

bool is_F_free(const Graph& g)
{
    if (g.size() < 11)
        return true;
    return !find_induced(g, groetzsch_graph()).has_value();
}

namespace {

    // DFS over chordless paths. The cycle's least vertex starts the
    // path; a close through w needs w adjacent to exactly the path's
    // endpoints. `all` collects every hole, otherwise the first one is
    // returned through `out`.
    struct hole_search {
        const Graph& g;
        int min_len;
        bool collect_all;
        std::vector<int> path;
        VertexSet path_mask;
        std::vector<std::vector<int>> found;

        hole_search(const Graph& g_, int min_len_, bool all_)
            : g(g_), min_len(min_len_), collect_all(all_)
        {
        }

        bool run()
        {
            for (int v0 = 0; v0 < g.size(); ++v0) {
                path = {v0};
                path_mask = VertexSet::single(v0);
                for (int w : g.row(v0)) {
                    if (w < v0)
                        continue;
                    path.push_back(w);
                    path_mask.add(w);
                    if (extend(v0))
                        return true;
                    path.pop_back();
                    path_mask.remove(w);
                }
            }
            return false;
        }

        bool extend(int v0)
        {
            int last = path.back();
            for (int w : g.row(last)) {
                if (w <= v0 || path_mask.contains(w))
                    continue;
                VertexSet onPath = g.row(w) & path_mask;
                if (onPath == VertexSet::single(last)) {
                    path.push_back(w);
                    path_mask.add(w);
                    if (extend(v0))
                        return true;
                    path.pop_back();
                    path_mask.remove(w);
                } else if (onPath == VertexSet::of({last, v0})) {
                    int len = static_cast<int>(path.size()) + 1;
                    if (len >= min_len && len % 2 == 1 && path[1] < w) {
                        std::vector<int> cycle = path;
                        cycle.push_back(w);
                        if (!collect_all) {
                            found.push_back(std::move(cycle));
                            return true;
                        }
                        found.push_back(std::move(cycle));
                    }
                }
            }
            return false;
        }
    };

} // namespace

std::optional<Witness> find_odd_hole(const Graph& g)
{
    hole_search hs(g, 5, false);
    if (hs.run())
        return Witness{"odd-hole", hs.found.front()};
    return std::nullopt;
}

std::vector<Witness> all_odd_holes(const Graph& g, int min_len)
{
    hole_search hs(g, min_len, true);
    hs.run();
    std::sort(hs.found.begin(), hs.found.end(),
        [](const std::vector<int>& a, const std::vector<int>& b) {
            VertexSet sa, sb;
            for (int v : a)
                sa.add(v);
            for (int v : b)
                sb.add(v);
            if (sa.bits != sb.bits)
                return sa.bits < sb.bits;
            return a < b;
        });
    std::vector<Witness> out;
    out.reserve(hs.found.size());
    for (auto& c : hs.found)
        out.push_back(Witness{"odd-hole", std::move(c)});
    return out;
}

std::optional<Witness> find_odd_antihole_ge7(const Graph& g)
{
    Graph co = complement(g);
    hole_search hs(co, 7, false);
    if (hs.run())
        return Witness{"odd-antihole", hs.found.front()};
    return std::nullopt;
}

bool is_perfect(const Graph& g)
{
    hole_search direct(g, 5, false);
    if (direct.run())
        return false;
    Graph co = complement(g);
    hole_search coSearch(co, 5, false);
    return !coSearch.run();
}

bool is_locally_perfect(const Graph& g)
{
    for (int v = 0; v < g.size(); ++v)
        if (!is_perfect(induced_subgraph(g, g.row(v))))
            return false;
    return true;
}

std::optional<Witness> find_odd_torch(const Graph& g)
{
    for (const Witness& hole : all_odd_holes(g)) {
        VertexSet c = hole.vertex_set();
        VertexSet nc = neighborhood_of(g, c);
        VertexSet mc = non_neighborhood_of(g, c);
        for (int y : nc) {
            VertexSet onHole = g.row(y) & c;
            bool stable = true;
            for (int v : onHole)
                if ((g.row(v) & onHole).bits) {
                    stable = false;
                    break;
                }
            if (!stable)
                continue;
            VertexSet xs = g.row(y) & mc;
            if (xs.empty())
                continue;
            int x = xs.min();
            Witness w{"odd-torch", hole.vertices};
            w.vertices.push_back(y);
            w.vertices.push_back(x);
            return w;
        }
    }
    return std::nullopt;
}

bool is_odd_torch_free(const Graph& g)
{
    return !find_odd_torch(g).has_value();
}

namespace {

    bool has_flanked_odd_hole(const Graph& g)
    {
        for (const Witness& hole : all_odd_holes(g)) {
            VertexSet c = hole.vertex_set();
            VertexSet rest = g.vertices() - c;
            bool complete = false, anti = false;
            for (int u : rest) {
                if (is_complete_to(g, u, c))
                    complete = true;
                else if (is_anticomplete_to(g, u, c))
                    anti = true;
                if (complete && anti)
                    return true;
            }
        }
        return false;
    }

} // namespace

bool is_basic_bullfree(const Graph& g)
{
    if (!is_bull_free(g))
        throw std::domain_error("is_basic_bullfree requires a bull-free graph");
    return !has_flanked_odd_hole(g) && !has_flanked_odd_hole(complement(g));
}

} // namespace perfdiv
