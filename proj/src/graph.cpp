#include "perfdiv/graph.hpp"

#include <sstream>

namespace perfdiv {

VertexSet neighborhood(const Graph& g, int v)
{
    return g.row(v);
}

VertexSet non_neighborhood(const Graph& g, int v)
{
    return g.vertices() - g.row(v) - VertexSet::single(v);
}

VertexSet neighborhood_of(const Graph& g, VertexSet x)
{
    VertexSet n;
    for (int v : x)
        n = n | g.row(v);
    return n - x;
}

VertexSet non_neighborhood_of(const Graph& g, VertexSet x)
{
    return g.vertices() - x - neighborhood_of(g, x);
}

VertexSet neighborhood_in(const Graph& g, VertexSet a, VertexSet b)
{
    return neighborhood_of(g, b) & a;
}

VertexSet non_neighborhood_in(const Graph& g, VertexSet a, VertexSet b)
{
    return a - neighborhood_in(g, a, b) - b;
}

bool is_complete_to(const Graph& g, int b, VertexSet a)
{
    return a.subset_of(g.row(b));
}

bool is_anticomplete_to(const Graph& g, int b, VertexSet a)
{
    return !g.row(b).intersects(a);
}

bool is_complete_sets(const Graph& g, VertexSet a, VertexSet b)
{
    for (int v : a)
        if (!is_complete_to(g, v, b))
            return false;
    return true;
}

bool is_anticomplete_sets(const Graph& g, VertexSet a, VertexSet b)
{
    for (int v : a)
        if (!is_anticomplete_to(g, v, b))
            return false;
    return true;
}

Graph induced_subgraph(const Graph& g, VertexSet s)
{
    if (!s.subset_of(g.vertices()))
        throw std::invalid_argument("vertex set not contained in graph");
    Graph h(s.count());
    for (int v : s) {
        int rv = s.index_of(v);
        for (int u : g.row(v) & s) {
            if (u < v)
                h.add_edge(s.index_of(u), rv);
        }
    }
    return h;
}

Graph complement(const Graph& g)
{
    int n = g.size();
    Graph h(n);
    for (int v = 0; v < n; ++v)
        for (int u : g.vertices() - g.row(v) - VertexSet::single(v))
            if (u < v)
                h.add_edge(u, v);
    return h;
}

Graph complete_join(const Graph& g, const Graph& h)
{
    int n = g.size(), m = h.size();
    if (n + m > max_vertices)
        throw capacity_error("join exceeds " + std::to_string(max_vertices) + " vertices");
    Graph r(n + m);
    for (int v = 0; v < n; ++v)
        for (int u : g.row(v))
            if (u < v)
                r.add_edge(u, v);
    for (int v = 0; v < m; ++v)
        for (int u : h.row(v))
            if (u < v)
                r.add_edge(n + u, n + v);
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < m; ++u)
            r.add_edge(v, n + u);
    return r;
}

Graph substitute(const Graph& g, int v, const Graph& h)
{
    int n = g.size(), m = h.size();
    if (v < 0 || v >= n)
        throw std::invalid_argument("substitute: vertex out of range");
    if (n - 1 + m > max_vertices)
        throw capacity_error("substitution exceeds " + std::to_string(max_vertices) + " vertices");
    VertexSet rest = g.vertices() - VertexSet::single(v);
    Graph r(n - 1 + m);
    for (int a : rest) {
        int ra = rest.index_of(a);
        for (int b : g.row(a) & rest)
            if (b < a)
                r.add_edge(rest.index_of(b), ra);
    }
    for (int a = 0; a < m; ++a)
        for (int b : h.row(a))
            if (b < a)
                r.add_edge(n - 1 + b, n - 1 + a);
    for (int a : g.row(v)) {
        int ra = rest.index_of(a);
        for (int b = 0; b < m; ++b)
            r.add_edge(ra, n - 1 + b);
    }
    return r;
}

bool is_connected_in(const Graph& g, VertexSet s)
{
    if (s.empty())
        return true;
    VertexSet seen = VertexSet::single(s.min());
    for (;;) {
        VertexSet grow = neighborhood_of(g, seen) & s;
        if (grow.empty())
            break;
        seen = seen | grow;
    }
    return seen == s;
}

bool is_connected(const Graph& g)
{
    return is_connected_in(g, g.vertices());
}

std::vector<VertexSet> components_in(const Graph& g, VertexSet s)
{
    std::vector<VertexSet> out;
    VertexSet todo = s;
    while (!todo.empty()) {
        VertexSet comp = VertexSet::single(todo.min());
        for (;;) {
            VertexSet grow = neighborhood_of(g, comp) & s;
            if (grow.empty())
                break;
            comp = comp | grow;
        }
        out.push_back(comp);
        todo = todo - comp;
    }
    return out;
}

std::vector<VertexSet> components(const Graph& g)
{
    return components_in(g, g.vertices());
}

std::string to_dot(const Graph& g)
{
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.size(); ++v)
        os << "  " << v << ";\n";
    for (int v = 0; v < g.size(); ++v)
        for (int u : g.row(v))
            if (u > v)
                os << "  " << v << " -- " << u << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace perfdiv
