#include "perfdiv/catalog.hpp"

#include <cctype>
#include <sstream>

namespace perfdiv {

Graph path_graph(int k)
{
    if (k < 1)
        throw std::invalid_argument("path needs k >= 1");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i)
        g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int k)
{
    if (k < 3)
        throw std::invalid_argument("cycle needs k >= 3");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        g.add_edge(i, (i + 1) % k);
    return g;
}

Graph complete_graph(int k)
{
    if (k < 0)
        throw std::invalid_argument("complete needs k >= 0");
    Graph g(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            g.add_edge(i, j);
    return g;
}

Graph empty_graph(int k)
{
    if (k < 0)
        throw std::invalid_argument("empty needs k >= 0");
    return Graph(k);
}

Graph bull_graph()
{
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}});
}

Graph fork_graph()
{
    return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 4}, {4, 3}});
}

Graph graph_e()
{
    return Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
}

Graph mycielski(const Graph& g)
{
    int n = g.size();
    if (2 * n + 1 > max_vertices)
        throw capacity_error("mycielski exceeds vertex limit");
    Graph r(2 * n + 1);
    for (int v = 0; v < n; ++v)
        for (int u : g.row(v))
            if (u < v)
                r.add_edge(u, v);
    for (int v = 0; v < n; ++v)
        for (int u : g.row(v))
            r.add_edge(n + v, u);
    for (int v = 0; v < n; ++v)
        r.add_edge(n + v, 2 * n);
    return r;
}

Graph groetzsch_graph()
{
    return mycielski(mycielski(complete_graph(2)));
}

Graph odd_torch(int k, VertexSet s)
{
    if (k < 5 || k % 2 == 0)
        throw std::invalid_argument("odd torch needs odd k >= 5");
    if (s.empty())
        throw std::invalid_argument("odd torch needs a nonempty stable set on the hole");
    if (!s.subset_of(VertexSet::all(k)))
        throw std::invalid_argument("odd torch: set not on the hole");
    for (int v : s)
        if (s.contains((v + 1) % k))
            throw std::invalid_argument("odd torch: set not stable on the hole");
    Graph g(k + 2);
    for (int i = 0; i < k; ++i)
        g.add_edge(i, (i + 1) % k);
    for (int v : s)
        g.add_edge(k, v);
    g.add_edge(k, k + 1);
    return g;
}

namespace {

    struct parser {
        const std::string& text;
        std::size_t pos = 0;

        void skip_ws()
        {
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
                ++pos;
        }
        bool eat(char c)
        {
            skip_ws();
            if (pos < text.size() && text[pos] == c) {
                ++pos;
                return true;
            }
            return false;
        }
        void expect(char c)
        {
            if (!eat(c))
                throw std::invalid_argument("catalog name: expected '" + std::string(1, c)
                    + "' at position " + std::to_string(pos) + " in '" + text + "'");
        }
        std::string ident()
        {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size()
                && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            if (start == pos)
                throw std::invalid_argument("catalog name: expected identifier in '" + text + "'");
            return text.substr(start, pos - start);
        }
        int number()
        {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                ++pos;
            if (start == pos)
                throw std::invalid_argument("catalog name: expected number in '" + text + "'");
            return std::stoi(text.substr(start, pos - start));
        }
        VertexSet set()
        {
            expect('{');
            VertexSet s;
            if (!eat('}')) {
                s.add(number());
                while (eat(','))
                    s.add(number());
                expect('}');
            }
            return s;
        }

        NamedGraph expr()
        {
            std::string id = ident();
            // single-letter-plus-number aliases
            if (id.size() >= 2 && (id[0] == 'P' || id[0] == 'C' || id[0] == 'K')
                && std::isdigit(static_cast<unsigned char>(id[1]))) {
                int k = std::stoi(id.substr(1));
                if (id[0] == 'P')
                    return {"path(" + std::to_string(k) + ")", path_graph(k), "path on " + std::to_string(k) + " vertices"};
                if (id[0] == 'C')
                    return {"cycle(" + std::to_string(k) + ")", cycle_graph(k), "cycle on " + std::to_string(k) + " vertices"};
                return {"complete(" + std::to_string(k) + ")", complete_graph(k), "complete graph on " + std::to_string(k) + " vertices"};
            }
            if (id == "path" || id == "cycle" || id == "complete" || id == "empty") {
                expect('(');
                int k = number();
                expect(')');
                std::string nm = id + "(" + std::to_string(k) + ")";
                Graph g = id == "path" ? path_graph(k)
                    : id == "cycle"    ? cycle_graph(k)
                    : id == "complete" ? complete_graph(k)
                                       : empty_graph(k);
                return {nm, g, nm};
            }
            if (id == "bull")
                return {"bull", bull_graph(), "triangle 0,1,2 with pendants 3~0 and 4~1"};
            if (id == "fork")
                return {"fork", fork_graph(), "claw at 0 with the edge to 3 subdivided by 4"};
            if (id == "E" || id == "graph_E")
                return {"E", graph_e(), "P5 0-1-2-3-4 plus 5 adjacent to 2"};
            if (id == "groetzsch" || id == "F")
                return {"groetzsch", groetzsch_graph(), "two Mycielski steps from K2"};
            if (id == "odd_torch") {
                expect('(');
                int k = number();
                expect(',');
                VertexSet s = set();
                expect(')');
                std::ostringstream nm;
                nm << "odd_torch(" << k << ",{";
                bool first = true;
                for (int v : s) {
                    nm << (first ? "" : ",") << v;
                    first = false;
                }
                nm << "})";
                return {nm.str(), odd_torch(k, s),
                    "hole 0.." + std::to_string(k - 1) + ", y=" + std::to_string(k)
                        + ", x=" + std::to_string(k + 1)};
            }
            if (id == "mycielski") {
                expect('(');
                NamedGraph inner = expr();
                expect(')');
                return {"mycielski(" + inner.name + ")", mycielski(inner.graph),
                    "Mycielski step on " + inner.name};
            }
            if (id == "complement") {
                expect('(');
                NamedGraph inner = expr();
                expect(')');
                return {"complement(" + inner.name + ")", complement(inner.graph),
                    "complement of " + inner.name};
            }
            if (id == "join") {
                expect('(');
                NamedGraph a = expr();
                expect(',');
                NamedGraph b = expr();
                expect(')');
                return {"join(" + a.name + "," + b.name + ")", complete_join(a.graph, b.graph),
                    "complete join of " + a.name + " and " + b.name};
            }
            throw std::invalid_argument("unknown catalog name '" + id + "'");
        }
    };

} // namespace

NamedGraph catalog(const std::string& name)
{
    parser p{name};
    NamedGraph g = p.expr();
    p.skip_ws();
    if (p.pos != name.size())
        throw std::invalid_argument("catalog name: trailing input in '" + name + "'");
    return g;
}

} // namespace perfdiv
