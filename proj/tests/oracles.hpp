// Independent brute-force oracles used only by tests. These deliberately
// avoid the library's search paths: plain backtracking instead of branch
// and bound, subset scans instead of closures, permutation minimization
// instead of refinement.
#ifndef PERFDIV_TEST_ORACLES_HPP
#define PERFDIV_TEST_ORACLES_HPP

#include "perfdiv/graph.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace oracles {

using perfdiv::Graph;
using perfdiv::VertexSet;

inline bool colorable_rec(const Graph& g, int k, std::vector<int>& colors, int v, int used)
{
    if (v == g.size())
        return true;
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int u : g.row(v))
            if (u < v && colors[u] == c) {
                ok = false;
                break;
            }
        if (!ok)
            continue;
        colors[v] = c;
        if (colorable_rec(g, k, colors, v + 1, std::max(used, c + 1)))
            return true;
    }
    colors[v] = -1;
    return false;
}

inline int brute_chromatic(const Graph& g)
{
    if (g.size() == 0)
        return 0;
    for (int k = 1;; ++k) {
        std::vector<int> colors(g.size(), -1);
        if (colorable_rec(g, k, colors, 0, 0))
            return k;
    }
}

inline int brute_omega(const Graph& g)
{
    int n = g.size(), best = 0;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        VertexSet s{mask};
        bool clique = true;
        for (int v : s)
            if (!(s - VertexSet::single(v)).subset_of(g.row(v))) {
                clique = false;
                break;
            }
        if (clique)
            best = std::max(best, s.count());
    }
    return best;
}

// chi(H) == omega(H) for every induced subgraph H
inline bool definitional_perfect(const Graph& g)
{
    int n = g.size();
    for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
        Graph h = perfdiv::induced_subgraph(g, VertexSet{mask});
        if (brute_chromatic(h) != brute_omega(h))
            return false;
    }
    return true;
}

inline std::optional<VertexSet> brute_homogeneous_set(const Graph& g)
{
    int n = g.size();
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        VertexSet s{mask};
        if (s.count() <= 1 || s.count() >= n)
            continue;
        bool ok = true;
        for (int w : g.vertices() - s) {
            VertexSet rel = g.row(w) & s;
            if (!rel.empty() && rel != s) {
                ok = false;
                break;
            }
        }
        if (ok)
            return s;
    }
    return std::nullopt;
}

// smallest |B| over all splits with A perfect (definitional oracle) and
// omega(B) < omega(G); -1 when no split exists
inline int brute_pd_min_b(const Graph& g)
{
    int n = g.size();
    int w = brute_omega(g);
    int best = -1;
    for (std::uint64_t amask = 0; amask < (1ull << n); ++amask) {
        VertexSet a{amask};
        VertexSet b = g.vertices() - a;
        if (best >= 0 && b.count() >= best)
            continue;
        if (brute_omega(perfdiv::induced_subgraph(g, b)) >= w)
            continue;
        if (!definitional_perfect(perfdiv::induced_subgraph(g, a)))
            continue;
        best = b.count();
    }
    return best;
}

// triangle plus two pendant edges at distinct triangle corners
inline bool brute_has_bull(const Graph& g)
{
    int n = g.size();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                if (!(g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c)))
                    continue;
                VertexSet tri = VertexSet::of({a, b, c});
                int corner[3] = {a, b, c};
                for (int i = 0; i < 3; ++i)
                    for (int j = 0; j < 3; ++j) {
                        if (i == j)
                            continue;
                        for (int p = 0; p < n; ++p) {
                            if (tri.contains(p)
                                || (g.row(p) & tri) != VertexSet::single(corner[i]))
                                continue;
                            for (int q = 0; q < n; ++q) {
                                if (q == p || tri.contains(q) || g.has_edge(p, q))
                                    continue;
                                if ((g.row(q) & tri) == VertexSet::single(corner[j]))
                                    return true;
                            }
                        }
                    }
            }
    return false;
}

// minimum upper-triangle bit string over every labeling
inline std::string brute_canonical_key(const Graph& g)
{
    int n = g.size();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string code;
        code.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                code.push_back(g.has_edge(perm[i], perm[j]) ? '1' : '0');
        if (best.empty() || code < best)
            best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

// every labeled graph on n vertices (not deduplicated)
inline std::vector<Graph> all_labeled_graphs(int n)
{
    int bits = n * (n - 1) / 2;
    std::vector<Graph> out;
    out.reserve(1ull << bits);
    for (std::uint64_t mask = 0; mask < (1ull << bits); ++mask) {
        Graph g(n);
        int k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++k)
                if (mask >> k & 1ull)
                    g.add_edge(i, j);
        out.push_back(std::move(g));
    }
    return out;
}

} // namespace oracles

#endif
