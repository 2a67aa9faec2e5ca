#include "perfdiv/canonical.hpp"

#include "perfdiv/graph6.hpp"

#include <algorithm>
#include <array>

namespace perfdiv {

namespace {

    using Cells = std::vector<VertexSet>;
    using Code = std::vector<std::uint64_t>;

    // Upper triangle column-major under the ordering perm, packed so that
    // earlier bits are more significant; vectors then compare
    // lexicographically.
    Code encode(const Graph& g, const std::vector<int>& perm)
    {
        int n = g.size();
        Code code((static_cast<std::size_t>(n) * (n - 1) / 2 + 63) / 64, 0);
        std::size_t k = 0;
        for (int j = 1; j < n; ++j) {
            std::uint64_t rowj = g.row(perm[j]).bits;
            for (int i = 0; i < j; ++i, ++k)
                if (rowj >> perm[i] & 1ull)
                    code[k / 64] |= 1ull << (63 - k % 64);
        }
        return code;
    }

    // Split cells by neighbor counts against every cell until stable.
    // Fragments are ordered by ascending count, which keeps the refinement
    // trace isomorphism-invariant.
    void refine(const Graph& g, Cells& cells)
    {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
                VertexSet splitter = cells[s];
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (cells[c].count() <= 1)
                        continue;
                    std::array<VertexSet, max_vertices + 1> byCount{};
                    int maxCount = 0;
                    bool split = false;
                    int first = -1;
                    for (int v : cells[c]) {
                        int d = (g.row(v) & splitter).count();
                        byCount[d].add(v);
                        maxCount = std::max(maxCount, d);
                        if (first < 0)
                            first = d;
                        else if (d != first)
                            split = true;
                    }
                    if (!split)
                        continue;
                    Cells next;
                    next.reserve(cells.size() + 2);
                    for (std::size_t i = 0; i < c; ++i)
                        next.push_back(cells[i]);
                    for (int d = 0; d <= maxCount; ++d)
                        if (!byCount[d].empty())
                            next.push_back(byCount[d]);
                    for (std::size_t i = c + 1; i < cells.size(); ++i)
                        next.push_back(cells[i]);
                    cells = std::move(next);
                    changed = true;
                    break;
                }
            }
        }
    }

    struct searcher {
        const Graph& g;
        int n;
        Code best;
        std::vector<int> best_perm;
        bool have_best = false;
        std::vector<std::vector<int>> automorphisms;

        explicit searcher(const Graph& g_) : g(g_), n(g_.size()) {}

        void leaf(const Cells& cells)
        {
            std::vector<int> perm;
            perm.reserve(n);
            for (const VertexSet& c : cells)
                perm.push_back(c.min());
            Code code = encode(g, perm);
            if (!have_best || code < best) {
                best = std::move(code);
                best_perm = std::move(perm);
                have_best = true;
            } else if (code == best) {
                // two labelings with equal codes expose an automorphism
                std::vector<int> sigma(n);
                for (int i = 0; i < n; ++i)
                    sigma[best_perm[i]] = perm[i];
                automorphisms.push_back(std::move(sigma));
            }
        }

        // v is skippable when an automorphism fixing the base pointwise
        // maps an already-branched vertex to it; orbits of the generated
        // group come from union-find closure over the recorded generators
        bool prunable(int v, const std::vector<int>& base, const std::vector<int>& branched)
        {
            if (branched.empty() || automorphisms.empty())
                return false;
            uf.resize(n);
            for (int i = 0; i < n; ++i)
                uf[i] = i;
            auto find = [this](int x) {
                while (uf[x] != x)
                    x = uf[x] = uf[uf[x]];
                return x;
            };
            for (const auto& sigma : automorphisms) {
                bool fixes = true;
                for (int b : base)
                    if (sigma[b] != b) {
                        fixes = false;
                        break;
                    }
                if (!fixes)
                    continue;
                for (int i = 0; i < n; ++i) {
                    int a = find(i), b = find(sigma[i]);
                    if (a != b)
                        uf[a] = b;
                }
            }
            int rv = find(v);
            for (int u : branched)
                if (find(u) == rv)
                    return true;
            return false;
        }
        std::vector<int> uf;

        void search(Cells cells, std::vector<int>& base)
        {
            std::size_t target = cells.size();
            for (std::size_t i = 0; i < cells.size(); ++i)
                if (cells[i].count() > 1) {
                    target = i;
                    break;
                }
            if (target == cells.size()) {
                leaf(cells);
                return;
            }
            std::vector<int> branched;
            for (int v : cells[target]) {
                if (prunable(v, base, branched))
                    continue;
                Cells child;
                child.reserve(cells.size() + 1);
                for (std::size_t i = 0; i < target; ++i)
                    child.push_back(cells[i]);
                child.push_back(VertexSet::single(v));
                child.push_back(cells[target] - VertexSet::single(v));
                for (std::size_t i = target + 1; i < cells.size(); ++i)
                    child.push_back(cells[i]);
                refine(g, child);
                base.push_back(v);
                search(std::move(child), base);
                base.pop_back();
                branched.push_back(v);
            }
        }
    };

} // namespace

std::pair<Graph, std::vector<int>> canonical_relabel(const Graph& g)
{
    int n = g.size();
    if (n == 0)
        return {g, {}};
    Cells cells{g.vertices()};
    refine(g, cells);
    searcher s(g);
    std::vector<int> base;
    s.search(std::move(cells), base);
    Graph canon(n);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (g.has_edge(s.best_perm[i], s.best_perm[j]))
                canon.add_edge(i, j);
    return {canon, s.best_perm};
}

std::string canonical_form(const Graph& g)
{
    auto [canon, perm] = canonical_relabel(g);
    if (g.size() <= 62)
        return emit_graph6(canon);
    // beyond graph6 range: raw packed upper triangle
    std::string out;
    out.push_back(static_cast<char>(g.size()));
    int acc = 0, nb = 0;
    for (int j = 1; j < g.size(); ++j)
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (canon.has_edge(i, j) ? 1 : 0);
            if (++nb == 8) {
                out.push_back(static_cast<char>(acc));
                acc = nb = 0;
            }
        }
    if (nb)
        out.push_back(static_cast<char>(acc << (8 - nb)));
    return out;
}

} // namespace perfdiv
