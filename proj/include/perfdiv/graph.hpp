#ifndef PERFDIV_GRAPH_HPP
#define PERFDIV_GRAPH_HPP

#include "perfdiv/errors.hpp"

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace perfdiv {

// One adjacency row fits in a machine word.
inline constexpr int max_vertices = 64;

// Subset of {0..n-1} of a host graph, as one 64-bit word.
struct VertexSet {
    std::uint64_t bits = 0;

    static VertexSet all(int n)
    {
        return VertexSet{n >= 64 ? ~0ull : ((1ull << n) - 1)};
    }
    static VertexSet of(std::initializer_list<int> vs)
    {
        VertexSet s;
        for (int v : vs)
            s.add(v);
        return s;
    }
    static VertexSet single(int v) { return VertexSet{1ull << v}; }

    bool contains(int v) const { return (bits >> v) & 1ull; }
    VertexSet& add(int v)
    {
        bits |= 1ull << v;
        return *this;
    }
    VertexSet& remove(int v)
    {
        bits &= ~(1ull << v);
        return *this;
    }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    int min() const { return bits == 0 ? -1 : std::countr_zero(bits); }
    bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    bool intersects(VertexSet o) const { return (bits & o.bits) != 0; }

    // rank of v among set members (order-preserving relabeling)
    int index_of(int v) const
    {
        return std::popcount(bits & ((1ull << v) - 1));
    }
    // i-th smallest member
    int nth(int i) const
    {
        std::uint64_t b = bits;
        while (i--)
            b &= b - 1;
        return std::countr_zero(b);
    }

    std::vector<int> to_vector() const
    {
        std::vector<int> out;
        for (std::uint64_t b = bits; b; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    friend VertexSet operator&(VertexSet a, VertexSet b) { return {a.bits & b.bits}; }
    friend VertexSet operator|(VertexSet a, VertexSet b) { return {a.bits | b.bits}; }
    friend VertexSet operator-(VertexSet a, VertexSet b) { return {a.bits & ~b.bits}; }
    friend bool operator==(VertexSet a, VertexSet b) { return a.bits == b.bits; }
    auto operator<=>(const VertexSet&) const = default;

    struct iterator {
        std::uint64_t rest;
        int operator*() const { return std::countr_zero(rest); }
        iterator& operator++()
        {
            rest &= rest - 1;
            return *this;
        }
        bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    iterator begin() const { return {bits}; }
    iterator end() const { return {0}; }
};

// Immutable simple graph on vertices 0..n-1. Adjacency is stored as one
// bitset row per vertex; symmetry and irreflexivity are maintained by
// construction. Library operations never mutate their arguments; they
// return fresh graphs.
class Graph {
public:
    Graph() : n_(0) {}
    explicit Graph(int n) : n_(n)
    {
        if (n < 0)
            throw std::invalid_argument("negative vertex count");
        if (n > max_vertices)
            throw capacity_error("graph exceeds " + std::to_string(max_vertices) + " vertices");
        rows_.assign(static_cast<std::size_t>(n), 0);
    }
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges)
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    int size() const { return n_; }
    bool has_edge(int u, int v) const
    {
        check(u);
        check(v);
        return (rows_[u] >> v) & 1ull;
    }
    void add_edge(int u, int v)
    {
        check(u);
        check(v);
        if (u == v)
            throw std::invalid_argument("loop edge");
        rows_[u] |= 1ull << v;
        rows_[v] |= 1ull << u;
    }
    VertexSet row(int v) const
    {
        check(v);
        return VertexSet{rows_[v]};
    }
    VertexSet vertices() const { return VertexSet::all(n_); }
    int degree(int v) const { return row(v).count(); }
    long edge_count() const
    {
        long m = 0;
        for (int v = 0; v < n_; ++v)
            m += std::popcount(rows_[v]);
        return m / 2;
    }

    bool operator==(const Graph&) const = default;

private:
    void check(int v) const
    {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
    }
    int n_;
    std::vector<std::uint64_t> rows_;
};

// N(v) and M(v): with {v} they partition V(G).
VertexSet neighborhood(const Graph& g, int v);
VertexSet non_neighborhood(const Graph& g, int v);

// N(X) and M(X) for vertex sets.
VertexSet neighborhood_of(const Graph& g, VertexSet x);
VertexSet non_neighborhood_of(const Graph& g, VertexSet x);

// N_A(B) = N(B) ∩ A and M_A(B) = A \ (N_A(B) ∪ B).
VertexSet neighborhood_in(const Graph& g, VertexSet a, VertexSet b);
VertexSet non_neighborhood_in(const Graph& g, VertexSet a, VertexSet b);

bool is_complete_to(const Graph& g, int b, VertexSet a);
bool is_anticomplete_to(const Graph& g, int b, VertexSet a);
bool is_complete_sets(const Graph& g, VertexSet a, VertexSet b);
bool is_anticomplete_sets(const Graph& g, VertexSet a, VertexSet b);

// Subgraph induced by s, relabeled order-preservingly to 0..|s|-1.
Graph induced_subgraph(const Graph& g, VertexSet s);

Graph complement(const Graph& g);

// Disjoint union plus all cross edges.
Graph complete_join(const Graph& g, const Graph& h);

// Replace vertex v of g by a copy of h, joining h completely to N(v).
// Result labeling: vertices of g-v keep their relative order at 0..n-2,
// the copy of h occupies the last |h| indices.
Graph substitute(const Graph& g, int v, const Graph& h);

bool is_connected(const Graph& g);
bool is_connected_in(const Graph& g, VertexSet s);
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components_in(const Graph& g, VertexSet s);

std::string to_dot(const Graph& g);

} // namespace perfdiv

#endif
