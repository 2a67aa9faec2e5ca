#ifndef PERFDIV_DETECT_HPP
#define PERFDIV_DETECT_HPP

#include "perfdiv/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace perfdiv {

// Certifies that a host graph contains a named pattern: vertices[i] is
// the host vertex playing the role of pattern vertex i (for holes and
// torches, cyclic/defining order).
struct Witness {
    std::string kind;
    std::vector<int> vertices;

    VertexSet vertex_set() const
    {
        VertexSet s;
        for (int v : vertices)
            s.add(v);
        return s;
    }
};

// Induced subgraph isomorphism by backtracking over partial maps with
// degree and bitset adjacency-consistency pruning. Pattern vertices are
// mapped in index order, host candidates tried ascending, so the first
// hit is the lexicographically least witness in search order.
std::optional<Witness> find_induced(const Graph& g, const Graph& pattern,
    const std::string& kind = "pattern");

bool is_Pk_free(const Graph& g, int k);
bool is_P5_free(const Graph& g);
bool is_P6_free(const Graph& g);
bool is_P7_free(const Graph& g);
bool is_P8_free(const Graph& g);
bool is_C3_free(const Graph& g);
bool is_C5_free(const Graph& g);
bool is_bull_free(const Graph& g);
bool is_fork_free(const Graph& g);
bool is_E_free(const Graph& g);
bool is_F_free(const Graph& g);

// First induced odd cycle of length >= 5 in DFS order, in cyclic order.
std::optional<Witness> find_odd_hole(const Graph& g);

// Every induced odd cycle of length >= min_len, sorted by vertex set
// then by sequence; each hole listed once.
std::vector<Witness> all_odd_holes(const Graph& g, int min_len = 5);

// Odd hole of length >= 7 in the complement, mapped back to g.
std::optional<Witness> find_odd_antihole_ge7(const Graph& g);

// No odd hole and no odd antihole, in g or its complement.
bool is_perfect(const Graph& g);

// G[N(v)] perfect for every v.
bool is_locally_perfect(const Graph& g);

// An induced odd torch: an induced odd hole C plus y with a nonempty
// stable neighborhood on C plus x adjacent to y and anticomplete to C.
// Witness order: hole vertices in cyclic order, then y, then x.
std::optional<Witness> find_odd_torch(const Graph& g);
bool is_odd_torch_free(const Graph& g);

// Bull-free g is basic when neither g nor its complement has an induced
// odd hole together with a vertex complete to it and a vertex
// anticomplete to it. Throws std::domain_error on non-bull-free input.
bool is_basic_bullfree(const Graph& g);

} // namespace perfdiv

#endif
