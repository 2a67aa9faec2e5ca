#ifndef PERFDIV_DIVIDE_COLOR_HPP
#define PERFDIV_DIVIDE_COLOR_HPP

#include "perfdiv/graph.hpp"

#include <optional>
#include <vector>

namespace perfdiv {

struct CliqueResult {
    int omega;
    VertexSet witness;
};

// Exact maximum clique by branch and bound over bitset candidate sets.
CliqueResult clique_number(const Graph& g);

// Proper coloring with colors 0..palette-1; palette is the number of
// distinct colors used.
struct ColoringCertificate {
    std::vector<int> colors;
    int palette = 0;
};

// Exact chromatic number: DSATUR greedy upper bound, clique lower bound,
// then per-k backtracking seeded with a maximum clique. The certificate
// realizes the optimum.
ColoringCertificate chromatic_number(const Graph& g);

struct PartitionCertificate {
    enum class Kind { PD, TwoPerfect };
    Kind kind;
    VertexSet a;
    VertexSet b;
};

// Partition (A, B) with G[A] perfect and omega(G[B]) < omega(G), if one
// exists; B of minimum size. Search: iterative deepening on |B|,
// branching on odd-hole/odd-antihole witnesses that A must break,
// pruning branches whose B already swallows a maximum clique.
std::optional<PartitionCertificate> pd_partition(const Graph& g);

struct PdResult {
    bool divisible;
    std::optional<Graph> counterexample; // first connected induced subgraph with no partition
};

// Every connected induced subgraph admits a pd partition. Disconnected
// subgraphs are covered by combining per-component certificates, so only
// connected subsets are scanned; results are memoized per invocation on
// canonical forms. The guard bounds the subset scan (2^n subgraphs).
PdResult is_perfectly_divisible(const Graph& g, int size_guard = 12);

// Recursive coloring along pd partitions: color B recursively, then the
// perfect side A optimally with fresh colors. Throws
// not_perfectly_divisible when some level has no partition.
ColoringCertificate pd_coloring(const Graph& g);

// Partition into two perfect parts for locally perfect (P6, bull)-free
// graphs. Triangle-free levels split an exact <=4-coloring; otherwise
// either (N(v), M(v)+v) works for a maximum-clique vertex v, or a 5-hole
// in M(v) yields a homogeneous set that is contracted before recursing.
PartitionCertificate two_perfect_partition(const Graph& g);

// Coloring for basic (P6, bull)-free graphs within omega^2 colors:
// locally perfect levels use two_perfect_partition, otherwise a vertex
// with perfect M(v) splits the graph.
ColoringCertificate color_basic_p6bull(const Graph& g);

// Coloring for (P6, bull)-free graphs within omega^7 colors: decompose
// modularly, color expanded quotients (child palettes as clique weights)
// and compose through the tree.
ColoringCertificate color_p6bull(const Graph& g);

// Certificate checkers; throw std::logic_error on violation.
void validate_coloring(const Graph& g, const ColoringCertificate& c);
void validate_partition(const Graph& g, const PartitionCertificate& p);

} // namespace perfdiv

#endif
