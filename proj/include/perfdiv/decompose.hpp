#ifndef PERFDIV_DECOMPOSE_HPP
#define PERFDIV_DECOMPOSE_HPP

#include "perfdiv/detect.hpp"
#include "perfdiv/graph.hpp"

#include <optional>
#include <vector>

namespace perfdiv {

// S with 1 < |S| < n such that every outside vertex is complete or
// anticomplete to S.
bool is_homogeneous_set(const Graph& g, VertexSet s);

// Scans vertex pairs in lexicographic order and grows each to the
// minimal module containing it (add any outside vertex distinguishing
// two inside vertices, to a fixpoint); the first closure smaller than
// V(G) is returned.
std::optional<VertexSet> find_homogeneous_set(const Graph& g);

// Substitution decomposition. Each internal node carries a quotient with
// one child per quotient vertex; substituting the children back into the
// quotient, bottom-up, reconstructs the decomposed graph. Prime quotients
// have no homogeneous set; series/parallel quotients are complete/edgeless.
struct ModularTree {
    enum class Kind { leaf, prime, series, parallel };
    struct Node {
        Kind kind;
        Graph quotient;            // single vertex for leaves
        std::vector<int> children; // node ids, one per quotient vertex; empty for leaves
        VertexSet block;           // original vertices covered
        int vertex = -1;           // original vertex, leaves only
    };
    std::vector<Node> nodes;
    int root = -1;
};

// Greedy contraction: repeatedly find a homogeneous set of the current
// quotient and merge it into one block, then recurse into multi-vertex
// blocks. Exact at this library's scale.
ModularTree modular_decompose(const Graph& g);

// Rebuilds the decomposed graph by substituting children back into the
// quotients, bottom-up. The result is isomorphic to the decomposed graph.
Graph expand(const ModularTree& t);

// Homogeneous set constructions for connected locally perfect bull-free
// hosts where some maximum-clique vertex v has a 5-hole (P6-free case)
// or 7-hole (P8- and C5-free case) in G[M(v)]. The hole witness must
// list the cycle in order. Preconditions are checked (std::domain_error);
// classification steps that fail mid-construction raise
// structure_violation naming the failed claim.
VertexSet homogeneous_set_from_5hole(const Graph& g, int v, const Witness& hole);
VertexSet homogeneous_set_from_7hole(const Graph& g, int v, const Witness& hole);

} // namespace perfdiv

#endif
