#ifndef PERFDIV_CATALOG_HPP
#define PERFDIV_CATALOG_HPP

#include "perfdiv/graph.hpp"

#include <string>

namespace perfdiv {

struct NamedGraph {
    std::string name;       // normalized constructor expression
    Graph graph;
    std::string provenance; // construction parameters, human readable
};

Graph path_graph(int k);     // k >= 1
Graph cycle_graph(int k);    // k >= 3
Graph complete_graph(int k); // k >= 0
Graph empty_graph(int k);    // k >= 0

// Triangle with two disjoint pendant edges: triangle 0,1,2; 3~0, 4~1.
Graph bull_graph();

// Claw with one edge subdivided once: center 0, leaves 1,2,3; 4 on the
// subdivided edge between 0 and 3.
Graph fork_graph();

// P5 = 0-1-2-3-4 plus vertex 5 adjacent exactly to the middle vertex 2.
Graph graph_e();

// 2n+1 vertices: 0..n-1 copy of g, n..2n-1 shadows (shadow n+i adjacent
// to N_g(i)), vertex 2n adjacent to all shadows.
Graph mycielski(const Graph& g);

// The 11-vertex triangle-free graph with chromatic number 4, built by
// two Mycielski steps from K2.
Graph groetzsch_graph();

// Odd hole 0..k-1 in cycle order, plus y = k adjacent to the nonempty
// stable set s on the hole, plus x = k+1 adjacent to y only. k odd >= 5.
Graph odd_torch(int k, VertexSet s);

// Parses a constructor expression: path(5), cycle(7), complete(4),
// empty(3), bull, fork, E, groetzsch (alias F), odd_torch(5,{0}),
// mycielski(<expr>), complement(<expr>), join(<expr>,<expr>).
// Aliases P2..P9, C3..C9, K1..K9 are accepted.
NamedGraph catalog(const std::string& name);

} // namespace perfdiv

#endif
