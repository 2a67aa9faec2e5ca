#ifndef PERFDIV_ENUMERATE_HPP
#define PERFDIV_ENUMERATE_HPP

#include "perfdiv/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace perfdiv {

// One representative per isomorphism class on exactly n vertices, by
// vertex augmentation with canonical-form dedup per level. Exhaustive
// unfiltered mode is capped at n = 8; passing a hereditary class filter
// lifts the cap to n = 12 (every augmentation level is pruned to the
// class, which stays complete because the class is closed under vertex
// deletion). Connected mode augments connected parents with nonempty
// neighborhoods.
std::vector<Graph> enumerate_graphs(int n, bool connected_only,
    const std::function<bool(const Graph&)>& hereditary_filter = nullptr);

// All sizes 1..n concatenated, ascending.
std::vector<Graph> enumerate_graphs_upto(int n, bool connected_only,
    const std::function<bool(const Graph&)>& hereditary_filter = nullptr);

// Deterministic G(n, p) stream: one mt19937_64 seeded once, edges drawn
// in lexicographic (i, j) order with 53-bit uniforms.
std::vector<Graph> random_graphs(int n, double edge_probability, std::uint64_t seed, int count);

// Deterministic stream of substitution-built composites over a pool of
// small (P6, bull)-free parts; every output stays (P6, bull)-free and
// has at most max_n vertices.
std::vector<Graph> substitution_composites(int max_n, std::uint64_t seed, int count);

} // namespace perfdiv

#endif
