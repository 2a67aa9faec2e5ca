#ifndef PERFDIV_CANONICAL_HPP
#define PERFDIV_CANONICAL_HPP

#include "perfdiv/graph.hpp"

#include <string>
#include <utility>
#include <vector>

namespace perfdiv {

// Canonical byte string: equal iff graphs are isomorphic. Exact; built by
// equitable refinement plus individualization backtracking, pruned with
// automorphisms discovered during the search. Exponential worst case,
// fast at the orders this library targets.
std::string canonical_form(const Graph& g);

// The canonically relabeled graph together with the labeling used:
// perm[i] is the original vertex placed at position i.
std::pair<Graph, std::vector<int>> canonical_relabel(const Graph& g);

} // namespace perfdiv

#endif
