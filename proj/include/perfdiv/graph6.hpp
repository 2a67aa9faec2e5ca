#ifndef PERFDIV_GRAPH6_HPP
#define PERFDIV_GRAPH6_HPP

#include "perfdiv/graph.hpp"

#include <string>
#include <string_view>

namespace perfdiv {

// graph6 text format, short form only (n <= 62): header byte n+63, then
// the upper triangle column-major -- bit order (0,1),(0,2),(1,2),(0,3),...
// -- packed 6 bits per byte, each byte offset by 63, final byte
// zero-padded. Rejects anything else with a graph6_error carrying the
// byte offset.
Graph parse_graph6(std::string_view text);
std::string emit_graph6(const Graph& g);

} // namespace perfdiv

#endif
