#ifndef PERFDIV_ERRORS_HPP
#define PERFDIV_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace perfdiv {

// Thrown when a construction would exceed the configured vertex limit
// or a size guard.
struct capacity_error : std::length_error {
    using std::length_error::length_error;
};

// Malformed graph6 input. `offset` is the byte position of the first
// offending byte.
struct graph6_error : std::runtime_error {
    graph6_error(const std::string& what, std::size_t offset_)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset_) + ")")
        , offset(offset_)
    {
    }
    std::size_t offset;
};

// A proof-following construction met an input where one of its case
// distinctions does not hold. `claim` names the failed step, `vertices`
// are the offending vertices.
struct structure_violation : std::runtime_error {
    structure_violation(const std::string& claim_, std::vector<int> vertices_)
        : std::runtime_error(format(claim_, vertices_))
        , claim(claim_)
        , vertices(std::move(vertices_))
    {
    }
    std::string claim;
    std::vector<int> vertices;

private:
    static std::string format(const std::string& c, const std::vector<int>& vs)
    {
        std::string s = "structure violation: " + c;
        if (!vs.empty()) {
            s += " [vertices:";
            for (int v : vs)
                s += " " + std::to_string(v);
            s += "]";
        }
        return s;
    }
};

// pd_coloring (or another divisibility pipeline) was handed a graph with
// an induced subgraph admitting no valid partition. Carries the offending
// subgraph as a graph6 string.
struct not_perfectly_divisible : std::runtime_error {
    explicit not_perfectly_divisible(std::string subgraph_g6_)
        : std::runtime_error("not perfectly divisible; offending subgraph " + subgraph_g6_)
        , subgraph_g6(std::move(subgraph_g6_))
    {
    }
    std::string subgraph_g6;
};

} // namespace perfdiv

#endif
