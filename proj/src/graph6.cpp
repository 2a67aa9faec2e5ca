#include "perfdiv/graph6.hpp"

namespace perfdiv {

Graph parse_graph6(std::string_view text)
{
    if (text.empty())
        throw graph6_error("empty graph6 string", 0);
    unsigned char head = static_cast<unsigned char>(text[0]);
    if (head == 126)
        throw graph6_error("unsupported size header (extended form)", 0);
    if (head < 63 || head > 125)
        throw graph6_error("invalid header byte", 0);
    int n = head - 63;
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() < 1 + nbytes)
        throw graph6_error("truncated graph6 string", text.size());
    if (text.size() > 1 + nbytes)
        throw graph6_error("trailing bytes after graph6 data", 1 + nbytes);

    Graph g(n);
    std::size_t k = 0; // bit index in the upper-triangle stream
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            std::size_t byte = 1 + k / 6;
            unsigned char c = static_cast<unsigned char>(text[byte]);
            if (c < 63 || c > 126)
                throw graph6_error("invalid data byte", byte);
            int bit = (c - 63) >> (5 - k % 6) & 1;
            if (bit)
                g.add_edge(i, j);
        }
    }
    // padding bits of the last byte must be zero
    if (nbits % 6 != 0) {
        unsigned char c = static_cast<unsigned char>(text[nbytes]) - 63;
        if (c & ((1u << (6 - nbits % 6)) - 1))
            throw graph6_error("nonzero padding bits", nbytes);
    }
    return g;
}

std::string emit_graph6(const Graph& g)
{
    int n = g.size();
    if (n > 62)
        throw capacity_error("graph6 short form supports at most 62 vertices");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nb = 0;
            }
        }
    }
    if (nb > 0)
        out.push_back(static_cast<char>((acc << (6 - nb)) + 63));
    return out;
}

} // namespace perfdiv
