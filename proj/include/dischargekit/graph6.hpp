#ifndef DISCHARGEKIT_GRAPH6_HPP
#define DISCHARGEKIT_GRAPH6_HPP

// graph6 encoding (McKay): N(n) followed by the upper triangle of the
// adjacency matrix, column-major, six bits per printable byte (offset 63).

#include "error.hpp"
#include "graph.hpp"

#include <cstdint>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

namespace dischargekit::graph6 {

namespace detail {

constexpr int bias = 63;

inline int sextet(char c)
{
    int value = static_cast<unsigned char>(c) - bias;
    if (value < 0 || value > 63)
        throw error(errc::parse_error, std::string("graph6: byte out of range '") + c + "'");
    return value;
}

} // namespace detail

inline Graph decode(std::string_view text)
{
    constexpr std::string_view header = ">>graph6<<";
    if (text.starts_with(header))
        text.remove_prefix(header.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
        text.remove_suffix(1);
    if (text.empty())
        throw error(errc::parse_error, "graph6: empty string");

    std::size_t pos = 0;
    std::int64_t n = 0;
    auto take = [&](int count) {
        std::int64_t value = 0;
        for (int i = 0; i < count; ++i) {
            if (pos >= text.size())
                throw error(errc::parse_error, "graph6: truncated size field");
            value = (value << 6) | detail::sextet(text[pos++]);
        }
        return value;
    };
    if (text[0] != '~') {
        n = take(1);
    } else if (text.size() > 1 && text[1] != '~') {
        pos = 1;
        n = take(3);
    } else {
        pos = 2;
        n = take(6);
    }
    if (n > (1 << 20))
        throw error(errc::size_limit_exceeded, "graph6: vertex count " + std::to_string(n));

    const std::int64_t bits = n * (n - 1) / 2;
    const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() - pos != bytes)
        throw error(errc::parse_error, "graph6: expected " + std::to_string(bytes) + " edge bytes, found " +
                                           std::to_string(text.size() - pos));

    std::vector<std::pair<Vertex, Vertex>> edges;
    std::int64_t k = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++k) {
            int byte = detail::sextet(text[pos + static_cast<std::size_t>(k / 6)]);
            if (byte & (1 << (5 - k % 6)))
                edges.emplace_back(i, j);
        }
    return Graph(static_cast<int>(n), edges);
}

inline std::string encode(const Graph& g)
{
    std::string out;
    const std::int64_t n = g.vertex_count();
    auto put = [&](std::int64_t value, int count) {
        for (int i = count - 1; i >= 0; --i)
            out.push_back(static_cast<char>(((value >> (6 * i)) & 63) + detail::bias));
    };
    if (n <= 62) {
        put(n, 1);
    } else if (n <= 258047) {
        out.push_back('~');
        put(n, 3);
    } else {
        out += "~~";
        put(n, 6);
    }
    int acc = 0, filled = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + detail::bias));
                acc = filled = 0;
            }
        }
    if (filled > 0)
        out.push_back(static_cast<char>((acc << (6 - filled)) + detail::bias));
    return out;
}

/// One graph per non-empty line.
inline std::vector<Graph> read_all(std::istream& in)
{
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (line.starts_with(">>graph6<<"))
            line.erase(0, 10);
        if (line.find_first_not_of(" \t\r\n") == std::string::npos)
            continue;
        graphs.push_back(decode(line));
    }
    return graphs;
}

} // namespace dischargekit::graph6

#endif // DISCHARGEKIT_GRAPH6_HPP
