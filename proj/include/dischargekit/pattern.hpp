#ifndef DISCHARGEKIT_PATTERN_HPP
#define DISCHARGEKIT_PATTERN_HPP

// Non-induced matching of small fixed patterns with host-degree constraints.
// Only meant for the handful of five- and six-vertex configurations used here.

#include "graph.hpp"

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <vector>

namespace dischargekit {

struct DegreeConstraint {
    enum class Kind { any, exactly, at_most } kind = Kind::any;
    int value = 0;

    bool admits(int degree) const
    {
        switch (kind) {
        case Kind::any: return true;
        case Kind::exactly: return degree == value;
        case Kind::at_most: return degree <= value;
        }
        return false;
    }

    static DegreeConstraint exactly(int d) { return {Kind::exactly, d}; }
    static DegreeConstraint at_most(int d) { return {Kind::at_most, d}; }
};

struct Pattern {
    std::string name;
    std::vector<std::string> labels;
    Graph graph;
    std::vector<DegreeConstraint> degrees; // empty = unconstrained
};

/// Calls `visit(map)` for every injective map of pattern vertices into the
/// host that carries pattern edges onto host edges and satisfies the degree
/// constraints. Maps arrive in lexicographic order. Return false to stop.
inline void for_each_embedding(const Pattern& pattern, const Graph& host,
                               const std::function<bool(const std::vector<Vertex>&)>& visit)
{
    const int k = pattern.graph.vertex_count();
    std::vector<Vertex> map(static_cast<std::size_t>(k), -1);
    std::vector<char> used(static_cast<std::size_t>(host.vertex_count()), 0);
    bool stop = false;

    std::function<void(int)> extend = [&](int i) {
        if (stop)
            return;
        if (i == k) {
            stop = !visit(map);
            return;
        }
        for (Vertex h = 0; h < host.vertex_count() && !stop; ++h) {
            if (used[static_cast<std::size_t>(h)])
                continue;
            if (!pattern.degrees.empty() && !pattern.degrees[static_cast<std::size_t>(i)].admits(host.degree(h)))
                continue;
            bool ok = true;
            for (auto p : pattern.graph.neighbors(i))
                if (p < i && !host.adjacent(h, map[static_cast<std::size_t>(p)])) {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            map[static_cast<std::size_t>(i)] = h;
            used[static_cast<std::size_t>(h)] = 1;
            extend(i + 1);
            used[static_cast<std::size_t>(h)] = 0;
        }
        map[static_cast<std::size_t>(i)] = -1;
    };
    extend(0);
}

/// Host edges covered by a map, in canonical order.
inline std::vector<Edge> image_edges(const Pattern& pattern, const std::vector<Vertex>& map)
{
    std::set<Edge> out;
    for (auto e : pattern.graph.edges())
        out.insert(make_edge(map[static_cast<std::size_t>(e.a)], map[static_cast<std::size_t>(e.b)]));
    return {out.begin(), out.end()};
}

/// Distinct subgraph images (two maps that differ by a pattern automorphism
/// count once); the lexicographically least map represents each image.
inline std::vector<std::vector<Vertex>> find_subgraphs(const Pattern& pattern, const Graph& host)
{
    std::set<std::vector<Edge>> seen;
    std::vector<std::vector<Vertex>> out;
    for_each_embedding(pattern, host, [&](const std::vector<Vertex>& map) {
        if (seen.insert(image_edges(pattern, map)).second)
            out.push_back(map);
        return true;
    });
    return out;
}

} // namespace dischargekit

#endif // DISCHARGEKIT_PATTERN_HPP
