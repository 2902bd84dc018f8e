#ifndef DISCHARGEKIT_GRAPH_HPP
#define DISCHARGEKIT_GRAPH_HPP

#include "error.hpp"

#include <algorithm>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dischargekit {

using Vertex = int;

/// Canonical undirected edge, always stored as (min, max).
struct Edge {
    Vertex a = 0;
    Vertex b = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex u, Vertex v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Simple undirected graph on vertices 0..n-1. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Validates and builds. Edges are stored sorted in canonical order.
    Graph(int vertex_count, std::span<const std::pair<Vertex, Vertex>> edge_list)
        : n_(vertex_count)
        , adjacency_(static_cast<std::size_t>(std::max(vertex_count, 0)))
    {
        if (vertex_count < 0)
            throw error(errc::dangling_vertex_index, "negative vertex count");
        std::set<Edge> seen;
        for (auto [u, v] : edge_list) {
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw error(errc::dangling_vertex_index,
                            "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside 0.." +
                                std::to_string(n_ - 1));
            if (u == v)
                throw error(errc::loop_edge, "loop at vertex " + std::to_string(u));
            if (!seen.insert(make_edge(u, v)).second)
                throw error(errc::duplicate_edge,
                            "edge (" + std::to_string(u) + "," + std::to_string(v) + ") repeated");
        }
        edges_.assign(seen.begin(), seen.end());
        for (auto e : edges_) {
            adjacency_[static_cast<std::size_t>(e.a)].push_back(e.b);
            adjacency_[static_cast<std::size_t>(e.b)].push_back(e.a);
        }
        for (auto& nbrs : adjacency_)
            std::sort(nbrs.begin(), nbrs.end());
    }

    Graph(int vertex_count, std::initializer_list<std::pair<Vertex, Vertex>> edge_list)
        : Graph(vertex_count, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()))
    {
    }

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(static_cast<std::size_t>(v)); }
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    bool adjacent(Vertex u, Vertex v) const
    {
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            return false;
        const auto& nb = adjacency_[static_cast<std::size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    /// Position of an edge in edges(), or -1.
    int edge_index(Vertex u, Vertex v) const
    {
        auto e = make_edge(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
        if (it == edges_.end() || *it != e)
            return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool connected() const
    {
        if (n_ <= 1)
            return true;
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<Vertex> stack{0};
        seen[0] = 1;
        int reached = 1;
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : neighbors(v))
                if (!seen[static_cast<std::size_t>(w)]) {
                    seen[static_cast<std::size_t>(w)] = 1;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == n_;
    }

    std::vector<std::pair<Vertex, Vertex>> edge_list() const
    {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(edges_.size());
        for (auto e : edges_)
            out.emplace_back(e.a, e.b);
        return out;
    }

    friend bool operator==(const Graph& l, const Graph& r) { return l.n_ == r.n_ && l.edges_ == r.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Builds a graph whose vertex count is one more than the largest endpoint
/// (or `min_vertices`, whichever is larger).
inline Graph build_graph(std::span<const std::pair<Vertex, Vertex>> edge_list, int min_vertices = 0)
{
    int n = min_vertices;
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0)
            throw error(errc::dangling_vertex_index, "negative endpoint");
        n = std::max({n, u + 1, v + 1});
    }
    return Graph(n, edge_list);
}

inline Graph build_graph(std::initializer_list<std::pair<Vertex, Vertex>> edge_list, int min_vertices = 0)
{
    return build_graph(std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()), min_vertices);
}

/// Disjoint union; the second graph's vertices are shifted by the first's count.
inline Graph disjoint_union(const Graph& g, const Graph& h)
{
    auto edges = g.edge_list();
    for (auto [u, v] : h.edge_list())
        edges.emplace_back(u + g.vertex_count(), v + g.vertex_count());
    return Graph(g.vertex_count() + h.vertex_count(), edges);
}

/// Relabels vertex v as perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (auto e : g.edges())
        edges.emplace_back(perm[static_cast<std::size_t>(e.a)], perm[static_cast<std::size_t>(e.b)]);
    return Graph(g.vertex_count(), edges);
}

namespace graphs {

inline Graph cycle(int n)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, edges);
}

inline Graph complete(int n)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, edges);
}

inline Graph path(int n)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

inline Graph star(int leaves)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 1; i <= leaves; ++i)
        edges.emplace_back(0, i);
    return Graph(leaves + 1, edges);
}

/// Rim 0..n-1, hub n.
inline Graph wheel(int n)
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(i, (i + 1) % n);
        edges.emplace_back(i, n);
    }
    return Graph(n + 1, edges);
}

inline Graph petersen()
{
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, edges);
}

} // namespace graphs

} // namespace dischargekit

#endif // DISCHARGEKIT_GRAPH_HPP
