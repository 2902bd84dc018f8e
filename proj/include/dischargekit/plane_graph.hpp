#ifndef DISCHARGEKIT_PLANE_GRAPH_HPP
#define DISCHARGEKIT_PLANE_GRAPH_HPP

#include "error.hpp"
#include "graph.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace dischargekit {

/// Closed boundary walk of a face. `boundary[i] -> boundary[i+1]` is the
/// dart traversed with the face on its left (for a counterclockwise rotation).
struct Face {
    std::vector<Vertex> boundary;

    int degree() const noexcept { return static_cast<int>(boundary.size()); }

    bool contains(Vertex v) const { return std::find(boundary.begin(), boundary.end(), v) != boundary.end(); }
};

/// A graph together with a rotation system: for every vertex the cyclic
/// (counterclockwise) order of its neighbours.
class PlaneGraph {
public:
    PlaneGraph() = default;

    /// `rotation[v]` lists v's neighbours in cyclic order. Adjacency must be
    /// symmetric and each list free of repeats and of v itself.
    explicit PlaneGraph(std::vector<std::vector<Vertex>> rotation)
        : rotation_(std::move(rotation))
    {
        const int n = static_cast<int>(rotation_.size());
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (int v = 0; v < n; ++v) {
            const auto& rot = rotation_[static_cast<std::size_t>(v)];
            auto sorted = rot;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                throw error(errc::invalid_embedding, "vertex " + std::to_string(v) + " lists a neighbour twice");
            for (auto w : rot) {
                if (w < 0 || w >= n)
                    throw error(errc::dangling_vertex_index,
                                "rotation of " + std::to_string(v) + " names vertex " + std::to_string(w));
                if (w == v)
                    throw error(errc::loop_edge, "loop at vertex " + std::to_string(v));
                const auto& back = rotation_[static_cast<std::size_t>(w)];
                if (std::find(back.begin(), back.end(), v) == back.end())
                    throw error(errc::invalid_embedding, "asymmetric adjacency " + std::to_string(v) + "-" +
                                                             std::to_string(w));
                if (v < w)
                    edges.emplace_back(v, w);
            }
        }
        graph_ = Graph(n, edges);
    }

    const Graph& graph() const noexcept { return graph_; }
    const std::vector<std::vector<Vertex>>& rotation() const noexcept { return rotation_; }
    const std::vector<Vertex>& rotation(Vertex v) const { return rotation_.at(static_cast<std::size_t>(v)); }

    /// Neighbour following `from` in v's rotation.
    Vertex successor(Vertex v, Vertex from) const
    {
        const auto& rot = rotation(v);
        auto it = std::find(rot.begin(), rot.end(), from);
        if (it == rot.end())
            throw error(errc::invalid_embedding, "not adjacent");
        ++it;
        return it == rot.end() ? rot.front() : *it;
    }

    friend bool operator==(const PlaneGraph& l, const PlaneGraph& r) { return l.rotation_ == r.rotation_; }

private:
    std::vector<std::vector<Vertex>> rotation_;
    Graph graph_;
};

/// Traces every face of a connected embedding. Arriving at v along (u,v),
/// the walk continues along (v, successor of u in v's rotation). Faces are
/// listed in order of their smallest starting dart (u,v), lexicographically.
inline std::vector<Face> faces_of(const PlaneGraph& embedding)
{
    const Graph& g = embedding.graph();
    if (!g.connected())
        throw error(errc::disconnected_embedding, "embedding has more than one component");
    std::vector<Face> faces;
    if (g.vertex_count() == 0)
        return faces;
    if (g.edge_count() == 0) {
        // a lone vertex: one face with an empty boundary walk
        faces.push_back(Face{});
        return faces;
    }
    std::map<std::pair<Vertex, Vertex>, bool> used;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (auto v : g.neighbors(u))
            used[{u, v}] = false;
    for (auto& [dart, done] : used) {
        if (done)
            continue;
        Face f;
        auto [u, v] = dart;
        const auto start = dart;
        do {
            used[{u, v}] = true;
            f.boundary.push_back(u);
            auto w = embedding.successor(v, u);
            u = v;
            v = w;
        } while (std::pair{u, v} != start);
        faces.push_back(std::move(f));
    }
    return faces;
}

/// Faces incident to each vertex, one entry per corner, in face order.
inline std::vector<std::vector<int>> incident_faces(const PlaneGraph& embedding, const std::vector<Face>& faces)
{
    std::vector<std::vector<int>> out(static_cast<std::size_t>(embedding.graph().vertex_count()));
    for (std::size_t f = 0; f < faces.size(); ++f)
        for (auto v : faces[f].boundary)
            out[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
    return out;
}

} // namespace dischargekit

#endif // DISCHARGEKIT_PLANE_GRAPH_HPP
