#ifndef DISCHARGEKIT_ORIENTATION_HPP
#define DISCHARGEKIT_ORIENTATION_HPP

#include "error.hpp"
#include "graph.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace dischargekit {

struct Arc {
    Vertex tail = 0;
    Vertex head = 0;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Direction for every edge of a base graph. `reversed[i] == false` means
/// edge i points from its smaller to its larger endpoint.
class Orientation {
public:
    Orientation() = default;

    Orientation(Graph base, std::vector<bool> reversed)
        : base_(std::move(base))
        , reversed_(std::move(reversed))
    {
        if (reversed_.size() != base_.edges().size())
            throw error(errc::parse_error, "orientation must direct every edge exactly once");
        recount();
    }

    /// Builds the base graph from the arcs themselves. Antiparallel or
    /// repeated arcs are rejected as duplicate edges.
    static Orientation from_arcs(int vertex_count, std::span<const Arc> arcs)
    {
        std::vector<std::pair<Vertex, Vertex>> edges;
        edges.reserve(arcs.size());
        for (auto a : arcs)
            edges.emplace_back(a.tail, a.head);
        Graph g(vertex_count, edges);
        std::vector<bool> rev(g.edges().size(), false);
        for (auto a : arcs)
            rev[static_cast<std::size_t>(g.edge_index(a.tail, a.head))] = a.tail > a.head;
        return Orientation(std::move(g), std::move(rev));
    }

    static Orientation from_arcs(int vertex_count, std::initializer_list<Arc> arcs)
    {
        return from_arcs(vertex_count, std::span<const Arc>(arcs.begin(), arcs.size()));
    }

    const Graph& base() const noexcept { return base_; }
    int vertex_count() const noexcept { return base_.vertex_count(); }
    int arc_count() const noexcept { return base_.edge_count(); }
    const std::vector<bool>& reversed() const noexcept { return reversed_; }

    Arc arc(int i) const
    {
        auto e = base_.edges()[static_cast<std::size_t>(i)];
        return reversed_[static_cast<std::size_t>(i)] ? Arc{e.b, e.a} : Arc{e.a, e.b};
    }

    std::vector<Arc> arcs() const
    {
        std::vector<Arc> out;
        for (int i = 0; i < arc_count(); ++i)
            out.push_back(arc(i));
        return out;
    }

    int outdegree(Vertex v) const { return out_.at(static_cast<std::size_t>(v)); }
    int indegree(Vertex v) const { return in_.at(static_cast<std::size_t>(v)); }
    const std::vector<int>& outdegrees() const noexcept { return out_; }

    Orientation reversed_all() const
    {
        auto rev = reversed_;
        rev.flip();
        return Orientation(base_, std::move(rev));
    }

    friend bool operator==(const Orientation& l, const Orientation& r)
    {
        return l.base_ == r.base_ && l.reversed_ == r.reversed_;
    }

private:
    void recount()
    {
        out_.assign(static_cast<std::size_t>(base_.vertex_count()), 0);
        in_.assign(static_cast<std::size_t>(base_.vertex_count()), 0);
        for (int i = 0; i < arc_count(); ++i) {
            auto a = arc(i);
            ++out_[static_cast<std::size_t>(a.tail)];
            ++in_[static_cast<std::size_t>(a.head)];
        }
    }

    Graph base_;
    std::vector<bool> reversed_;
    std::vector<int> out_;
    std::vector<int> in_;
};

/// Lazily yields every orientation of `graph` whose outdegree at v is at
/// most bounds[v]. Order is lexicographic over the canonical edge order
/// with direction min->max first; no orientation is produced twice.
class OrientationStream {
public:
    OrientationStream(Graph graph, std::vector<int> bounds)
        : graph_(std::move(graph))
        , bounds_(std::move(bounds))
        , choice_(static_cast<std::size_t>(graph_.edge_count()), -1)
        , out_(static_cast<std::size_t>(graph_.vertex_count()), 0)
    {
        if (bounds_.size() != static_cast<std::size_t>(graph_.vertex_count()))
            throw error(errc::parse_error, "one outdegree bound per vertex required");
    }

    std::optional<Orientation> next()
    {
        if (finished_)
            return std::nullopt;
        const int m = graph_.edge_count();
        int i;
        if (!started_) {
            started_ = true;
            i = 0;
        } else {
            i = m - 1;
        }
        // Depth-first over edges: choice_[i] is -1 (untried), 0 (min->max), 1 (max->min).
        while (true) {
            if (i == m) {
                std::vector<bool> rev(static_cast<std::size_t>(m));
                for (int k = 0; k < m; ++k)
                    rev[static_cast<std::size_t>(k)] = choice_[static_cast<std::size_t>(k)] == 1;
                return Orientation(graph_, std::move(rev));
            }
            if (i < 0) {
                finished_ = true;
                return std::nullopt;
            }
            auto& c = choice_[static_cast<std::size_t>(i)];
            auto e = graph_.edges()[static_cast<std::size_t>(i)];
            if (c >= 0)
                --out_[static_cast<std::size_t>(c == 0 ? e.a : e.b)];
            bool placed = false;
            while (++c <= 1) {
                auto tail = c == 0 ? e.a : e.b;
                if (out_[static_cast<std::size_t>(tail)] < bounds_[static_cast<std::size_t>(tail)]) {
                    ++out_[static_cast<std::size_t>(tail)];
                    placed = true;
                    break;
                }
            }
            if (placed) {
                ++i;
                if (i < m)
                    choice_[static_cast<std::size_t>(i)] = -1;
            } else {
                c = -1;
                --i;
            }
        }
    }

private:
    Graph graph_;
    std::vector<int> bounds_;
    std::vector<int> choice_;
    std::vector<int> out_;
    bool started_ = false;
    bool finished_ = false;
};

inline OrientationStream orientations_with_max_outdegree(const Graph& graph, int bound)
{
    return OrientationStream(graph, std::vector<int>(static_cast<std::size_t>(graph.vertex_count()), bound));
}

} // namespace dischargekit

#endif // DISCHARGEKIT_ORIENTATION_HPP
