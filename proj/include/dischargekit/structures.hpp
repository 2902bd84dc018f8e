#ifndef DISCHARGEKIT_STRUCTURES_HPP
#define DISCHARGEKIT_STRUCTURES_HPP

#include "error.hpp"
#include "graph.hpp"
#include "pattern.hpp"

#include <algorithm>
#include <cctype>
#include <array>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dischargekit {

using Cycle = std::vector<Vertex>;
using Triangle = std::array<Vertex, 3>; // sorted

inline Triangle make_triangle(Vertex a, Vertex b, Vertex c)
{
    Triangle t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

/// Edges of a cycle given as a closed vertex sequence.
inline std::vector<Edge> cycle_edges(std::span<const Vertex> cycle)
{
    std::vector<Edge> out;
    for (std::size_t i = 0; i < cycle.size(); ++i)
        out.push_back(make_edge(cycle[i], cycle[(i + 1) % cycle.size()]));
    std::sort(out.begin(), out.end());
    return out;
}

inline int shared_edge_count(const std::vector<Edge>& a, const std::vector<Edge>& b)
{
    int count = 0;
    for (auto e : a)
        if (std::binary_search(b.begin(), b.end(), e))
            ++count;
    return count;
}

/// Every cycle of the given length, once each. A cycle is written starting
/// at its smallest vertex and heading towards the smaller of that vertex's
/// two cycle neighbours; the list is sorted.
inline std::vector<Cycle> enumerate_cycles(const Graph& g, int length)
{
    if (length < 3 || length > 5)
        throw error(errc::unsupported_length, "cycle length " + std::to_string(length) + " not in {3,4,5}");
    std::vector<Cycle> out;
    Cycle path;
    std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
    std::function<void(Vertex)> grow = [&](Vertex start) {
        Vertex last = path.back();
        if (static_cast<int>(path.size()) == length) {
            if (g.adjacent(last, start) && path[1] < path.back())
                out.push_back(path);
            return;
        }
        for (auto w : g.neighbors(last)) {
            if (w <= start || on_path[static_cast<std::size_t>(w)])
                continue;
            on_path[static_cast<std::size_t>(w)] = 1;
            path.push_back(w);
            grow(start);
            path.pop_back();
            on_path[static_cast<std::size_t>(w)] = 0;
        }
    };
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        path = {s};
        on_path[static_cast<std::size_t>(s)] = 1;
        grow(s);
        on_path[static_cast<std::size_t>(s)] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<Triangle> enumerate_triangles(const Graph& g)
{
    std::vector<Triangle> out;
    for (const auto& c : enumerate_cycles(g, 3))
        out.push_back(make_triangle(c[0], c[1], c[2]));
    return out;
}

// ---------------------------------------------------------------- trios --

/// The trio: edges xy, xu, xv, yv, yw, uv, vw; triangles xuv, xyv, yvw
/// all meet at the centre v.
struct TrioOccurrence {
    Vertex x = 0, y = 0, u = 0, v = 0, w = 0;

    std::array<Triangle, 3> triangles() const
    {
        return {make_triangle(x, u, v), make_triangle(x, y, v), make_triangle(y, v, w)};
    }

    std::array<Vertex, 5> vertices() const { return {x, y, u, v, w}; }

    bool has_triangle(const Triangle& t) const
    {
        auto tri = triangles();
        return std::find(tri.begin(), tri.end(), t) != tri.end();
    }

    /// Number of this trio's triangles passing through s.
    int triangles_through(Vertex s) const
    {
        int count = 0;
        for (const auto& t : triangles())
            if (std::find(t.begin(), t.end(), s) != t.end())
                ++count;
        return count;
    }

    friend auto operator<=>(const TrioOccurrence&, const TrioOccurrence&) = default;
};

inline const Pattern& trio_pattern()
{
    // vertex order x, y, u, v, w
    static const Pattern p{"trio",
                           {"x", "y", "u", "v", "w"},
                           Graph(5, {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}),
                           {}};
    return p;
}

/// Every placement of the trio, modulo the mirror x<->y, u<->w. Distinct
/// entries have distinct triangle triples.
inline std::vector<TrioOccurrence> trio_embeddings(const Graph& g)
{
    std::vector<TrioOccurrence> out;
    for_each_embedding(trio_pattern(), g, [&](const std::vector<Vertex>& m) {
        TrioOccurrence t{m[0], m[1], m[2], m[3], m[4]};
        TrioOccurrence mirror{t.y, t.x, t.w, t.v, t.u};
        if (!(mirror < t))
            out.push_back(t);
        return true;
    });
    return out;
}

/// Trio occurrences identified by their vertex set and centre.
inline std::vector<TrioOccurrence> find_trios(const Graph& g)
{
    std::set<std::pair<std::array<Vertex, 5>, Vertex>> seen;
    std::vector<TrioOccurrence> out;
    for (const auto& t : trio_embeddings(g)) {
        auto vs = t.vertices();
        std::sort(vs.begin(), vs.end());
        if (seen.insert({vs, t.v}).second)
            out.push_back(t);
    }
    return out;
}

enum class VertexRole { good, bad, worse, worst };

inline std::string_view to_string(VertexRole r)
{
    switch (r) {
    case VertexRole::good: return "good";
    case VertexRole::bad: return "bad";
    case VertexRole::worse: return "worse";
    case VertexRole::worst: return "worst";
    }
    return "?";
}

/// Assigns roles against a fixed set of trio placements. Over all trios
/// containing triangle t: worst if s is the centre of one of them, bad if
/// in each of them t is the only triangle through s, worse otherwise; good
/// when t belongs to no trio.
class RoleClassifier {
public:
    explicit RoleClassifier(std::vector<TrioOccurrence> trios)
        : trios_(std::move(trios))
    {
        for (std::size_t i = 0; i < trios_.size(); ++i)
            for (const auto& t : trios_[i].triangles())
                by_triangle_[t].push_back(i);
    }

    explicit RoleClassifier(const Graph& g)
        : RoleClassifier(trio_embeddings(g))
    {
    }

    VertexRole role(Vertex s, const Triangle& t) const
    {
        if (std::find(t.begin(), t.end(), s) == t.end())
            throw error(errc::vertex_not_on_cycle, "vertex " + std::to_string(s) + " is not on the triangle");
        auto it = by_triangle_.find(t);
        if (it == by_triangle_.end())
            return VertexRole::good;
        bool always_single = true;
        for (auto i : it->second) {
            int through = trios_[i].triangles_through(s);
            if (through == 3)
                return VertexRole::worst;
            if (through != 1)
                always_single = false;
        }
        return always_single ? VertexRole::bad : VertexRole::worse;
    }

    /// Trios in which t is one of the three triangles.
    int trio_count(const Triangle& t) const
    {
        auto it = by_triangle_.find(t);
        return it == by_triangle_.end() ? 0 : static_cast<int>(it->second.size());
    }

    const std::vector<TrioOccurrence>& trios() const noexcept { return trios_; }

private:
    std::vector<TrioOccurrence> trios_;
    std::map<Triangle, std::vector<std::size_t>> by_triangle_;
};

inline VertexRole classify_role(const Graph& g, Vertex s, const Triangle& t)
{
    for (std::size_t i = 0; i < 3; ++i)
        if (!g.adjacent(t[i], t[(i + 1) % 3]))
            throw error(errc::vertex_not_on_cycle, "not a 3-cycle of the graph");
    return RoleClassifier(g).role(s, t);
}

// ----------------------------------------------------------- conditions --

enum class Condition { thm1, thm2, corollary };

inline std::string_view to_string(Condition c)
{
    switch (c) {
    case Condition::thm1: return "Thm1";
    case Condition::thm2: return "Thm2";
    case Condition::corollary: return "Corollary";
    }
    return "?";
}

/// Case-insensitive inverse of to_string.
inline std::optional<Condition> parse_condition(std::string_view s)
{
    auto same = [&](std::string_view name) {
        return s.size() == name.size() && std::equal(s.begin(), s.end(), name.begin(), [](char a, char b) {
                   return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
               });
    };
    for (auto c : {Condition::thm1, Condition::thm2, Condition::corollary})
        if (same(to_string(c)))
            return c;
    return std::nullopt;
}

struct ConditionViolation {
    Cycle cycle;                 // the offending 5-cycle
    std::string reason;          // wheel_hub | one_shared_edge | two_adjacent_triangles | adjacent_chorded_4cycle | adjacent_triangle
    std::vector<Vertex> partner; // hub, triangle(s) or theta vertices involved
};

struct ConditionReport {
    Condition condition = Condition::thm1;
    bool holds = true;
    std::vector<Cycle> witnesses; // distinct offending 5-cycles, sorted
    std::vector<ConditionViolation> details;
};

/// 4-cycles with a chord, as (cycle, chord) pairs; the union is K4 minus an edge.
struct ChordedFourCycle {
    Cycle cycle;
    Edge chord;
    std::vector<Edge> edges; // four cycle edges plus the chord, sorted
};

inline std::vector<ChordedFourCycle> chorded_four_cycles(const Graph& g)
{
    std::vector<ChordedFourCycle> out;
    for (const auto& c : enumerate_cycles(g, 4))
        for (int d = 0; d < 2; ++d)
            if (g.adjacent(c[static_cast<std::size_t>(d)], c[static_cast<std::size_t>(d + 2)])) {
                ChordedFourCycle q{c, make_edge(c[static_cast<std::size_t>(d)], c[static_cast<std::size_t>(d + 2)]),
                                   cycle_edges(c)};
                q.edges.push_back(q.chord);
                std::sort(q.edges.begin(), q.edges.end());
                out.push_back(std::move(q));
            }
    return out;
}

inline ConditionReport check_condition(const Graph& g, Condition which)
{
    ConditionReport report;
    report.condition = which;
    const auto five = enumerate_cycles(g, 5);
    const auto tris = enumerate_triangles(g);
    std::vector<std::vector<Edge>> tri_edges;
    for (const auto& t : tris)
        tri_edges.push_back(cycle_edges(t));
    std::vector<ChordedFourCycle> thetas;
    if (which == Condition::thm2)
        thetas = chorded_four_cycles(g);

    for (const auto& c : five) {
        const auto ce = cycle_edges(c);
        auto flag = [&](std::string reason, std::vector<Vertex> partner) {
            report.details.push_back({c, std::move(reason), std::move(partner)});
        };
        switch (which) {
        case Condition::thm1: {
            for (Vertex h = 0; h < g.vertex_count(); ++h)
                if (std::all_of(c.begin(), c.end(), [&](Vertex x) { return g.adjacent(h, x); }))
                    flag("wheel_hub", {h});
            for (std::size_t i = 0; i < tris.size(); ++i)
                if (shared_edge_count(ce, tri_edges[i]) == 1)
                    flag("one_shared_edge", {tris[i].begin(), tris[i].end()});
            break;
        }
        case Condition::thm2: {
            std::vector<Vertex> adjacent_tris;
            int count = 0;
            for (std::size_t i = 0; i < tris.size(); ++i)
                if (shared_edge_count(ce, tri_edges[i]) >= 1) {
                    ++count;
                    adjacent_tris.insert(adjacent_tris.end(), tris[i].begin(), tris[i].end());
                }
            if (count >= 2)
                flag("two_adjacent_triangles", adjacent_tris);
            for (const auto& q : thetas)
                if (shared_edge_count(ce, q.edges) >= 1)
                    flag("adjacent_chorded_4cycle", q.cycle);
            break;
        }
        case Condition::corollary: {
            for (std::size_t i = 0; i < tris.size(); ++i)
                if (shared_edge_count(ce, tri_edges[i]) >= 1)
                    flag("adjacent_triangle", {tris[i].begin(), tris[i].end()});
            break;
        }
        }
        if (!report.details.empty() && report.details.back().cycle == c)
            report.witnesses.push_back(c);
    }
    report.holds = report.witnesses.empty();
    return report;
}

// -------------------------------------------------- fixed configurations --

/// Reducible configurations with the host degrees their drawings demand.
namespace configs {

using DC = DegreeConstraint;

/// The trio with d(x) <= 5 and every other vertex of degree 4.
inline const Pattern& h_config()
{
    static const Pattern p{"H",
                           {"x", "y", "u", "v", "w"},
                           trio_pattern().graph,
                           {DC::at_most(5), DC::exactly(4), DC::exactly(4), DC::exactly(4), DC::exactly(4)}};
    return p;
}

/// Trio with u of degree 5 (three pendant half-edges) and the rest of degree 4.
inline const Pattern& trio_config()
{
    static const Pattern p{"config1",
                           {"x", "y", "u", "v", "w"},
                           trio_pattern().graph,
                           {DC::exactly(4), DC::exactly(4), DC::exactly(5), DC::exactly(4), DC::exactly(4)}};
    return p;
}

/// 2x3 grid: bottom a-b-c, top d-e-f, rungs a-d, b-e, c-f; all degree 4.
inline const Pattern& grid_config()
{
    static const Pattern p{"config2",
                           {"a", "b", "c", "d", "e", "f"},
                           Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 3}, {1, 4}, {2, 5}}),
                           std::vector<DC>(6, DC::exactly(4))};
    return p;
}

/// 4-cycle p-q-t-s glued to triangle q-r-t along qt; t has degree 5.
inline const Pattern& square_triangle_config()
{
    static const Pattern p{"config3",
                           {"p", "q", "r", "s", "t"},
                           Graph(5, {{0, 1}, {1, 2}, {3, 0}, {3, 4}, {4, 1}, {4, 2}}),
                           {DC::exactly(4), DC::exactly(4), DC::exactly(4), DC::exactly(4), DC::exactly(5)}};
    return p;
}

inline std::vector<const Pattern*> all()
{
    return {&h_config(), &trio_config(), &grid_config(), &square_triangle_config()};
}

} // namespace configs

struct ConfigMatch {
    std::string config;
    std::vector<std::string> labels;
    std::vector<Vertex> vertices; // vertices[i] hosts labels[i]
};

inline std::vector<ConfigMatch> find_fixed_configs(const Graph& g)
{
    std::vector<ConfigMatch> out;
    for (const auto* p : configs::all())
        for (auto& m : find_subgraphs(*p, g))
            out.push_back({p->name, p->labels, std::move(m)});
    return out;
}

} // namespace dischargekit

#endif // DISCHARGEKIT_STRUCTURES_HPP
