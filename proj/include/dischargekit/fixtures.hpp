#ifndef DISCHARGEKIT_FIXTURES_HPP
#define DISCHARGEKIT_FIXTURES_HPP

// Built-in configurations: the trio, the reducible graph H with its residual
// list sizes, the three orientation certificates with the list sizes drawn
// next to them, and hosts realising each configuration with pendant leaves.

#include "alon_tarsi.hpp"
#include "choosability.hpp"
#include "graph.hpp"
#include "orientation.hpp"
#include "pattern.hpp"
#include "structures.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace dischargekit::fixtures {

/// Trio with vertices x=0, y=1, u=2, v=3, w=4.
inline Graph trio() { return trio_pattern().graph; }

namespace trio_vertex {
constexpr Vertex x = 0, y = 1, u = 2, v = 3, w = 4;
}

/// H with the residual sizes left once the outside is coloured
/// (x:2, y:3, u:2, v:4, w:2); x and u may be re-chosen.
inline ReducibleConfig h_residual()
{
    using namespace trio_vertex;
    return ReducibleConfig{"H", trio(), {2, 3, 2, 4, 2}, {x, u}, {"x", "y", "u", "v", "w"}};
}

/// A face whose four vertices all have degree 4 keeps two colours each.
inline ReducibleConfig four_face_residual()
{
    return ReducibleConfig{"(4,4,4,4)-face", graphs::cycle(4), {2, 2, 2, 2}, {}, {"a", "b", "c", "d"}};
}

/// The bad case: a triangle whose vertices all keep two colours.
inline ReducibleConfig triangle_residual()
{
    return ReducibleConfig{"triangle-2-2-2", graphs::cycle(3), {2, 2, 2}, {}, {"y", "v", "w"}};
}

/// An orientation of a configuration together with the available list sizes.
struct OrientedConfig {
    std::string name;
    std::vector<std::string> labels;
    Orientation orientation;
    std::vector<int> sizes;
    EulerianCount published; // even/odd counts claimed for this configuration
};

/// G1 on the trio (x, y, u, v, w): u (degree 5 in the host) is a sink.
inline OrientedConfig g1()
{
    using namespace trio_vertex;
    return {"G1",
            {"x", "y", "u", "v", "w"},
            Orientation::from_arcs(5, {{x, y}, {x, u}, {v, x}, {y, v}, {y, w}, {v, u}, {w, v}}),
            {3, 3, 1, 3, 2},
            {2, 1}};
}

/// G2 on the 2x3 grid: bottom a=0, b=1, c=2, top d=3, e=4, f=5. Arcs exactly
/// as drawn, including c->f on the right rung.
inline OrientedConfig g2()
{
    enum : Vertex { a, b, c, d, e, f };
    return {"G2",
            {"a", "b", "c", "d", "e", "f"},
            Orientation::from_arcs(6, {{a, d}, {d, e}, {e, b}, {e, f}, {c, b}, {b, a}, {c, f}}),
            {2, 2, 2, 2, 3, 2},
            {3, 1}};
}

/// G3 on the 4-cycle p-q-t-s plus triangle q-r-t: p=0, q=1, r=2, s=3, t=4.
inline OrientedConfig g3()
{
    enum : Vertex { p, q, r, s, t };
    return {"G3",
            {"p", "q", "r", "s", "t"},
            Orientation::from_arcs(5, {{p, s}, {s, t}, {t, q}, {t, r}, {q, p}, {r, q}}),
            {2, 2, 2, 2, 3},
            {2, 1}};
}

inline std::vector<OrientedConfig> oriented_configs() { return {g1(), g2(), g3()}; }

/// Pattern plus pendant leaves so every constrained vertex has exactly the
/// degree it requires (at_most constraints are filled up to the bound minus
/// `slack`).
inline Graph realize_with_pendants(const Pattern& p, int slack = 1)
{
    auto edges = p.graph.edge_list();
    int n = p.graph.vertex_count();
    for (Vertex v = 0; v < p.graph.vertex_count(); ++v) {
        const auto& dc = p.degrees[static_cast<std::size_t>(v)];
        int want = dc.kind == DegreeConstraint::Kind::exactly   ? dc.value
                   : dc.kind == DegreeConstraint::Kind::at_most ? dc.value - slack
                                                                : p.graph.degree(v);
        for (int k = p.graph.degree(v); k < want; ++k)
            edges.emplace_back(v, n++);
    }
    return Graph(n, edges);
}

/// Triangle sharing exactly one edge (0-1) with the 5-cycle 0-1-2-3-4.
inline Graph triangle_glued_pentagon()
{
    return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 5}});
}

} // namespace dischargekit::fixtures

#endif // DISCHARGEKIT_FIXTURES_HPP
