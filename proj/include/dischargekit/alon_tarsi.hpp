#ifndef DISCHARGEKIT_ALON_TARSI_HPP
#define DISCHARGEKIT_ALON_TARSI_HPP

#include "error.hpp"
#include "graph.hpp"
#include "orientation.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dischargekit {

/// Spanning Eulerian subdigraphs split by parity of arc count.
struct EulerianCount {
    std::uint64_t even = 0;
    std::uint64_t odd = 0;

    friend bool operator==(const EulerianCount&, const EulerianCount&) = default;
};

constexpr int default_arc_limit = 30;

/// Counts arc subsets S with indeg_S(v) == outdeg_S(v) everywhere.
///
/// Arcs are swept in an order that keeps few vertices "open"; the state is
/// the running in-minus-out balance of every open vertex, and a vertex is
/// closed (its balance must be zero) once its last arc has been decided.
inline EulerianCount count_eulerian(const Orientation& d, int arc_limit = default_arc_limit)
{
    const int m = d.arc_count();
    const int n = d.vertex_count();
    if (m > arc_limit)
        throw error(errc::size_limit_exceeded,
                    std::to_string(m) + " arcs exceeds the enumeration cap of " + std::to_string(arc_limit));
    if (arc_limit > 62)
        throw error(errc::size_limit_exceeded, "arc cap above 62 would overflow 64-bit counts");

    // BFS vertex order, then arcs by the later of their endpoints.
    std::vector<int> rank(static_cast<std::size_t>(n), -1);
    int next_rank = 0;
    for (Vertex s = 0; s < n; ++s) {
        if (rank[static_cast<std::size_t>(s)] >= 0)
            continue;
        std::vector<Vertex> queue{s};
        rank[static_cast<std::size_t>(s)] = next_rank++;
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (auto w : d.base().neighbors(queue[h]))
                if (rank[static_cast<std::size_t>(w)] < 0) {
                    rank[static_cast<std::size_t>(w)] = next_rank++;
                    queue.push_back(w);
                }
    }
    std::vector<Arc> arcs = d.arcs();
    std::sort(arcs.begin(), arcs.end(), [&](Arc l, Arc r) {
        auto key = [&](Arc a) {
            int x = rank[static_cast<std::size_t>(a.tail)], y = rank[static_cast<std::size_t>(a.head)];
            return std::pair{std::max(x, y), std::min(x, y)};
        };
        return key(l) < key(r);
    });

    std::vector<int> remaining(static_cast<std::size_t>(n), 0);
    for (auto a : arcs) {
        ++remaining[static_cast<std::size_t>(a.tail)];
        ++remaining[static_cast<std::size_t>(a.head)];
    }

    using State = std::vector<std::int8_t>;
    using Counts = std::array<std::uint64_t, 2>;
    std::map<State, Counts> layer{{State(static_cast<std::size_t>(n), 0), Counts{1, 0}}};

    for (auto a : arcs) {
        const auto t = static_cast<std::size_t>(a.tail), h = static_cast<std::size_t>(a.head);
        --remaining[t];
        --remaining[h];
        std::map<State, Counts> next;
        auto feasible = [&](const State& s) {
            return std::abs(s[t]) <= remaining[t] && std::abs(s[h]) <= remaining[h];
        };
        for (const auto& [state, counts] : layer) {
            if (feasible(state)) {
                auto& slot = next[state];
                slot[0] += counts[0];
                slot[1] += counts[1];
            }
            State taken = state;
            taken[t] = static_cast<std::int8_t>(taken[t] - 1);
            taken[h] = static_cast<std::int8_t>(taken[h] + 1);
            if (feasible(taken)) {
                auto& slot = next[taken];
                slot[0] += counts[1];
                slot[1] += counts[0];
            }
        }
        layer = std::move(next);
    }
    EulerianCount out;
    auto it = layer.find(State(static_cast<std::size_t>(n), 0));
    if (it != layer.end()) {
        out.even = it->second[0];
        out.odd = it->second[1];
    }
    return out;
}

/// True iff every list is longer than the vertex's outdegree and the
/// even/odd Eulerian counts differ.
inline bool verify_at_applicable(const Orientation& d, std::span<const int> list_sizes,
                                 int arc_limit = default_arc_limit)
{
    if (list_sizes.size() != static_cast<std::size_t>(d.vertex_count()))
        throw error(errc::parse_error, "one list size per vertex required");
    for (Vertex v = 0; v < d.vertex_count(); ++v)
        if (list_sizes[static_cast<std::size_t>(v)] < d.outdegree(v) + 1)
            return false;
    auto counts = count_eulerian(d, arc_limit);
    return counts.even != counts.odd;
}

struct AtCertificate {
    Orientation orientation;
    EulerianCount counts;
    std::vector<int> list_size_bound; // outdegree + 1 per vertex
};

/// First orientation (lexicographic edge order, min->max first) with
/// outdeg(v) <= list_sizes[v] - 1 whose Eulerian counts differ.
inline std::optional<AtCertificate> find_certificate(const Graph& g, std::span<const int> list_sizes,
                                                     int arc_limit = default_arc_limit)
{
    if (list_sizes.size() != static_cast<std::size_t>(g.vertex_count()))
        throw error(errc::parse_error, "one list size per vertex required");
    if (g.edge_count() > arc_limit)
        throw error(errc::size_limit_exceeded,
                    std::to_string(g.edge_count()) + " arcs exceeds the enumeration cap of " + std::to_string(arc_limit));
    std::vector<int> bounds;
    for (auto s : list_sizes)
        bounds.push_back(s - 1);
    OrientationStream stream(g, bounds);
    while (auto d = stream.next()) {
        auto counts = count_eulerian(*d, arc_limit);
        if (counts.even != counts.odd) {
            std::vector<int> need;
            for (Vertex v = 0; v < g.vertex_count(); ++v)
                need.push_back(d->outdegree(v) + 1);
            return AtCertificate{std::move(*d), counts, std::move(need)};
        }
    }
    return std::nullopt;
}

} // namespace dischargekit

#endif // DISCHARGEKIT_ALON_TARSI_HPP
