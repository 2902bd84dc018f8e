#ifndef DISCHARGEKIT_GENERATORS_HPP
#define DISCHARGEKIT_GENERATORS_HPP

#include "graph.hpp"
#include "plane_graph.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace dischargekit::generators {

using Point = std::array<double, 3>;

/// Embedding of a convex polyhedron: edges join vertex pairs at minimum
/// distance, rotations sort neighbours by angle around the outward normal.
inline PlaneGraph convex_polyhedron(const std::vector<Point>& pts)
{
    auto sub = [](Point a, Point b) { return Point{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; };
    auto dot = [](Point a, Point b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
    auto cross = [](Point a, Point b) {
        return Point{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
    };
    const std::size_t n = pts.size();
    double best = 1e300;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            auto d = sub(pts[i], pts[j]);
            best = std::min(best, dot(d, d));
        }
    std::vector<std::vector<Vertex>> rotation(n);
    for (std::size_t v = 0; v < n; ++v) {
        std::vector<Vertex> nb;
        for (std::size_t w = 0; w < n; ++w) {
            if (w == v)
                continue;
            auto d = sub(pts[w], pts[v]);
            if (std::abs(dot(d, d) - best) < 1e-6 * best)
                nb.push_back(static_cast<Vertex>(w));
        }
        const Point normal = pts[v];
        const double nn = dot(normal, normal);
        Point e1 = sub(pts[static_cast<std::size_t>(nb.front())], pts[v]);
        const double along = dot(e1, normal) / nn;
        for (std::size_t c = 0; c < 3; ++c)
            e1[c] -= along * normal[c];
        const Point e2 = cross(normal, e1);
        std::vector<std::pair<double, Vertex>> keyed;
        for (auto w : nb) {
            auto d = sub(pts[static_cast<std::size_t>(w)], pts[v]);
            keyed.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), w);
        }
        std::sort(keyed.begin(), keyed.end());
        for (auto& [angle, w] : keyed)
            rotation[v].push_back(w);
    }
    return PlaneGraph(std::move(rotation));
}

inline PlaneGraph tetrahedron() { return convex_polyhedron({{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}}); }

inline PlaneGraph cube()
{
    std::vector<Point> p;
    for (int i = 0; i < 8; ++i)
        p.push_back({i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
    return convex_polyhedron(p);
}

inline PlaneGraph octahedron()
{
    return convex_polyhedron({{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}});
}

inline PlaneGraph icosahedron()
{
    const double phi = (1 + std::sqrt(5.0)) / 2;
    std::vector<Point> p;
    for (double a : {-1.0, 1.0})
        for (double b : {-phi, phi}) {
            p.push_back({0, a, b});
            p.push_back({a, b, 0});
            p.push_back({b, 0, a});
        }
    return convex_polyhedron(p);
}

inline PlaneGraph dodecahedron()
{
    const double phi = (1 + std::sqrt(5.0)) / 2, inv = 1 / phi;
    std::vector<Point> p;
    for (double a : {-1.0, 1.0})
        for (double b : {-1.0, 1.0})
            for (double c : {-1.0, 1.0})
                p.push_back({a, b, c});
    for (double a : {-inv, inv})
        for (double b : {-phi, phi}) {
            p.push_back({0, a, b});
            p.push_back({a, b, 0});
            p.push_back({b, 0, a});
        }
    return convex_polyhedron(p);
}

/// Plane cycle 0..n-1 (two faces).
inline PlaneGraph plane_cycle(int n)
{
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rot[static_cast<std::size_t>(i)] = {(i + 1) % n, (i + n - 1) % n};
    return PlaneGraph(std::move(rot));
}

/// Adds edge a-b across the face whose boundary walk visits a at index i
/// and b at index j; the face splits in two. Returns false if a == b or
/// the edge already exists.
inline bool split_face(std::vector<std::vector<Vertex>>& rotation, const Face& face, std::size_t i, std::size_t j)
{
    const auto k = face.boundary.size();
    Vertex a = face.boundary[i], b = face.boundary[j];
    if (a == b)
        return false;
    auto& ra = rotation[static_cast<std::size_t>(a)];
    if (std::find(ra.begin(), ra.end(), b) != ra.end())
        return false;
    Vertex prev_a = face.boundary[(i + k - 1) % k], prev_b = face.boundary[(j + k - 1) % k];
    auto insert_after = [](std::vector<Vertex>& rot, Vertex anchor, Vertex value) {
        auto it = std::find(rot.begin(), rot.end(), anchor);
        rot.insert(it + 1, value);
    };
    insert_after(ra, prev_a, b);
    insert_after(rotation[static_cast<std::size_t>(b)], prev_b, a);
    return true;
}

/// Random connected plane graph: a random tree on n vertices with random
/// rotations, then up to `chords` random face-splitting edges. Chords that
/// would leave no face of length 4 or more are skipped, so the result is
/// never a triangulation when n >= 4.
inline PlaneGraph random_plane_graph(std::uint64_t seed, int n, int chords)
{
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Vertex>> rot(static_cast<std::size_t>(n));
    for (int v = 1; v < n; ++v) {
        int parent = std::uniform_int_distribution<int>(0, v - 1)(rng);
        auto& rp = rot[static_cast<std::size_t>(parent)];
        auto pos = std::uniform_int_distribution<std::size_t>(0, rp.size())(rng);
        rp.insert(rp.begin() + static_cast<std::ptrdiff_t>(pos), v);
        rot[static_cast<std::size_t>(v)].push_back(parent);
    }
    for (int attempt = 0, added = 0; added < chords && attempt < 20 * chords; ++attempt) {
        auto faces = faces_of(PlaneGraph(rot));
        auto& f = faces[std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng)];
        if (f.degree() < 4)
            continue;
        auto i = std::uniform_int_distribution<std::size_t>(0, f.boundary.size() - 1)(rng);
        auto j = std::uniform_int_distribution<std::size_t>(0, f.boundary.size() - 1)(rng);
        auto trial = rot;
        if (!split_face(trial, f, i, j))
            continue;
        auto after = faces_of(PlaneGraph(trial));
        if (std::none_of(after.begin(), after.end(), [](const Face& x) { return x.degree() >= 4; }))
            continue;
        rot = std::move(trial);
        ++added;
    }
    return PlaneGraph(std::move(rot));
}

} // namespace dischargekit::generators

#endif // DISCHARGEKIT_GENERATORS_HPP
