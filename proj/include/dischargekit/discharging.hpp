#ifndef DISCHARGEKIT_DISCHARGING_HPP
#define DISCHARGEKIT_DISCHARGING_HPP

#include "error.hpp"
#include "graph.hpp"
#include "plane_graph.hpp"
#include "structures.hpp"

#include <boost/rational.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace dischargekit {

using Rational = boost::rational<std::int64_t>;

enum class RuleId { r1, r2, r3, r4, r5 };

inline std::string_view to_string(RuleId r)
{
    constexpr std::array<std::string_view, 5> names{"R1", "R2", "R3", "R4", "R5"};
    return names[static_cast<std::size_t>(r)];
}

struct ChargeSite {
    enum class Kind { vertex, face } kind = Kind::vertex;
    int index = 0;

    friend auto operator<=>(const ChargeSite&, const ChargeSite&) = default;
};

struct TransferRecord {
    RuleId rule = RuleId::r1;
    ChargeSite source;
    int sink_face = 0;
    Rational amount;
    std::string clause; // which branch of the rule fired, e.g. "3-face/worst"
};

/// Rule parameters. Defaults reproduce the published schedule.
struct RuleSet {
    Rational r1_five_face{1, 5};

    Rational r2_good{1}, r2_bad{1}, r2_worse{1}, r2_worst{2, 3};
    Rational r2_four_face{1, 3};

    struct BigVertex {
        Rational good{1}, bad{3, 2}, worse{5, 4}, worst{1};
        Rational face_4445{1};
        Rational four_face{2, 3};
    };
    BigVertex r3; // 5-vertices
    BigVertex r4; // 6+-vertices

    bool r5_equalize = true;
    /// merge: overlapping trios are equalized together as one cluster.
    /// reject: overlapping trios raise OverlappingTrios.
    enum class Overlap { merge, reject } r5_overlap = Overlap::merge;

    /// Throws if any parameter is negative.
    void validate() const
    {
        for (const auto* r : {&r1_five_face, &r2_good, &r2_bad, &r2_worse, &r2_worst, &r2_four_face, &r3.good, &r3.bad,
                              &r3.worse, &r3.worst, &r3.face_4445, &r3.four_face, &r4.good, &r4.bad, &r4.worse,
                              &r4.worst, &r4.face_4445, &r4.four_face})
            if (*r < Rational(0))
                throw error(errc::parse_error, "rule parameters must be nonnegative");
    }
};

/// A trio all of whose triangles bound faces; faces[i] bounds triangles()[i].
struct FacialTrio {
    TrioOccurrence trio;
    std::array<int, 3> faces{};
};

struct ChargeLedger {
    std::vector<Face> faces;
    std::vector<int> vertex_degree;
    std::vector<std::vector<int>> vertex_faces; // one entry per corner

    std::vector<Rational> initial_vertex_charge, initial_face_charge;
    std::vector<Rational> vertex_charge, face_charge;
    std::vector<TransferRecord> trace;

    std::vector<FacialTrio> facial_trios;
    std::vector<TrioOccurrence> abstract_only_trios; // some triangle is not a face

    Rational total() const
    {
        Rational sum = 0;
        for (const auto& c : vertex_charge)
            sum += c;
        for (const auto& c : face_charge)
            sum += c;
        return sum;
    }

    Rational initial_total() const
    {
        Rational sum = 0;
        for (const auto& c : initial_vertex_charge)
            sum += c;
        for (const auto& c : initial_face_charge)
            sum += c;
        return sum;
    }

    Rational& charge(ChargeSite s)
    {
        return s.kind == ChargeSite::Kind::vertex ? vertex_charge.at(static_cast<std::size_t>(s.index))
                                                  : face_charge.at(static_cast<std::size_t>(s.index));
    }
};

/// mu(v) = 2 d(v) - 6 and mu(f) = d(f) - 6; a connected embedding totals -12.
inline ChargeLedger initial_charges(const PlaneGraph& embedding)
{
    ChargeLedger ledger;
    ledger.faces = faces_of(embedding); // throws on disconnected input
    const Graph& g = embedding.graph();
    ledger.vertex_faces = incident_faces(embedding, ledger.faces);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        ledger.vertex_degree.push_back(g.degree(v));
        ledger.initial_vertex_charge.emplace_back(2 * g.degree(v) - 6);
    }
    for (const auto& f : ledger.faces)
        ledger.initial_face_charge.emplace_back(f.degree() - 6);
    ledger.vertex_charge = ledger.initial_vertex_charge;
    ledger.face_charge = ledger.initial_face_charge;
    return ledger;
}

namespace detail {

inline bool is_4445_face(const Face& f, const std::vector<int>& degree)
{
    if (f.degree() != 4)
        return false;
    std::array<int, 4> d{};
    for (std::size_t i = 0; i < 4; ++i)
        d[i] = degree[static_cast<std::size_t>(f.boundary[i])];
    std::sort(d.begin(), d.end());
    return d == std::array<int, 4>{4, 4, 4, 5};
}

inline Triangle face_triangle(const Face& f) { return make_triangle(f.boundary[0], f.boundary[1], f.boundary[2]); }

inline void transfer(ChargeLedger& ledger, RuleId rule, ChargeSite from, int to_face, Rational amount, std::string clause)
{
    if (amount <= Rational(0))
        return;
    ledger.charge(from) -= amount;
    ledger.face_charge[static_cast<std::size_t>(to_face)] += amount;
    ledger.trace.push_back({rule, from, to_face, amount, std::move(clause)});
}

inline void locate_trios(const Graph& g, ChargeLedger& ledger)
{
    std::map<Triangle, int> triangle_face;
    for (std::size_t f = 0; f < ledger.faces.size(); ++f)
        if (ledger.faces[f].degree() == 3)
            triangle_face.try_emplace(face_triangle(ledger.faces[f]), static_cast<int>(f)); // keeps the lowest index
    std::set<std::array<int, 3>> seen;
    for (const auto& t : trio_embeddings(g)) {
        FacialTrio ft{t, {}};
        bool facial = true;
        auto tris = t.triangles();
        for (std::size_t i = 0; i < 3; ++i) {
            auto it = triangle_face.find(tris[i]);
            if (it == triangle_face.end()) {
                facial = false;
                break;
            }
            ft.faces[i] = it->second;
        }
        if (!facial) {
            ledger.abstract_only_trios.push_back(t);
            continue;
        }
        auto key = ft.faces;
        std::sort(key.begin(), key.end());
        if (seen.insert(key).second)
            ledger.facial_trios.push_back(ft);
    }
}

/// Groups facial trios that share a face; returns sorted face lists, one
/// per cluster, ordered by smallest face.
inline std::vector<std::vector<int>> trio_clusters(const std::vector<FacialTrio>& trios, std::size_t face_count)
{
    std::vector<int> parent(face_count);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[static_cast<std::size_t>(x)] == x ? x : parent[static_cast<std::size_t>(x)] = find(parent[static_cast<std::size_t>(x)]); };
    std::vector<char> member(face_count, 0);
    for (const auto& t : trios) {
        for (auto f : t.faces)
            member[static_cast<std::size_t>(f)] = 1;
        parent[static_cast<std::size_t>(find(t.faces[1]))] = find(t.faces[0]);
        parent[static_cast<std::size_t>(find(t.faces[2]))] = find(t.faces[0]);
    }
    std::map<int, std::vector<int>> groups;
    for (std::size_t f = 0; f < face_count; ++f)
        if (member[f])
            groups[find(static_cast<int>(f))].push_back(static_cast<int>(f));
    std::vector<std::vector<int>> out;
    for (auto& [root, faces] : groups)
        out.push_back(std::move(faces));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace detail

/// Runs R1..R4 (each as one pass over vertices in index order and their
/// corners in face order), then R5 equalization of facial trios.
inline ChargeLedger apply_rules(const PlaneGraph& embedding, const RuleSet& rules = {})
{
    rules.validate();
    ChargeLedger ledger = initial_charges(embedding);
    const Graph& g = embedding.graph();
    detail::locate_trios(g, ledger);

    std::vector<TrioOccurrence> facial;
    for (const auto& ft : ledger.facial_trios)
        facial.push_back(ft.trio);
    const RoleClassifier roles(std::move(facial));

    const int n = g.vertex_count();
    auto corners = [&](Vertex v) -> const std::vector<int>& { return ledger.vertex_faces[static_cast<std::size_t>(v)]; };
    auto site = [](Vertex v) { return ChargeSite{ChargeSite::Kind::vertex, v}; };

    for (Vertex v = 0; v < n; ++v)
        for (int f : corners(v))
            if (ledger.faces[static_cast<std::size_t>(f)].degree() == 5)
                detail::transfer(ledger, RuleId::r1, site(v), f, rules.r1_five_face, "5-face");

    auto role_of = [&](Vertex v, int f) {
        return roles.role(v, detail::face_triangle(ledger.faces[static_cast<std::size_t>(f)]));
    };

    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) != 4)
            continue;
        for (int f : corners(v)) {
            const auto& face = ledger.faces[static_cast<std::size_t>(f)];
            if (face.degree() == 3) {
                auto r = role_of(v, f);
                Rational amount = r == VertexRole::good    ? rules.r2_good
                                  : r == VertexRole::bad   ? rules.r2_bad
                                  : r == VertexRole::worse ? rules.r2_worse
                                                           : rules.r2_worst;
                detail::transfer(ledger, RuleId::r2, site(v), f, amount, "3-face/" + std::string(to_string(r)));
            } else if (face.degree() == 4) {
                detail::transfer(ledger, RuleId::r2, site(v), f, rules.r2_four_face, "4-face");
            }
        }
    }

    auto big_vertex_pass = [&](RuleId id, const RuleSet::BigVertex& schedule, auto degree_matches) {
        for (Vertex v = 0; v < n; ++v) {
            if (!degree_matches(g.degree(v)))
                continue;
            for (int f : corners(v)) {
                const auto& face = ledger.faces[static_cast<std::size_t>(f)];
                if (face.degree() == 3) {
                    auto r = role_of(v, f);
                    Rational amount = r == VertexRole::good    ? schedule.good
                                      : r == VertexRole::bad   ? schedule.bad
                                      : r == VertexRole::worse ? schedule.worse
                                                               : schedule.worst;
                    detail::transfer(ledger, id, site(v), f, amount, "3-face/" + std::string(to_string(r)));
                } else if (face.degree() == 4) {
                    if (detail::is_4445_face(face, ledger.vertex_degree))
                        detail::transfer(ledger, id, site(v), f, schedule.face_4445, "(4,4,4,5)-face");
                    else
                        detail::transfer(ledger, id, site(v), f, schedule.four_face, "4-face");
                }
            }
        }
    };
    big_vertex_pass(RuleId::r3, rules.r3, [](int d) { return d == 5; });
    big_vertex_pass(RuleId::r4, rules.r4, [](int d) { return d >= 6; });

    if (!rules.r5_equalize || ledger.facial_trios.empty())
        return ledger;

    auto clusters = detail::trio_clusters(ledger.facial_trios, ledger.faces.size());
    if (rules.r5_overlap == RuleSet::Overlap::reject)
        for (const auto& c : clusters)
            if (c.size() != 3)
                throw error(errc::overlapping_trios, "a 3-face belongs to more than one trio (face " +
                                                         std::to_string(c.front()) + " cluster)");

    for (const auto& cluster : clusters) {
        Rational sum = 0;
        for (int f : cluster)
            sum += ledger.face_charge[static_cast<std::size_t>(f)];
        const Rational mean = sum / static_cast<std::int64_t>(cluster.size());
        // surplus faces pay deficit faces, both in face order
        std::vector<std::pair<int, Rational>> surplus, deficit;
        for (int f : cluster) {
            Rational diff = ledger.face_charge[static_cast<std::size_t>(f)] - mean;
            if (diff > Rational(0))
                surplus.emplace_back(f, diff);
            else if (diff < Rational(0))
                deficit.emplace_back(f, -diff);
        }
        std::size_t s = 0, d = 0;
        while (s < surplus.size() && d < deficit.size()) {
            Rational amount = std::min(surplus[s].second, deficit[d].second);
            detail::transfer(ledger, RuleId::r5, ChargeSite{ChargeSite::Kind::face, surplus[s].first}, deficit[d].first,
                             amount, "trio equalization");
            surplus[s].second -= amount;
            deficit[d].second -= amount;
            if (surplus[s].second == Rational(0))
                ++s;
            if (deficit[d].second == Rational(0))
                ++d;
        }
    }
    return ledger;
}

/// Applies a trace to the initial charges of a ledger.
inline std::pair<std::vector<Rational>, std::vector<Rational>> replay_trace(const ChargeLedger& ledger)
{
    auto vc = ledger.initial_vertex_charge;
    auto fc = ledger.initial_face_charge;
    for (const auto& t : ledger.trace) {
        auto& from = t.source.kind == ChargeSite::Kind::vertex ? vc.at(static_cast<std::size_t>(t.source.index))
                                                                : fc.at(static_cast<std::size_t>(t.source.index));
        from -= t.amount;
        fc.at(static_cast<std::size_t>(t.sink_face)) += t.amount;
    }
    return {vc, fc};
}

struct NegativeElement {
    ChargeSite site;
    Rational charge;
    int degree = 0;
    std::vector<int> incident;      // faces around a vertex, or the boundary walk of a face
    std::vector<std::size_t> trace; // indices of transfers touching the element
};

struct FinalReport {
    Rational total;
    std::vector<NegativeElement> negatives; // vertices first, then faces
};

inline FinalReport final_report(const ChargeLedger& ledger)
{
    FinalReport report;
    report.total = ledger.total();
    auto touching = [&](ChargeSite s) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < ledger.trace.size(); ++i) {
            const auto& t = ledger.trace[i];
            bool sink = s.kind == ChargeSite::Kind::face && t.sink_face == s.index;
            if (t.source == s || sink)
                idx.push_back(i);
        }
        return idx;
    };
    for (std::size_t v = 0; v < ledger.vertex_charge.size(); ++v)
        if (ledger.vertex_charge[v] < Rational(0)) {
            ChargeSite s{ChargeSite::Kind::vertex, static_cast<int>(v)};
            report.negatives.push_back(
                {s, ledger.vertex_charge[v], ledger.vertex_degree[v], ledger.vertex_faces[v], touching(s)});
        }
    for (std::size_t f = 0; f < ledger.face_charge.size(); ++f)
        if (ledger.face_charge[f] < Rational(0)) {
            ChargeSite s{ChargeSite::Kind::face, static_cast<int>(f)};
            report.negatives.push_back({s, ledger.face_charge[f], ledger.faces[f].degree(),
                                        ledger.faces[f].boundary, touching(s)});
        }
    return report;
}

} // namespace dischargekit

#endif // DISCHARGEKIT_DISCHARGING_HPP
