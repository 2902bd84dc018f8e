#ifndef DISCHARGEKIT_JSON_IO_HPP
#define DISCHARGEKIT_JSON_IO_HPP

// JSON encodings of every file format and report the toolkit exchanges.
// Keys are emitted in a fixed order so identical inputs give identical bytes.

#include "alon_tarsi.hpp"
#include "choosability.hpp"
#include "discharging.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "orientation.hpp"
#include "plane_graph.hpp"
#include "structures.hpp"

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace dischargekit::json {

using Json = nlohmann::ordered_json;

inline Json parse_or_throw(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, e.what());
    }
}

template <class F>
auto guarded(F&& f) -> decltype(f())
{
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, e.what());
    }
}

// ---- rationals: {"num": int, "den": int}

inline Json to_json(const Rational& r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

/// Accepts {"num","den"}, a bare integer, or a string "p/q".
inline Rational rational_from_json(const Json& j)
{
    return guarded([&] {
        if (j.is_object()) {
            auto den = j.value("den", std::int64_t{1});
            if (den == 0)
                throw error(errc::parse_error, "zero denominator");
            return Rational(j.at("num").get<std::int64_t>(), den);
        }
        if (j.is_number_integer())
            return Rational(j.get<std::int64_t>());
        if (j.is_string()) {
            auto s = j.get<std::string>();
            auto slash = s.find('/');
            try {
                if (slash == std::string::npos)
                    return Rational(std::stoll(s));
                auto den = std::stoll(s.substr(slash + 1));
                if (den == 0)
                    throw error(errc::parse_error, "zero denominator");
                return Rational(std::stoll(s.substr(0, slash)), den);
            } catch (const std::logic_error&) {
                throw error(errc::parse_error, "bad rational '" + s + "'");
            }
        }
        throw error(errc::parse_error, "expected a rational");
    });
}

// ---- embedding: {"n": int, "rotation": [[neighbour, ...] per vertex]}

inline PlaneGraph embedding_from_json(const Json& j)
{
    return guarded([&] {
        const int n = j.at("n").get<int>();
        auto rotation = j.at("rotation").get<std::vector<std::vector<Vertex>>>();
        if (static_cast<int>(rotation.size()) != n)
            throw error(errc::parse_error, "rotation must list one entry per vertex");
        return PlaneGraph(std::move(rotation));
    });
}

inline Json to_json(const PlaneGraph& p)
{
    return Json{{"n", p.graph().vertex_count()}, {"rotation", p.rotation()}};
}

// ---- orientation: {"n": int, "arcs": [[tail, head], ...]} (+ optional "sizes", "labels")

inline Orientation orientation_from_json(const Json& j)
{
    return guarded([&] {
        const int n = j.at("n").get<int>();
        std::vector<Arc> arcs;
        for (const auto& a : j.at("arcs")) {
            if (!a.is_array() || a.size() != 2)
                throw error(errc::parse_error, "arc must be [tail, head]");
            arcs.push_back({a[0].get<Vertex>(), a[1].get<Vertex>()});
        }
        return Orientation::from_arcs(n, arcs);
    });
}

inline Json to_json(const Orientation& d)
{
    Json arcs = Json::array();
    for (auto a : d.arcs())
        arcs.push_back({a.tail, a.head});
    return Json{{"n", d.vertex_count()}, {"arcs", arcs}};
}

inline Json to_json(const EulerianCount& c) { return Json{{"even", c.even}, {"odd", c.odd}}; }

inline Json to_json(const AtCertificate& cert)
{
    return Json{{"orientation", to_json(cert.orientation)},
                {"counts", to_json(cert.counts)},
                {"outdegrees", cert.orientation.outdegrees()},
                {"list_size_bound", cert.list_size_bound}};
}

// ---- list assignment: {"lists": [[c, ...] per vertex]}

inline ListAssignment lists_from_json(const Json& j)
{
    return guarded([&] { return ListAssignment(j.at("lists").get<std::vector<std::vector<int>>>()); });
}

inline Json to_json(const ListAssignment& l) { return Json{{"lists", l.lists}}; }

inline Json to_json(const ChoosabilityResult& r)
{
    Json j{{"choosable", r.holds}};
    j["witness"] = r.witness ? to_json(*r.witness) : Json(nullptr);
    j["assignments_checked"] = r.assignments_checked;
    return j;
}

// ---- graphs and structures

inline Json to_json(const Graph& g) { return Json{{"n", g.vertex_count()}, {"edges", g.edge_list()}}; }

inline Graph graph_from_json(const Json& j)
{
    return guarded([&] {
        return Graph(j.at("n").get<int>(), j.at("edges").get<std::vector<std::pair<Vertex, Vertex>>>());
    });
}

inline Json to_json(const ConditionReport& r)
{
    Json details = Json::array();
    for (const auto& d : r.details)
        details.push_back(Json{{"cycle", d.cycle}, {"reason", d.reason}, {"partner", d.partner}});
    return Json{{"condition", std::string(to_string(r.condition))},
                {"holds", r.holds},
                {"witnesses", r.witnesses},
                {"details", details}};
}

inline Json to_json(const TrioOccurrence& t)
{
    Json tris = Json::array();
    for (const auto& tri : t.triangles())
        tris.push_back(tri);
    return Json{{"x", t.x}, {"y", t.y}, {"u", t.u}, {"v", t.v}, {"w", t.w}, {"triangles", tris}};
}

inline Json to_json(const ConfigMatch& m)
{
    Json map = Json::object();
    for (std::size_t i = 0; i < m.labels.size(); ++i)
        map[m.labels[i]] = m.vertices[i];
    return Json{{"config", m.config}, {"map", map}};
}

// ---- reducible configurations:
// {"name": str, "n": int, "edges": [[a,b],...], "sizes": [...], "choice_set": [...], "labels": [...]}

inline ReducibleConfig config_from_json(const Json& j)
{
    return guarded([&] {
        ReducibleConfig c;
        c.name = j.value("name", std::string("config"));
        c.inner = graph_from_json(j);
        c.residual_sizes = j.at("sizes").get<std::vector<int>>();
        if (c.residual_sizes.size() != static_cast<std::size_t>(c.inner.vertex_count()))
            throw error(errc::parse_error, "sizes must list one entry per vertex");
        if (j.contains("choice_set"))
            c.choice_set = j.at("choice_set").get<std::vector<Vertex>>();
        if (j.contains("labels"))
            c.labels = j.at("labels").get<std::vector<std::string>>();
        return c;
    });
}

inline Json to_json(const ReducibleConfig& c)
{
    Json j{{"name", c.name}, {"n", c.inner.vertex_count()}, {"edges", c.inner.edge_list()}, {"sizes", c.residual_sizes}};
    j["choice_set"] = c.choice_set;
    if (!c.labels.empty())
        j["labels"] = c.labels;
    return j;
}

// ---- discharging

/// Overrides on top of the default rule set. Recognised keys:
/// R1.five_face; R2.good|bad|worse|worst|four_face; R3/R4.good|bad|worse|worst|face_4445|four_face;
/// R5.equalize (bool), R5.overlap ("merge" | "reject").
inline RuleSet rules_from_json(const Json& j, RuleSet base = {})
{
    auto set = [&](const Json& section, const char* key, Rational& slot) {
        if (section.contains(key))
            slot = rational_from_json(section.at(key));
    };
    auto check_keys = [](const Json& section, std::initializer_list<const char*> allowed, const std::string& where) {
        for (const auto& [k, v] : section.items()) {
            bool ok = false;
            for (auto a : allowed)
                ok = ok || k == a;
            if (!ok)
                throw error(errc::parse_error, "unknown rule key " + where + "." + k);
        }
    };
    return guarded([&] {
        if (!j.is_object())
            throw error(errc::parse_error, "rule overrides must be an object");
        check_keys(j, {"R1", "R2", "R3", "R4", "R5"}, "rules");
        if (j.contains("R1")) {
            check_keys(j["R1"], {"five_face"}, "R1");
            set(j["R1"], "five_face", base.r1_five_face);
        }
        if (j.contains("R2")) {
            const auto& s = j["R2"];
            check_keys(s, {"good", "bad", "worse", "worst", "four_face"}, "R2");
            set(s, "good", base.r2_good);
            set(s, "bad", base.r2_bad);
            set(s, "worse", base.r2_worse);
            set(s, "worst", base.r2_worst);
            set(s, "four_face", base.r2_four_face);
        }
        for (auto [key, schedule] : {std::pair{"R3", &base.r3}, std::pair{"R4", &base.r4}}) {
            if (!j.contains(key))
                continue;
            const auto& s = j[key];
            check_keys(s, {"good", "bad", "worse", "worst", "face_4445", "four_face"}, key);
            set(s, "good", schedule->good);
            set(s, "bad", schedule->bad);
            set(s, "worse", schedule->worse);
            set(s, "worst", schedule->worst);
            set(s, "face_4445", schedule->face_4445);
            set(s, "four_face", schedule->four_face);
        }
        if (j.contains("R5")) {
            const auto& s = j["R5"];
            check_keys(s, {"equalize", "overlap"}, "R5");
            if (s.contains("equalize"))
                base.r5_equalize = s["equalize"].get<bool>();
            if (s.contains("overlap")) {
                auto o = s["overlap"].get<std::string>();
                if (o == "merge")
                    base.r5_overlap = RuleSet::Overlap::merge;
                else if (o == "reject")
                    base.r5_overlap = RuleSet::Overlap::reject;
                else
                    throw error(errc::parse_error, "R5.overlap must be merge or reject");
            }
        }
        base.validate();
        return base;
    });
}

inline Json to_json(const RuleSet& r)
{
    auto big = [](const RuleSet::BigVertex& b) {
        return Json{{"good", to_json(b.good)},           {"bad", to_json(b.bad)},
                    {"worse", to_json(b.worse)},         {"worst", to_json(b.worst)},
                    {"face_4445", to_json(b.face_4445)}, {"four_face", to_json(b.four_face)}};
    };
    return Json{{"R1", {{"five_face", to_json(r.r1_five_face)}}},
                {"R2",
                 {{"good", to_json(r.r2_good)},
                  {"bad", to_json(r.r2_bad)},
                  {"worse", to_json(r.r2_worse)},
                  {"worst", to_json(r.r2_worst)},
                  {"four_face", to_json(r.r2_four_face)}}},
                {"R3", big(r.r3)},
                {"R4", big(r.r4)},
                {"R5",
                 {{"equalize", r.r5_equalize}, {"overlap", r.r5_overlap == RuleSet::Overlap::merge ? "merge" : "reject"}}}};
}

inline Json to_json(const ChargeSite& s)
{
    return Json{{s.kind == ChargeSite::Kind::vertex ? "vertex" : "face", s.index}};
}

inline Json to_json(const ChargeLedger& l)
{
    Json vertices = Json::array();
    for (std::size_t v = 0; v < l.vertex_charge.size(); ++v)
        vertices.push_back(Json{{"vertex", v},
                                {"degree", l.vertex_degree[v]},
                                {"initial", to_json(l.initial_vertex_charge[v])},
                                {"final", to_json(l.vertex_charge[v])}});
    Json faces = Json::array();
    for (std::size_t f = 0; f < l.face_charge.size(); ++f)
        faces.push_back(Json{{"face", f},
                             {"boundary", l.faces[f].boundary},
                             {"initial", to_json(l.initial_face_charge[f])},
                             {"final", to_json(l.face_charge[f])}});
    Json trace = Json::array();
    for (const auto& t : l.trace)
        trace.push_back(Json{{"rule", std::string(to_string(t.rule))},
                             {"clause", t.clause},
                             {"from", to_json(t.source)},
                             {"to_face", t.sink_face},
                             {"amount", to_json(t.amount)}});
    Json trios = Json::array();
    for (const auto& t : l.facial_trios) {
        auto j = to_json(t.trio);
        j["faces"] = t.faces;
        trios.push_back(j);
    }
    Json abstract = Json::array();
    for (const auto& t : l.abstract_only_trios)
        abstract.push_back(to_json(t));
    return Json{{"initial_total", to_json(l.initial_total())},
                {"final_total", to_json(l.total())},
                {"vertices", vertices},
                {"faces", faces},
                {"trace", trace},
                {"facial_trios", trios},
                {"abstract_only_trios", abstract}};
}

inline Json to_json(const FinalReport& r)
{
    Json negatives = Json::array();
    for (const auto& n : r.negatives) {
        Json j{{"site", to_json(n.site)}, {"charge", to_json(n.charge)}, {"degree", n.degree}};
        j[n.site.kind == ChargeSite::Kind::vertex ? "incident_faces" : "boundary"] = n.incident;
        j["trace"] = n.trace;
        negatives.push_back(j);
    }
    return Json{{"total", to_json(r.total)}, {"negatives", negatives}};
}

} // namespace dischargekit::json

#endif // DISCHARGEKIT_JSON_IO_HPP
