#ifndef DISCHARGEKIT_REPRO_HPP
#define DISCHARGEKIT_REPRO_HPP

// The fixed table of published facts re-checked from the bundled fixtures.

#include "alon_tarsi.hpp"
#include "choosability.hpp"
#include "discharging.hpp"
#include "fixtures.hpp"
#include "generators.hpp"
#include "structures.hpp"

#include <string>
#include <vector>

namespace dischargekit::repro {

struct Check {
    std::string name;
    std::string expected;
    std::string observed;
    bool passed = false;
};

inline std::string show(const EulerianCount& c) { return "(" + std::to_string(c.even) + "," + std::to_string(c.odd) + ")"; }
inline std::string show(bool b) { return b ? "true" : "false"; }

inline std::vector<Check> run_all(const SearchLimits& limits = {}, int arc_limit = default_arc_limit)
{
    std::vector<Check> out;
    auto add = [&](std::string name, std::string expected, std::string observed) {
        bool ok = expected == observed;
        out.push_back({std::move(name), std::move(expected), std::move(observed), ok});
    };

    for (const auto& oc : fixtures::oriented_configs()) {
        add(oc.name + " eulerian counts", show(oc.published), show(count_eulerian(oc.orientation, arc_limit)));
        add(oc.name + " orientation certifies drawn lists", "true",
            show(verify_at_applicable(oc.orientation, oc.sizes, arc_limit)));
    }

    add("(4,4,4,4)-face extends", "true", show(check_extension(fixtures::four_face_residual(), limits)));
    add("triangle with 2-lists extends", "false", show(check_extension(fixtures::triangle_residual(), limits)));
    add("H extends with re-choice of x,u", "true", show(check_extension_with_rechoice(fixtures::h_residual(), limits)));

    {
        const auto g = fixtures::trio();
        const auto trios = find_trios(g);
        add("trio occurrences in the trio", "1", std::to_string(trios.size()));
        using namespace fixtures::trio_vertex;
        std::string roles;
        RoleClassifier rc(g);
        const auto xuv = make_triangle(x, u, v), xyv = make_triangle(x, y, v), yvw = make_triangle(y, v, w);
        roles += std::string(to_string(rc.role(v, xuv))) + "," + std::string(to_string(rc.role(x, xuv))) + "," +
                 std::string(to_string(rc.role(y, yvw))) + "," + std::string(to_string(rc.role(u, xuv))) + "," +
                 std::string(to_string(rc.role(w, yvw))) + "," + std::string(to_string(rc.role(x, xyv)));
        add("trio roles v,x,y,u,w,x@xyv", "worst,worse,worse,bad,bad,worse", roles);
    }

    add("5-wheel satisfies Thm1", "false", show(check_condition(graphs::wheel(5), Condition::thm1).holds));
    add("triangle glued to pentagon satisfies Corollary", "false",
        show(check_condition(fixtures::triangle_glued_pentagon(), Condition::corollary).holds));
    for (auto c : {Condition::thm1, Condition::thm2, Condition::corollary})
        add("C5 satisfies " + std::string(to_string(c)), "true", show(check_condition(graphs::cycle(5), c).holds));

    const std::vector<std::pair<std::string, PlaneGraph>> solids{{"tetrahedron", generators::tetrahedron()},
                                                                 {"cube", generators::cube()},
                                                                 {"octahedron", generators::octahedron()},
                                                                 {"dodecahedron", generators::dodecahedron()},
                                                                 {"icosahedron", generators::icosahedron()}};
    for (const auto& [name, emb] : solids) {
        auto before = initial_charges(emb).total();
        auto after = apply_rules(emb).total();
        auto fmt = [](const Rational& r) {
            return std::to_string(r.numerator()) + (r.denominator() == 1 ? "" : "/" + std::to_string(r.denominator()));
        };
        add(name + " charge before/after rules", "-12/-12", fmt(before) + "/" + fmt(after));
    }

    add("C4 is 2-choosable", "true", show(is_k_choosable(graphs::cycle(4), 2, limits).holds));
    add("C3 is 2-choosable", "false", show(is_k_choosable(graphs::cycle(3), 2, limits).holds));
    add("K4 is 3-choosable", "false", show(is_k_choosable(graphs::complete(4), 3, limits).holds));
    add("K4 is 4-choosable", "true", show(is_k_choosable(graphs::complete(4), 4, limits).holds));
    add("K5 is 4-choosable", "false", show(is_k_choosable(graphs::complete(5), 4, limits).holds));
    return out;
}

} // namespace dischargekit::repro

#endif // DISCHARGEKIT_REPRO_HPP
