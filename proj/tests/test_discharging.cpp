#include <dischargekit/discharging.hpp>
#include <dischargekit/generators.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace dischargekit;

namespace {

std::vector<std::pair<std::string, PlaneGraph>> solids()
{
    return {{"tetrahedron", generators::tetrahedron()},
            {"cube", generators::cube()},
            {"octahedron", generators::octahedron()},
            {"dodecahedron", generators::dodecahedron()},
            {"icosahedron", generators::icosahedron()}};
}

/// Adds edge a-b inside the shortest face whose boundary holds both.
void add_chord(std::vector<std::vector<Vertex>>& rot, Vertex a, Vertex b)
{
    auto faces = faces_of(PlaneGraph(rot));
    std::stable_sort(faces.begin(), faces.end(), [](const Face& l, const Face& r) { return l.degree() < r.degree(); });
    for (const auto& f : faces) {
        auto i = std::find(f.boundary.begin(), f.boundary.end(), a);
        auto j = std::find(f.boundary.begin(), f.boundary.end(), b);
        if (i != f.boundary.end() && j != f.boundary.end()) {
            ASSERT_TRUE(generators::split_face(rot, f, static_cast<std::size_t>(i - f.boundary.begin()),
                                               static_cast<std::size_t>(j - f.boundary.begin())));
            return;
        }
    }
    FAIL() << "no face holds both endpoints";
}

/// The trio drawn as a fan: outer 5-cycle u-x-y-w-v with chords v-x, v-y.
PlaneGraph plane_trio()
{
    // u=0, x=1, y=2, w=3, v=4
    auto rot = generators::plane_cycle(5).rotation();
    add_chord(rot, 4, 1);
    add_chord(rot, 4, 2);
    return PlaneGraph(rot);
}

RuleSet random_rules(std::mt19937_64& rng)
{
    auto r = [&] { return Rational(std::uniform_int_distribution<int>(0, 12)(rng), std::uniform_int_distribution<int>(1, 6)(rng)); };
    RuleSet rules;
    rules.r1_five_face = r();
    rules.r2_good = r();
    rules.r2_bad = r();
    rules.r2_worse = r();
    rules.r2_worst = r();
    rules.r2_four_face = r();
    for (auto* b : {&rules.r3, &rules.r4}) {
        b->good = r();
        b->bad = r();
        b->worse = r();
        b->worst = r();
        b->face_4445 = r();
        b->four_face = r();
    }
    return rules;
}

} // namespace

TEST(Charges, InitialTotalIsMinusTwelve)
{
    for (const auto& [name, emb] : solids()) {
        auto ledger = initial_charges(emb);
        EXPECT_EQ(ledger.total(), Rational(-12)) << name;
        EXPECT_EQ(ledger.initial_total(), Rational(-12)) << name;
    }
    for (std::uint64_t seed = 0; seed < 50; ++seed)
        EXPECT_EQ(initial_charges(generators::random_plane_graph(seed, 3 + static_cast<int>(seed % 10), 6)).total(),
                  Rational(-12));
}

TEST(Charges, DisconnectedEmbeddingIsRejected)
{
    try {
        initial_charges(PlaneGraph({{1}, {0}, {3}, {2}}));
        FAIL();
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::disconnected_embedding);
    }
}

TEST(Rules, ConserveChargeOnSolidsAndRandomEmbeddings)
{
    for (const auto& [name, emb] : solids())
        EXPECT_EQ(apply_rules(emb).total(), Rational(-12)) << name;
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        auto emb = generators::random_plane_graph(seed, 4 + static_cast<int>(seed % 9), 2 + static_cast<int>(seed % 12));
        EXPECT_EQ(apply_rules(emb).total(), Rational(-12)) << "seed " << seed;
    }
}

TEST(Rules, ConserveChargeUnderArbitrarySchedules)
{
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 40; ++trial) {
        auto rules = random_rules(rng);
        for (const auto& [name, emb] : solids())
            ASSERT_EQ(apply_rules(emb, rules).total(), Rational(-12)) << name;
        auto emb = generators::random_plane_graph(static_cast<std::uint64_t>(trial), 9, 10);
        ASSERT_EQ(apply_rules(emb, rules).total(), Rational(-12));
    }
}

TEST(Rules, TraceReplaysToFinalCharges)
{
    std::mt19937_64 rng(79);
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto emb = generators::random_plane_graph(seed, 10, 16);
        auto ledger = apply_rules(emb, random_rules(rng));
        auto [vc, fc] = replay_trace(ledger);
        EXPECT_EQ(vc, ledger.vertex_charge);
        EXPECT_EQ(fc, ledger.face_charge);
        for (const auto& t : ledger.trace)
            EXPECT_GT(t.amount, Rational(0));
        // R5: every trio cluster ends level
        for (const auto& cluster : detail::trio_clusters(ledger.facial_trios, ledger.faces.size()))
            for (int f : cluster)
                EXPECT_EQ(ledger.face_charge[static_cast<std::size_t>(f)],
                          ledger.face_charge[static_cast<std::size_t>(cluster.front())]);
    }
    auto ledger = apply_rules(generators::icosahedron());
    auto [vc, fc] = replay_trace(ledger);
    EXPECT_EQ(fc, ledger.face_charge);
}

TEST(Rules, DeterministicTrace)
{
    for (const auto& [name, emb] : solids()) {
        auto a = apply_rules(emb), b = apply_rules(emb);
        ASSERT_EQ(a.trace.size(), b.trace.size()) << name;
        for (std::size_t i = 0; i < a.trace.size(); ++i) {
            EXPECT_EQ(a.trace[i].rule, b.trace[i].rule);
            EXPECT_EQ(a.trace[i].source, b.trace[i].source);
            EXPECT_EQ(a.trace[i].sink_face, b.trace[i].sink_face);
            EXPECT_EQ(a.trace[i].amount, b.trace[i].amount);
        }
    }
}

TEST(Rules, R1PaysEveryFiveFaceCorner)
{
    auto ledger = apply_rules(generators::plane_cycle(5));
    // every vertex has two corners, both on 5-faces
    ASSERT_EQ(ledger.trace.size(), 10u);
    for (const auto& t : ledger.trace) {
        EXPECT_EQ(t.rule, RuleId::r1);
        EXPECT_EQ(t.amount, Rational(1, 5));
    }
    for (const auto& c : ledger.face_charge)
        EXPECT_EQ(c, Rational(0));
    for (const auto& c : ledger.vertex_charge)
        EXPECT_EQ(c, Rational(-12, 5));
}

TEST(Rules, OctahedronFollowsTheSchedule)
{
    // every vertex has degree 4; every face is a triangle inside overlapping trios
    auto emb = generators::octahedron();
    auto ledger = apply_rules(emb);
    EXPECT_EQ(ledger.facial_trios.size(), 24u);
    for (const auto& t : ledger.trace)
        EXPECT_TRUE(t.rule == RuleId::r2 || t.rule == RuleId::r5);
    // vertex charge 2 pays four corners of a worst role at 2/3 each
    for (const auto& c : ledger.vertex_charge)
        EXPECT_EQ(c, Rational(2) - 4 * Rational(2, 3));
    // R5 leaves the single merged cluster level
    for (const auto& c : ledger.face_charge)
        EXPECT_EQ(c, ledger.face_charge.front());
    EXPECT_EQ(ledger.face_charge.front(), Rational(-3) + 3 * Rational(2, 3));
}

TEST(Rules, RejectPolicyRefusesOverlappingTrios)
{
    RuleSet rules;
    rules.r5_overlap = RuleSet::Overlap::reject;
    for (auto emb : {generators::octahedron(), generators::icosahedron()}) {
        try {
            apply_rules(emb, rules);
            FAIL() << "expected OverlappingTrios";
        } catch (const error& e) {
            EXPECT_EQ(e.code(), errc::overlapping_trios);
        }
    }
    // no trios at all: nothing to refuse
    EXPECT_NO_THROW(apply_rules(generators::cube(), rules));
}

TEST(Rules, SingleTrioIsEqualizedUnderEitherPolicy)
{
    auto emb = plane_trio();
    for (auto policy : {RuleSet::Overlap::merge, RuleSet::Overlap::reject}) {
        RuleSet rules;
        rules.r5_overlap = policy;
        auto ledger = apply_rules(emb, rules);
        ASSERT_EQ(ledger.facial_trios.size(), 1u);
        const auto& faces = ledger.facial_trios[0].faces;
        EXPECT_EQ(ledger.face_charge[static_cast<std::size_t>(faces[0])],
                  ledger.face_charge[static_cast<std::size_t>(faces[1])]);
        EXPECT_EQ(ledger.face_charge[static_cast<std::size_t>(faces[1])],
                  ledger.face_charge[static_cast<std::size_t>(faces[2])]);
        EXPECT_EQ(ledger.total(), Rational(-12));
    }
}

TEST(Rules, R5CanBeSwitchedOff)
{
    RuleSet rules;
    rules.r5_equalize = false;
    auto ledger = apply_rules(generators::octahedron(), rules);
    for (const auto& t : ledger.trace)
        EXPECT_NE(t.rule, RuleId::r5);
    EXPECT_EQ(ledger.total(), Rational(-12));
}

TEST(Rules, NegativeParametersAreRejected)
{
    RuleSet rules;
    rules.r3.bad = Rational(-1, 2);
    EXPECT_THROW(apply_rules(generators::cube(), rules), error);
}

TEST(Rules, FourFourFourFiveFaces)
{
    Face f{{0, 1, 2, 3}};
    EXPECT_TRUE(detail::is_4445_face(f, {4, 5, 4, 4}));
    EXPECT_FALSE(detail::is_4445_face(f, {4, 4, 4, 4}));
    EXPECT_FALSE(detail::is_4445_face(f, {4, 5, 5, 4}));
    EXPECT_FALSE(detail::is_4445_face(Face{{0, 1, 2}}, {4, 4, 5}));
}

TEST(Report, ListsNegativeElementsWithTheirTransfers)
{
    auto ledger = apply_rules(generators::cube());
    auto report = final_report(ledger);
    EXPECT_EQ(report.total, Rational(-12));
    // degree-3 vertices end at 0, the six 4-faces at -2
    ASSERT_EQ(report.negatives.size(), 6u);
    for (const auto& n : report.negatives) {
        EXPECT_EQ(n.site.kind, ChargeSite::Kind::face);
        EXPECT_EQ(n.charge, Rational(-2));
        EXPECT_EQ(n.degree, 4);
    }
    auto oct = final_report(apply_rules(generators::octahedron()));
    for (const auto& n : oct.negatives)
        EXPECT_FALSE(n.trace.empty());
}
