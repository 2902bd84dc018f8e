#include <dischargekit/alon_tarsi.hpp>
#include <dischargekit/choosability.hpp>
#include <dischargekit/fixtures.hpp>
#include <dischargekit/generators.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace dischargekit;

namespace {

Orientation random_digraph(std::mt19937_64& rng, int n, int max_arcs)
{
    std::vector<std::pair<Vertex, Vertex>> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            all.emplace_back(a, b);
    std::shuffle(all.begin(), all.end(), rng);
    const int m = std::uniform_int_distribution<int>(0, std::min<int>(max_arcs, static_cast<int>(all.size())))(rng);
    std::vector<Arc> arcs;
    std::bernoulli_distribution flip(0.5);
    for (int i = 0; i < m; ++i) {
        auto [a, b] = all[static_cast<std::size_t>(i)];
        arcs.push_back(flip(rng) ? Arc{b, a} : Arc{a, b});
    }
    return Orientation::from_arcs(n, arcs);
}

/// Definitional count: every arc subset, kept when in- and out-degrees balance.
EulerianCount subset_oracle(const Orientation& d)
{
    const auto arcs = d.arcs();
    const int m = static_cast<int>(arcs.size());
    EulerianCount c{};
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> balance(static_cast<std::size_t>(d.vertex_count()), 0);
        for (int i = 0; i < m; ++i)
            if ((mask >> i) & 1u) {
                ++balance[static_cast<std::size_t>(arcs[static_cast<std::size_t>(i)].tail)];
                --balance[static_cast<std::size_t>(arcs[static_cast<std::size_t>(i)].head)];
            }
        if (std::all_of(balance.begin(), balance.end(), [](int b) { return b == 0; }))
            (std::popcount(mask) % 2 == 0 ? c.even : c.odd) += 1;
    }
    return c;
}

} // namespace

TEST(Eulerian, SmallCases)
{
    EXPECT_EQ(count_eulerian(Orientation::from_arcs(3, {{0, 1}, {1, 2}, {0, 2}})), (EulerianCount{1, 0}));
    EXPECT_EQ(count_eulerian(Orientation::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}})), (EulerianCount{1, 1}));
    EXPECT_EQ(count_eulerian(Orientation::from_arcs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}})), (EulerianCount{2, 0}));
    EXPECT_EQ(count_eulerian(Orientation::from_arcs(0, {})), (EulerianCount{1, 0}));
}

TEST(Eulerian, MatchesSubsetOracle)
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        auto d = random_digraph(rng, std::uniform_int_distribution<int>(2, 8)(rng), 14);
        ASSERT_EQ(count_eulerian(d), subset_oracle(d)) << "trial " << trial;
    }
}

TEST(Eulerian, InvariantUnderReversal)
{
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        auto d = random_digraph(rng, 8, 20);
        EXPECT_EQ(count_eulerian(d), count_eulerian(d.reversed_all()));
    }
}

TEST(Eulerian, ArcCapIsEnforced)
{
    auto d = Orientation(graphs::complete(9), std::vector<bool>(36, false));
    EXPECT_THROW(count_eulerian(d), error);
    EXPECT_NO_THROW(count_eulerian(d, 36));
    try {
        count_eulerian(d, 10);
    } catch (const error& e) {
        EXPECT_EQ(e.code(), errc::size_limit_exceeded);
    }
}

TEST(Eulerian, LargerGraphsStayConsistent)
{
    // 30 arcs: reversal symmetry and the parity of a bipartite graph
    auto ico = generators::icosahedron().graph();
    Orientation d(ico, std::vector<bool>(static_cast<std::size_t>(ico.edge_count()), false));
    EXPECT_EQ(count_eulerian(d), count_eulerian(d.reversed_all()));
    auto cube = generators::cube().graph();
    std::mt19937_64 rng(41);
    std::vector<bool> rev(static_cast<std::size_t>(cube.edge_count()));
    for (int trial = 0; trial < 20; ++trial) {
        for (std::size_t i = 0; i < rev.size(); ++i)
            rev[i] = std::bernoulli_distribution(0.5)(rng);
        EXPECT_EQ(count_eulerian(Orientation(cube, rev)).odd, 0u);
    }
}

TEST(Fig4, G1AndG3MatchTheirCounts)
{
    for (const auto& oc : {fixtures::g1(), fixtures::g3()}) {
        EXPECT_EQ(count_eulerian(oc.orientation), oc.published) << oc.name;
        EXPECT_EQ(count_eulerian(oc.orientation), subset_oracle(oc.orientation)) << oc.name;
        EXPECT_TRUE(verify_at_applicable(oc.orientation, oc.sizes)) << oc.name;
    }
}

TEST(Fig4, GridOrientationsNeverHaveOddEulerianSubgraphs)
{
    // The 2x3 grid is bipartite, so every Eulerian subgraph has an even
    // number of arcs: EO = 0 for all 2^7 orientations, and (3,1) cannot occur.
    const auto grid = fixtures::g2().orientation.base();
    ASSERT_EQ(grid.edge_count(), 7);
    int seen = 0;
    auto stream = orientations_with_max_outdegree(grid, 7);
    while (auto d = stream.next()) {
        ++seen;
        auto c = count_eulerian(*d);
        EXPECT_EQ(c.odd, 0u);
        EXPECT_EQ(c, subset_oracle(*d));
    }
    EXPECT_EQ(seen, 128);
    EXPECT_EQ(count_eulerian(fixtures::g2().orientation), (EulerianCount{2, 0}));
}

TEST(Fig4, GridStillHasACertificateForItsLists)
{
    const auto g2 = fixtures::g2();
    auto cert = find_certificate(g2.orientation.base(), g2.sizes);
    ASSERT_TRUE(cert.has_value());
    EXPECT_TRUE(verify_at_applicable(cert->orientation, g2.sizes));
    EXPECT_TRUE(check_extension(ReducibleConfig{"G2", g2.orientation.base(), g2.sizes, {}, g2.labels}));
}

TEST(Certificates, KnownAnswers)
{
    EXPECT_TRUE(find_certificate(graphs::cycle(4), std::vector<int>(4, 2)).has_value());
    EXPECT_FALSE(find_certificate(graphs::cycle(3), std::vector<int>(3, 2)).has_value());
    EXPECT_TRUE(find_certificate(graphs::complete(4), std::vector<int>(4, 4)).has_value());
    auto cert = find_certificate(graphs::cycle(5), std::vector<int>(5, 3));
    ASSERT_TRUE(cert.has_value());
    for (Vertex v = 0; v < 5; ++v)
        EXPECT_EQ(cert->list_size_bound[static_cast<std::size_t>(v)], cert->orientation.outdegree(v) + 1);
}

TEST(Certificates, ImplyChoosability)
{
    // Alon-Tarsi: a certificate for sizes s means every s-assignment is colourable.
    std::mt19937_64 rng(43);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto d = random_digraph(rng, 6, 10);
        const auto& g = d.base();
        std::vector<int> sizes(6);
        for (auto& s : sizes)
            s = std::uniform_int_distribution<int>(1, 3)(rng);
        if (auto cert = find_certificate(g, sizes)) {
            ++found;
            EXPECT_TRUE(verify_at_applicable(cert->orientation, sizes));
            EXPECT_TRUE(detail::all_assignments_colorable(g, sizes, SearchLimits{}).holds);
        }
    }
    EXPECT_GT(found, 0);
}
