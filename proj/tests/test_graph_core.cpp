#include <dischargekit/generators.hpp>
#include <dischargekit/graph.hpp>
#include <dischargekit/graph6.hpp>
#include <dischargekit/orientation.hpp>
#include <dischargekit/plane_graph.hpp>

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>
#include <sstream>

using namespace dischargekit;

namespace {

errc code_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no dischargekit::error thrown";
    return errc::parse_error;
}

Graph random_graph(std::mt19937_64& rng, int n, double p)
{
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng))
                edges.emplace_back(a, b);
    return Graph(n, edges);
}

} // namespace

TEST(Graph, BuildsSortedAdjacency)
{
    Graph g(4, {{2, 0}, {1, 0}, {3, 2}});
    EXPECT_EQ(g.vertex_count(), 4);
    EXPECT_EQ(g.edge_count(), 3);
    EXPECT_EQ(g.neighbors(0), (std::vector<Vertex>{1, 2}));
    EXPECT_EQ(g.neighbors(2), (std::vector<Vertex>{0, 3}));
    EXPECT_TRUE(g.adjacent(3, 2));
    EXPECT_FALSE(g.adjacent(1, 3));
    EXPECT_EQ(g.edges().front(), (Edge{0, 1}));
}

TEST(Graph, RejectsMalformedInput)
{
    EXPECT_EQ(code_of([] { Graph(3, {{1, 1}}); }), errc::loop_edge);
    EXPECT_EQ(code_of([] { Graph(3, {{0, 1}, {1, 0}}); }), errc::duplicate_edge);
    EXPECT_EQ(code_of([] { Graph(3, {{0, 3}}); }), errc::dangling_vertex_index);
    EXPECT_EQ(code_of([] { Graph(3, {{-1, 0}}); }), errc::dangling_vertex_index);
}

TEST(Graph, NamedFamilies)
{
    EXPECT_EQ(graphs::cycle(5).edge_count(), 5);
    EXPECT_EQ(graphs::complete(5).edge_count(), 10);
    EXPECT_EQ(graphs::wheel(5).degree(5), 5);
    auto p = graphs::petersen();
    EXPECT_EQ(p.edge_count(), 15);
    for (Vertex v = 0; v < 10; ++v)
        EXPECT_EQ(p.degree(v), 3);
    EXPECT_TRUE(p.connected());
    EXPECT_FALSE(disjoint_union(graphs::cycle(3), graphs::cycle(3)).connected());
}

TEST(Graph6, KnownEncodings)
{
    // Reference strings produced by an independent graph6 writer.
    EXPECT_EQ(graph6::encode(graphs::cycle(5)), "Dhc");
    EXPECT_EQ(graph6::encode(graphs::complete(4)), "C~");
    EXPECT_EQ(graph6::encode(graphs::petersen()), "IheA@GUAo");
    EXPECT_EQ(graph6::encode(graphs::wheel(5)), "Ehfw");
    EXPECT_EQ(graph6::encode(Graph(1, {})), "@");
    EXPECT_EQ(graph6::encode(Graph(0, {})), "?");
    EXPECT_EQ(graph6::decode(">>graph6<<Dhc"), graphs::cycle(5));
}

TEST(Graph6, LongSizePrefix)
{
    std::mt19937_64 rng(7);
    auto g = random_graph(rng, 70, 0.1);
    auto text = graph6::encode(g);
    EXPECT_EQ(text.substr(0, 4), "~?@E");
    EXPECT_EQ(graph6::decode(text), g);
}

TEST(Graph6, RoundTripProperty)
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 300; ++trial) {
        int n = std::uniform_int_distribution<int>(0, 20)(rng);
        double p = std::uniform_real_distribution<double>(0, 1)(rng);
        auto g = random_graph(rng, n, p);
        auto text = graph6::encode(g);
        ASSERT_EQ(graph6::decode(text), g) << text;
        ASSERT_EQ(graph6::encode(graph6::decode(text)), text);
    }
}

TEST(Graph6, RejectsGarbage)
{
    EXPECT_EQ(code_of([] { graph6::decode("D!!"); }), errc::parse_error);
    EXPECT_EQ(code_of([] { graph6::decode("Dh"); }), errc::parse_error);
}

TEST(Graph6, ReadAllSkipsBlankLines)
{
    std::istringstream in("Dhc\n\nC~\n");
    auto all = graph6::read_all(in);
    ASSERT_EQ(all.size(), 2u);
    EXPECT_EQ(all[1], graphs::complete(4));
}

TEST(PlaneGraph, RejectsBadRotations)
{
    EXPECT_EQ(code_of([] { PlaneGraph({{1}, {}}); }), errc::invalid_embedding);
    EXPECT_EQ(code_of([] { PlaneGraph({{1, 1}, {0, 0}}); }), errc::invalid_embedding);
    EXPECT_EQ(code_of([] { faces_of(PlaneGraph({{1}, {0}, {3}, {2}})); }), errc::disconnected_embedding);
}

TEST(PlaneGraph, CycleHasTwoFaces)
{
    auto faces = faces_of(generators::plane_cycle(5));
    ASSERT_EQ(faces.size(), 2u);
    EXPECT_EQ(faces[0].degree(), 5);
    EXPECT_EQ(faces[1].degree(), 5);
}

TEST(PlaneGraph, TreeHasOneFaceWalkingEachEdgeTwice)
{
    auto faces = faces_of(PlaneGraph({{1, 2, 3}, {0}, {0}, {0}}));
    ASSERT_EQ(faces.size(), 1u);
    EXPECT_EQ(faces[0].degree(), 6);
}

TEST(PlaneGraph, SolidsHaveTheirFaceCounts)
{
    const std::map<std::string, std::pair<PlaneGraph, std::multiset<int>>> solids{
        {"tetrahedron", {generators::tetrahedron(), std::multiset<int>{3, 3, 3, 3}}},
        {"cube", {generators::cube(), std::multiset<int>{4, 4, 4, 4, 4, 4}}},
        {"octahedron", {generators::octahedron(), std::multiset<int>{3, 3, 3, 3, 3, 3, 3, 3}}},
        {"dodecahedron", {generators::dodecahedron(), std::multiset<int>{5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5, 5}}},
        {"icosahedron", {generators::icosahedron(), std::multiset<int>{3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3}}},
    };
    for (const auto& [name, entry] : solids) {
        std::multiset<int> degrees;
        for (const auto& f : faces_of(entry.first))
            degrees.insert(f.degree());
        EXPECT_EQ(degrees, entry.second) << name;
    }
}

TEST(PlaneGraph, EulerFormulaOnRandomEmbeddings)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int n = 1 + static_cast<int>(seed % 14);
        auto emb = generators::random_plane_graph(seed, n, static_cast<int>(seed % 9));
        auto faces = faces_of(emb);
        const auto& g = emb.graph();
        ASSERT_EQ(g.vertex_count() - g.edge_count() + static_cast<int>(faces.size()), 2) << "seed " << seed;
        int walked = 0;
        for (const auto& f : faces)
            walked += f.degree();
        ASSERT_EQ(walked, 2 * g.edge_count());
        // each vertex meets exactly deg(v) face corners
        auto inc = incident_faces(emb, faces);
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            ASSERT_EQ(static_cast<int>(inc[static_cast<std::size_t>(v)].size()), g.degree(v));
    }
}

TEST(PlaneGraph, SplitFaceAddsOneFace)
{
    auto emb = generators::plane_cycle(6);
    auto rot = emb.rotation();
    auto faces = faces_of(emb);
    ASSERT_TRUE(generators::split_face(rot, faces[0], 0, 3));
    auto after = faces_of(PlaneGraph(rot));
    ASSERT_EQ(after.size(), 3u);
    std::multiset<int> degrees;
    for (const auto& f : after)
        degrees.insert(f.degree());
    EXPECT_EQ(degrees, (std::multiset<int>{4, 4, 6}));
}

TEST(Orientation, DegreesAndReversal)
{
    auto d = Orientation::from_arcs(3, {{0, 1}, {1, 2}, {2, 0}});
    EXPECT_EQ(d.outdegrees(), (std::vector<int>{1, 1, 1}));
    auto r = d.reversed_all();
    for (const auto& a : r.arcs())
        EXPECT_TRUE((a == Arc{1, 0}) || (a == Arc{2, 1}) || (a == Arc{0, 2}));
    EXPECT_EQ(r.reversed_all(), d);
}

TEST(Orientation, StreamMatchesBruteForce)
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = random_graph(rng, 6, 0.5);
        const int m = g.edge_count();
        std::vector<int> bounds(6);
        for (auto& b : bounds)
            b = std::uniform_int_distribution<int>(0, 3)(rng);

        std::set<std::vector<bool>> expected;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<bool> rev(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i)
                rev[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
            Orientation d(g, rev);
            bool ok = true;
            for (Vertex v = 0; v < 6; ++v)
                ok = ok && d.outdegree(v) <= bounds[static_cast<std::size_t>(v)];
            if (ok)
                expected.insert(rev);
        }

        OrientationStream stream(g, bounds);
        std::vector<std::vector<bool>> produced;
        while (auto d = stream.next())
            produced.push_back(d->reversed());
        EXPECT_TRUE(std::is_sorted(produced.begin(), produced.end()));
        EXPECT_EQ(std::set<std::vector<bool>>(produced.begin(), produced.end()).size(), produced.size());
        EXPECT_EQ(std::set<std::vector<bool>>(produced.begin(), produced.end()), expected);
        EXPECT_FALSE(stream.next().has_value());
    }
}
